#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilo/rational.hpp"

namespace nilo {

enum class Series : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

struct SimpleType {
  Series series = Series::A;
  int rank = 1;

  bool valid() const;
  std::string to_string() const;
  static std::optional<SimpleType> parse(std::string_view s);

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Crystallographic root system in simple-root integer coordinates, Bourbaki
/// node numbering throughout. The invariant form is normalized so that the
/// highest root theta satisfies (theta, theta) = 2.
class RootSystem {
public:
  explicit RootSystem(SimpleType t);

  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;
  RootSystem(RootSystem&&) = default;

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return npos_; }

  /// Roots are indexed so that [0, num_positive) are the positive roots in
  /// (height, lex) order and index i + num_positive is -root(i).
  const Eigen::VectorXi& root(int i) const { return roots_[static_cast<size_t>(i)]; }
  int negative_of(int i) const { return i < npos_ ? i + npos_ : i - npos_; }
  bool is_positive(int i) const { return i < npos_; }

  /// Index of the root with the given coordinates, or -1.
  int index_of(const Eigen::VectorXi& coords) const;
  bool is_root(const Eigen::VectorXi& coords) const { return index_of(coords) >= 0; }

  int height(int i) const { return heights_[static_cast<size_t>(i)]; }

  /// cartan()(i, j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), so the
  /// pairing of any weight vector x with alpha_i-covector is (cartan() * x)(i).
  const Eigen::MatrixXi& cartan() const { return cartan_; }

  /// <root(r), alpha_i^vee> as a Cartan integer.
  int pairing(int r, int i) const { return pairing_(r, i); }

  Rational form_simple(int i, int j) const;
  Rational form(const Eigen::VectorXi& x, const Eigen::VectorXi& y) const;
  /// (alpha_i^vee, alpha_j^vee) in the same normalization.
  Rational coroot_form(int i, int j) const;

  int highest_root_index() const { return theta_; }
  const Eigen::VectorXi& highest_root() const { return roots_[static_cast<size_t>(theta_)]; }

  /// Integer coordinates of root(i)^vee over the simple coroots.
  const Eigen::VectorXi& coroot(int i) const { return coroots_[static_cast<size_t>(i)]; }

  /// Half squared length (gamma, gamma)/2 of root(i); 1 for long roots.
  Rational half_length(int i) const;

private:
  SimpleType type_;
  Eigen::MatrixXi cartan_;
  std::vector<Rational> d_;  // (alpha_i, alpha_i)/2, long roots normalized to 1
  std::vector<Eigen::VectorXi> roots_;
  std::vector<Eigen::VectorXi> coroots_;
  std::vector<int> heights_;
  Eigen::MatrixXi pairing_;
  std::map<std::vector<int>, int> index_;
  int npos_ = 0;
  int theta_ = -1;
};

RootSystem build_root_system(SimpleType t);
int root_height(const RootSystem& rs, int root_idx);
Rational form_value(const RootSystem& rs, const Eigen::VectorXi& x, const Eigen::VectorXi& y);

/// Expected root count for a valid simple type.
int expected_num_roots(SimpleType t);
/// dim g = |roots| + rank.
int algebra_dim(SimpleType t);

}  // namespace nilo
