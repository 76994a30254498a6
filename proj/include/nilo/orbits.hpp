#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilo/chevalley.hpp"
#include "nilo/rational.hpp"
#include "nilo/rootsys.hpp"

namespace nilo {

/// Weighted Dynkin diagram: one mark in {0, 1, 2} per node, Bourbaki order.
struct WeightedDiagram {
  SimpleType type;
  Eigen::VectorXi marks;

  bool all_even() const;
  bool is_zero() const { return marks.isZero(); }
  std::string to_text() const;  // "2,0,2,0"
  static std::optional<Eigen::VectorXi> parse_marks(std::string_view s, int rank);

  friend bool operator==(const WeightedDiagram& a, const WeightedDiagram& b) {
    return a.type == b.type && a.marks == b.marks;
  }
};

/// Marks-lexicographic order on diagrams of one type.
bool diagram_less(const WeightedDiagram& a, const WeightedDiagram& b);

/// Z-grading of the algebra by mark degree: a root gamma sits in degree
/// marks . coords(gamma), the Cartan subalgebra in degree 0.
class Grading {
public:
  Grading(const RootSystem& rs, Eigen::VectorXi marks);

  int degree(const Eigen::VectorXi& coords) const { return marks_.dot(coords); }
  const std::vector<int>& roots_at(int deg) const;
  int dim(int deg) const {
    return static_cast<int>(roots_at(deg).size()) + (deg == 0 ? rank_ : 0);
  }
  int max_degree() const { return by_deg_.empty() ? 0 : by_deg_.rbegin()->first; }
  const Eigen::VectorXi& marks() const { return marks_; }
  const std::map<int, std::vector<int>>& by_degree() const { return by_deg_; }

private:
  int rank_;
  Eigen::VectorXi marks_;
  std::map<int, std::vector<int>> by_deg_;
};

/// Coordinates over the fundamental coroots of the Cartan element h with
/// alpha_i(h) = marks_i.
VecQ characteristic_coroot_coords(const RootSystem& rs, const Eigen::VectorXi& marks);

/// A certified sl2 triple attached to a weighted diagram: e in degree 2,
/// f in degree -2, h the marked Cartan element, with [e, f] = h checked
/// exactly. The grading makes [h, e] = 2e and [h, f] = -2f automatic.
struct CharacteristicWitness {
  VecQ e;
  VecQ h;
  VecQ f;
  int trials_used = 0;
  /// [g(0), e] = g(2), confirmed over Q.
  bool dense_rank_certified = false;
};

/// Searches for a witness with random degree-2 elements. A diagram is the
/// weighted diagram of a nilpotent orbit iff some e in degree 2 solves
/// [e, g(-2)] ∋ h; failure after all trials is probabilistic evidence only.
std::optional<CharacteristicWitness> find_characteristic_witness(
    const ChevalleyAlgebra& g, const Eigen::VectorXi& marks, std::uint64_t seed, int trials);

bool is_characteristic(const ChevalleyAlgebra& g, const Eigen::VectorXi& marks,
                       std::uint64_t seed, int trials);

/// Halves an all-even diagram; throws on an odd mark.
WeightedDiagram half_diagram(const WeightedDiagram& d);

/// Even nonzero marks whose halved diagram is again a weighted diagram of an
/// orbit. The zero diagram counts as non-divisible.
bool is_divisible(const ChevalleyAlgebra& g, const Eigen::VectorXi& marks, std::uint64_t seed,
                  int trials);

/// Degree of the highest root: the height of any nilpotent element with this
/// diagram, and the largest grading degree.
int diagram_height(const RootSystem& rs, const Eigen::VectorXi& marks);

/// (h, h)/2 in the normalization (theta, theta) = 2: the Dynkin index of the
/// sl2 subalgebra attached to the diagram. Integral on valid diagrams.
Rational dynkin_index(const RootSystem& rs, const Eigen::VectorXi& marks);

/// dim g - dim g(0) - dim g(1).
int orbit_dim(const RootSystem& rs, const Eigen::VectorXi& marks);

/// dim g(i) for every degree i in [0, max]; values at negative i mirror
/// positive ones.
std::map<int, int> graded_dims(const RootSystem& rs, const Eigen::VectorXi& marks);

/// For a valid diagram, the centralizer of a witness e decomposes by degree
/// as dim g^e(i) = dim g(i) - dim g(i+2) for i >= 0; no negative degrees.
std::map<int, int> graded_centralizer_dims(const RootSystem& rs, const Eigen::VectorXi& marks);

struct OrbitRecord {
  WeightedDiagram diagram;
  int dim_orbit = 0;
  int height = 0;
  bool even = false;
  bool divisible = false;
  std::optional<WeightedDiagram> half;  // set when divisible
  Rational dynkin_index;
  std::map<int, int> graded_dims;  // degree i -> dim g(i), i >= 0
};

OrbitRecord make_orbit_record(const ChevalleyAlgebra& g, const WeightedDiagram& d,
                              std::uint64_t seed, int trials);

/// All valid weighted diagrams with filled records, marks-lexicographic.
std::vector<OrbitRecord> enumerate_orbits(const ChevalleyAlgebra& g, std::uint64_t seed,
                                          int trials);

struct FriendlyPair {
  OrbitRecord upper;  // the nonzero divisible diagram
  OrbitRecord lower;  // the halved diagram's orbit
  std::optional<bool> very_friendly;    // filled by deeper centralizer analysis
  std::optional<bool> a2_pair;          // filled by deeper centralizer analysis
  std::optional<bool> lower_reachable;  // filled by deeper centralizer analysis
};

/// Nonzero divisible diagrams paired with their halves, marks-lexicographic
/// by upper diagram. The optional verdict fields start unset.
std::vector<FriendlyPair> friendly_pairs(const ChevalleyAlgebra& g, std::uint64_t seed,
                                         int trials);

}  // namespace nilo
