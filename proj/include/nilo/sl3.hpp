#pragma once

// Combinatorics of the rank-two model module family R(a,b): the rectangular
// monomial array of two-parameter invariants, the raising actions e1/e2 on
// it, cyclicity from the corner monomial, and the branching multiplicities
// of R(a,b) restricted to a principal three-dimensional subalgebra.
//
// Everything here is exact integer combinatorics; no linear algebra is
// involved.

#include <optional>
#include <vector>

namespace nilo::sl3 {

/// Exponent tuple of one basis monomial x1^i x2^(a-i) xi2^(b-j) xi3^j.
struct Monomial {
  int x1 = 0;
  int x2 = 0;
  int xi2 = 0;
  int xi3 = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// The (a+1) x (b+1) array of invariant monomials spanning the space of
/// two-parameter invariants in R(a,b).  Position (i,j) with 0 <= i <= a,
/// 0 <= j <= b holds x1^i x2^(a-i) xi2^(b-j) xi3^j; the raising operator e1
/// moves down a column (i -> i+1) and e2 along a row (j -> j+1), each
/// killing its boundary.
class MonomialArray {
 public:
  /// Throws std::invalid_argument if a or b is negative.
  MonomialArray(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }

  /// Number of entries, (a+1)(b+1).
  int size() const { return (a_ + 1) * (b_ + 1); }

  /// The monomial at position (i,j).  Throws std::out_of_range if the
  /// position lies outside the array.
  Monomial entry(int i, int j) const;

  bool in_range(int i, int j) const {
    return 0 <= i && i <= a_ && 0 <= j && j <= b_;
  }

 private:
  int a_ = 0;
  int b_ = 0;
};

/// Dimension (a+1)(b+1) of the space of two-parameter invariants in R(a,b).
/// Throws std::invalid_argument if a or b is negative.
int invariant_dim(int a, int b);

/// Multiplicity of the (k+1)-dimensional simple module in the restriction of
/// R(a,b) to the principal subalgebra: the number of array positions (i,j)
/// with i + j = k.  Returns 0 whenever the count is empty (k < 0, k > a+b,
/// or an empty array range).
int branching_multiplicity(int a, int b, int k);

/// Multiplicities for k = 0..a+b as a vector (empty for negative a or b).
std::vector<int> branching_multiplicities(int a, int b);

/// Result of applying e1 at position (i,j): the shifted monomial m(i+1,j),
/// or std::nullopt at the boundary i = a where the action is zero.  Throws
/// std::out_of_range if (i,j) lies outside the array.
std::optional<Monomial> act_e1(const MonomialArray& arr, int i, int j);

/// Result of applying e2 at position (i,j): the shifted monomial m(i,j+1),
/// or std::nullopt at the boundary j = b.  Throws std::out_of_range if
/// (i,j) lies outside the array.
std::optional<Monomial> act_e2(const MonomialArray& arr, int i, int j);

/// True iff every entry of the array is reachable from the corner m(0,0) by
/// repeated e1/e2 moves.  Computed by explicit traversal.
bool is_cyclic(const MonomialArray& arr);

}  // namespace nilo::sl3
