#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "nilo/rational.hpp"
#include "nilo/rootsys.hpp"

namespace nilo {

/// Simple Lie algebra over Q in a Chevalley basis: h_1..h_rank (fundamental
/// coroots) followed by one root vector e_gamma per root, in root index order.
/// Elements are dense coefficient vectors of size dim().
///
/// Structure constants for A/D/E come from a bimultiplicative sign cocycle on
/// the root lattice; B/C/F/G are realized as the fixed subalgebra of a
/// diagram automorphism of a simply-laced parent, with every folded bracket
/// recomputed in the parent and checked for consistency at build time.
class ChevalleyAlgebra {
public:
  explicit ChevalleyAlgebra(SimpleType t);

  const SimpleType& type() const { return type_; }
  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int num_roots() const { return rs_.num_roots(); }
  int dim() const { return rank() + num_roots(); }

  /// Basis index of e_{root r}; indices below rank() are the Cartan part.
  int root_basis_index(int r) const { return rank() + r; }

  /// N with [e_r, e_s] = N e_{r+s} when root(r) + root(s) is a root;
  /// 0 otherwise. The opposite-root case goes through coroots instead.
  int n_const(int r, int s) const { return n_(r, s); }
  /// Root index of root(r) + root(s), or -1 when the sum is not a root.
  int sum_root_index(int r, int s) const { return sum_index_(r, s); }

  VecQ zero_element() const { return VecQ::Zero(dim()); }
  VecQ root_vector(int r) const;
  /// Cartan element with the given coordinates over the fundamental coroots.
  VecQ cartan_element(const VecQ& coroot_coords) const;
  VecQ cartan_element(const Eigen::VectorXi& coroot_coords) const;

  VecQ bracket(const VecQ& x, const VecQ& y) const;
  /// [x, basis_k], taking advantage of the sparsity of a basis vector.
  VecQ bracket_basis(const VecQ& x, int basis_idx) const;
  MatQ ad_matrix(const VecQ& x) const;

private:
  ChevalleyAlgebra(SimpleType t, const std::vector<std::pair<int, int>>& oriented_edges);
  void build_ade(const std::vector<std::pair<int, int>>& oriented_edges);
  void build_folded();

  SimpleType type_;
  RootSystem rs_;
  Eigen::MatrixXi n_;
  Eigen::MatrixXi sum_index_;
};

ChevalleyAlgebra build_chevalley(SimpleType t);

}  // namespace nilo
