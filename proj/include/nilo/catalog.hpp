#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "nilo/rootsys.hpp"

namespace nilo {

/// Converts a vector of per-node values (marks) from Vinberg-Onishchik node
/// numbering to Bourbaki numbering, or back. The two conventions agree on
/// types A-D and G2; F4 reverses the nodes; E6-E8 renumber the chain and the
/// branch node.
Eigen::VectorXi marks_vo_to_bourbaki(const SimpleType& t, const Eigen::VectorXi& vo_marks);
Eigen::VectorXi marks_bourbaki_to_vo(const SimpleType& t, const Eigen::VectorXi& b_marks);

/// One row of the known classification of friendly pairs in the exceptional
/// simple Lie algebras: Bala-Carter labels of the lower and upper orbit, the
/// upper orbit's weighted Dynkin diagram, whether the lower orbit is
/// reachable, and whether the pair arises from an A2 subalgebra.
struct ExceptionalPairRow {
  std::string lower_label;
  std::string upper_label;
  Eigen::VectorXi upper_marks_vo;  // upper diagram, VO node numbering
  bool lower_reachable = false;
  bool a2_pair = false;

  Eigen::VectorXi upper_marks_bourbaki(const SimpleType& t) const {
    return marks_vo_to_bourbaki(t, upper_marks_vo);
  }
};

/// Reference rows for E6, E7, E8, F4, G2 (6, 8, 13, 4, 1 rows respectively);
/// throws std::invalid_argument for other types.
const std::vector<ExceptionalPairRow>& exceptional_pair_catalog(const SimpleType& t);

}  // namespace nilo
