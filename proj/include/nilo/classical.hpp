#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilo/orbits.hpp"
#include "nilo/rational.hpp"
#include "nilo/rootsys.hpp"

namespace nilo {

enum class ClassicalFamily { SL, SO, SP };

std::string to_string(ClassicalFamily f);
std::optional<ClassicalFamily> parse_family(std::string_view s);

/// One of sl(V), so(V), sp(V) acting on V of the given dimension.
struct ClassicalAlgebra {
  ClassicalFamily family;
  int dim_v = 0;

  bool valid() const;
  std::string to_string() const;  // "sp(6)"
};

/// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
bool is_zero_partition(const Partition& p);  // nonempty, all parts 1
long partition_sum(const Partition& p);
std::string partition_text(const Partition& p);  // "5,3"
std::optional<Partition> parse_partition(std::string_view s);

/// Whether p labels a nilpotent orbit of the family: sp forbids odd
/// multiplicity of odd parts, so forbids odd multiplicity of even parts.
/// Throws if p is malformed or its sum is not dim V.
bool validate_partition(const ClassicalAlgebra& alg, const Partition& p);

/// All valid partitions for the algebra, in descending lexicographic order.
std::vector<Partition> valid_partitions(const ClassicalAlgebra& alg);

/// Divisibility of the orbit by its partition: sl/sp need all parts odd; so
/// additionally pairs sorted parts in positions (1,2), (3,4), ... with a
/// congruence rule per pair. Throws on an invalid partition and, with a
/// dedicated error, on the zero orbit (all parts 1).
bool is_divisible_partition(const ClassicalAlgebra& alg, const Partition& p);

/// Splits each part 2l+1 >= 3 into (l+1, l), keeps parts equal to 1, and
/// resorts. Throws if any part is even.
Partition half_partition(const Partition& p);

/// The simple type whose diagrams describe the algebra's orbits:
/// sl(N) -> A_{N-1}, sp(2n) -> C_n, so(2n+1) -> B_n, so(2n) -> D_n.
/// Throws when there is no simple target (sl(1), so(N <= 4), sp(2)).
SimpleType classical_type(const ClassicalAlgebra& alg);

/// Weighted diagram of the orbit, from the multiset of h-eigenvalues
/// {lambda_i - 1, lambda_i - 3, ..., 1 - lambda_i}. For very even type-D
/// partitions this returns the canonical member of the mirror pair.
WeightedDiagram diagram_from_partition(const ClassicalAlgebra& alg, const Partition& p);

/// All diagrams of the partition: two mirror-image diagrams for a very even
/// type-D partition (all parts even), otherwise exactly one.
std::vector<WeightedDiagram> diagrams_from_partition(const ClassicalAlgebra& alg,
                                                     const Partition& p);

/// Height of the orbit: 2(lambda_1 - 1) for sl/sp; for so it is
/// lambda_1 + lambda_2 - 2 when lambda_2 >= lambda_1 - 1 and 2 lambda_1 - 4
/// otherwise. Throws on the zero orbit.
int partition_height(const ClassicalAlgebra& alg, const Partition& p);

/// Explicit sl2 triple of matrices for the orbit, one Jordan block per part,
/// blocks laid out in partition order. For sp/so the invariant form phi is
/// antidiagonal per block or per pair of equal blocks; e, h, f all satisfy
/// x^T phi + phi x = 0.
struct MatrixTriple {
  MatQ e;
  MatQ h;
  MatQ f;
  std::optional<MatQ> phi;                            // absent for sl
  std::vector<std::pair<int, int>> block_structure;   // [begin, end) per part
};

MatrixTriple build_triple(const ClassicalAlgebra& alg, const Partition& p);

/// The degree-4 companion element attached to a divisible orbit: e squared
/// for sl, and the signed per-pair variant for sp/so that stays inside the
/// form's algebra. Throws unless the partition is divisible.
MatQ build_e2(const ClassicalAlgebra& alg, const Partition& p, const MatrixTriple& t);

/// One simple factor of the minimal Levi subalgebra containing the orbit's
/// representative, with the divisibility verdict of the regular orbit that e
/// projects to there.
struct LeviFactor {
  SimpleType type;  // always type A
  bool divisible = false;
};

/// Minimal-Levi decomposition: type-A factors (one per part for sl, one per
/// pair of equal parts for sp/so; trivial factors dropped) plus, for sp/so,
/// the remaining distinct parts as a distinguished orbit of a smaller
/// algebra of the same family.
struct LeviDecomposition {
  std::vector<LeviFactor> a_factors;
  Partition remainder;  // empty for sl
  bool remainder_divisible = true;

  bool divisible() const;  // conjunction over factors and remainder
};

LeviDecomposition minimal_levi(const ClassicalAlgebra& alg, const Partition& p);

/// Jordan type of a nilpotent matrix, computed from the ranks of its powers.
Partition jordan_type(const MatQ& m);

}  // namespace nilo
