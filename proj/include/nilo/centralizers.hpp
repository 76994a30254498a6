#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilo/chevalley.hpp"
#include "nilo/orbits.hpp"
#include "nilo/rational.hpp"
#include "nilo/rootsys.hpp"

namespace nilo {

/// sl2 triple inside a Chevalley algebra: [h, e] = 2e, [h, f] = -2f,
/// [e, f] = h, all checked exactly by the constructors below.
struct SL2Triple {
  VecQ e;
  VecQ h;
  VecQ f;
};

/// sl2 triple of square matrices under the commutator bracket.
struct MatrixSL2 {
  MatQ e;
  MatQ h;
  MatQ f;
};

/// The marked Cartan element h with alpha_i(h) = marks_i.
VecQ characteristic_element(const ChevalleyAlgebra& g, const Eigen::VectorXi& marks);

/// Certified representative of the orbit with the given weighted diagram:
/// e homogeneous of degree 2, h the marked Cartan element, f of degree -2,
/// with the sl2 relations and dim g^e = dim g(0) + dim g(1) verified over Q.
/// Throws std::invalid_argument when no nilpotent orbit has this diagram.
SL2Triple representative(const ChevalleyAlgebra& g, const WeightedDiagram& d,
                         std::uint64_t seed = 1, int trials = 8);

/// Ranks of a^1, a^2, ... down to the first vanishing power; the last entry
/// is always 0, and a == 0 gives {0}. Column spans are tracked with the
/// original integer-friendly columns, so entries never pick up denominators.
/// Throws std::invalid_argument when the ranks stall above 0 (a is not
/// nilpotent).
std::vector<Eigen::Index> power_ranks(const MatQ& a);

/// Largest m with (ad x)^m != 0; 0 for x = 0. Throws std::invalid_argument
/// when x is not nilpotent.
int element_height(const ChevalleyAlgebra& g, const VecQ& x);

/// Completes a nonzero nilpotent e to an sl2 triple: solves
/// (ad e)^2 y = -2e and sets h = [e, y], so h lies in the image of ad e with
/// [h, e] = 2e; then solves [e, f] = h, [h, f] = -2f for f. All relations
/// are re-checked exactly. Throws std::invalid_argument when e is zero or
/// not nilpotent.
SL2Triple complete_sl2(const ChevalleyAlgebra& g, const VecQ& e);

/// The same completion for a nilpotent square matrix under the commutator.
MatrixSL2 complete_sl2(const MatQ& e);

/// Eigenvalues of a matrix whose spectrum is integral and whose eigenspaces
/// fill the whole space, as a sorted multiset of geometric multiplicities.
/// Throws std::invalid_argument otherwise.
std::vector<long> integer_eigenvalue_multiset(const MatQ& m);

/// Orbit invariants of a nonzero nilpotent element x: the dimension of its
/// centralizer, its height, and the eigenvalue multiset of ad h for any sl2
/// triple (x, h, f) through x. The multiset is read off the Jordan structure
/// of ad x (a size-s block contributes s-1, s-3, ..., 1-s), so no triple is
/// solved for. Two elements on one orbit always agree on all three fields.
struct OrbitFingerprint {
  int centralizer_dim = 0;
  int height = 0;
  std::vector<int> ad_spectrum;  // sorted, |ad_spectrum| = dim g

  friend bool operator==(const OrbitFingerprint&, const OrbitFingerprint&) = default;
};

/// Throws std::invalid_argument when x is zero or not nilpotent.
OrbitFingerprint fingerprint(const ChevalleyAlgebra& g, const VecQ& x);

/// The fingerprint every representative of the diagram's orbit carries,
/// computed from the grading alone: centralizer dim g(0) + dim g(1), height
/// = top degree, spectrum = rank zeros plus the degree of every root.
OrbitFingerprint expected_fingerprint(const RootSystem& rs, const Eigen::VectorXi& marks);

/// Fingerprints of every orbit of the algebra. Entries sharing a fingerprint
/// with another orbit are flagged ambiguous, and identify() refuses them:
/// it returns a diagram only when exactly one orbit carries the fingerprint,
/// and never guesses.
class FingerprintTable {
public:
  struct Entry {
    OrbitFingerprint fp;
    WeightedDiagram diagram;
    bool ambiguous = false;
  };

  FingerprintTable(const ChevalleyAlgebra& g, std::uint64_t seed = 1, int trials = 8);

  const std::vector<Entry>& entries() const { return entries_; }
  /// No two orbits share a fingerprint.
  bool injective() const;
  std::optional<WeightedDiagram> identify(const OrbitFingerprint& fp) const;

private:
  std::vector<Entry> entries_;
};

/// Fingerprints x and looks it up in a freshly built table for g.
std::optional<WeightedDiagram> identify(const ChevalleyAlgebra& g, const VecQ& x,
                                        std::uint64_t seed = 1, int trials = 8);

/// The centralizer g^e split along the eigenspaces of ad h: pieces[i] holds
/// a basis of g^e(i) = {x : [e, x] = 0, [h, x] = i x} as columns. Only
/// nonzero pieces are stored; for an exact sl2 triple (e, h, f) every piece
/// sits in degree >= 0 and the dimensions sum to dim g(0) + dim g(1).
struct GradedCentralizer {
  VecQ e;
  VecQ h;
  std::map<int, MatQ> pieces;

  Eigen::Index ambient_dim() const { return e.size(); }
  int piece_dim(int i) const;
  /// Basis columns of g^e(i); a dim x 0 matrix when the piece vanishes.
  MatQ piece(int i) const;
  /// Largest degree with a nonzero piece; 0 when the centralizer is trivial.
  int top_degree() const;
  /// dim g^e.
  int total_dim() const;
};

/// Decomposes ker(ad e) by the eigenvalues of ad h. Requires [h, e] = 2e and
/// throws std::invalid_argument ("grading incompatibility") otherwise. When
/// h is a Cartan element with integral root eigenvalues the kernel is taken
/// degree by degree; any other h goes through an explicit eigenspace split
/// of ad h restricted to ker(ad e), which must be integral and complete.
GradedCentralizer graded_centralizer(const ChevalleyAlgebra& g, const VecQ& e, const VecQ& h);

/// Whether e lies in [g^e, g^e]. Since g^e is graded and e is homogeneous of
/// degree 2, only [g^e(0), g^e(2)] + [g^e(1), g^e(1)] can reach it.
bool is_reachable(const ChevalleyAlgebra& g, const VecQ& e, const VecQ& h);
/// Completes e to a triple first; throws like complete_sl2.
bool is_reachable(const ChevalleyAlgebra& g, const VecQ& e);

/// Whether the nilpotent part g^e(>=1) is generated as a Lie algebra by
/// g^e(1): checks degree by degree that [g^e(1), g^e(d-1)] fills g^e(d).
/// Left-normed brackets suffice by the Jacobi identity. Vacuously true when
/// every positive piece vanishes.
bool nilradical_generated_by_degree_one(const ChevalleyAlgebra& g, const GradedCentralizer& gc);

/// Whether g^e(>=1) lies in [g^e, g^e]: per degree d >= 1 the span of all
/// [g^e(a), g^e(b)] with a + b = d is compared against g^e(d). The span is
/// contained in g^e(d), so containment reduces to a dimension count.
bool nilpotent_part_in_derived(const ChevalleyAlgebra& g, const GradedCentralizer& gc);

/// The degree-one generation identity for a pair e1, e2 in g^e(1):
/// g^e(i) = [g^e(i-1), e1] + [g^e(i-1), e2] for every i >= 1. Throws
/// std::invalid_argument when e1 or e2 is outside g^e(1).
bool check_spade(const ChevalleyAlgebra& g, const GradedCentralizer& gc, const VecQ& e1,
                 const VecQ& e2);

enum class Verdict { kTrue, kFalse, kInconclusive };
std::string to_string(Verdict v);

/// Outcome of the degree-4 search for a friendly pair: kTrue carries a
/// witness x in g^e(4) on the lower orbit, kFalse a conclusive obstruction
/// described in `evidence`, kInconclusive an exhausted search budget.
/// base_point is the certified representative e of the upper orbit that the
/// search centralized, so a witness satisfies [base_point, witness] = 0.
struct VeryFriendlyResult {
  Verdict verdict = Verdict::kInconclusive;
  VecQ base_point;
  std::optional<VecQ> witness;
  std::string evidence;
};

/// Decides whether some element of g^e(4) lies on the lower orbit of the
/// pair, e being a representative of the upper orbit; such an element
/// commutes with e by construction. dim g^e(4) <= 1 is decided exactly
/// (fingerprints are constant on punctured lines); otherwise candidates come
/// from an exhaustive {-1, 0, 1} sign sweep (when dim g^e(4) <= 6) followed
/// by seeded random draws, each screened by a mod-p rank check before exact
/// identification. The screen can only miss witnesses, never certify one.
VeryFriendlyResult very_friendly_check(const ChevalleyAlgebra& g, const FriendlyPair& pair,
                                       const FingerprintTable& table, std::uint64_t seed = 1,
                                       int trials = 8, int random_draws = 64);

/// Returns a copy of the pair with lower_reachable always filled and
/// very_friendly filled when the search is conclusive. a2_pair is reference
/// data and is left untouched.
FriendlyPair annotate_pair(const ChevalleyAlgebra& g, const FriendlyPair& pair,
                           const FingerprintTable& table, std::uint64_t seed = 1, int trials = 8,
                           int random_draws = 64);

}  // namespace nilo
