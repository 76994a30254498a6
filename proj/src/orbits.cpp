#include "nilo/orbits.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "nilo/linalg.hpp"
#include "nilo/modp.hpp"
#include "nilo/rng.hpp"

namespace nilo {

namespace {

const std::vector<int> kNoRoots;

std::uint64_t marks_key(const Eigen::VectorXi& marks) {
  std::uint64_t k = 0;
  for (int i = 0; i < marks.size(); ++i) k = 3 * k + static_cast<std::uint64_t>(marks(i));
  return k;
}

}  // namespace

bool WeightedDiagram::all_even() const {
  for (int i = 0; i < marks.size(); ++i)
    if (marks(i) % 2 != 0) return false;
  return true;
}

std::string WeightedDiagram::to_text() const {
  std::string out;
  for (int i = 0; i < marks.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(marks(i));
  }
  return out;
}

std::optional<Eigen::VectorXi> WeightedDiagram::parse_marks(std::string_view s, int rank) {
  Eigen::VectorXi marks(rank);
  int idx = 0;
  const char* p = s.data();
  const char* end = s.data() + s.size();
  while (p < end) {
    if (idx >= rank) return std::nullopt;
    int v = -1;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{} || v < 0 || v > 2) return std::nullopt;
    marks(idx++) = v;
    p = next;
    if (p < end) {
      if (*p != ',') return std::nullopt;
      ++p;
      if (p == end) return std::nullopt;
    }
  }
  if (idx != rank) return std::nullopt;
  return marks;
}

bool diagram_less(const WeightedDiagram& a, const WeightedDiagram& b) {
  return std::lexicographical_compare(a.marks.data(), a.marks.data() + a.marks.size(),
                                      b.marks.data(), b.marks.data() + b.marks.size());
}

Grading::Grading(const RootSystem& rs, Eigen::VectorXi marks)
    : rank_(rs.rank()), marks_(std::move(marks)) {
  for (int r = 0; r < rs.num_roots(); ++r) by_deg_[marks_.dot(rs.root(r))].push_back(r);
}

const std::vector<int>& Grading::roots_at(int deg) const {
  auto it = by_deg_.find(deg);
  return it == by_deg_.end() ? kNoRoots : it->second;
}

VecQ characteristic_coroot_coords(const RootSystem& rs, const Eigen::VectorXi& marks) {
  const int n = rs.rank();
  MatQ at(n, n);
  VecQ b(n);
  for (int i = 0; i < n; ++i) {
    b(i) = Rational(marks(i));
    for (int j = 0; j < n; ++j) at(i, j) = Rational(rs.cartan()(j, i));
  }
  auto c = solve_any(at, b);
  if (!c) throw std::logic_error("cartan matrix is invertible");
  return *c;
}

std::optional<CharacteristicWitness> find_characteristic_witness(const ChevalleyAlgebra& g,
                                                                 const Eigen::VectorXi& marks,
                                                                 std::uint64_t seed, int trials) {
  const RootSystem& rs = g.roots();
  const int n = rs.rank();
  if (marks.isZero(0)) {
    CharacteristicWitness w;
    w.e = g.zero_element();
    w.h = g.zero_element();
    w.f = g.zero_element();
    w.dense_rank_certified = true;
    return w;
  }

  Grading grading(rs, marks);
  // Weight spaces of an sl2 module satisfy dim(i) >= dim(i + 2) for i >= 0;
  // marks violating the chain cannot come from a triple.
  for (int i = 0; i + 2 <= grading.max_degree(); ++i)
    if (grading.dim(i) < grading.dim(i + 2)) return std::nullopt;

  const std::vector<int>& deg2 = grading.roots_at(2);
  if (deg2.empty()) return std::nullopt;
  const std::vector<int>& degm2 = grading.roots_at(-2);
  const std::vector<int>& deg0 = grading.roots_at(0);
  const int rows = n + static_cast<int>(deg0.size());
  const int cols = static_cast<int>(degm2.size());

  VecQ hc = characteristic_coroot_coords(rs, marks);
  VecQ target = VecQ::Zero(rows);
  target.head(n) = hc;
  modp::VecP target_p(rows);
  for (int i = 0; i < rows; ++i) target_p(i) = modp::from_rational(target(i));

  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(mix_seed({seed, marks_key(marks), static_cast<std::uint64_t>(trial)}));
    VecQ e = g.zero_element();
    for (int r : deg2) e(g.root_basis_index(r)) = Rational(static_cast<long>(rng.coefficient()));

    // [e, -] : g(-2) -> g(0) in coordinates (cartan, degree-0 roots).
    MatQ m(rows, cols);
    for (int j = 0; j < cols; ++j) {
      VecQ b = g.bracket_basis(e, g.root_basis_index(degm2[static_cast<size_t>(j)]));
      for (int i = 0; i < n; ++i) m(i, j) = b(i);
      for (size_t k = 0; k < deg0.size(); ++k)
        m(n + static_cast<int>(k), j) = b(g.root_basis_index(deg0[k]));
    }

    if (!modp::solvable(modp::from_rational_matrix(m), target_p)) continue;
    auto y = solve_any(m, target);
    if (!y) continue;

    CharacteristicWitness w;
    w.e = e;
    w.h = g.cartan_element(hc);
    w.f = g.zero_element();
    for (int j = 0; j < cols; ++j) w.f(g.root_basis_index(degm2[static_cast<size_t>(j)])) = (*y)(j);
    w.trials_used = trial + 1;
    if (g.bracket(w.e, w.f) != w.h) throw std::logic_error("witness certificate failed");

    // Surjectivity of [g(0), e] onto g(2); full rank mod p certifies rank
    // over Q from below, so no exact pass is needed on success.
    const int cols0 = n + static_cast<int>(deg0.size());
    MatQ surj(static_cast<int>(deg2.size()), cols0);
    for (int j = 0; j < cols0; ++j) {
      int basis = j < n ? j : g.root_basis_index(deg0[static_cast<size_t>(j - n)]);
      VecQ b = g.bracket_basis(e, basis);
      for (size_t i = 0; i < deg2.size(); ++i)
        surj(static_cast<int>(i), j) = -b(g.root_basis_index(deg2[i]));
    }
    int rk = static_cast<int>(modp::rank(modp::from_rational_matrix(surj)));
    if (rk != static_cast<int>(deg2.size())) rk = static_cast<int>(rank_of(surj));
    w.dense_rank_certified = rk == static_cast<int>(deg2.size());
    return w;
  }
  return std::nullopt;
}

bool is_characteristic(const ChevalleyAlgebra& g, const Eigen::VectorXi& marks,
                       std::uint64_t seed, int trials) {
  return find_characteristic_witness(g, marks, seed, trials).has_value();
}

WeightedDiagram half_diagram(const WeightedDiagram& d) {
  WeightedDiagram h{d.type, d.marks};
  for (int i = 0; i < h.marks.size(); ++i) {
    if (h.marks(i) % 2 != 0) throw std::invalid_argument("halving a diagram with an odd mark");
    h.marks(i) /= 2;
  }
  return h;
}

bool is_divisible(const ChevalleyAlgebra& g, const Eigen::VectorXi& marks, std::uint64_t seed,
                  int trials) {
  WeightedDiagram d{g.type(), marks};
  if (d.is_zero() || !d.all_even()) return false;
  return is_characteristic(g, half_diagram(d).marks, seed, trials);
}

int diagram_height(const RootSystem& rs, const Eigen::VectorXi& marks) {
  return marks.dot(rs.highest_root());
}

Rational dynkin_index(const RootSystem& rs, const Eigen::VectorXi& marks) {
  VecQ c = characteristic_coroot_coords(rs, marks);
  Rational hh(0);
  for (int i = 0; i < rs.rank(); ++i) {
    if (c(i).is_zero()) continue;
    for (int j = 0; j < rs.rank(); ++j) {
      if (c(j).is_zero()) continue;
      hh += c(i) * c(j) * rs.coroot_form(i, j);
    }
  }
  return hh / Rational(2);
}

int orbit_dim(const RootSystem& rs, const Eigen::VectorXi& marks) {
  Grading grading(rs, marks);
  return algebra_dim(rs.type()) - grading.dim(0) - grading.dim(1);
}

std::map<int, int> graded_dims(const RootSystem& rs, const Eigen::VectorXi& marks) {
  Grading grading(rs, marks);
  std::map<int, int> out;
  for (int i = 0; i <= grading.max_degree(); ++i) out[i] = grading.dim(i);
  return out;
}

std::map<int, int> graded_centralizer_dims(const RootSystem& rs, const Eigen::VectorXi& marks) {
  Grading grading(rs, marks);
  std::map<int, int> out;
  for (int i = 0; i <= grading.max_degree(); ++i) out[i] = grading.dim(i) - grading.dim(i + 2);
  return out;
}

OrbitRecord make_orbit_record(const ChevalleyAlgebra& g, const WeightedDiagram& d,
                              std::uint64_t seed, int trials) {
  OrbitRecord rec;
  rec.diagram = d;
  rec.dim_orbit = orbit_dim(g.roots(), d.marks);
  rec.height = diagram_height(g.roots(), d.marks);
  rec.even = d.all_even();
  rec.divisible = is_divisible(g, d.marks, seed, trials);
  if (rec.divisible) rec.half = half_diagram(d);
  rec.dynkin_index = dynkin_index(g.roots(), d.marks);
  rec.graded_dims = graded_dims(g.roots(), d.marks);
  return rec;
}

std::vector<OrbitRecord> enumerate_orbits(const ChevalleyAlgebra& g, std::uint64_t seed,
                                          int trials) {
  const int n = g.rank();
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<OrbitRecord> out;
  for (long k = 0; k < total; ++k) {
    Eigen::VectorXi marks(n);
    long rem = k;
    for (int i = n - 1; i >= 0; --i) {
      marks(i) = static_cast<int>(rem % 3);
      rem /= 3;
    }
    if (is_characteristic(g, marks, seed, trials))
      out.push_back(make_orbit_record(g, {g.type(), marks}, seed, trials));
  }
  return out;  // already marks-lexicographic by construction
}

std::vector<FriendlyPair> friendly_pairs(const ChevalleyAlgebra& g, std::uint64_t seed,
                                         int trials) {
  std::vector<FriendlyPair> out;
  for (auto& rec : enumerate_orbits(g, seed, trials)) {
    if (!rec.divisible) continue;
    FriendlyPair pair;
    pair.lower = make_orbit_record(g, *rec.half, seed, trials);
    pair.upper = std::move(rec);
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace nilo
