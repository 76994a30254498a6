#include "nilo/centralizers.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "nilo/linalg.hpp"
#include "nilo/modp.hpp"
#include "nilo/rng.hpp"

namespace nilo {

namespace {

/// The columns of m that enlarge the column span, kept verbatim so repeated
/// products stay denominator-free when m is.
MatQ independent_columns(const MatQ& m) {
  RowSpanQ span(m.rows());
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (span.insert(m.col(j))) keep.push_back(j);
  }
  MatQ out(m.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = m.col(keep[k]);
  }
  return out;
}

long ceil_to_long(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
  if (!c.fits_slong_p()) throw std::domain_error("ceil_to_long: value too large");
  return c.get_si();
}

/// Eigenvalues of the semisimple part of any sl2 triple through a nilpotent
/// operator with these power ranks: a Jordan block of size s carries the
/// irreducible sl2 module with weights s-1, s-3, ..., 1-s.
std::vector<int> spectrum_from_ranks(Eigen::Index dim, const std::vector<Eigen::Index>& ranks) {
  const int m = static_cast<int>(ranks.size());  // the m-th power has rank 0
  std::vector<Eigen::Index> kdim(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 1; j <= m; ++j) kdim[static_cast<std::size_t>(j)] = dim - ranks[static_cast<std::size_t>(j - 1)];
  std::vector<int> spec;
  spec.reserve(static_cast<std::size_t>(dim));
  for (int s = 1; s <= m; ++s) {
    const Eigen::Index ge_s = kdim[static_cast<std::size_t>(s)] - kdim[static_cast<std::size_t>(s - 1)];
    const Eigen::Index ge_next =
        s < m ? kdim[static_cast<std::size_t>(s + 1)] - kdim[static_cast<std::size_t>(s)] : 0;
    const Eigen::Index blocks = ge_s - ge_next;
    for (Eigen::Index c = 0; c < blocks; ++c) {
      for (int t = s - 1; t >= 1 - s; t -= 2) spec.push_back(t);
    }
  }
  std::sort(spec.begin(), spec.end());
  return spec;
}

/// True when h lies in the Cartan subalgebra and every root has an integral
/// eigenvalue under ad h; fills root_deg with those eigenvalues.
bool cartan_integral_degrees(const ChevalleyAlgebra& g, const VecQ& h, std::vector<int>& root_deg) {
  const int rank = g.rank();
  for (int k = rank; k < g.dim(); ++k) {
    if (!h(k).is_zero()) return false;
  }
  const RootSystem& rs = g.roots();
  root_deg.assign(static_cast<std::size_t>(g.num_roots()), 0);
  for (int r = 0; r < g.num_roots(); ++r) {
    Rational d(0);
    for (int i = 0; i < rank; ++i) d += h(i) * Rational(rs.pairing(r, i));
    if (!d.is_integer()) return false;
    root_deg[static_cast<std::size_t>(r)] = static_cast<int>(d.to_long());
  }
  return true;
}

VecQ scaled(const VecQ& v, long s) { return v * Rational(s); }

}  // namespace

VecQ characteristic_element(const ChevalleyAlgebra& g, const Eigen::VectorXi& marks) {
  if (marks.size() != g.rank())
    throw std::invalid_argument("characteristic_element: rank mismatch");
  return g.cartan_element(characteristic_coroot_coords(g.roots(), marks));
}

SL2Triple representative(const ChevalleyAlgebra& g, const WeightedDiagram& d, std::uint64_t seed,
                         int trials) {
  if (!(d.type == g.type())) throw std::invalid_argument("representative: type mismatch");
  if (d.marks.size() != g.rank()) throw std::invalid_argument("representative: rank mismatch");
  for (Eigen::Index i = 0; i < d.marks.size(); ++i) {
    if (d.marks(i) < 0 || d.marks(i) > 2)
      throw std::invalid_argument("representative: marks must lie in {0, 1, 2}");
  }
  const std::optional<CharacteristicWitness> w =
      find_characteristic_witness(g, d.marks, seed, trials);
  if (!w)
    throw std::invalid_argument("representative: no nilpotent orbit has weighted diagram " +
                                d.to_text());
  const Grading gr(g.roots(), d.marks);
  const Eigen::Index cdim = g.dim() - rank_of(g.ad_matrix(w->e));
  if (cdim != gr.dim(0) + gr.dim(1))
    throw std::logic_error("representative: centralizer dimension mismatch");
  return SL2Triple{w->e, w->h, w->f};
}

std::vector<Eigen::Index> power_ranks(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("power_ranks: matrix not square");
  std::vector<Eigen::Index> ranks;
  MatQ b = independent_columns(a);
  ranks.push_back(b.cols());
  while (b.cols() > 0) {
    MatQ next = independent_columns(MatQ(a * b));
    if (next.cols() == b.cols())
      throw std::invalid_argument("power_ranks: matrix is not nilpotent");
    b = std::move(next);
    ranks.push_back(b.cols());
  }
  return ranks;
}

int element_height(const ChevalleyAlgebra& g, const VecQ& x) {
  if (x.size() != g.dim()) throw std::invalid_argument("element_height: size mismatch");
  return static_cast<int>(power_ranks(g.ad_matrix(x)).size()) - 1;
}

SL2Triple complete_sl2(const ChevalleyAlgebra& g, const VecQ& e) {
  if (e.size() != g.dim()) throw std::invalid_argument("complete_sl2: size mismatch");
  if (e.isZero(0)) throw std::invalid_argument("complete_sl2: zero element");
  const MatQ ad_e = g.ad_matrix(e);
  power_ranks(ad_e);  // throws when e is not nilpotent
  const std::optional<VecQ> y = solve_any(MatQ(ad_e * ad_e), VecQ(scaled(e, -2)));
  if (!y) throw std::logic_error("complete_sl2: no grading element in the image of ad e");
  const VecQ h = ad_e * *y;
  const Eigen::Index n = g.dim();
  MatQ sys(2 * n, n);
  sys.topRows(n) = ad_e;
  sys.bottomRows(n) = g.ad_matrix(h) + MatQ(MatQ::Identity(n, n) * Rational(2));
  VecQ rhs = VecQ::Zero(2 * n);
  rhs.head(n) = h;
  const std::optional<VecQ> f = solve_any(sys, rhs);
  if (!f) throw std::logic_error("complete_sl2: no opposite nilpotent");
  if (!(g.bracket(h, e) == VecQ(scaled(e, 2))) || !(g.bracket(e, *f) == h) ||
      !(g.bracket(h, *f) == VecQ(scaled(*f, -2))))
    throw std::logic_error("complete_sl2: triple relations failed");
  return SL2Triple{e, h, *f};
}

namespace {

VecQ vectorize(const MatQ& m) {
  const Eigen::Index n = m.rows(), c = m.cols();
  VecQ v(n * c);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) v(i * c + j) = m(i, j);
  }
  return v;
}

MatQ unvectorize(const VecQ& v, Eigen::Index n) {
  MatQ m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  }
  return m;
}

/// Matrix of x -> [a, x] on n x n matrices, rows and columns indexed by
/// (i, j) -> i n + j.
MatQ gl_ad_matrix(const MatQ& a) {
  const Eigen::Index n = a.rows();
  MatQ ad = MatQ::Zero(n * n, n * n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Eigen::Index col = r * n + c;
      for (Eigen::Index i = 0; i < n; ++i) ad(i * n + c, col) += a(i, r);
      for (Eigen::Index j = 0; j < n; ++j) ad(r * n + j, col) -= a(c, j);
    }
  }
  return ad;
}

}  // namespace

MatrixSL2 complete_sl2(const MatQ& e) {
  const Eigen::Index n = e.rows();
  if (n != e.cols()) throw std::invalid_argument("complete_sl2: matrix not square");
  if (n == 0 || e.isZero(0)) throw std::invalid_argument("complete_sl2: zero element");
  {
    MatQ p = e;
    Eigen::Index steps = 0;
    while (!p.isZero(0) && steps < n) {
      p = MatQ(p * e);
      ++steps;
    }
    if (!p.isZero(0)) throw std::invalid_argument("complete_sl2: matrix is not nilpotent");
  }
  const MatQ ad_e = gl_ad_matrix(e);
  const VecQ ve = vectorize(e);
  const std::optional<VecQ> y = solve_any(MatQ(ad_e * ad_e), VecQ(ve * Rational(-2)));
  if (!y) throw std::logic_error("complete_sl2: no grading element in the image of ad e");
  const MatQ ym = unvectorize(*y, n);
  const MatQ h = MatQ(e * ym - ym * e);
  const Eigen::Index nn = n * n;
  MatQ sys(2 * nn, nn);
  sys.topRows(nn) = ad_e;
  sys.bottomRows(nn) = gl_ad_matrix(h) + MatQ(MatQ::Identity(nn, nn) * Rational(2));
  VecQ rhs = VecQ::Zero(2 * nn);
  rhs.head(nn) = vectorize(h);
  const std::optional<VecQ> fv = solve_any(sys, rhs);
  if (!fv) throw std::logic_error("complete_sl2: no opposite nilpotent");
  const MatQ f = unvectorize(*fv, n);
  if (!(MatQ(h * e - e * h) == MatQ(e * Rational(2))) || !(MatQ(e * f - f * e) == h) ||
      !(MatQ(h * f - f * h) == MatQ(f * Rational(-2))))
    throw std::logic_error("complete_sl2: triple relations failed");
  return MatrixSL2{e, h, f};
}

std::vector<long> integer_eigenvalue_multiset(const MatQ& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols())
    throw std::invalid_argument("integer_eigenvalue_multiset: matrix not square");
  Rational maxrow(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    Rational row(0);
    for (Eigen::Index j = 0; j < n; ++j) row += abs(m(i, j));
    if (row > maxrow) maxrow = row;
  }
  const long bound = n == 0 ? 0 : ceil_to_long(maxrow);
  std::vector<long> vals;
  Eigen::Index total = 0;
  for (long lam = -bound; lam <= bound; ++lam) {
    MatQ shifted = m;
    for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) -= Rational(lam);
    const Eigen::Index k = n - rank_of(shifted);
    for (Eigen::Index c = 0; c < k; ++c) vals.push_back(lam);
    total += k;
  }
  if (total != n)
    throw std::invalid_argument(
        "integer_eigenvalue_multiset: spectrum is not integral and complete");
  return vals;
}

OrbitFingerprint fingerprint(const ChevalleyAlgebra& g, const VecQ& x) {
  if (x.size() != g.dim()) throw std::invalid_argument("fingerprint: size mismatch");
  if (x.isZero(0)) throw std::invalid_argument("fingerprint: zero element");
  const std::vector<Eigen::Index> ranks = power_ranks(g.ad_matrix(x));
  OrbitFingerprint fp;
  fp.centralizer_dim = static_cast<int>(g.dim() - ranks.front());
  fp.height = static_cast<int>(ranks.size()) - 1;
  fp.ad_spectrum = spectrum_from_ranks(g.dim(), ranks);
  return fp;
}

OrbitFingerprint expected_fingerprint(const RootSystem& rs, const Eigen::VectorXi& marks) {
  const Grading gr(rs, marks);
  OrbitFingerprint fp;
  fp.centralizer_dim = gr.dim(0) + gr.dim(1);
  fp.height = gr.max_degree();
  std::vector<int> spec(static_cast<std::size_t>(rs.rank()), 0);
  for (const auto& [deg, roots] : gr.by_degree()) {
    spec.insert(spec.end(), roots.size(), deg);
  }
  std::sort(spec.begin(), spec.end());
  fp.ad_spectrum = std::move(spec);
  return fp;
}

FingerprintTable::FingerprintTable(const ChevalleyAlgebra& g, std::uint64_t seed, int trials) {
  const std::vector<OrbitRecord> orbits = enumerate_orbits(g, seed, trials);
  entries_.reserve(orbits.size());
  for (const OrbitRecord& rec : orbits) {
    entries_.push_back(
        Entry{expected_fingerprint(g.roots(), rec.diagram.marks), rec.diagram, false});
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      if (entries_[i].fp == entries_[j].fp) {
        entries_[i].ambiguous = true;
        entries_[j].ambiguous = true;
      }
    }
  }
}

bool FingerprintTable::injective() const {
  for (const Entry& e : entries_) {
    if (e.ambiguous) return false;
  }
  return true;
}

std::optional<WeightedDiagram> FingerprintTable::identify(const OrbitFingerprint& fp) const {
  for (const Entry& e : entries_) {
    if (e.fp == fp) return e.ambiguous ? std::nullopt : std::optional<WeightedDiagram>(e.diagram);
  }
  return std::nullopt;
}

std::optional<WeightedDiagram> identify(const ChevalleyAlgebra& g, const VecQ& x,
                                        std::uint64_t seed, int trials) {
  return FingerprintTable(g, seed, trials).identify(fingerprint(g, x));
}

int GradedCentralizer::piece_dim(int i) const {
  const auto it = pieces.find(i);
  return it == pieces.end() ? 0 : static_cast<int>(it->second.cols());
}

MatQ GradedCentralizer::piece(int i) const {
  const auto it = pieces.find(i);
  return it == pieces.end() ? MatQ(e.size(), 0) : it->second;
}

int GradedCentralizer::top_degree() const {
  return pieces.empty() ? 0 : pieces.rbegin()->first;
}

int GradedCentralizer::total_dim() const {
  int t = 0;
  for (const auto& [deg, basis] : pieces) t += static_cast<int>(basis.cols());
  return t;
}

GradedCentralizer graded_centralizer(const ChevalleyAlgebra& g, const VecQ& e, const VecQ& h) {
  if (e.size() != g.dim() || h.size() != g.dim())
    throw std::invalid_argument("graded_centralizer: size mismatch");
  if (!(g.bracket(h, e) == VecQ(scaled(e, 2))))
    throw std::invalid_argument("graded_centralizer: grading incompatibility, [h, e] != 2e");
  GradedCentralizer gc;
  gc.e = e;
  gc.h = h;
  const Eigen::Index dim = g.dim();
  std::vector<int> root_deg;
  if (cartan_integral_degrees(g, h, root_deg)) {
    // h acts diagonally on the basis: take the kernel of ad e degree by degree.
    std::map<int, std::vector<int>> by_deg;
    for (int i = 0; i < g.rank(); ++i) by_deg[0].push_back(i);
    for (int r = 0; r < g.num_roots(); ++r)
      by_deg[root_deg[static_cast<std::size_t>(r)]].push_back(g.root_basis_index(r));
    for (const auto& [deg, idxs] : by_deg) {
      MatQ img(dim, static_cast<Eigen::Index>(idxs.size()));
      for (std::size_t j = 0; j < idxs.size(); ++j) {
        img.col(static_cast<Eigen::Index>(j)) = g.bracket_basis(e, idxs[j]);
      }
      const MatQ ker = kernel_basis(img);
      if (ker.cols() == 0) continue;
      MatQ piece = MatQ::Zero(dim, ker.cols());
      for (std::size_t j = 0; j < idxs.size(); ++j) {
        piece.row(idxs[j]) = ker.row(static_cast<Eigen::Index>(j));
      }
      gc.pieces.emplace(deg, std::move(piece));
    }
    return gc;
  }
  // General grading element: split ker(ad e), which ad h preserves, into
  // integral eigenspaces of ad h.
  const MatQ kern = kernel_basis(g.ad_matrix(e));
  const Eigen::Index k = kern.cols();
  if (k == 0) return gc;
  MatQ aug(dim, 2 * k);
  aug.leftCols(k) = kern;
  for (Eigen::Index j = 0; j < k; ++j) aug.col(k + j) = g.bracket(h, VecQ(kern.col(j)));
  const std::vector<Eigen::Index> piv = rref_in_place(aug);
  if (static_cast<Eigen::Index>(piv.size()) != k || piv.back() != k - 1)
    throw std::logic_error("graded_centralizer: ad h does not preserve ker(ad e)");
  const MatQ m = aug.block(0, k, k, k);  // ad h on the kernel, kernel coordinates
  Rational maxrow(0);
  for (Eigen::Index i = 0; i < k; ++i) {
    Rational row(0);
    for (Eigen::Index j = 0; j < k; ++j) row += abs(m(i, j));
    if (row > maxrow) maxrow = row;
  }
  const long bound = ceil_to_long(maxrow);
  Eigen::Index found = 0;
  for (long lam = -bound; lam <= bound; ++lam) {
    MatQ shifted = m;
    for (Eigen::Index i = 0; i < k; ++i) shifted(i, i) -= Rational(lam);
    const MatQ ker = kernel_basis(shifted);
    if (ker.cols() == 0) continue;
    gc.pieces.emplace(static_cast<int>(lam), MatQ(kern * ker));
    found += ker.cols();
  }
  if (found != k)
    throw std::invalid_argument(
        "graded_centralizer: ker(ad e) does not split into integral eigenspaces of ad h");
  return gc;
}

bool is_reachable(const ChevalleyAlgebra& g, const VecQ& e, const VecQ& h) {
  const GradedCentralizer gc = graded_centralizer(g, e, h);
  const MatQ p0 = gc.piece(0);
  const MatQ p1 = gc.piece(1);
  const MatQ p2 = gc.piece(2);
  const int target = gc.piece_dim(2);
  RowSpanQ span(g.dim());
  bool saturated = false;
  const auto feed = [&](const VecQ& v) {
    if (span.insert(v) && static_cast<int>(span.dim()) == target) saturated = true;
  };
  for (Eigen::Index i = 0; i < p0.cols() && !saturated; ++i) {
    for (Eigen::Index j = 0; j < p2.cols() && !saturated; ++j) {
      feed(g.bracket(VecQ(p0.col(i)), VecQ(p2.col(j))));
    }
  }
  for (Eigen::Index i = 0; i < p1.cols() && !saturated; ++i) {
    for (Eigen::Index j = i + 1; j < p1.cols() && !saturated; ++j) {
      feed(g.bracket(VecQ(p1.col(i)), VecQ(p1.col(j))));
    }
  }
  return span.contains(e);
}

bool is_reachable(const ChevalleyAlgebra& g, const VecQ& e) {
  const SL2Triple t = complete_sl2(g, e);
  return is_reachable(g, t.e, t.h);
}

bool nilradical_generated_by_degree_one(const ChevalleyAlgebra& g, const GradedCentralizer& gc) {
  const int top = gc.top_degree();
  const MatQ p1 = gc.piece(1);
  for (int d = 2; d <= top; ++d) {
    const int target = gc.piece_dim(d);
    if (target == 0) continue;
    const MatQ prev = gc.piece(d - 1);
    RowSpanQ span(g.dim());
    bool ok = false;
    for (Eigen::Index i = 0; i < p1.cols() && !ok; ++i) {
      for (Eigen::Index j = 0; j < prev.cols() && !ok; ++j) {
        if (span.insert(g.bracket(VecQ(p1.col(i)), VecQ(prev.col(j)))) &&
            static_cast<int>(span.dim()) == target)
          ok = true;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool nilpotent_part_in_derived(const ChevalleyAlgebra& g, const GradedCentralizer& gc) {
  const int top = gc.top_degree();
  for (int d = 1; d <= top; ++d) {
    const int target = gc.piece_dim(d);
    if (target == 0) continue;
    RowSpanQ span(g.dim());
    bool ok = false;
    for (int a = 0; 2 * a <= d && !ok; ++a) {
      const int b = d - a;
      const MatQ pa = gc.piece(a);
      const MatQ pb = gc.piece(b);
      for (Eigen::Index i = 0; i < pa.cols() && !ok; ++i) {
        for (Eigen::Index j = (a == b ? i + 1 : 0); j < pb.cols() && !ok; ++j) {
          if (span.insert(g.bracket(VecQ(pa.col(i)), VecQ(pb.col(j)))) &&
              static_cast<int>(span.dim()) == target)
            ok = true;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool check_spade(const ChevalleyAlgebra& g, const GradedCentralizer& gc, const VecQ& e1,
                 const VecQ& e2) {
  const MatQ p1 = gc.piece(1);
  if (!in_column_span(p1, e1) || !in_column_span(p1, e2))
    throw std::invalid_argument("check_spade: generators must lie in g^e(1)");
  const int top = gc.top_degree();
  for (int i = 1; i <= top; ++i) {
    const int target = gc.piece_dim(i);
    if (target == 0) continue;
    const MatQ prev = gc.piece(i - 1);
    RowSpanQ span(g.dim());
    bool ok = false;
    for (Eigen::Index j = 0; j < prev.cols() && !ok; ++j) {
      const VecQ x = prev.col(j);
      if (span.insert(g.bracket(x, e1)) && static_cast<int>(span.dim()) == target) ok = true;
      if (!ok && span.insert(g.bracket(x, e2)) && static_cast<int>(span.dim()) == target)
        ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

VeryFriendlyResult very_friendly_check(const ChevalleyAlgebra& g, const FriendlyPair& pair,
                                       const FingerprintTable& table, std::uint64_t seed,
                                       int trials, int random_draws) {
  const SL2Triple rep =
      representative(g, pair.upper.diagram, mix_seed({seed, 0x7570706572ULL}), trials);
  const GradedCentralizer gc = graded_centralizer(g, rep.e, rep.h);
  const MatQ p4 = gc.piece(4);
  const Eigen::Index n4 = p4.cols();
  const OrbitFingerprint want = expected_fingerprint(g.roots(), pair.lower.diagram.marks);
  const std::string lower_name = pair.lower.diagram.to_text();
  VeryFriendlyResult out;
  out.base_point = rep.e;

  if (n4 == 0) {
    out.verdict = Verdict::kFalse;
    out.evidence = "obstruction: g^e(4) = 0";
    return out;
  }

  if (n4 == 1) {
    // Fingerprints are constant on the punctured line, so one element decides.
    const VecQ x = p4.col(0);
    const OrbitFingerprint fp = fingerprint(g, x);
    if (!(fp == want)) {
      out.verdict = Verdict::kFalse;
      std::string where;
      if (const std::optional<WeightedDiagram> id = table.identify(fp); id)
        where = "; it lies on the orbit with diagram " + id->to_text();
      if (fp.height != want.height) {
        out.evidence = "obstruction: every nonzero element of g^e(4) has height " +
                       std::to_string(fp.height) + ", while elements of " + lower_name +
                       " have height " + std::to_string(want.height) + where;
      } else {
        out.evidence =
            "obstruction: the one-dimensional g^e(4) does not lie on " + lower_name + where;
      }
      return out;
    }
    const std::optional<WeightedDiagram> id = table.identify(fp);
    if (id && *id == pair.lower.diagram) {
      out.verdict = Verdict::kTrue;
      out.witness = x;
      out.evidence = "witness: generator of the one-dimensional g^e(4), fingerprint matches " +
                     lower_name;
      return out;
    }
    out.verdict = Verdict::kInconclusive;
    out.evidence = "fingerprint of g^e(4) matches " + lower_name +
                   ", but several orbits share that fingerprint";
    return out;
  }

  const Eigen::Index want_rank = g.dim() - want.centralizer_dim;
  const auto try_candidate = [&](const VecQ& coeffs) -> bool {
    const VecQ x = p4 * coeffs;
    // A wrong rank mod p can only reject a candidate, never certify one.
    if (modp::rank(modp::from_rational_matrix(g.ad_matrix(x))) != want_rank) return false;
    const OrbitFingerprint fp = fingerprint(g, x);
    if (!(fp == want)) return false;
    const std::optional<WeightedDiagram> id = table.identify(fp);
    if (!id || !(*id == pair.lower.diagram)) return false;
    out.verdict = Verdict::kTrue;
    out.witness = x;
    return true;
  };

  long sweep_count = 0;
  if (n4 <= 6) {
    long total = 1;
    for (Eigen::Index i = 0; i < n4; ++i) total *= 3;
    for (long idx = 1; idx < total; ++idx) {
      VecQ c(n4);
      long t = idx;
      int first_sign = 0;
      for (Eigen::Index i = 0; i < n4; ++i) {
        const int digit = static_cast<int>(t % 3);
        t /= 3;
        const int coeff = digit == 2 ? -1 : digit;
        c(i) = Rational(coeff);
        if (first_sign == 0) first_sign = coeff;
      }
      if (first_sign < 0) continue;  // the negated vector is already swept
      ++sweep_count;
      if (try_candidate(c)) {
        out.evidence = "witness: sign-sweep candidate in g^e(4), fingerprint matches " +
                       lower_name;
        return out;
      }
    }
  }

  SplitMix64 rng(mix_seed({seed, 0x67653466ULL, static_cast<std::uint64_t>(n4)}));
  for (int k = 0; k < random_draws; ++k) {
    VecQ c(n4);
    bool nonzero = false;
    for (Eigen::Index i = 0; i < n4; ++i) {
      const long v = static_cast<long>(rng.below(9)) - 4;
      c(i) = Rational(v);
      if (v != 0) nonzero = true;
    }
    if (!nonzero) continue;
    if (try_candidate(c)) {
      out.evidence = "witness: random draw " + std::to_string(k + 1) + " in g^e(4) (seed " +
                     std::to_string(seed) + "), fingerprint matches " + lower_name;
      return out;
    }
  }

  out.verdict = Verdict::kInconclusive;
  out.evidence = "budget exhausted: " + std::to_string(sweep_count) +
                 " sign-sweep candidates and " + std::to_string(random_draws) +
                 " random draws found no element of " + lower_name + " in g^e(4)";
  return out;
}

FriendlyPair annotate_pair(const ChevalleyAlgebra& g, const FriendlyPair& pair,
                           const FingerprintTable& table, std::uint64_t seed, int trials,
                           int random_draws) {
  FriendlyPair out = pair;
  const SL2Triple low =
      representative(g, pair.lower.diagram, mix_seed({seed, 0x6c6f776572ULL}), trials);
  out.lower_reachable = is_reachable(g, low.e, low.h);
  const VeryFriendlyResult vf = very_friendly_check(g, pair, table, seed, trials, random_draws);
  if (vf.verdict == Verdict::kTrue) out.very_friendly = true;
  if (vf.verdict == Verdict::kFalse) out.very_friendly = false;
  return out;
}

}  // namespace nilo
