#include "nilo/classical.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "nilo/linalg.hpp"

namespace nilo {

namespace {

void require_algebra(const ClassicalAlgebra& alg) {
  if (!alg.valid()) throw std::invalid_argument("invalid classical algebra " + alg.to_string());
}

void require_valid(const ClassicalAlgebra& alg, const Partition& p) {
  if (!validate_partition(alg, p))
    throw std::invalid_argument("partition " + partition_text(p) + " is not valid for " +
                                alg.to_string());
}

void require_nonzero(const Partition& p) {
  if (is_zero_partition(p))
    throw std::domain_error("the zero orbit (all parts 1) is excluded here");
}

bool all_parts_odd(const Partition& p) {
  for (int part : p)
    if (part % 2 == 0) return false;
  return true;
}

/// Divisibility rule for orthogonal partitions: all parts odd, and the
/// sorted parts pair up in positions (1,2), (3,4), ... with each pair
/// either (4l+3, 4l+3) or (4l+1, 4l+1 or 4l-1); trailing parts equal to 1
/// need no partner.
bool so_divisibility_rule(const Partition& p) {
  if (!all_parts_odd(p)) return false;
  size_t k = 0;
  while (k < p.size()) {
    int a = p[k];
    if (a == 1) break;
    if (k + 1 >= p.size()) return false;
    int b = p[k + 1];
    if (a % 4 == 3 ? b != a : (b != a && b != a - 2)) return false;
    k += 2;
  }
  return true;
}

/// Blocks in partition order plus the pairing used for the invariant form:
/// adjacent equal parts pair up (sp/so), the rest stand alone.
struct BlockPlan {
  std::vector<std::pair<int, int>> ranges;  // [begin, end) per part
  std::vector<std::pair<int, int>> pairs;   // indices into ranges
  std::vector<int> singles;                 // indices into ranges
};

BlockPlan block_plan(ClassicalFamily fam, const Partition& p) {
  BlockPlan plan;
  int off = 0;
  for (int part : p) {
    plan.ranges.emplace_back(off, off + part);
    off += part;
  }
  if (fam == ClassicalFamily::SL) return plan;
  size_t i = 0;
  while (i < p.size()) {
    if (i + 1 < p.size() && p[i] == p[i + 1]) {
      plan.pairs.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
      i += 2;
    } else {
      plan.singles.push_back(static_cast<int>(i));
      i += 1;
    }
  }
  return plan;
}

/// Jordan block with e lowering the index: e v_{j+1} = v_j, eigenvalues
/// descending down the diagonal.
void fill_descending(MatQ& e, MatQ& h, MatQ& f, int off, int l) {
  for (int j = 0; j < l; ++j) h(off + j, off + j) = Rational(l - 1 - 2 * j);
  for (int j = 0; j + 1 < l; ++j) {
    e(off + j, off + j + 1) = Rational(1);
    f(off + j + 1, off + j) = Rational(static_cast<long>(j + 1) * (l - 1 - j));
  }
}

/// Jordan block with e raising the index: e v_j = v_{j+1}, eigenvalues
/// climbing down the diagonal.
void fill_climbing(MatQ& e, MatQ& h, MatQ& f, int off, int l) {
  for (int j = 0; j < l; ++j) h(off + j, off + j) = Rational(2 * j + 1 - l);
  for (int j = 0; j + 1 < l; ++j) {
    e(off + j + 1, off + j) = Rational(1);
    f(off + j, off + j + 1) = Rational(static_cast<long>(j + 1) * (l - 1 - j));
  }
}

std::vector<int> sorted_eigenvalues(const Partition& p) {
  std::vector<int> eigs;
  for (int part : p)
    for (int v = part - 1; v >= 1 - part; v -= 2) eigs.push_back(v);
  std::sort(eigs.begin(), eigs.end(), std::greater<int>());
  return eigs;
}

}  // namespace

std::string to_string(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::SL: return "sl";
    case ClassicalFamily::SO: return "so";
    case ClassicalFamily::SP: return "sp";
  }
  return "?";
}

std::optional<ClassicalFamily> parse_family(std::string_view s) {
  if (s == "sl") return ClassicalFamily::SL;
  if (s == "so") return ClassicalFamily::SO;
  if (s == "sp") return ClassicalFamily::SP;
  return std::nullopt;
}

bool ClassicalAlgebra::valid() const {
  if (dim_v < 1) return false;
  if (family == ClassicalFamily::SP) return dim_v % 2 == 0;
  return true;
}

std::string ClassicalAlgebra::to_string() const {
  return nilo::to_string(family) + "(" + std::to_string(dim_v) + ")";
}

bool is_partition(const Partition& p) {
  if (p.empty()) return false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

bool is_zero_partition(const Partition& p) { return !p.empty() && p.front() == 1; }

long partition_sum(const Partition& p) {
  long s = 0;
  for (int part : p) s += part;
  return s;
}

std::string partition_text(const Partition& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

std::optional<Partition> parse_partition(std::string_view s) {
  Partition p;
  const char* q = s.data();
  const char* end = s.data() + s.size();
  while (q < end) {
    int v = 0;
    auto [next, ec] = std::from_chars(q, end, v);
    if (ec != std::errc{} || v < 1) return std::nullopt;
    p.push_back(v);
    q = next;
    if (q < end) {
      if (*q != ',') return std::nullopt;
      ++q;
      if (q == end) return std::nullopt;
    }
  }
  if (!is_partition(p)) return std::nullopt;
  return p;
}

bool validate_partition(const ClassicalAlgebra& alg, const Partition& p) {
  require_algebra(alg);
  if (!is_partition(p)) throw std::invalid_argument("malformed partition " + partition_text(p));
  if (partition_sum(p) != alg.dim_v)
    throw std::invalid_argument("partition " + partition_text(p) + " does not sum to dim V = " +
                                std::to_string(alg.dim_v));
  if (alg.family == ClassicalFamily::SL) return true;
  // sp: odd parts need even multiplicity; so: even parts need even
  // multiplicity.
  const int bad_parity = alg.family == ClassicalFamily::SP ? 1 : 0;
  size_t i = 0;
  while (i < p.size()) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (p[i] % 2 == bad_parity && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

std::vector<Partition> valid_partitions(const ClassicalAlgebra& alg) {
  require_algebra(alg);
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      if (validate_partition(alg, cur)) out.push_back(cur);
      return;
    }
    for (int k = std::min(max_part, remaining); k >= 1; --k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  rec(rec, alg.dim_v, alg.dim_v);
  return out;
}

bool is_divisible_partition(const ClassicalAlgebra& alg, const Partition& p) {
  require_valid(alg, p);
  require_nonzero(p);
  if (alg.family == ClassicalFamily::SO) return so_divisibility_rule(p);
  return all_parts_odd(p);
}

Partition half_partition(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("malformed partition " + partition_text(p));
  if (!all_parts_odd(p))
    throw std::invalid_argument("halving needs all parts odd: " + partition_text(p));
  Partition out;
  for (int part : p) {
    if (part == 1) {
      out.push_back(1);
    } else {
      out.push_back((part + 1) / 2);
      out.push_back((part - 1) / 2);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

SimpleType classical_type(const ClassicalAlgebra& alg) {
  require_algebra(alg);
  const int n = alg.dim_v;
  switch (alg.family) {
    case ClassicalFamily::SL:
      if (n >= 2) return {Series::A, n - 1};
      break;
    case ClassicalFamily::SP:
      if (n >= 4) return {Series::C, n / 2};
      break;
    case ClassicalFamily::SO:
      if (n % 2 == 1 && n >= 5) return {Series::B, n / 2};
      if (n % 2 == 0 && n >= 6) return {Series::D, n / 2};
      break;
  }
  throw std::invalid_argument(alg.to_string() + " has no simple diagram type");
}

WeightedDiagram diagram_from_partition(const ClassicalAlgebra& alg, const Partition& p) {
  require_valid(alg, p);
  SimpleType t = classical_type(alg);
  const std::vector<int> eigs = sorted_eigenvalues(p);
  const int n = t.rank;
  Eigen::VectorXi marks(n);
  if (alg.family == ClassicalFamily::SL) {
    for (int i = 0; i < n; ++i) marks(i) = eigs[i] - eigs[i + 1];
  } else {
    // The first n sorted eigenvalues are the dominant epsilon-coordinates.
    for (int i = 0; i + 1 < n; ++i) marks(i) = eigs[i] - eigs[i + 1];
    switch (t.series) {
      case Series::B: marks(n - 1) = eigs[n - 1]; break;
      case Series::C: marks(n - 1) = 2 * eigs[n - 1]; break;
      default: marks(n - 1) = eigs[n - 2] + eigs[n - 1]; break;  // D
    }
  }
  for (int i = 0; i < n; ++i)
    if (marks(i) < 0 || marks(i) > 2)
      throw std::logic_error("eigenvalue recipe left the mark range on " + partition_text(p));
  return {t, marks};
}

std::vector<WeightedDiagram> diagrams_from_partition(const ClassicalAlgebra& alg,
                                                     const Partition& p) {
  WeightedDiagram d = diagram_from_partition(alg, p);
  std::vector<WeightedDiagram> out{d};
  if (alg.family == ClassicalFamily::SO && alg.dim_v % 2 == 0 && !p.empty() && p[0] % 2 == 0) {
    // Very even partition: the mirror diagram swaps the fork marks.
    WeightedDiagram m = d;
    std::swap(m.marks(m.marks.size() - 2), m.marks(m.marks.size() - 1));
    out.push_back(m);
  }
  return out;
}

int partition_height(const ClassicalAlgebra& alg, const Partition& p) {
  require_valid(alg, p);
  require_nonzero(p);
  if (alg.family != ClassicalFamily::SO) return 2 * (p[0] - 1);
  const int second = p.size() >= 2 ? p[1] : 0;
  return second >= p[0] - 1 ? p[0] + second - 2 : 2 * p[0] - 4;
}

MatrixTriple build_triple(const ClassicalAlgebra& alg, const Partition& p) {
  require_valid(alg, p);
  const int n = alg.dim_v;
  MatrixTriple t;
  t.e = MatQ::Zero(n, n);
  t.h = MatQ::Zero(n, n);
  t.f = MatQ::Zero(n, n);
  BlockPlan plan = block_plan(alg.family, p);
  t.block_structure = plan.ranges;

  const bool climbing = alg.family == ClassicalFamily::SO;
  for (size_t b = 0; b < p.size(); ++b) {
    int off = plan.ranges[b].first;
    if (climbing)
      fill_climbing(t.e, t.h, t.f, off, p[b]);
    else
      fill_descending(t.e, t.h, t.f, off, p[b]);
  }

  if (alg.family == ClassicalFamily::SL) return t;

  MatQ phi = MatQ::Zero(n, n);
  const Rational eps(alg.family == ClassicalFamily::SO ? 1 : -1);
  for (int s : plan.singles) {
    // Self-paired block: antidiagonal with alternating signs. Symmetric for
    // odd size (so), skew for even size (sp).
    auto [off, end] = plan.ranges[s];
    const int l = end - off;
    const Rational lead(alg.family == ClassicalFamily::SO ? 1 : -1);
    for (int a = 0; a < l; ++a)
      phi(off + a, off + l - 1 - a) = (a % 2 == 0) ? lead : -lead;
  }
  for (auto [b1, b2] : plan.pairs) {
    // Two equal blocks dual to each other; the form vanishes on each.
    auto [offU, endU] = plan.ranges[b1];
    int offW = plan.ranges[b2].first;
    const int l = endU - offU;
    for (int a = 0; a < l; ++a) {
      Rational v(a % 2 == 0 ? 1 : -1);
      phi(offU + a, offW + l - 1 - a) = v;
      phi(offW + l - 1 - a, offU + a) = eps * v;
    }
  }
  t.phi = std::move(phi);
  return t;
}

MatQ build_e2(const ClassicalAlgebra& alg, const Partition& p, const MatrixTriple& t) {
  if (!is_divisible_partition(alg, p))
    throw std::invalid_argument("partition " + partition_text(p) + " is not divisible for " +
                                alg.to_string());
  const int n = alg.dim_v;
  if (alg.family == ClassicalFamily::SL) return (t.e * t.e).eval();

  MatQ e2 = MatQ::Zero(n, n);
  BlockPlan plan = block_plan(alg.family, p);
  for (auto [b1, b2] : plan.pairs) {
    // e squared on the first block of the pair, minus e squared on the
    // second; the two signs keep the sum inside the form's algebra.
    for (auto [b, sign] : {std::pair{b1, 1}, std::pair{b2, -1}}) {
      auto [off, end] = plan.ranges[static_cast<size_t>(b)];
      const int l = end - off;
      MatQ blk = t.e.block(off, off, l, l);
      e2.block(off, off, l, l) = blk * blk * Rational(sign);
    }
  }

  // Remaining so blocks have distinct odd sizes pairing up as
  // (4m+1, 4m-1); the companion element swaps the two blocks of each pair
  // with a two-step shift. Trailing size-1 blocks are annihilated.
  size_t k = 0;
  while (k < plan.singles.size()) {
    auto [offA, endA] = plan.ranges[static_cast<size_t>(plan.singles[k])];
    const int a = endA - offA;
    if (a == 1) {
      ++k;
      continue;
    }
    if (a % 4 != 1 || k + 1 >= plan.singles.size())
      throw std::logic_error("unpaired block in a divisible orthogonal partition");
    auto [offB, endB] = plan.ranges[static_cast<size_t>(plan.singles[k + 1])];
    const int b = endB - offB;
    if (b != a - 2) throw std::logic_error("unpaired block in a divisible orthogonal partition");
    // v_i -> -u_{i+1} (both climbing chains, 1-based indices).
    for (int i = 1; i <= a - 3; ++i) e2(offB + i, offA + i - 1) = Rational(-1);
    // u_k -> -v_{k+3}.
    for (int j = 1; j <= b - 1; ++j) e2(offA + j + 2, offB + j - 1) = Rational(-1);
    k += 2;
  }
  return e2;
}

bool LeviDecomposition::divisible() const {
  for (const auto& fac : a_factors)
    if (!fac.divisible) return false;
  return remainder_divisible;
}

LeviDecomposition minimal_levi(const ClassicalAlgebra& alg, const Partition& p) {
  require_valid(alg, p);
  LeviDecomposition out;
  if (alg.family == ClassicalFamily::SL) {
    // One type-A factor per part, the orbit's component regular in each.
    for (int part : p)
      if (part >= 2) out.a_factors.push_back({{Series::A, part - 1}, part % 2 == 1});
    return out;
  }
  BlockPlan plan = block_plan(alg.family, p);
  for (auto [b1, b2] : plan.pairs) {
    int l = p[static_cast<size_t>(b1)];
    if (l >= 2) out.a_factors.push_back({{Series::A, l - 1}, l % 2 == 1});
  }
  for (int s : plan.singles) out.remainder.push_back(p[static_cast<size_t>(s)]);
  if (out.remainder.empty() || is_zero_partition(out.remainder))
    out.remainder_divisible = true;  // empty or a torus direction: nothing to split
  else if (alg.family == ClassicalFamily::SP)
    out.remainder_divisible = all_parts_odd(out.remainder);
  else
    out.remainder_divisible = so_divisibility_rule(out.remainder);
  return out;
}

Partition jordan_type(const MatQ& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> ranks{n};
  MatQ pw = m;
  for (int k = 1; k <= n && ranks.back() > 0; ++k) {
    ranks.push_back(static_cast<int>(rank_of(pw)));
    pw = (pw * m).eval();
  }
  if (ranks.back() != 0) throw std::invalid_argument("matrix is not nilpotent");
  Partition out;
  // Number of parts of size >= k is ranks[k-1] - ranks[k].
  const int kmax = static_cast<int>(ranks.size()) - 1;
  for (int k = kmax; k >= 1; --k) {
    int ge_k = ranks[k - 1] - ranks[k];
    int ge_k1 = k < kmax ? ranks[k] - ranks[k + 1] : 0;
    for (int c = 0; c < ge_k - ge_k1; ++c) out.push_back(k);
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

}  // namespace nilo
