#include <doctest.h>

#include "nilo/chevalley.hpp"
#include "nilo/rng.hpp"

using nilo::ChevalleyAlgebra;
using nilo::MatQ;
using nilo::Rational;
using nilo::Series;
using nilo::SimpleType;
using nilo::VecQ;

namespace {

const std::vector<SimpleType> kSmallTypes = {
    {Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4}, {Series::B, 2},
    {Series::B, 3}, {Series::B, 4}, {Series::C, 2}, {Series::C, 3}, {Series::C, 4},
    {Series::D, 4}, {Series::F, 4}, {Series::G, 2},
};

bool is_zero(const VecQ& v) {
  for (int i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

VecQ jacobi_sum(const ChevalleyAlgebra& g, const VecQ& x, const VecQ& y, const VecQ& z) {
  return g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) +
         g.bracket(z, g.bracket(x, y));
}

VecQ basis_vec(const ChevalleyAlgebra& g, int k) {
  VecQ v = g.zero_element();
  v(k) = Rational(1);
  return v;
}

}  // namespace

TEST_CASE("sl2 triple relations in rank one") {
  ChevalleyAlgebra g({Series::A, 1});
  CHECK(g.dim() == 3);
  VecQ e = g.root_vector(0);
  VecQ f = g.root_vector(1);
  Eigen::VectorXi one(1);
  one << 1;
  VecQ h = g.cartan_element(one);
  CHECK(g.bracket(h, e) == (e * Rational(2)).eval());
  CHECK(g.bracket(e, f) == h);
  CHECK(g.bracket(h, f) == (f * Rational(-2)).eval());
}

TEST_CASE("opposite root vectors bracket to coroots") {
  for (const auto& t : kSmallTypes) {
    ChevalleyAlgebra g(t);
    CAPTURE(t.to_string());
    for (int r = 0; r < g.num_roots(); ++r) {
      VecQ lhs = g.bracket(g.root_vector(r), g.root_vector(g.roots().negative_of(r)));
      CHECK(lhs == g.cartan_element(g.roots().coroot(r)));
    }
  }
}

TEST_CASE("cartan action is the pairing") {
  ChevalleyAlgebra g({Series::F, 4});
  for (int i = 0; i < g.rank(); ++i) {
    VecQ h = basis_vec(g, i);
    for (int r = 0; r < g.num_roots(); ++r) {
      VecQ out = g.bracket(h, g.root_vector(r));
      CHECK(out == (g.root_vector(r) * Rational(g.roots().pairing(r, i))).eval());
    }
    // Zero trace on the adjoint representation.
    long tr = 0;
    for (int r = 0; r < g.num_roots(); ++r) tr += g.roots().pairing(r, i);
    CHECK(tr == 0);
  }
}

TEST_CASE("structure constants are antisymmetric and supported on root sums") {
  for (const auto& t : kSmallTypes) {
    ChevalleyAlgebra g(t);
    const auto& rs = g.roots();
    CAPTURE(t.to_string());
    for (int r = 0; r < g.num_roots(); ++r)
      for (int s = 0; s < g.num_roots(); ++s) {
        Eigen::VectorXi sum = rs.root(r) + rs.root(s);
        bool sum_is_root = !(sum.array() == 0).all() && rs.is_root(sum);
        CHECK((g.n_const(r, s) != 0) == sum_is_root);
        CHECK(g.n_const(r, s) == -g.n_const(s, r));
        if (sum_is_root) CHECK(g.sum_root_index(r, s) == rs.index_of(sum));
      }
  }
}

TEST_CASE("constant magnitude equals one plus the string descent") {
  int seen_two = 0, seen_three = 0;
  for (const auto& t : kSmallTypes) {
    ChevalleyAlgebra g(t);
    const auto& rs = g.roots();
    CAPTURE(t.to_string());
    for (int r = 0; r < g.num_roots(); ++r)
      for (int s = 0; s < g.num_roots(); ++s) {
        if (g.n_const(r, s) == 0) continue;
        int p = 0;
        Eigen::VectorXi down = rs.root(s) - rs.root(r);
        while (!(down.array() == 0).all() && rs.is_root(down)) {
          ++p;
          down -= rs.root(r);
        }
        int mag = std::abs(g.n_const(r, s));
        CHECK(mag == p + 1);
        if (mag == 2) ++seen_two;
        if (mag == 3) ++seen_three;
        bool simply_laced = t.series == Series::A || t.series == Series::D || t.series == Series::E;
        if (simply_laced) CHECK(mag == 1);
        if (t.series != Series::G) CHECK(mag <= 2);
      }
  }
  CHECK(seen_two > 0);
  CHECK(seen_three > 0);  // only G2 reaches 3
}

TEST_CASE("jacobi identity on all basis triples through rank four") {
  for (const auto& t : kSmallTypes) {
    ChevalleyAlgebra g(t);
    CAPTURE(t.to_string());
    const int d = g.dim();
    std::vector<VecQ> basis;
    basis.reserve(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) basis.push_back(basis_vec(g, k));
    long failures = 0;
    for (int i = 0; i < d; ++i) {
      // Antisymmetry makes triples with a repeated index vacuous.
      for (int j = i + 1; j < d; ++j) {
        VecQ bij = g.bracket(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
        for (int k = j + 1; k < d; ++k) {
          VecQ sum = g.bracket(basis[static_cast<size_t>(i)],
                               g.bracket(basis[static_cast<size_t>(j)], basis[static_cast<size_t>(k)])) +
                     g.bracket(basis[static_cast<size_t>(j)],
                               g.bracket(basis[static_cast<size_t>(k)], basis[static_cast<size_t>(i)])) +
                     g.bracket(basis[static_cast<size_t>(k)], bij);
          if (!is_zero(sum)) ++failures;
        }
      }
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("jacobi identity sampled in the large exceptional algebras") {
  for (int rank = 6; rank <= 8; ++rank) {
    ChevalleyAlgebra g({Series::E, rank});
    CAPTURE(rank);
    nilo::SplitMix64 rng(nilo::mix_seed({17, static_cast<std::uint64_t>(rank)}));
    long failures = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.dim())));
      int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.dim())));
      int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.dim())));
      if (!is_zero(jacobi_sum(g, basis_vec(g, i), basis_vec(g, j), basis_vec(g, k)))) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("bracket is bilinear and antisymmetric on dense elements") {
  ChevalleyAlgebra g({Series::C, 3});
  nilo::SplitMix64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    VecQ x = g.zero_element(), y = g.zero_element();
    for (int k = 0; k < g.dim(); ++k) {
      x(k) = Rational(static_cast<long>(rng.below(7)) - 3);
      y(k) = Rational(static_cast<long>(rng.below(7)) - 3, static_cast<long>(rng.below(3)) + 1);
    }
    CHECK(g.bracket(x, y) == (-g.bracket(y, x)).eval());
    CHECK(is_zero(g.bracket(x, x)));
    VecQ viaBasis = g.zero_element();
    for (int k = 0; k < g.dim(); ++k)
      if (!y(k).is_zero()) viaBasis += g.bracket_basis(x, k) * y(k);
    CHECK(g.bracket(x, y) == viaBasis);
  }
}

TEST_CASE("ad of the highest root vector is nilpotent of order three") {
  ChevalleyAlgebra g({Series::A, 2});
  MatQ m = g.ad_matrix(g.root_vector(g.roots().highest_root_index()));
  MatQ m2 = m * m;
  MatQ m3 = m2 * m;
  bool m2_zero = true, m3_zero = true;
  for (int i = 0; i < m2.rows(); ++i)
    for (int j = 0; j < m2.cols(); ++j) {
      m2_zero = m2_zero && m2(i, j).is_zero();
      m3_zero = m3_zero && m3(i, j).is_zero();
    }
  CHECK(!m2_zero);
  CHECK(m3_zero);
}

TEST_CASE("folded algebras have the expected dimensions") {
  CHECK(ChevalleyAlgebra({Series::G, 2}).dim() == 14);
  CHECK(ChevalleyAlgebra({Series::F, 4}).dim() == 52);
  CHECK(ChevalleyAlgebra({Series::B, 4}).dim() == 36);
  CHECK(ChevalleyAlgebra({Series::C, 4}).dim() == 36);
  CHECK(ChevalleyAlgebra({Series::E, 8}).dim() == 248);
}
