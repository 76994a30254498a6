#include "doctest.h"

#include "nilo/linalg.hpp"
#include "nilo/modp.hpp"
#include "nilo/rational.hpp"
#include "nilo/rng.hpp"

#include <sstream>

using nilo::MatQ;
using nilo::Rational;
using nilo::VecQ;

namespace {

MatQ from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = static_cast<Eigen::Index>(rows.begin()->size());
  MatQ m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, 6).to_string() == "-1/2");
  CHECK(Rational(7, 1).to_long() == 7);
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK(Rational(0).is_zero());
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1, 2).to_long());
  std::ostringstream os;
  os << Rational(-7, 2);
  CHECK(os.str() == "-7/2");
}

TEST_CASE("eigen products over Rational are exact") {
  // A Hilbert block: notoriously float-hostile, trivial exactly.
  MatQ h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = Rational(1, i + j + 1);
  MatQ h2 = h * h;
  CHECK(h2(0, 0) == Rational(1) + Rational(1, 4) + Rational(1, 9));
  VecQ v(3);
  v << Rational(1), Rational(-2), Rational(3);
  VecQ hv = h * v;
  CHECK(hv(2) == Rational(1, 3) - Rational(2, 4) + Rational(3, 5));
}

TEST_CASE("rank, kernel, and solve over the rationals") {
  MatQ m = from_ints({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
  CHECK(nilo::rank_of(m) == 2);

  MatQ k = nilo::kernel_basis(m);
  CHECK(k.cols() == 1);
  VecQ mk = m * k.col(0);
  for (int i = 0; i < 3; ++i) CHECK(mk(i) == Rational(0));

  VecQ b(3);
  b << Rational(6), Rational(12), Rational(3);
  auto x = nilo::solve_any(m, b);
  REQUIRE(x.has_value());
  VecQ ax = m * *x;
  for (int i = 0; i < 3; ++i) CHECK(ax(i) == b(i));

  VecQ bad(3);
  bad << Rational(1), Rational(0), Rational(0);
  CHECK_FALSE(nilo::solve_any(m, bad).has_value());

  CHECK(nilo::rank_of(MatQ::Zero(4, 2)) == 0);
  CHECK(nilo::kernel_basis(MatQ::Zero(2, 4)).cols() == 4);
}

TEST_CASE("column span membership") {
  MatQ c = from_ints({{1, 0}, {0, 1}, {1, 1}});
  VecQ in(3), out(3);
  in << Rational(2), Rational(3), Rational(5);
  out << Rational(1), Rational(1), Rational(1);
  CHECK(nilo::in_column_span(c, in));
  CHECK_FALSE(nilo::in_column_span(c, out));
}

TEST_CASE("RowSpan accumulates exactly") {
  nilo::RowSpanQ span(3);
  VecQ a(3), b(3), c(3);
  a << Rational(1), Rational(2), Rational(0);
  b << Rational(2), Rational(4), Rational(0);
  c << Rational(0), Rational(0), Rational(7);
  CHECK(span.insert(a));
  CHECK_FALSE(span.insert(b));
  CHECK(span.insert(c));
  CHECK(span.dim() == 2);
  CHECK_FALSE(span.full());
  VecQ mix = a + c * Rational(3, 2);
  CHECK(span.contains(mix));
  VecQ other(3);
  other << Rational(1), Rational(0), Rational(0);
  CHECK_FALSE(span.contains(other));
  CHECK(span.insert(other));
  CHECK(span.full());
}

TEST_CASE("mod-p arithmetic matches rational rank on random integer matrices") {
  nilo::SplitMix64 rng(nilo::mix_seed({1, 42}));
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const int m = 1 + static_cast<int>(rng.below(6));
    MatQ q(n, m);
    nilo::modp::MatP p(n, m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        const long v = static_cast<long>(rng.below(21)) - 10;
        q(i, j) = Rational(v);
        p(i, j) = nilo::modp::from_int(v);
      }
    }
    CHECK(nilo::rank_of(q) == nilo::modp::rank(p));
  }
}

TEST_CASE("mod-p field ops") {
  using namespace nilo::modp;
  CHECK(mul(inv(7), 7) == 1);
  CHECK(add(kP - 1, 1) == 0);
  CHECK(sub(0, 1) == kP - 1);
  CHECK(from_int(-1) == kP - 1);
  CHECK(from_rational(Rational(1, 2)) == inv(2));
  CHECK(from_rational(Rational(-3, 4)) == mul(sub(0, 3), inv(4)));
}

TEST_CASE("mod-p solvable screen agrees on small systems") {
  MatQ a = from_ints({{1, 2}, {2, 4}});
  VecQ good(2), bad(2);
  good << Rational(3), Rational(6);
  bad << Rational(3), Rational(7);
  CHECK(nilo::modp::solvable(nilo::modp::from_rational_matrix(a),
                             nilo::modp::from_rational_matrix(good)));
  CHECK_FALSE(nilo::modp::solvable(nilo::modp::from_rational_matrix(a),
                                   nilo::modp::from_rational_matrix(bad)));
}

TEST_CASE("splitmix64 streams are deterministic") {
  nilo::SplitMix64 a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  nilo::SplitMix64 c(nilo::mix_seed({5, 7, 9}));
  nilo::SplitMix64 d(nilo::mix_seed({5, 7, 9}));
  CHECK(c.next() == d.next());
  CHECK(nilo::mix_seed({5, 7}) != nilo::mix_seed({7, 5}));
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t coef = a.coefficient();
    CHECK(coef >= 1);
    CHECK(coef <= 65536);
  }
}
