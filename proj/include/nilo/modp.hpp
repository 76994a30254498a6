#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nilo/rational.hpp"

namespace nilo::modp {

/// Screening prime. Large enough that spurious rank drops are vanishingly
/// rare; every verdict that matters is re-certified over the rationals.
inline constexpr std::uint64_t kP = (std::uint64_t(1) << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s >= kP) s -= kP;
  return s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kP - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kP);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("modp: inverse of zero");
  return pow(a, kP - 2);
}

inline std::uint64_t from_int(long n) {
  long m = n % static_cast<long>(kP);
  if (m < 0) m += static_cast<long>(kP);
  return static_cast<std::uint64_t>(m);
}

inline std::uint64_t from_rational(const Rational& q) {
  const mpz_class& num = q.raw().get_num();
  const mpz_class& den = q.raw().get_den();
  std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), kP);
  std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), kP);
  if (d == 0) throw std::domain_error("modp: denominator divisible by p");
  return mul(n, inv(d));
}

using MatP = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VecP = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, 1>;

inline MatP from_rational_matrix(const MatQ& m) {
  MatP r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = from_rational(m(i, j));
  return r;
}

/// Row echelon in place; returns pivot columns. Entries must be < kP.
inline std::vector<Eigen::Index> echelon_in_place(MatP& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) { pr = i; break; }
    }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    const std::uint64_t piv_inv = inv(m(r, c));
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = mul(m(r, j), piv_inv);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const std::uint64_t f = m(i, c);
      if (f == 0) continue;
      m(i, c) = 0;
      for (Eigen::Index j = c + 1; j < cols; ++j)
        m(i, j) = sub(m(i, j), mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline Eigen::Index rank(MatP m) {
  return static_cast<Eigen::Index>(echelon_in_place(m).size());
}

/// Whether A x = b is consistent mod p. Sound only as a screen: a "true" here
/// must be confirmed over the rationals before it is believed.
inline bool solvable(const MatP& a, const VecP& b) {
  MatP w(a.rows(), a.cols() + 1);
  w.leftCols(a.cols()) = a;
  w.col(a.cols()) = b;
  const std::vector<Eigen::Index> pivots = echelon_in_place(w);
  return pivots.empty() || pivots.back() != a.cols();
}

}  // namespace nilo::modp
