#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace nilo {

/// Exact rational scalar backed by GMP, with eager value semantics: every
/// operation returns a fully evaluated number, so Eigen expressions never see
/// GMP's own expression templates.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(unsigned long n) : v_(n) {}
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Integer value; throws unless the denominator is 1 and the value fits.
  long to_long() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer");
    if (!v_.get_num().fits_slong_p()) throw std::domain_error("Rational: integer too large");
    return v_.get_num().get_si();
  }

  std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& a);

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace nilo

namespace Eigen {

template <>
struct NumTraits<nilo::Rational> : GenericNumTraits<nilo::Rational> {
  typedef nilo::Rational Real;
  typedef nilo::Rational NonInteger;
  typedef nilo::Rational Nested;
  typedef nilo::Rational Literal;

  static inline Real epsilon() { return nilo::Rational(0); }
  static inline Real dummy_precision() { return nilo::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen
