#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "sgtree/errors.hpp"

namespace sgtree {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// An element of the field extension by sqrt(5), stored as a + b*sqrt(5)
// with exact rational coefficients. All comparisons are decided by rational
// sign analysis plus a single squaring; no floating point enters the
// decision path. The representation is unique because sqrt(5) is irrational,
// so a + b*sqrt(5) = 0 forces a = b = 0.
class Quad {
 public:
  Quad() = default;
  Quad(int n) : a_(n) {}            // NOLINT: integers embed implicitly
  Quad(long long n) : a_(n) {}      // NOLINT
  explicit Quad(Rational a) : a_(std::move(a)) {}
  Quad(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Quad sqrt5() { return Quad(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_coefficient() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  Quad operator-() const { return Quad(-a_, -b_); }

  friend Quad operator+(const Quad& x, const Quad& y) {
    return Quad(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend Quad operator-(const Quad& x, const Quad& y) {
    return Quad(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend Quad operator*(const Quad& x, const Quad& y) {
    return Quad(x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  // Division by the conjugate; throws Error on division by zero.
  friend Quad operator/(const Quad& x, const Quad& y);

  // -1, 0, +1.
  int sign() const;

  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
  friend bool operator<(const Quad& x, const Quad& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Quad& x, const Quad& y) {
    return (x - y).sign() > 0;
  }
  friend bool operator<=(const Quad& x, const Quad& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>=(const Quad& x, const Quad& y) {
    return (x - y).sign() >= 0;
  }

  long double to_long_double() const;

  // Largest integer <= value (exact; the float estimate is only a seed).
  long long floor() const;

  // Fixed-point rendering with `digits` fractional digits, truncated
  // toward zero.
  std::string to_decimal(int digits) const;

 private:
  Rational a_{};
  Rational b_{};
};

// gamma = (5 + sqrt(5))/10, the constant governing the typical
// multiplicity-to-genus ratio.
Quad gamma_value();

// Parses "p" or "p/q" into an exact rational. Decimal notation is rejected
// so that exactness is preserved end to end.
Rational parse_rational(const std::string& text);

// Fixed-point rendering of a rational, truncated toward zero.
std::string to_decimal(const Rational& r, int digits);

}  // namespace sgtree
