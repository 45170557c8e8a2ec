#include "sgtree/exact.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace sgtree {

namespace {

int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

BigInt abs_big(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

}  // namespace

Quad operator/(const Quad& x, const Quad& y) {
  // 1/(a + b*sqrt(5)) = (a - b*sqrt(5)) / (a^2 - 5 b^2). The norm vanishes
  // only when a = b = 0.
  Rational norm = y.a_ * y.a_ - 5 * y.b_ * y.b_;
  if (norm == 0) throw Error("division by zero");
  return Quad((x.a_ * y.a_ - 5 * x.b_ * y.b_) / norm,
              (x.b_ * y.a_ - x.a_ * y.b_) / norm);
}

int Quad::sign() const {
  int sa = sign_of(a_);
  int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: a + b*sqrt(5) has the sign of whichever magnitude wins,
  // decided by comparing a^2 against 5 b^2.
  Rational lhs = a_ * a_;
  Rational rhs = 5 * b_ * b_;
  if (lhs == rhs) {
    // Would force sqrt(5) rational; unreachable for nonzero a, b.
    throw Error("sign: degenerate comparison");
  }
  return lhs > rhs ? sa : sb;
}

long double Quad::to_long_double() const {
  long double a = static_cast<long double>(a_);
  long double b = static_cast<long double>(b_);
  return a + b * sqrtl(5.0L);
}

long long Quad::floor() const {
  long long guess = static_cast<long long>(floorl(to_long_double()));
  // The float seed can be off by a few ulps near integers; settle exactly.
  while (*this < Quad(guess)) --guess;
  while (*this >= Quad(guess + 1)) ++guess;
  return guess;
}

std::string Quad::to_decimal(int digits) const {
  if (digits < 0) throw Error("to_decimal: negative digit count");
  bool negative = sign() < 0;
  Quad mag = negative ? -*this : *this;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // floor of |x| * 10^digits gives the truncated-toward-zero digits of |x|.
  Quad scaled = mag * Quad(Rational(scale));
  long long guess = static_cast<long long>(floorl(scaled.to_long_double()));
  BigInt units(guess);
  while (scaled < Quad(Rational(units))) --units;
  while (scaled >= Quad(Rational(units + 1))) ++units;

  BigInt whole = units / scale;
  BigInt frac = units % scale;
  std::string out = negative && units != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += '.';
    out += std::string(static_cast<size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

Quad gamma_value() { return Quad(Rational(1, 2), Rational(1, 10)); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  if (text.find('.') != std::string::npos) {
    throw Error("decimal notation not accepted, use p/q: " + text);
  }
  auto parse_int = [](const std::string& s) {
    if (s.empty()) throw Error("malformed rational literal");
    size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw Error("malformed rational literal: " + s);
    for (size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw Error("malformed rational literal: " + s);
      }
    }
    const BigInt magnitude(s.substr(start));
    return s[0] == '-' ? BigInt(-magnitude) : magnitude;
  };
  size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator: " + text);
  return Rational(num, den);
}

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 0) throw Error("to_decimal: negative digit count");
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  bool negative = num < 0;
  BigInt n = abs_big(num);
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt units = n * scale / den;
  BigInt whole = units / scale;
  BigInt frac = units % scale;
  std::string out = negative && units != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += '.';
    out += std::string(static_cast<size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace sgtree
