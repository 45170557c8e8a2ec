#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgtree/errors.hpp"
#include "sgtree/exact.hpp"

using sgtree::Quad;
using sgtree::Rational;

TEST_CASE("gamma satisfies its defining identity") {
  const Quad gamma = sgtree::gamma_value();
  const Quad ten_gamma_minus_five = Quad(10) * gamma - Quad(5);
  CHECK(ten_gamma_minus_five * ten_gamma_minus_five == Quad(5));
  CHECK(gamma.to_decimal(10) == "0.7236067977");
  CHECK(gamma > Quad(Rational(7236, 10000)));
  CHECK(gamma < Quad(Rational(7237, 10000)));
}

TEST_CASE("field arithmetic") {
  const Quad root5 = Quad::sqrt5();
  CHECK(root5 * root5 == Quad(5));
  CHECK((Quad(1) / root5) * root5 == Quad(1));
  CHECK(Quad(3) - Quad(5) == Quad(-2));
  const Quad x(Rational(1, 2), Rational(-3, 7));
  CHECK(x / x == Quad(1));
  CHECK(x - x == Quad(0));
  CHECK((x * Quad(0)).sign() == 0);
  CHECK_THROWS_AS((void)(Quad(1) / Quad(0)), sgtree::Error);
}

TEST_CASE("sign analysis with opposing components") {
  CHECK(Quad(Rational(-2), Rational(1)).sign() == 1);   // sqrt5 > 2
  CHECK(Quad(Rational(2), Rational(-1)).sign() == -1);
  CHECK(Quad(Rational(9), Rational(-4)).sign() == 1);   // 9 > sqrt80
  CHECK(Quad(Rational(-9), Rational(4)).sign() == -1);
  CHECK(Quad(Rational(0), Rational(-2)).sign() == -1);
  CHECK(Quad(Rational(-1, 7)).sign() == -1);
  CHECK(Quad(0).sign() == 0);
}

TEST_CASE("comparisons near continued fraction convergents of sqrt5") {
  const Quad root5 = Quad::sqrt5();
  // 161^2 = 25921 vs 5*72^2 = 25920: the fraction wins by one part in 26k.
  CHECK(Quad(Rational(161, 72)) > root5);
  CHECK(Quad(Rational(2889, 1292)) > root5);
  CHECK(Quad(Rational(682, 305)) < root5);
  CHECK(Quad(Rational(51841, 23184)) > root5);
  CHECK(root5 >= root5);
  CHECK(root5 <= root5);
  CHECK(Quad(Rational(682, 305)) != root5);
}

TEST_CASE("floor is exact near integers") {
  CHECK(Quad::sqrt5().floor() == 2);
  CHECK((-Quad::sqrt5()).floor() == -3);
  CHECK(Quad(Rational(7, 2)).floor() == 3);
  CHECK(Quad(Rational(-7, 2)).floor() == -4);
  CHECK(Quad(5).floor() == 5);
  CHECK(Quad(-5).floor() == -5);
  CHECK(sgtree::gamma_value().floor() == 0);
  CHECK((sgtree::gamma_value() * Quad(10)).floor() == 7);
  // 161/72 - sqrt5 is positive but < 1e-4; floor must still see 0.
  CHECK((Quad(Rational(161, 72)) - Quad::sqrt5()).floor() == 0);
  CHECK((Quad::sqrt5() - Quad(Rational(161, 72))).floor() == -1);
}

TEST_CASE("decimal rendering truncates toward zero") {
  CHECK(Quad(Rational(-1, 3)).to_decimal(4) == "-0.3333");
  CHECK(Quad(Rational(1, 3)).to_decimal(0) == "0");
  CHECK(Quad::sqrt5().to_decimal(6) == "2.236067");
  CHECK((-Quad::sqrt5()).to_decimal(2) == "-2.23");
  CHECK(sgtree::to_decimal(Rational(22, 7), 3) == "3.142");
  CHECK(sgtree::to_decimal(Rational(-22, 7), 3) == "-3.142");
  CHECK(sgtree::to_decimal(Rational(-1, 100000), 3) == "0.000");
  CHECK(sgtree::to_decimal(Rational(5), 0) == "5");
}

TEST_CASE("rational parser accepts p/q only") {
  CHECK(sgtree::parse_rational("1/10") == Rational(1, 10));
  CHECK(sgtree::parse_rational("3") == Rational(3));
  CHECK(sgtree::parse_rational("-2/5") == Rational(-2, 5));
  CHECK(sgtree::parse_rational("+7/21") == Rational(1, 3));
  CHECK_THROWS_AS((void)sgtree::parse_rational("0.5"), sgtree::Error);
  CHECK_THROWS_AS((void)sgtree::parse_rational("1/0"), sgtree::Error);
  CHECK_THROWS_AS((void)sgtree::parse_rational(""), sgtree::Error);
  CHECK_THROWS_AS((void)sgtree::parse_rational("a/b"), sgtree::Error);
  CHECK_THROWS_AS((void)sgtree::parse_rational("1/ 2"), sgtree::Error);
  CHECK_THROWS_AS((void)sgtree::parse_rational("1e-3"), sgtree::Error);
}
