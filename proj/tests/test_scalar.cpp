#include <cmath>

#include "doctest.h"
#include "flatwalk/errors.hpp"
#include "flatwalk/scalar.hpp"

using flatwalk::Integer;
using flatwalk::Rational;
using flatwalk::Scalar;

namespace {

Scalar phi() { return Scalar(Rational(1, 2), Rational(1, 2), 5); }
Scalar root2() { return Scalar::sqrt_disc(2); }

}  // namespace

TEST_CASE("field arithmetic in Q(sqrt5)") {
  Scalar p = phi();
  // phi^2 = phi + 1
  CHECK(p * p == p + Scalar(1));
  // 1/phi = phi - 1
  CHECK(Scalar(1) / p == p - Scalar(1));
  CHECK((p - p).is_zero());
  CHECK(p.approx() == doctest::Approx(1.6180339887498949));
}

TEST_CASE("comparison sign is decided exactly") {
  // sqrt(2) vs 1.41421356: compare against 141421356/100000000 exactly.
  Scalar r2 = root2();
  Scalar below = Scalar(Rational(141421356, 100000000));
  Scalar above = Scalar(Rational(141421357, 100000000));
  CHECK(r2 > below);
  CHECK(r2 < above);
  // Mixed-sign comparison where the rational part dominates.
  Scalar x = Scalar(3) - Scalar(2) * r2;  // 3 - 2 sqrt 2 = 0.1715...
  CHECK(x.sign() == 1);
  Scalar y = Scalar(2) * r2 - Scalar(3);
  CHECK(y.sign() == -1);
  CHECK(x + y == Scalar(0));
}

TEST_CASE("rationals embed in any field") {
  Scalar r2 = root2();
  Scalar sum = r2 + Scalar(Rational(1, 3));
  CHECK(sum.disc() == 2);
  CHECK(sum - r2 == Scalar(Rational(1, 3)));
}

TEST_CASE("mixing two surd fields taints") {
  Scalar s = root2() + phi();
  CHECK(!s.exact());
  CHECK(s.approx() == doctest::Approx(std::sqrt(2.0) + 1.6180339887498949));
}

TEST_CASE("tainted comparisons use the float tolerance") {
  Scalar a = Scalar::tainted(1.0);
  Scalar b = Scalar::tainted(1.0 + 1e-12);
  CHECK(a == b);
  CHECK(Scalar::tainted(1.0) < Scalar::tainted(1.1));
}

TEST_CASE("exact floor of surd values") {
  CHECK(phi().floor() == 1);
  CHECK((-phi()).floor() == -2);
  CHECK((phi() * Scalar(100)).floor() == 161);
  CHECK(root2().floor() == 1);
  CHECK((root2() * root2()).floor() == 2);
  CHECK(Scalar(Rational(-7, 2)).floor() == -4);
  CHECK(Scalar(Rational(7, 2)).floor() == 3);
  // Value just below an integer: 10 - 1/phi^10 style stress via powers.
  Scalar p = phi();
  Scalar q = p;
  for (int i = 0; i < 9; ++i) q = q * p;  // phi^10 = 122.991...
  CHECK(q.floor() == 122);
}

TEST_CASE("decimal parsing is exact") {
  CHECK(Scalar::from_decimal("2.5") == Scalar(Rational(5, 2)));
  CHECK(Scalar::from_decimal("-0.04") == Scalar(Rational(-1, 25)));
  CHECK(Scalar::from_decimal("30") == Scalar(30));
  CHECK(Scalar::from_decimal("5/2") == Scalar(Rational(5, 2)));
  CHECK_THROWS_AS(Scalar::from_decimal("1.2.3"), flatwalk::Error);
}

TEST_CASE("non-squarefree discriminants are rejected") {
  CHECK_THROWS_AS(Scalar(Rational(0), Rational(1), 8), flatwalk::Error);
  // d = 1 folds into the rational part.
  Scalar one = Scalar(Rational(0), Rational(1), 1);
  CHECK(one == Scalar(1));
  CHECK(one.disc() == 0);
}
