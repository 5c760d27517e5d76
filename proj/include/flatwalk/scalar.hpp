#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace flatwalk {

using Rational = mpq_class;
using Integer = mpz_class;

// Element of a real quadratic field Q(sqrt(d)): value = rat + surd*sqrt(d),
// with d a squarefree non-negative integer (d = 0 forces surd = 0, d = 1 is
// folded into the rational part). Arithmetic and comparisons are exact.
//
// A Scalar can also be "tainted": the exact value was lost (e.g. an edge was
// multiplied by a matrix with entries outside the field) and only a double
// remains. Taint propagates through arithmetic, and tainted comparisons use
// the fixed absolute tolerance float_eps.
class Scalar {
public:
  static constexpr double float_eps = 1e-9;

  Scalar() : rat_(0), surd_(0), disc_(0), exact_(true), approx_(0.0) {}
  Scalar(int n) : Scalar(Rational(n)) {}
  Scalar(long n) : Scalar(Rational(n)) {}
  Scalar(const Rational& r)
      : rat_(r), surd_(0), disc_(0), exact_(true), approx_(r.get_d()) {}
  Scalar(Rational rat, Rational surd, long disc);

  static Scalar tainted(double v);
  // sqrt(d) as a field element of Q(sqrt(d)); d must be squarefree.
  static Scalar sqrt_disc(long d);
  // Parse a decimal or fraction literal ("2.5", "-3", "5/2") exactly.
  static Scalar from_decimal(const std::string& text);

  bool exact() const { return exact_; }
  long disc() const { return disc_; }
  const Rational& rat() const { return rat_; }
  const Rational& surd() const { return surd_; }
  double approx() const { return approx_; }
  bool is_rational() const { return exact_ && surd_ == 0; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Sign of the value: exact for exact scalars, |v| <= float_eps counts as
  // zero for tainted ones.
  int sign() const;
  int cmp(const Scalar& o) const { return (*this - o).sign(); }
  bool operator==(const Scalar& o) const { return cmp(o) == 0; }
  bool operator!=(const Scalar& o) const { return cmp(o) != 0; }
  bool operator<(const Scalar& o) const { return cmp(o) < 0; }
  bool operator<=(const Scalar& o) const { return cmp(o) <= 0; }
  bool operator>(const Scalar& o) const { return cmp(o) > 0; }
  bool operator>=(const Scalar& o) const { return cmp(o) >= 0; }
  bool is_zero() const { return sign() == 0; }

  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  // Exact floor for exact scalars (tainted: std::floor of the approx).
  Integer floor() const;

  // Structural key for ordered containers: exact total order on exact values
  // (value order), tainted values ordered by approx.
  bool key_less(const Scalar& o) const { return cmp(o) < 0; }

  // Serialization: "p/q" for rationals, "p/q~r/s" for surds (the catalog
  // format stores the two parts in separate columns and never needs this
  // combined form; it is for logs and JSON).
  std::string str() const;

private:
  void normalize();
  void refresh_approx();

  Rational rat_, surd_;
  long disc_;
  bool exact_;
  double approx_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rational_str(const Rational& r);
Rational rational_from_str(const std::string& s);

}  // namespace flatwalk
