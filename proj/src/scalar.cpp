#include "flatwalk/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "flatwalk/errors.hpp"

namespace flatwalk {

namespace {

bool is_squarefree(long d) {
  if (d < 0) return false;
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

}  // namespace

Scalar::Scalar(Rational rat, Rational surd, long disc)
    : rat_(std::move(rat)), surd_(std::move(surd)), disc_(disc), exact_(true) {
  rat_.canonicalize();
  surd_.canonicalize();
  normalize();
  refresh_approx();
}

void Scalar::normalize() {
  if (disc_ == 1) {
    rat_ += surd_;
    surd_ = 0;
    disc_ = 0;
  }
  if (surd_ == 0) {
    disc_ = 0;
  } else {
    require(disc_ > 1 && is_squarefree(disc_), "BadDiscriminant",
            "discriminant must be squarefree and > 1 when a surd part is present");
  }
}

void Scalar::refresh_approx() {
  approx_ = rat_.get_d();
  if (surd_ != 0) approx_ += surd_.get_d() * std::sqrt(static_cast<double>(disc_));
}

Scalar Scalar::tainted(double v) {
  Scalar s;
  s.exact_ = false;
  s.approx_ = v;
  return s;
}

Scalar Scalar::sqrt_disc(long d) {
  require(d >= 0, "BadDiscriminant", "negative discriminant");
  if (d == 0) return Scalar(0);
  if (d == 1) return Scalar(1);
  return Scalar(Rational(0), Rational(1), d);
}

Scalar Scalar::from_decimal(const std::string& text) {
  std::string t = text;
  auto slash = t.find('/');
  if (slash != std::string::npos) return Scalar(rational_from_str(t));
  bool neg = false;
  size_t i = 0;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = t[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (; i < t.size(); ++i) {
    if (t[i] == '.') {
      require(!seen_dot, "BadNumber", "two decimal points in '" + text + "'");
      seen_dot = true;
      continue;
    }
    require(t[i] >= '0' && t[i] <= '9', "BadNumber", "bad digit in '" + text + "'");
    digits.push_back(t[i]);
    if (seen_dot) ++frac_digits;
  }
  require(!digits.empty(), "BadNumber", "empty number '" + text + "'");
  Integer num(digits, 10);
  Integer den = 1;
  for (long k = 0; k < frac_digits; ++k) den *= 10;
  Rational r(num, den);
  r.canonicalize();
  if (neg) r = -r;
  return Scalar(r);
}

Scalar Scalar::operator-() const {
  if (!exact_) return tainted(-approx_);
  Scalar s = *this;
  s.rat_ = -s.rat_;
  s.surd_ = -s.surd_;
  s.refresh_approx();
  return s;
}

namespace {

// Resolve the discriminant of a binary operation, or report incompatibility.
bool join_disc(long a, long b, long& out) {
  if (a == 0) {
    out = b;
    return true;
  }
  if (b == 0 || a == b) {
    out = a;
    return true;
  }
  return false;
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  long d;
  if (!exact_ || !o.exact_ || !join_disc(disc_, o.disc_, d))
    return tainted(approx_ + o.approx_);
  return Scalar(rat_ + o.rat_, surd_ + o.surd_, d);
}

Scalar Scalar::operator-(const Scalar& o) const {
  long d;
  if (!exact_ || !o.exact_ || !join_disc(disc_, o.disc_, d))
    return tainted(approx_ - o.approx_);
  return Scalar(rat_ - o.rat_, surd_ - o.surd_, d);
}

Scalar Scalar::operator*(const Scalar& o) const {
  long d;
  if (!exact_ || !o.exact_ || !join_disc(disc_, o.disc_, d))
    return tainted(approx_ * o.approx_);
  // (a + b sqrt(d))(e + f sqrt(d)) = ae + bf d + (af + be) sqrt(d)
  return Scalar(rat_ * o.rat_ + surd_ * o.surd_ * d,
                rat_ * o.surd_ + surd_ * o.rat_, d);
}

Scalar Scalar::operator/(const Scalar& o) const {
  long d;
  if (!exact_ || !o.exact_ || !join_disc(disc_, o.disc_, d)) {
    require(std::abs(o.approx_) > 0, "DivisionByZero", "tainted division by zero");
    return tainted(approx_ / o.approx_);
  }
  // Multiply by the conjugate: 1/(e + f sqrt(d)) = (e - f sqrt(d))/(e^2 - f^2 d).
  // The denominator vanishes only for o == 0 (sqrt(d) is irrational).
  Rational denom = o.rat_ * o.rat_ - o.surd_ * o.surd_ * d;
  require(denom != 0, "DivisionByZero", "division by zero");
  Rational e = o.rat_ / denom, f = -o.surd_ / denom;
  return *this * Scalar(e, f, d);
}

int Scalar::sign() const {
  if (!exact_) {
    if (approx_ > float_eps) return 1;
    if (approx_ < -float_eps) return -1;
    return 0;
  }
  int sr = sgn(rat_), ss = sgn(surd_);
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  // Signs differ: compare rat^2 against surd^2 * d.
  Rational lhs = rat_ * rat_, rhs = surd_ * surd_ * disc_;
  int c = ::cmp(lhs, rhs);
  if (c == 0)
    fail("BadDiscriminant", "sqrt(d) rational; discriminant not squarefree?");
  return c > 0 ? sr : ss;
}

Integer Scalar::floor() const {
  if (!exact_) return Integer(static_cast<long>(std::floor(approx_)));
  if (surd_ == 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), rat_.get_num_mpz_t(), rat_.get_den_mpz_t());
    return q;
  }
  // Write the value as (P + Q sqrt(d)) / R with integer P, Q and R > 0.
  Integer qr = rat_.get_den(), qs = surd_.get_den();
  Integer R = qr * qs;  // not minimal; only correctness matters
  Integer P = rat_.get_num() * qs;
  Integer Q = surd_.get_num() * qr;
  // Bracket T = Q sqrt(d) between consecutive integers (T is irrational).
  Integer N = Q * Q * disc_;
  Integer s = sqrt(N);  // floor of sqrt(N)
  Integer lo, hi;       // lo < T < hi, hi = lo + 1
  if (Q > 0) {
    lo = s;
  } else {
    lo = -s - 1;
  }
  hi = lo + 1;
  Integer fl, fh;
  mpz_fdiv_q(fl.get_mpz_t(), Integer(P + lo).get_mpz_t(), R.get_mpz_t());
  mpz_fdiv_q(fh.get_mpz_t(), Integer(P + hi).get_mpz_t(), R.get_mpz_t());
  if (fl == fh) return fl;
  // The integer multiple k*R - P lies in (lo, hi); compare T against it.
  Integer k = fh;  // candidate jump: value k exactly at P + T == k*R
  Integer target = k * R - P;
  // T = Q sqrt(d) vs target: compare squares with sign care (T, target same
  // sign region since lo < target < hi and lo < T < hi).
  bool t_greater;
  if (target >= 0) {
    t_greater = Q > 0 && N > target * target;
  } else {
    t_greater = !(Q < 0 && N > target * target);
  }
  return t_greater ? fh : fl;
}

std::string Scalar::str() const {
  if (!exact_) {
    std::ostringstream os;
    os << "~" << approx_;
    return os.str();
  }
  if (surd_ == 0) return rational_str(rat_);
  std::ostringstream os;
  os << rational_str(rat_) << "+" << rational_str(surd_) << "*sqrt(" << disc_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

Rational rational_from_str(const std::string& s) {
  Rational r;
  require(r.set_str(s, 10) == 0, "BadNumber", "bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace flatwalk
