#pragma once

#include <string>

#include "flatwalk/scalar.hpp"

namespace flatwalk {

// Holonomy vector: the period integral of omega over a relative cycle,
// i.e. a displacement in the plane with field coordinates.
struct Vec2 {
  Scalar x, y;

  Vec2() = default;
  Vec2(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(const Scalar& s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  Scalar norm2() const { return x * x + y * y; }
  double length() const;
  // Angle in [0, 2pi) of the double approximation; for output ordering only.
  double angle() const;

  // Counterclockwise quarter turn.
  Vec2 perp() const { return {-y, x}; }

  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Sign of the turn a -> b (positive = b counterclockwise of a).
inline int cross_sign(const Vec2& a, const Vec2& b) { return cross(a, b).sign(); }

struct Mat2 {
  Scalar a, b, c, d;  // row-major [[a, b], [c, d]]

  Mat2() : a(1), b(0), c(0), d(1) {}
  Mat2(Scalar pa, Scalar pb, Scalar pc, Scalar pd)
      : a(std::move(pa)), b(std::move(pb)), c(std::move(pc)), d(std::move(pd)) {}

  Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Scalar det() const { return a * d - b * c; }
  Scalar trace() const { return a + d; }
  Mat2 inverse() const;
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  std::string str() const;
};

// True if w lies in the half-open angular sector [lo, hi), where the sector
// spans strictly less than pi counterclockwise from lo. All vectors nonzero.
bool in_sector(const Vec2& lo, const Vec2& hi, const Vec2& w);

// True if a and b point the same way (positive proportionality).
inline bool same_ray(const Vec2& a, const Vec2& b) {
  return cross_sign(a, b) == 0 && dot(a, b).sign() > 0;
}

}  // namespace flatwalk
