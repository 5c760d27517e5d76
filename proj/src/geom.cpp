#include "flatwalk/geom.hpp"

#include <cmath>
#include <sstream>

#include "flatwalk/errors.hpp"

namespace flatwalk {

double Vec2::length() const { return std::hypot(x.approx(), y.approx()); }

double Vec2::angle() const {
  double a = std::atan2(y.approx(), x.approx());
  if (a < 0) a += 2 * M_PI;
  return a;
}

Mat2 Mat2::inverse() const {
  Scalar dt = det();
  require(dt.sign() != 0, "SingularMatrix", "matrix not invertible");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[[" << a.str() << ", " << b.str() << "], [" << c.str() << ", " << d.str()
     << "]]";
  return os.str();
}

bool in_sector(const Vec2& lo, const Vec2& hi, const Vec2& w) {
  // Sector spans < pi and is nonempty, so membership reduces to two
  // sideness tests. The lo boundary is included, the hi boundary excluded.
  int c_lo = cross_sign(lo, w);
  if (c_lo == 0) return dot(lo, w).sign() > 0;
  if (c_lo < 0) return false;
  return cross_sign(w, hi) > 0;
}

}  // namespace flatwalk
