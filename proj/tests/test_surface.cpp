#include <cmath>

#include "doctest.h"
#include "flatwalk/catalog.hpp"
#include "flatwalk/errors.hpp"
#include "flatwalk/surface.hpp"

using namespace flatwalk;

namespace {

// Independent oracle for cone angles: walk the corners of each vertex class
// and sum the corner angles in floating point.
double corner_angle_sum(const TranslationSurface& s, int vertex) {
  double total = 0;
  for (int e = 0; e < s.num_edges(); ++e) {
    if (s.vertex(e) != vertex) continue;
    // Corner at start of e, between e and the reversed previous edge.
    Vec2 u = s.hol(e);
    Vec2 w = -s.hol(TranslationSurface::prev(e));
    double ang = std::atan2(cross(u, w).approx(), dot(u, w).approx());
    if (ang < 0) ang += 2 * M_PI;
    total += ang;
  }
  return total;
}

}  // namespace

TEST_CASE("square torus: stratum and cone angle") {
  TranslationSurface t = make_torus();
  CHECK(t.num_triangles() == 2);
  CHECK(t.num_vertices() == 1);
  CHECK(t.cone_order(0) == 0);  // marked point, angle 2 pi
  StratumSignature sig = t.stratum();
  CHECK(sig.genus == 1);
  CHECK(sig.zero_orders == std::vector<int>{0});
  CHECK(sig.rel_homology_dim == 2);
  CHECK(t.area() == Scalar(1));
  CHECK(corner_angle_sum(t, 0) == doctest::Approx(2 * M_PI));
}

TEST_CASE("regular octagon: genus 2, single 6pi cone point") {
  TranslationSurface o = make_octagon();
  CHECK(o.num_vertices() == 1);
  CHECK(o.cone_order(0) == 2);  // angle 6 pi
  StratumSignature sig = o.stratum();
  CHECK(sig.genus == 2);
  CHECK(sig.zero_orders == std::vector<int>{2});
  CHECK(sig.rel_homology_dim == 4);
  CHECK(corner_angle_sum(o, 0) == doctest::Approx(6 * M_PI));
  // Area of the regular octagon with unit side: 2(1+sqrt2).
  CHECK(o.area() == Scalar(2) + Scalar(2) * Scalar::sqrt_disc(2));
}

TEST_CASE("golden L and double pentagon live in H(2)") {
  for (auto make : {make_golden_l, make_double_pentagon}) {
    TranslationSurface s = make();
    StratumSignature sig = s.stratum();
    CHECK(sig.genus == 2);
    CHECK(sig.zero_orders == std::vector<int>{2});
    CHECK(sig.rel_homology_dim == 4);
    CHECK(corner_angle_sum(s, 0) == doctest::Approx(6 * M_PI));
  }
  // Golden L area is sqrt 5.
  CHECK(make_golden_l().area() == Scalar::sqrt_disc(5));
}

TEST_CASE("gauss-bonnet holds on every catalog surface") {
  for (const auto& name : catalog_names()) {
    TranslationSurface s = catalog_surface(name);
    StratumSignature sig = s.stratum();
    int sum = 0;
    for (int p : sig.zero_orders) sum += p;
    CHECK(sum == 2 * sig.genus - 2);
    CHECK(sig.rel_homology_dim ==
          2 * sig.genus + static_cast<int>(sig.zero_orders.size()) - 1);
  }
}

TEST_CASE("invalid surfaces are rejected") {
  // Holonomies that do not close.
  std::vector<Vec2> bad = {
      {Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)},
      {Scalar(-1), Scalar(0)}, {Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)},
  };
  std::vector<int> opp = {3, 4, 5, 0, 1, 2};
  CHECK_THROWS_WITH_AS(build_surface(bad, opp), doctest::Contains("ClosureViolation"),
                       Error);

  // Glued edges that are not opposite.
  std::vector<Vec2> mis = {
      {Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(-1)},
      {Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}, {Scalar(-1), Scalar(1)},
  };
  CHECK_THROWS_WITH_AS(build_surface(mis, opp), doctest::Contains("GluingMismatch"),
                       Error);
}

TEST_CASE("apply_matrix: exact action, determinant scaling, flow round trip") {
  TranslationSurface t = make_torus();

  SUBCASE("identity") {
    TranslationSurface u = apply_matrix(Mat2(), t);
    CHECK(u == t);
  }
  SUBCASE("diag(2, 1/2) preserves area and doubles the horizontal edge") {
    Mat2 g(Scalar(2), Scalar(0), Scalar(0), Scalar(Rational(1, 2)));
    TranslationSurface u = apply_matrix(g, t);
    CHECK(u.hol(0) == Vec2(Scalar(2), Scalar(0)));
    CHECK(u.area() == t.area());
  }
  SUBCASE("area scales by det") {
    Mat2 g(Scalar(3), Scalar(1), Scalar(0), Scalar(2));
    TranslationSurface u = apply_matrix(g, make_golden_l());
    CHECK(u.area() == Scalar(6) * make_golden_l().area());
  }
  SUBCASE("rotation by pi/2 gives an isomorphic torus") {
    Mat2 rot(Scalar(0), Scalar(-1), Scalar(1), Scalar(0));
    CHECK(isomorphic(apply_matrix(rot, t), t));
  }
  SUBCASE("non-positive determinant is rejected") {
    Mat2 g(Scalar(1), Scalar(0), Scalar(0), Scalar(-1));
    CHECK_THROWS_WITH_AS(apply_matrix(g, t),
                         doctest::Contains("NonPositiveDeterminant"), Error);
  }
}

TEST_CASE("delaunay: shear flips back to the square torus") {
  TranslationSurface t = make_torus();
  Mat2 shear(Scalar(1), Scalar(1), Scalar(0), Scalar(1));
  TranslationSurface sheared = apply_matrix(shear, t);
  DelaunayResult r = delaunay_retriangulate(sheared);
  CHECK(r.flips > 0);
  CHECK(isomorphic(r.surface, t));

  // An already-Delaunay surface is returned unchanged.
  DelaunayResult r2 = delaunay_retriangulate(t);
  CHECK(r2.flips == 0);
  CHECK(r2.surface == t);
}

TEST_CASE("delaunay: all catalog surfaces pass the circumcircle check") {
  for (const auto& name : catalog_names()) {
    TranslationSurface s = delaunay_retriangulate(catalog_surface(name)).surface;
    for (int e = 0; e < s.num_edges(); ++e) CHECK(edge_is_delaunay(s, e));
    // Flip invariance of area, stratum and cone angles.
    TranslationSurface orig = catalog_surface(name);
    CHECK(s.area() == orig.area());
    CHECK(s.stratum() == orig.stratum());
  }
}

TEST_CASE("geodesic flow: identity at t=0 and approximate inversion") {
  TranslationSurface t = make_torus();
  CHECK(geodesic_flow(0.0, t) == t);
  TranslationSurface fl = geodesic_flow(1.0, t);
  CHECK(fl.tainted());
  CHECK(fl.area().approx() == doctest::Approx(1.0));
  TranslationSurface back = geodesic_flow(-1.0, fl);
  CHECK(isomorphic(back, t));
}

TEST_CASE("geodesic flow on golden L keeps triangles Delaunay") {
  TranslationSurface s = geodesic_flow(3.0, make_golden_l());
  for (int e = 0; e < s.num_edges(); ++e) CHECK(edge_is_delaunay(s, e));
  CHECK(s.area().approx() == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("rotated octagon is isomorphic to itself") {
  // Rotation by pi/4 generates the octagon's symmetry; entries in Q(sqrt2).
  Scalar s = Scalar(Rational(0), Rational(1, 2), 2);
  Mat2 rot(s, -s, s, s);
  CHECK(rot.det() == Scalar(1));
  TranslationSurface o = make_octagon();
  CHECK(isomorphic(apply_matrix(rot, o), o));
}

TEST_CASE("catalog round trip through the .surf format") {
  for (const auto& name : catalog_names()) {
    TranslationSurface s = catalog_surface(name);
    std::string text = surface_to_text(s, name);
    TranslationSurface back = surface_from_text(text);
    CHECK(back == s);
  }
  CHECK_THROWS_AS(catalog_surface("bogus.surf"), Error);
}
