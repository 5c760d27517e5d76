#include "flatwalk/surface.hpp"

#include <cmath>
#include <sstream>

#include "flatwalk/errors.hpp"

namespace flatwalk {

namespace {

// True if the counterclockwise rotation from u to v (by an angle in (0, pi))
// sweeps across the ray r, with the convention r in (u, v].
bool step_crosses(const Vec2& u, const Vec2& v, const Vec2& r) {
  if (same_ray(r, v)) return true;
  if (same_ray(r, u)) return false;
  return cross_sign(u, r) > 0 && cross_sign(r, v) > 0;
}

}  // namespace

std::string StratumSignature::str() const {
  std::ostringstream os;
  os << "H(";
  for (size_t i = 0; i < zero_orders.size(); ++i)
    os << (i ? "," : "") << zero_orders[i];
  os << ") g=" << genus << " h=" << rel_homology_dim;
  return os.str();
}

TranslationSurface::TranslationSurface(std::vector<Vec2> edge_holonomy,
                                       std::vector<int> gluing)
    : hol_(std::move(edge_holonomy)), opp_(std::move(gluing)) {
  const int E = static_cast<int>(hol_.size());
  require(E > 0 && E % 3 == 0, "BadGluing", "edge count must be a positive multiple of 3");
  require(static_cast<int>(opp_.size()) == E, "BadGluing",
          "gluing table size mismatch");
  for (int e = 0; e < E; ++e) {
    require(opp_[e] >= 0 && opp_[e] < E && opp_[e] != e && opp_[opp_[e]] == e,
            "BadGluing", "gluing is not a fixed-point-free involution");
  }

  // Field consistency and taint.
  for (const Vec2& v : hol_) {
    for (const Scalar* s : {&v.x, &v.y}) {
      if (!s->exact()) {
        tainted_ = true;
        continue;
      }
      if (s->disc() != 0) {
        require(disc_ == 0 || disc_ == s->disc(), "FieldMismatch",
                "holonomies do not share one discriminant");
        disc_ = s->disc();
      }
    }
  }

  for (int t = 0; t < E / 3; ++t) {
    Vec2 sum = hol_[3 * t] + hol_[3 * t + 1] + hol_[3 * t + 2];
    require(sum.is_zero(), "ClosureViolation",
            "triangle " + std::to_string(t) + " holonomies do not close");
    require(cross(hol_[3 * t], hol_[3 * t + 1]).sign() > 0, "DegenerateTriangle",
            "triangle " + std::to_string(t) + " is degenerate or misoriented");
  }
  for (int e = 0; e < E; ++e) {
    require((hol_[e] + hol_[opp_[e]]).is_zero(), "GluingMismatch",
            "glued edges " + std::to_string(e) + "," + std::to_string(opp_[e]) +
                " are not opposite");
  }

  compute_vertices();

  // Gauss-Bonnet: sum of zero orders must equal 2g - 2.
  StratumSignature sig = stratum();
  long sum_p = 0;
  for (int p : sig.zero_orders) sum_p += p;
  require(sum_p == 2L * sig.genus - 2, "GaussBonnetViolation",
          "cone angles inconsistent with the Euler characteristic");
}

void TranslationSurface::compute_vertices() {
  const int E = num_edges();
  vertex_of_edge_.assign(E, -1);
  cone_orders_.clear();
  for (int e0 = 0; e0 < E; ++e0) {
    if (vertex_of_edge_[e0] >= 0) continue;
    int v = static_cast<int>(cone_orders_.size());
    // Walk the outgoing edges counterclockwise and count full turns by
    // tracking crossings of a fixed reference ray.
    const Vec2 ref(Scalar(1), Scalar(0));
    int crossings = 0;
    int e = e0;
    do {
      vertex_of_edge_[e] = v;
      int en = around_vertex(e);
      if (step_crosses(hol_[e], hol_[en], ref)) ++crossings;
      e = en;
    } while (e != e0);
    require(crossings >= 1, "DegenerateTriangle", "vertex with cone angle < 2pi");
    cone_orders_.push_back(crossings - 1);
  }
}

Scalar TranslationSurface::area() const {
  Scalar a(0);
  for (int t = 0; t < num_triangles(); ++t)
    a += cross(hol_[3 * t], hol_[3 * t + 1]);
  return a / Scalar(2);
}

StratumSignature TranslationSurface::stratum() const {
  StratumSignature sig;
  const int F = num_triangles();
  const int E = num_edges() / 2;  // undirected
  const int V = num_vertices();
  int euler = V - E + F;
  require(euler % 2 == 0, "BadGluing", "odd Euler characteristic");
  sig.genus = (2 - euler) / 2;
  sig.zero_orders = cone_orders_;
  std::sort(sig.zero_orders.rbegin(), sig.zero_orders.rend());
  sig.rel_homology_dim = 2 * sig.genus + V - 1;
  return sig;
}

std::vector<int> TranslationSurface::vertex_representatives() const {
  std::vector<int> rep(num_vertices(), -1);
  for (int e = 0; e < num_edges(); ++e)
    if (rep[vertex_of_edge_[e]] < 0) rep[vertex_of_edge_[e]] = e;
  return rep;
}

bool TranslationSurface::operator==(const TranslationSurface& o) const {
  return opp_ == o.opp_ && hol_ == o.hol_;
}

TranslationSurface build_surface(const std::vector<Vec2>& edge_holonomy,
                                 const std::vector<int>& gluing) {
  return TranslationSurface(edge_holonomy, gluing);
}

StratumSignature stratum(const TranslationSurface& s) { return s.stratum(); }

TranslationSurface apply_matrix(const Mat2& m, const TranslationSurface& s) {
  require(m.det().sign() > 0, "NonPositiveDeterminant",
          "matrix determinant must be positive");
  std::vector<Vec2> hol;
  hol.reserve(s.num_edges());
  std::vector<int> opp(s.num_edges());
  for (int e = 0; e < s.num_edges(); ++e) {
    hol.push_back(m.apply(s.hol(e)));
    opp[e] = s.opp(e);
  }
  return TranslationSurface(std::move(hol), std::move(opp));
}

TranslationSurface geodesic_flow(double t, const TranslationSurface& s) {
  if (t == 0.0) return s;
  Mat2 g(Scalar::tainted(std::exp(t)), Scalar(0), Scalar(0),
         Scalar::tainted(std::exp(-t)));
  return delaunay_retriangulate(apply_matrix(g, s)).surface;
}

}  // namespace flatwalk
