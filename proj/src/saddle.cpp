#include "flatwalk/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "flatwalk/cylinder.hpp"
#include "flatwalk/errors.hpp"
#include "flatwalk/tracer.hpp"

namespace flatwalk {

namespace {

// Half-open angular wedge [lo, hi), spanning strictly less than pi.
struct Wedge {
  Vec2 lo, hi;
  bool empty = false;
};

// Intersect a wedge with the sector [a, b); all sectors involved stay
// inside one corner sector, so ccw comparison against `ref` is a total
// order. Vectors compare by cross sign (they span < pi together).
Wedge intersect_wedge(const Wedge& w, const Vec2& a, const Vec2& b) {
  if (w.empty) return w;
  Wedge out;
  // max of lo bounds
  out.lo = cross_sign(w.lo, a) > 0 ? a : w.lo;
  // min of hi bounds
  out.hi = cross_sign(w.hi, b) > 0 ? w.hi : b;
  int c = cross_sign(out.lo, out.hi);
  if (c < 0 || (c == 0 && dot(out.lo, out.hi).sign() > 0 && !same_ray(out.lo, out.hi)))
    out.empty = true;
  if (c <= 0) out.empty = true;
  return out;
}

bool wedge_contains(const Wedge& w, const Vec2& v) {
  return !w.empty && in_sector(w.lo, w.hi, v);
}

// Exact squared distance from the origin to segment [p, q].
Scalar dist2_to_segment(const Vec2& p, const Vec2& q) {
  Vec2 d = q - p;
  Scalar dd = d.norm2();
  Scalar t = -dot(p, d);
  if (t.sign() <= 0) return p.norm2();
  if (t >= dd) return q.norm2();
  Scalar c = cross(p, q);
  return c * c / dd;
}

struct EnumState {
  const TranslationSurface* s;
  const Homology* hom;
  Scalar bound2;
  long placements = 0;
  long cap = 0;
  std::vector<SaddleConnection>* out;
  int start_vertex;
  int start_corner;
};

// Recursive wedge unfolding. The triangle across `cross_edge` is placed so
// that cross_edge runs P -> Q in the plane (cone point at the origin);
// `cls_to_P` reaches the surface vertex under P.
void unfold(EnumState& st, int cross_edge, const Vec2& P, const Vec2& Q,
            Wedge wedge, const RelHomologyClass& cls_to_P, int depth) {
  if (wedge.empty) return;
  if (dist2_to_segment(P, Q) > st.bound2) return;
  require(++st.placements <= st.cap, "BudgetExceeded",
          "unfolded-triangle cap exceeded");
  const TranslationSurface& s = *st.s;
  int g = s.opp(cross_edge);
  int t2 = TranslationSurface::tri(g);
  // Placed triangle t2: opp(cross_edge) runs Q -> P; its third vertex R.
  int pr = TranslationSurface::next(g);  // P -> R
  Vec2 R = P + s.hol(pr);

  RelHomologyClass cls_to_R;
  if (st.hom) cls_to_R = hclass_add(cls_to_P, st.hom->edge_class(pr));

  if ((R.norm2() <= st.bound2) && wedge_contains(wedge, R)) {
    SaddleConnection sc;
    sc.start_vertex = st.start_vertex;
    sc.start_corner_edge = st.start_corner;
    sc.end_vertex = s.vertex(TranslationSurface::prev(g));  // vertex at R
    sc.holonomy = R;
    if (st.hom) sc.homology = cls_to_R;
    st.out->push_back(std::move(sc));
  }

  // Children: rays through [P, R) and [R, Q).
  unfold(st, pr, P, R, intersect_wedge(wedge, wedge.lo, R), cls_to_P, depth + 1);
  Wedge right = intersect_wedge(wedge, R, wedge.hi);
  unfold(st, TranslationSurface::prev(g), R, Q, right, cls_to_R, depth + 1);
}

}  // namespace

std::vector<SaddleConnection> enumerate_saddle_connections(
    const TranslationSurface& s, const Scalar& length_bound, const EnumOptions& opt) {
  require(length_bound.sign() > 0, "BadArgument", "length bound must be positive");
  std::optional<Homology> hom;
  if (opt.with_homology) hom.emplace(s);

  std::vector<SaddleConnection> found;
  EnumState st;
  st.s = &s;
  st.hom = hom ? &*hom : nullptr;
  st.bound2 = length_bound * length_bound;
  st.cap = opt.max_placements;
  st.out = &found;

  for (int ce = 0; ce < s.num_edges(); ++ce) {
    // Corner at the start of ce: wedge [hol(ce), hol(opp(prev(ce)))).
    st.start_vertex = s.vertex(ce);
    st.start_corner = ce;
    CornerSector sec = corner_sector(s, ce);
    Wedge w{sec.lo, sec.hi, false};

    // The lo boundary edge itself is a saddle connection of this corner.
    if (s.hol(ce).norm2() <= st.bound2) {
      SaddleConnection sc;
      sc.start_vertex = st.start_vertex;
      sc.start_corner_edge = ce;
      sc.end_vertex = s.vertex(s.opp(ce));
      sc.holonomy = s.hol(ce);
      if (hom) sc.homology = hom->edge_class(ce);
      found.push_back(std::move(sc));
    }

    // Far edge of the corner triangle runs B -> C.
    Vec2 B = s.hol(ce);
    Vec2 C = B + s.hol(TranslationSurface::next(ce));
    RelHomologyClass cls_b;
    if (hom) cls_b = hom->edge_class(ce);
    unfold(st, TranslationSurface::next(ce), B, C, w, cls_b, 0);
  }

  // Duplicate suppression on (start cone, holonomy), then sort by length
  // and angle.
  std::map<std::pair<int, std::string>, size_t> seen;
  std::vector<SaddleConnection> dedup;
  for (auto& sc : found) {
    auto key = std::make_pair(sc.start_vertex,
                              sc.holonomy.x.str() + "|" + sc.holonomy.y.str());
    if (seen.emplace(key, dedup.size()).second) dedup.push_back(std::move(sc));
  }
  std::stable_sort(dedup.begin(), dedup.end(),
                   [](const SaddleConnection& a, const SaddleConnection& b) {
                     int c = a.length2().cmp(b.length2());
                     if (c != 0) return c < 0;
                     double aa = a.holonomy.angle(), bb = b.holonomy.angle();
                     if (aa != bb) return aa < bb;
                     return a.start_vertex < b.start_vertex;
                   });
  return dedup;
}

std::vector<GrowthRow> saddle_growth_census(const TranslationSurface& s,
                                            const Scalar& l_max, int steps) {
  require(l_max.sign() > 0 && steps >= 1, "BadArgument", "bad census parameters");
  auto all = enumerate_saddle_connections(s, l_max, {.with_homology = false});
  std::vector<GrowthRow> rows;
  double lm = l_max.approx();
  for (int i = 1; i <= steps; ++i) {
    // Geometric checkpoints from lm * 2^-(steps-1) up to lm.
    double L = lm * std::pow(2.0, -(steps - i));
    long count = 0;
    for (const auto& sc : all)
      if (sc.length() <= L) ++count;
    rows.push_back({L, count, count / (L * L)});
  }
  return rows;
}

int hclass_rank(std::vector<RelHomologyClass> v) {
  if (v.empty()) return 0;
  size_t cols = v[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols && rank < static_cast<int>(v.size()); ++c) {
    int piv = -1;
    for (size_t r = rank; r < v.size(); ++r)
      if (v[r][c] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(v[rank], v[piv]);
    for (size_t r = 0; r < v.size(); ++r) {
      if (static_cast<int>(r) == rank || v[r][c] == 0) continue;
      Integer a = v[rank][c], b = v[r][c];
      for (size_t cc = 0; cc < cols; ++cc) v[r][cc] = v[r][cc] * a - v[rank][cc] * b;
    }
    ++rank;
  }
  return rank;
}

ShortSaddleReport short_saddles(const TranslationSurface& s, double eps) {
  require(eps > 0, "BadArgument", "eps must be positive");
  ShortSaddleReport rep;
  double area = s.area().approx();
  // Direct candidates: flat length^2 / area <= eps. Cylinder-boundary
  // candidates have length <= circumference, and a short core needs
  // circumference^2 <= eps * area as well, so one cutoff covers both.
  double cutoff = std::sqrt(eps * area) * (1.0 + 1e-12);
  Scalar bound = Scalar::from_decimal("2");
  {
    // Exact-ish cutoff: use a rational upper bound of the double.
    bound = Scalar(Rational(static_cast<long>(std::ceil(cutoff * 1000000)), 1000000));
  }
  if (bound.sign() <= 0) return rep;
  auto conns = enumerate_saddle_connections(s, bound);

  std::map<std::string, size_t> included;
  auto key_of = [](const SaddleConnection& sc) {
    return std::to_string(sc.start_vertex) + "|" + sc.holonomy.x.str() + "|" +
           sc.holonomy.y.str();
  };
  auto push = [&](const SaddleConnection& sc, double est) {
    if (included.emplace(key_of(sc), rep.connections.size()).second) {
      rep.connections.push_back(sc);
      rep.estimates.push_back(est);
    }
  };

  for (const auto& sc : conns) {
    double est = sc.holonomy.norm2().approx() / area;
    if (est <= eps) push(sc, est);
  }

  // Cylinder boundaries of short cores, one decomposition per direction.
  std::map<std::string, Vec2> dirs;
  for (const auto& sc : conns) {
    Vec2 d = canonical_direction(sc.holonomy);
    dirs.emplace(d.x.str() + "|" + d.y.str(), d);
  }
  for (const auto& [k, d] : dirs) {
    CylinderDecomposition dec;
    try {
      dec = direction_periodicity(s, d);
    } catch (const Error&) {
      continue;  // float-mode or non-periodic direction: skip
    }
    for (const auto& cyl : dec.cylinders) {
      double c_len = cyl.circumference(dec);
      double est = c_len * c_len / area;
      if (est > eps) continue;
      for (int side = 0; side < 2; ++side) {
        for (int idx : side == 0 ? cyl.bottom : cyl.top) {
          const auto& tc = dec.connections[idx];
          push(tc.sc, tc.sc.holonomy.norm2().approx() / area);
        }
      }
    }
  }

  std::vector<RelHomologyClass> classes;
  for (const auto& sc : rep.connections) classes.push_back(sc.homology);
  rep.j_rank = hclass_rank(std::move(classes));
  return rep;
}

}  // namespace flatwalk
