#include "flatwalk/tracer.hpp"

#include "flatwalk/errors.hpp"

namespace flatwalk {

Vec2 corner_position(const TranslationSurface& s, int tri, int corner) {
  Vec2 p(Scalar(0), Scalar(0));
  if (corner >= 1) p += s.hol(3 * tri);
  if (corner >= 2) p += s.hol(3 * tri + 1);
  return p;
}

CornerSector corner_sector(const TranslationSurface& s, int corner_edge) {
  return {s.hol(corner_edge), s.hol(s.opp(TranslationSurface::prev(corner_edge)))};
}

bool corner_contains(const TranslationSurface& s, int corner_edge, const Vec2& dir) {
  CornerSector c = corner_sector(s, corner_edge);
  return in_sector(c.lo, c.hi, dir);
}

int normalize_germ_corner(const TranslationSurface& s, int corner_edge,
                          const Vec2& dir) {
  int e = corner_edge;
  for (int i = 0; i <= s.num_edges(); ++i) {
    if (corner_contains(s, e, dir)) return e;
    e = s.around_vertex(e);
  }
  fail("TraceInternal", "no corner at this vertex contains the direction");
}

std::vector<int> germ_corners(const TranslationSurface& s, int vertex,
                              const Vec2& dir) {
  std::vector<int> out;
  for (int e = 0; e < s.num_edges(); ++e)
    if (s.vertex(e) == vertex && corner_contains(s, e, dir)) out.push_back(e);
  return out;
}

namespace {

struct StepResult {
  bool vertex_hit = false;
  int vertex_corner = -1;  // corner index (0..2) of the current triangle
  int exit_edge = -1;      // directed edge crossed otherwise
  Scalar tau;              // parameter along hol(exit_edge)
  Vec2 exit_pos;           // local position of the exit point
};

// Advance a ray p + sigma*dir through triangle t. p lies in the closed
// triangle with the forward ray entering its interior (or running along an
// edge toward its far endpoint); the exit is unique and exact.
StepResult step_through(const TranslationSurface& s, int t, const Vec2& p,
                        const Vec2& dir) {
  StepResult best;
  Scalar best_sigma;
  bool have = false;
  for (int k = 0; k < 3; ++k) {
    int f = 3 * t + k;
    Vec2 A = corner_position(s, t, k);
    Vec2 d = s.hol(f);
    Scalar denom = cross(dir, d);
    if (denom.sign() == 0) continue;  // parallel to this edge
    Vec2 ap = A - p;
    Scalar sigma = cross(ap, d) / denom;
    if (sigma.sign() <= 0) continue;
    Scalar tau = cross(ap, dir) / denom;
    int tlo = tau.sign();
    int thi = (tau - Scalar(1)).sign();
    if (tlo < 0 || thi > 0) continue;
    if (!have || sigma < best_sigma) {
      have = true;
      best_sigma = sigma;
      best.exit_pos = p + dir * sigma;
      if (tlo == 0 || thi == 0) {
        best.vertex_hit = true;
        best.vertex_corner = tlo == 0 ? k : (k + 1) % 3;
        best.exit_edge = -1;
      } else {
        best.vertex_hit = false;
        best.vertex_corner = -1;
        best.exit_edge = f;
        best.tau = tau;
      }
    }
  }
  require(have, "TraceInternal", "ray found no exit from triangle");
  return best;
}

// Transport a point on directed edge f (parameter tau from its start) into
// the chart of the neighbouring triangle.
SurfacePoint transport(const TranslationSurface& s, int f, const Scalar& tau) {
  int g = s.opp(f);
  int t2 = TranslationSurface::tri(g);
  Vec2 A2 = corner_position(s, t2, g % 3);
  return {t2, A2 + s.hol(g) * (Scalar(1) - tau)};
}

Scalar dir_multiple(const Vec2& dir, const Vec2& v) {
  return dir.x.sign() != 0 ? v.x / dir.x : v.y / dir.y;
}

}  // namespace

Course Tracer::trace_ray(int corner_edge, const Vec2& dir, int max_crossings) const {
  const TranslationSurface& s = *s_;
  require(corner_contains(s, corner_edge, dir), "TraceInternal",
          "direction not in the starting corner sector");
  Course out;
  out.start_corner_edge = corner_edge;
  if (hom_) out.cls.assign(hom_->dim(), Integer(0));

  SurfacePoint cur{TranslationSurface::tri(corner_edge),
                   corner_position(s, TranslationSurface::tri(corner_edge),
                                   corner_edge % 3)};
  int anchor = corner_edge % 3;  // corner of cur.tri the class has reached
  std::vector<Scalar> params{Scalar(0)};
  Scalar traveled(0);
  int entry_edge = -1;

  while (true) {
    StepResult st = step_through(s, cur.tri, cur.pos, dir);
    Chord ch;
    ch.tri = cur.tri;
    ch.a = cur.pos;
    ch.b = st.exit_pos;
    ch.entry_edge = entry_edge;
    traveled += dir_multiple(dir, st.exit_pos - cur.pos);
    params.push_back(traveled);
    if (st.vertex_hit) {
      ch.exit_edge = -1;
      out.chords.push_back(ch);
      if (hom_)
        out.cls = hclass_add(
            out.cls, hom_->corner_path_class(cur.tri, anchor, st.vertex_corner));
      out.end_corner_edge =
          normalize_germ_corner(s, 3 * cur.tri + st.vertex_corner, -dir);
      out.hit_vertex = true;
      break;
    }
    ch.exit_edge = st.exit_edge;
    ch.exit_t = st.tau;
    out.chords.push_back(ch);
    require(out.crossings++ < max_crossings, "TraceBudgetExceeded",
            "edge-crossing budget exhausted");
    if (hom_) {
      // Move the anchor to the start vertex of the exit edge; crossing the
      // gluing keeps the same surface point.
      out.cls = hclass_add(out.cls,
                           hom_->corner_path_class(cur.tri, anchor, st.exit_edge % 3));
    }
    int g = s.opp(st.exit_edge);
    cur = transport(s, st.exit_edge, st.tau);
    anchor = (g % 3 + 1) % 3;  // end corner of opp(exit) == start of exit
    entry_edge = g;
  }

  out.total = dir * traveled;
  require(traveled.sign() > 0, "TraceInternal", "trace has non-positive length");
  for (size_t i = 0; i < out.chords.size(); ++i) {
    out.chords[i].t0 = params[i] / traveled;
    out.chords[i].t1 = params[i + 1] / traveled;
  }
  if (hom_) {
    Vec2 check(Scalar(0), Scalar(0));
    for (int i = 0; i < hom_->dim(); ++i) {
      if (out.cls[i] == 0) continue;
      check += hom_->surface().hol(hom_->basis_edges()[i]) * Scalar(Rational(out.cls[i]));
    }
    require(check == out.total, "TraceInternal",
            "homology class does not reproduce the holonomy");
  }
  return out;
}

Course Tracer::trace_loop(const SurfacePoint& start, const Vec2& dir,
                          int max_crossings) const {
  const TranslationSurface& s = *s_;
  Course out;
  SurfacePoint cur = start;
  std::vector<Scalar> params{Scalar(0)};
  Scalar traveled(0);
  int entry_edge = -1;
  while (true) {
    StepResult st = step_through(s, cur.tri, cur.pos, dir);
    require(!st.vertex_hit, "TraceInternal",
            "leaf through an interior point hit a cone point");
    Chord ch;
    ch.tri = cur.tri;
    ch.a = cur.pos;
    ch.b = st.exit_pos;
    ch.entry_edge = entry_edge;
    ch.exit_edge = st.exit_edge;
    ch.exit_t = st.tau;
    out.chords.push_back(ch);
    traveled += dir_multiple(dir, st.exit_pos - cur.pos);
    params.push_back(traveled);
    require(out.crossings++ < max_crossings, "TraceBudgetExceeded",
            "edge-crossing budget exhausted");
    entry_edge = s.opp(st.exit_edge);
    cur = transport(s, st.exit_edge, st.tau);
    if (cur.tri == start.tri && cur.pos == start.pos) break;
  }
  out.total = dir * traveled;
  for (size_t i = 0; i < out.chords.size(); ++i) {
    out.chords[i].t0 = params[i] / traveled;
    out.chords[i].t1 = params[i + 1] / traveled;
  }
  return out;
}

Tracer::ShotResult Tracer::shoot(const SurfacePoint& start, const Vec2& dir,
                                 const std::vector<std::vector<Obstacle>>& per_tri,
                                 int max_crossings) const {
  const TranslationSurface& s = *s_;
  ShotResult res;
  SurfacePoint cur = start;
  Vec2 travel(Scalar(0), Scalar(0));
  for (int steps = 0; steps <= max_crossings; ++steps) {
    StepResult st = step_through(s, cur.tri, cur.pos, dir);
    Scalar lim = dir_multiple(dir, st.exit_pos - cur.pos);
    bool found = false;
    Scalar best_sigma;
    for (const Obstacle& ob : per_tri[cur.tri]) {
      Vec2 d = ob.b - ob.a;
      Scalar denom = cross(dir, d);
      if (denom.sign() == 0) continue;
      Vec2 ap = ob.a - cur.pos;
      Scalar sigma = cross(ap, d) / denom;
      if (sigma.sign() <= 0) continue;
      if (sigma > lim) continue;
      Scalar tau = cross(ap, dir) / denom;
      if (tau.sign() < 0 || (tau - Scalar(1)).sign() > 0) continue;
      if (!found || sigma < best_sigma) {
        found = true;
        best_sigma = sigma;
        res.hit = true;
        res.obstacle_id = ob.id;
        res.obstacle_t = ob.t0 + (ob.t1 - ob.t0) * tau;
        res.point = {cur.tri, cur.pos + dir * sigma};
        res.travel = travel + dir * sigma;
      }
    }
    if (found) return res;
    if (st.vertex_hit) {
      res.hit = false;
      res.vertex_block = true;
      return res;
    }
    travel += st.exit_pos - cur.pos;
    cur = transport(s, st.exit_edge, st.tau);
  }
  fail("TraceBudgetExceeded", "shot exceeded its crossing budget");
}

}  // namespace flatwalk
