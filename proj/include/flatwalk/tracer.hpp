#pragma once

#include <vector>

#include "flatwalk/homology.hpp"
#include "flatwalk/surface.hpp"

namespace flatwalk {

// A point on the surface in a triangle's local chart: corner 0 of the
// triangle sits at the origin, corner 1 at hol(3t), corner 2 at
// hol(3t) + hol(3t+1).
struct SurfacePoint {
  int tri = -1;
  Vec2 pos;
};

Vec2 corner_position(const TranslationSurface& s, int tri, int corner);

// Corner of the triangulation, identified with the directed edge starting
// there: the angular sector [hol(e), hol(opp(prev(e)))).
struct CornerSector {
  Vec2 lo, hi;
};
CornerSector corner_sector(const TranslationSurface& s, int corner_edge);
bool corner_contains(const TranslationSurface& s, int corner_edge, const Vec2& dir);
// Rotate counterclockwise around the vertex until the half-open sector
// contains dir.
int normalize_germ_corner(const TranslationSurface& s, int corner_edge,
                          const Vec2& dir);
// All corner edges at whose sector contains dir (one germ per 2pi of cone
// angle).
std::vector<int> germ_corners(const TranslationSurface& s, int vertex,
                              const Vec2& dir);

// One straight piece of a traced geodesic inside a triangle. Positions are
// in the triangle's local chart; t0/t1 are the global parameters of the
// piece endpoints along the whole traced segment (fractions of the total
// holonomy).
struct Chord {
  int tri = -1;
  Vec2 a, b;
  Scalar t0, t1;
  int entry_edge = -1;  // directed edge of tri crossed at a (-1 at the start)
  int exit_edge = -1;   // directed edge of tri crossed at b (-1 at a vertex)
  Scalar exit_t;        // parameter of b along hol(exit_edge), in (0,1)
};

struct Course {
  bool hit_vertex = false;
  int crossings = 0;
  Vec2 total;                // displacement from start to end
  std::vector<Chord> chords;
  int start_corner_edge = -1;
  int end_corner_edge = -1;  // normalized so its sector contains -direction
  RelHomologyClass cls;      // empty when no Homology was supplied
};

// Straight-line tracing in exact coordinates. Every predicate is a sign
// computation in the field, so hitting a vertex is a mathematical verdict,
// not a tolerance call.
class Tracer {
public:
  explicit Tracer(const TranslationSurface& s, const Homology* h = nullptr)
      : s_(&s), hom_(h) {}

  // Trace from the corner `corner_edge` in direction dir (which must lie in
  // that corner's sector) until a cone point is hit. Throws
  // TraceBudgetExceeded after max_crossings edge crossings.
  Course trace_ray(int corner_edge, const Vec2& dir, int max_crossings) const;

  // Trace the closed leaf through an interior point (first return to the
  // exact starting point). The chord parameters are fractions of the loop.
  Course trace_loop(const SurfacePoint& start, const Vec2& dir,
                    int max_crossings) const;

  // Trace from an interior point until one of the obstacle chords is hit.
  struct Obstacle {
    int id;  // caller-defined
    int tri;
    Vec2 a, b;
    Scalar t0, t1;  // global parameters carried through to the hit
  };
  struct ShotResult {
    bool hit = false;
    bool vertex_block = false;  // ray ran into a cone point first
    int obstacle_id = -1;
    Scalar obstacle_t;  // global parameter on the obstacle's course
    Vec2 travel;        // displacement from start to the hit point
    SurfacePoint point;
  };
  ShotResult shoot(const SurfacePoint& start, const Vec2& dir,
                   const std::vector<std::vector<Obstacle>>& per_tri,
                   int max_crossings) const;

  const TranslationSurface& surface() const { return *s_; }

private:
  const TranslationSurface* s_;
  const Homology* hom_;
};

}  // namespace flatwalk
