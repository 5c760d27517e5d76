#pragma once

#include <vector>

#include "flatwalk/surface.hpp"

namespace flatwalk::detail {

// Flip directed edge e of the triangulation given by (hol, opp) in place.
// With A = start(e), B = end(e), C the apex of tri(e) and D the apex of
// tri(opp(e)) unfolded across e, the two triangles (A,B,C), (B,A,D) are
// replaced by (A,D,C), (D,B,C); the new diagonal runs D -> C and lands in
// slot 3*tri(e)+1. Caller guarantees tri(e) != tri(opp(e)) and that the
// quad is strictly convex.
inline void flip_edge(std::vector<Vec2>& hol, std::vector<int>& opp, int e) {
  auto next = TranslationSurface::next;
  auto prev = TranslationSurface::prev;
  int e2 = opp[e];
  int a = next(e), b = prev(e), c = next(e2), d = prev(e2);
  Vec2 hol_a = hol[a], hol_b = hol[b], hol_c = hol[c], hol_d = hol[d];
  int pa = opp[a], pb = opp[b], pc = opp[c], pd = opp[d];
  int t1 = TranslationSurface::tri(e), t2 = TranslationSurface::tri(e2);
  int n0 = 3 * t1, n1 = 3 * t1 + 1, n2 = 3 * t1 + 2;
  int m0 = 3 * t2, m1 = 3 * t2 + 1, m2 = 3 * t2 + 2;
  // diag = C - D in the unfolded picture.
  Vec2 diag = hol[e] + hol_a - hol_c;
  auto renamed = [&](int old_edge) {
    if (old_edge == a) return m1;
    if (old_edge == b) return n2;
    if (old_edge == c) return n0;
    if (old_edge == d) return m0;
    return old_edge;
  };
  hol[n0] = hol_c;  // A -> D
  hol[n1] = diag;   // D -> C
  hol[n2] = hol_b;  // C -> A
  hol[m0] = hol_d;  // D -> B
  hol[m1] = hol_a;  // B -> C
  hol[m2] = -diag;  // C -> D
  int qa = renamed(pa), qb = renamed(pb), qc = renamed(pc), qd = renamed(pd);
  opp[n1] = m2;
  opp[m2] = n1;
  opp[m1] = qa;
  opp[qa] = m1;
  opp[n2] = qb;
  opp[qb] = n2;
  opp[n0] = qc;
  opp[qc] = n0;
  opp[m0] = qd;
  opp[qd] = m0;
}

// Positive iff d is strictly inside the circumcircle of ccw triangle (a,b,c).
inline Scalar incircle_det(const Vec2& a, const Vec2& b, const Vec2& c,
                           const Vec2& d) {
  Vec2 p = a - d, q = b - d, r = c - d;
  return p.norm2() * cross(q, r) - q.norm2() * cross(p, r) +
         r.norm2() * cross(p, q);
}

}  // namespace flatwalk::detail
