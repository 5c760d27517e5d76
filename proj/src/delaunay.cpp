#include <deque>
#include <vector>

#include "flatwalk/errors.hpp"
#include "flatwalk/surface.hpp"
#include "flip_impl.hpp"

namespace flatwalk {

bool edge_is_delaunay(const TranslationSurface& s, int e) {
  if (TranslationSurface::tri(e) == TranslationSurface::tri(s.opp(e)))
    return true;  // self-glued edge: no quad to test
  Vec2 A(Scalar(0), Scalar(0));
  Vec2 B = s.hol(e);
  Vec2 C = B + s.hol(TranslationSurface::next(e));
  Vec2 D = s.hol(TranslationSurface::next(s.opp(e)));
  return detail::incircle_det(A, B, C, D).sign() <= 0;
}

DelaunayResult delaunay_retriangulate(const TranslationSurface& s, int flip_budget) {
  std::vector<Vec2> hol(s.num_edges());
  std::vector<int> opp(s.num_edges());
  for (int e = 0; e < s.num_edges(); ++e) {
    hol[e] = s.hol(e);
    opp[e] = s.opp(e);
  }
  auto next = TranslationSurface::next;
  auto tri = TranslationSurface::tri;

  if (flip_budget <= 0) flip_budget = 1000 + 200 * s.num_triangles();

  std::deque<int> queue;
  std::vector<char> queued(s.num_edges(), 0);
  auto enqueue = [&](int e) {
    int r = std::min(e, opp[e]);
    if (!queued[r]) {
      queued[r] = 1;
      queue.push_back(r);
    }
  };
  for (int e = 0; e < s.num_edges(); ++e) enqueue(e);

  int flips = 0;
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    queued[e] = 0;
    int e2 = opp[e];
    if (tri(e) == tri(e2)) continue;
    Vec2 A(Scalar(0), Scalar(0));
    Vec2 B = hol[e];
    Vec2 C = B + hol[next(e)];
    Vec2 D = hol[next(e2)];
    if (detail::incircle_det(A, B, C, D).sign() <= 0) continue;

    require(++flips <= flip_budget, "NonTermination",
            "Delaunay flip budget exceeded");
    detail::flip_edge(hol, opp, e);
    // The four outer edges of the flipped quad may have lost the condition.
    int t1 = tri(e), t2 = tri(e2);
    for (int side : {3 * t1, 3 * t1 + 2, 3 * t2, 3 * t2 + 1}) enqueue(side);
  }

  return {TranslationSurface(std::move(hol), std::move(opp)), flips};
}

}  // namespace flatwalk
