#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "flatwalk/errors.hpp"
#include "flatwalk/surface.hpp"
#include "flip_impl.hpp"

namespace flatwalk {

namespace {

// Combinatorial isomorphism with holonomy match, anchored at a choice of
// image for directed edge 0 of a.
bool match_from(const TranslationSurface& a, const TranslationSurface& b,
                int image_of_edge0) {
  const int E = a.num_edges();
  std::vector<int> map(E, -1);
  std::vector<int> stack;
  auto assign = [&](int e, int f) {
    if (map[e] >= 0) return map[e] == f;
    if (a.hol(e) != b.hol(f)) return false;
    map[e] = f;
    stack.push_back(e);
    return true;
  };
  if (!assign(0, image_of_edge0)) return false;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    int f = map[e];
    if (!assign(TranslationSurface::next(e), TranslationSurface::next(f)))
      return false;
    if (!assign(a.opp(e), b.opp(f))) return false;
  }
  for (int e = 0; e < E; ++e)
    if (map[e] < 0) return false;  // disconnected; not expected here
  return true;
}

bool plain_isomorphic(const TranslationSurface& a, const TranslationSurface& b) {
  if (a.num_edges() != b.num_edges()) return false;
  for (int f = 0; f < b.num_edges(); ++f)
    if (match_from(a, b, f)) return true;
  return false;
}

bool edge_cocircular(const TranslationSurface& s, int e) {
  if (TranslationSurface::tri(e) == TranslationSurface::tri(s.opp(e))) return false;
  Vec2 A(Scalar(0), Scalar(0));
  Vec2 B = s.hol(e);
  Vec2 C = B + s.hol(TranslationSurface::next(e));
  Vec2 D = s.hol(TranslationSurface::next(s.opp(e)));
  return detail::incircle_det(A, B, C, D).sign() == 0;
}

// Canonical key of the Delaunay cell complex. Cocircular interior edges are
// erased, leaving polygonal Delaunay cells whose combinatorics plus boundary
// holonomies determine the flat surface uniquely. The key is the
// lexicographic minimum over anchor edges of a BFS-normalized serialization
// of (successor-around-cell, gluing, holonomy).
std::string canonical_cell_key(const TranslationSurface& s) {
  const int E = s.num_edges();
  std::vector<char> interior(E, 0);
  for (int e = 0; e < E; ++e) interior[e] = edge_cocircular(s, e) ? 1 : 0;

  // Successor of a cell-boundary directed edge in its cell's ccw cycle.
  auto succ = [&](int e) {
    int g = TranslationSurface::next(e);
    while (interior[g]) g = TranslationSurface::next(s.opp(g));
    return g;
  };

  std::vector<int> boundary;
  for (int e = 0; e < E; ++e)
    if (!interior[e]) boundary.push_back(e);

  std::string best;
  std::vector<int> label(E);
  for (int anchor : boundary) {
    std::fill(label.begin(), label.end(), -1);
    std::vector<int> order;
    auto get_label = [&](int e) {
      if (label[e] < 0) {
        label[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
      return label[e];
    };
    get_label(anchor);
    std::ostringstream os;
    for (size_t i = 0; i < order.size(); ++i) {
      int e = order[i];
      os << get_label(succ(e)) << "|" << get_label(s.opp(e)) << "|"
         << s.hol(e).x.str() << "," << s.hol(e).y.str() << ";";
    }
    std::string key = os.str();
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace

bool isomorphic(const TranslationSurface& a, const TranslationSurface& b) {
  if (a.num_edges() != b.num_edges()) return false;
  TranslationSurface da = delaunay_retriangulate(a).surface;
  TranslationSurface db = delaunay_retriangulate(b).surface;
  if (da.tainted() || db.tainted()) {
    // Tainted holonomies have no stable serialization; fall back to direct
    // matching (tolerant equality via Scalar::cmp).
    return plain_isomorphic(da, db);
  }
  return canonical_cell_key(da) == canonical_cell_key(db);
}

}  // namespace flatwalk
