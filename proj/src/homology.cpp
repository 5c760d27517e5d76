#include "flatwalk/homology.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "flatwalk/errors.hpp"

namespace flatwalk {

RelHomologyClass hclass_add(const RelHomologyClass& a, const RelHomologyClass& b) {
  RelHomologyClass r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RelHomologyClass hclass_sub(const RelHomologyClass& a, const RelHomologyClass& b) {
  RelHomologyClass r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RelHomologyClass hclass_neg(const RelHomologyClass& a) {
  RelHomologyClass r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool hclass_is_zero(const RelHomologyClass& a) {
  return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

std::string hclass_str(const RelHomologyClass& a) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? " " : "") << a[i];
  os << "]";
  return os.str();
}

Homology::Homology(const TranslationSurface& s) : surface_(&s) {
  const int E = s.num_edges();
  const int F = s.num_triangles();

  // Spanning tree of the dual graph (triangles joined across undirected
  // edges). Non-tree edges become the basis.
  std::vector<char> tree(E, 0);  // per directed edge
  std::vector<char> seen(F, 0);
  std::deque<int> bfs{0};
  seen[0] = 1;
  int tree_links = 0;
  while (!bfs.empty()) {
    int t = bfs.front();
    bfs.pop_front();
    for (int k = 0; k < 3; ++k) {
      int e = 3 * t + k;
      int t2 = TranslationSurface::tri(s.opp(e));
      if (!seen[t2]) {
        seen[t2] = 1;
        tree[e] = tree[s.opp(e)] = 1;
        ++tree_links;
        bfs.push_back(t2);
      }
    }
  }
  require(std::all_of(seen.begin(), seen.end(), [](char c) { return c; }),
          "RankDeficiency", "surface is not connected");

  const int h = E / 2 - F + 1;
  for (int e = 0; e < E; ++e)
    if (!tree[e] && e < s.opp(e)) basis_edges_.push_back(e);
  require(static_cast<int>(basis_edges_.size()) == h, "RankDeficiency",
          "basis count mismatch");

  // Classes: basis edges get unit vectors; tree edges are resolved by
  // peeling triangles with a single unknown edge (the dual tree guarantees
  // the peel completes).
  edge_class_.assign(E, {});
  for (int i = 0; i < h; ++i) {
    RelHomologyClass c(h, Integer(0));
    c[i] = 1;
    edge_class_[basis_edges_[i]] = c;
    edge_class_[s.opp(basis_edges_[i])] = hclass_neg(c);
  }
  std::vector<int> unknown(F, 0);
  for (int t = 0; t < F; ++t)
    for (int k = 0; k < 3; ++k)
      if (edge_class_[3 * t + k].empty()) ++unknown[t];
  std::deque<int> peel;
  for (int t = 0; t < F; ++t)
    if (unknown[t] == 1) peel.push_back(t);
  int resolved = 0;
  while (!peel.empty()) {
    int t = peel.front();
    peel.pop_front();
    if (unknown[t] != 1) continue;
    int miss = -1;
    RelHomologyClass sum(h, Integer(0));
    for (int k = 0; k < 3; ++k) {
      int e = 3 * t + k;
      if (edge_class_[e].empty())
        miss = e;
      else
        sum = hclass_add(sum, edge_class_[e]);
    }
    edge_class_[miss] = hclass_neg(sum);
    edge_class_[s.opp(miss)] = sum;
    ++resolved;
    unknown[t] = 0;
    int t2 = TranslationSurface::tri(s.opp(miss));
    if (--unknown[t2] == 1) peel.push_back(t2);
  }
  require(resolved == tree_links, "RankDeficiency", "tree peel incomplete");

  // Boundary word of the polygon obtained by contracting the dual tree.
  auto succ = [&](int e) {
    int g = TranslationSurface::next(e);
    while (tree[g]) g = TranslationSurface::next(s.opp(g));
    return g;
  };
  int start = basis_edges_[0];
  int e = start;
  do {
    polygon_word_.push_back(e);
    e = succ(e);
  } while (e != start);
  require(static_cast<int>(polygon_word_.size()) == 2 * h, "RankDeficiency",
          "polygon boundary word has wrong length");

  // Pairing of basis letters from occurrence interleaving in the word: with
  // x+ normalized to position 0 and x- at position m, <x,y> = +1 when
  // exactly y+ lies in (0, m), -1 when exactly y- does, 0 otherwise.
  const int W = 2 * h;
  std::vector<int> pos_plus(h, -1), pos_minus(h, -1);
  for (int i = 0; i < W; ++i) {
    int w = polygon_word_[i];
    for (int j = 0; j < h; ++j) {
      if (w == basis_edges_[j]) pos_plus[j] = i;
      if (w == s.opp(basis_edges_[j])) pos_minus[j] = i;
    }
  }
  pairing_.assign(h, std::vector<Integer>(h, Integer(0)));
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j) {
      if (i == j) continue;
      int m = (pos_minus[i] - pos_plus[i] + W) % W;
      int a = (pos_plus[j] - pos_plus[i] + W) % W;
      int c = (pos_minus[j] - pos_plus[i] + W) % W;
      bool a_in = a > 0 && a < m;
      bool c_in = c > 0 && c < m;
      if (a_in && !c_in)
        pairing_[i][j] = 1;
      else if (c_in && !a_in)
        pairing_[i][j] = -1;
    }
  }
}

Integer Homology::pair(const RelHomologyClass& a, const RelHomologyClass& b) const {
  const int h = dim();
  Integer r(0);
  for (int i = 0; i < h; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < h; ++j) {
      if (b[j] == 0) continue;
      r += a[i] * pairing_[i][j] * b[j];
    }
  }
  return r;
}

RelHomologyClass Homology::corner_path_class(int t, int corner_from,
                                             int corner_to) const {
  RelHomologyClass zero(dim(), Integer(0));
  if (corner_from == corner_to) return zero;
  // Edge k of triangle t runs from corner k to corner k+1.
  if ((corner_from + 1) % 3 == corner_to) return edge_class_[3 * t + corner_from];
  return hclass_neg(edge_class_[3 * t + corner_to]);
}

std::vector<int> homology_basis(const TranslationSurface& s) {
  return Homology(s).basis_edges();
}

}  // namespace flatwalk
