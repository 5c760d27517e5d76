#pragma once

#include <optional>
#include <vector>

#include "flatwalk/geom.hpp"

namespace flatwalk {

// Glued-triangle model of a translation surface (X, omega).
//
// Triangle t owns the directed edges 3t, 3t+1, 3t+2 in counterclockwise
// order; edge e runs from corner e%3 to corner (e+1)%3 of its triangle.
// opp[e] is the oppositely-directed partner of e in another (or the same)
// triangle, and hol[opp[e]] == -hol[e]. Cone points are the vertex classes
// of the triangulation; every vertex is a cone point (order-0 marked points
// included), so the triangulation is a geodesic triangulation by saddle
// connections.
struct StratumSignature {
  int genus = 0;
  std::vector<int> zero_orders;  // sorted descending
  int rel_homology_dim = 0;      // 2g + k - 1

  bool operator==(const StratumSignature& o) const = default;
  std::string str() const;
};

class TranslationSurface {
public:
  // Validates everything: closure, opposite gluing, positive areas,
  // Gauss-Bonnet. Throws ClosureViolation / GluingMismatch /
  // DegenerateTriangle / BadGluing on invalid input.
  TranslationSurface(std::vector<Vec2> edge_holonomy, std::vector<int> gluing);

  int num_triangles() const { return static_cast<int>(hol_.size()) / 3; }
  int num_edges() const { return static_cast<int>(hol_.size()); }
  int num_vertices() const { return static_cast<int>(cone_orders_.size()); }

  const Vec2& hol(int e) const { return hol_[e]; }
  int opp(int e) const { return opp_[e]; }
  static int tri(int e) { return e / 3; }
  static int next(int e) { return 3 * (e / 3) + (e + 1) % 3; }
  static int prev(int e) { return 3 * (e / 3) + (e + 2) % 3; }
  // Next outgoing edge counterclockwise around the start vertex of e.
  int around_vertex(int e) const { return opp_[prev(e)]; }

  // Vertex class of the start point of directed edge e.
  int vertex(int e) const { return vertex_of_edge_[e]; }
  // Cone angle is 2*pi*(order + 1).
  int cone_order(int v) const { return cone_orders_[v]; }
  const std::vector<int>& cone_orders() const { return cone_orders_; }

  Scalar area() const;
  StratumSignature stratum() const;

  bool tainted() const { return tainted_; }
  long discriminant() const { return disc_; }

  // One outgoing directed edge per vertex class.
  std::vector<int> vertex_representatives() const;

  bool operator==(const TranslationSurface& o) const;

private:
  void compute_vertices();

  std::vector<Vec2> hol_;
  std::vector<int> opp_;
  std::vector<int> vertex_of_edge_;
  std::vector<int> cone_orders_;
  long disc_ = 0;
  bool tainted_ = false;
};

// The operations named in the module contract.

TranslationSurface build_surface(const std::vector<Vec2>& edge_holonomy,
                                 const std::vector<int>& gluing);

StratumSignature stratum(const TranslationSurface& s);

// Linear action of a matrix with det > 0 on every holonomy vector. If the
// entries leave the surface's field the result is tainted (floating
// coordinates, comparisons at float_eps).
TranslationSurface apply_matrix(const Mat2& m, const TranslationSurface& s);

// diag(e^t, e^-t) followed by Delaunay renormalization.
TranslationSurface geodesic_flow(double t, const TranslationSurface& s);

// Repeated edge flips until every edge satisfies the empty-circumcircle
// condition; cocircular configurations count as Delaunay. Returns the new
// surface and the number of flips performed.
struct DelaunayResult {
  TranslationSurface surface;
  int flips = 0;
};
DelaunayResult delaunay_retriangulate(const TranslationSurface& s,
                                      int flip_budget = 0);

bool edge_is_delaunay(const TranslationSurface& s, int e);

// Translation-surface isomorphism (combinatorial bijection matching
// holonomies exactly), after Delaunay canonicalization on both sides and
// modulo the ambiguity of cocircular cells.
bool isomorphic(const TranslationSurface& a, const TranslationSurface& b);

}  // namespace flatwalk
