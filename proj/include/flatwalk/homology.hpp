#pragma once

#include <vector>

#include "flatwalk/surface.hpp"

namespace flatwalk {

// Integer vector in the fixed basis of H_1(X, Z(omega); Z); dimension
// h = 2g + k - 1.
using RelHomologyClass = std::vector<Integer>;

RelHomologyClass hclass_add(const RelHomologyClass& a, const RelHomologyClass& b);
RelHomologyClass hclass_sub(const RelHomologyClass& a, const RelHomologyClass& b);
RelHomologyClass hclass_neg(const RelHomologyClass& a);
bool hclass_is_zero(const RelHomologyClass& a);
std::string hclass_str(const RelHomologyClass& a);

// Relative homology of a surface with respect to its triangulation.
//
// The basis consists of h directed edges: contracting a spanning tree of the
// dual graph turns the surface into a single polygon whose boundary pairs up
// the h non-tree edges; those classes are free generators. Every directed
// edge carries integer coordinates in this basis (glued edges get opposite
// classes), and the polygon boundary word yields the intersection pairing of
// the basis classes.
class Homology {
public:
  explicit Homology(const TranslationSurface& s);

  const TranslationSurface& surface() const { return *surface_; }
  int dim() const { return static_cast<int>(basis_edges_.size()); }
  const std::vector<int>& basis_edges() const { return basis_edges_; }
  const RelHomologyClass& edge_class(int directed_edge) const {
    return edge_class_[directed_edge];
  }
  // Boundary word of the contracted polygon (directed non-tree edges, ccw).
  const std::vector<int>& polygon_word() const { return polygon_word_; }

  // Intersection pairing of two classes (antisymmetric, integer). For
  // surfaces whose triangulation vertices form a single cone point every
  // relative class is absolute and this is the standard symplectic pairing;
  // in general it is the bilinear extension from basis letters.
  Integer pair(const RelHomologyClass& a, const RelHomologyClass& b) const;
  const std::vector<std::vector<Integer>>& pairing_matrix() const {
    return pairing_;
  }

  // Class of the sum of directed edges along the triangle path from vertex
  // corner i to corner j of triangle t (one edge or one reversed edge).
  RelHomologyClass corner_path_class(int t, int corner_from, int corner_to) const;

private:
  const TranslationSurface* surface_;
  std::vector<int> basis_edges_;
  std::vector<RelHomologyClass> edge_class_;
  std::vector<int> polygon_word_;
  std::vector<std::vector<Integer>> pairing_;
};

// The operation from the module contract: ordered list of h directed edges
// whose classes form a Z-basis. Throws RankDeficiency on internal
// inconsistency.
std::vector<int> homology_basis(const TranslationSurface& s);

}  // namespace flatwalk
