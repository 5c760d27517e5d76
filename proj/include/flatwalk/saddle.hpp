#pragma once

#include <optional>
#include <vector>

#include "flatwalk/homology.hpp"
#include "flatwalk/surface.hpp"

namespace flatwalk {

// Oriented singularity-to-singularity geodesic segment.
struct SaddleConnection {
  int start_vertex = -1;       // cone point classes
  int end_vertex = -1;
  int start_corner_edge = -1;  // corner emitting the segment (germ)
  Vec2 holonomy;
  RelHomologyClass homology;

  double length() const { return holonomy.length(); }
  Scalar length2() const { return holonomy.norm2(); }
};

struct EnumOptions {
  int max_placements = 2'000'000;  // unfolded-triangle cap (BudgetExceeded)
  bool with_homology = true;
};

// Every saddle connection of flat length <= L, once per oriented segment,
// sorted by length then angle. Segments are found by unfolding triangle
// wedges around each cone point; duplicates are suppressed on the
// (start cone, holonomy) key.
std::vector<SaddleConnection> enumerate_saddle_connections(
    const TranslationSurface& s, const Scalar& length_bound,
    const EnumOptions& opt = {});

struct GrowthRow {
  double length;
  long count;
  double count_over_l2;
};

// Counts at geometrically spaced checkpoints, with the count/L^2 quadratic
// growth diagnostic.
std::vector<GrowthRow> saddle_growth_census(const TranslationSurface& s,
                                            const Scalar& l_max, int steps);

struct ShortSaddleReport {
  std::vector<SaddleConnection> connections;
  std::vector<double> estimates;  // flat extremal-length estimate per entry
  int j_rank = 0;                 // homologically independent members
};

// Connections whose extremal-length estimate (flat length^2 / area) is at
// most eps, together with boundary connections of cylinders whose core
// estimate is at most eps. j is the integer rank of their classes.
ShortSaddleReport short_saddles(const TranslationSurface& s, double eps);

// Rank of a set of integer class vectors.
int hclass_rank(std::vector<RelHomologyClass> vectors);

}  // namespace flatwalk
