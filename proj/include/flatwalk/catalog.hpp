#pragma once

#include <string>
#include <vector>

#include "flatwalk/surface.hpp"

namespace flatwalk {

// Catalog surfaces. All four live in Q(sqrt(d)) with d in {0, 2, 5}; the
// double pentagon uses the vertical normalization that puts the regular
// pentagon's vertex coordinates in Q(sqrt(5)).
TranslationSurface make_torus();            // unit square, one marked point
TranslationSurface make_octagon();          // regular octagon, opposite sides
TranslationSurface make_golden_l();         // golden L, legs 1 x phi
TranslationSurface make_double_pentagon();  // two pentagons, parallel sides

// Line-oriented catalog file format:
//   discriminant d
//   triangle i: e_a e_b e_c
//   edge e: x_rat x_surd y_rat y_surd
//   glue e f
// Rationals are p/q in lowest terms; '#' starts a comment line.
std::string surface_to_text(const TranslationSurface& s, const std::string& name);
TranslationSurface surface_from_text(const std::string& text);
TranslationSurface load_surface_file(const std::string& path);
void write_surface_file(const TranslationSurface& s, const std::string& path,
                        const std::string& name);

// Resolve a surface argument: a path to a .surf file, or a catalog name
// ("torus", "octagon", "golden_L", "double_pentagon", with or without the
// .surf suffix). Catalog files are searched in FLATWALK_CATALOG, falling
// back to the built-in constructions.
TranslationSurface catalog_surface(const std::string& name_or_path);
std::vector<std::string> catalog_names();

// Stable content hash for output metadata blocks.
std::string content_hash(const std::string& text);

// Helper shared by the constructions: polygons (vertex loops, ccw, fanned
// from their first vertex) plus side gluings (polygon index, side index).
struct PolygonGluing {
  int poly_a, side_a, poly_b, side_b;
};
TranslationSurface surface_from_polygons(
    const std::vector<std::vector<Vec2>>& polygon_vertices,
    const std::vector<PolygonGluing>& gluings);

}  // namespace flatwalk
