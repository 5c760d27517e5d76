#include "flatwalk/catalog.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "flatwalk/errors.hpp"

namespace flatwalk {

namespace {

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }

// a + b*sqrt(d) with rational a, b.
Scalar surd(const Rational& a, const Rational& b, long d) { return Scalar(a, b, d); }

}  // namespace

TranslationSurface surface_from_polygons(
    const std::vector<std::vector<Vec2>>& polygon_vertices,
    const std::vector<PolygonGluing>& gluings) {
  // Fan-triangulate each polygon from its vertex 0; polygon p with n_p
  // vertices contributes n_p - 2 triangles. Boundary side k of polygon p is
  // the directed edge v_k -> v_{k+1}.
  std::vector<Vec2> hol;
  std::vector<int> opp;
  std::vector<std::vector<int>> side_edge(polygon_vertices.size());

  for (size_t p = 0; p < polygon_vertices.size(); ++p) {
    const auto& vs = polygon_vertices[p];
    const int n = static_cast<int>(vs.size());
    require(n >= 3, "BadGluing", "polygon needs at least 3 vertices");
    side_edge[p].assign(n, -1);
    int first_tri_edge = static_cast<int>(hol.size());
    for (int j = 0; j + 2 < n; ++j) {
      // Triangle (v0, v_{j+1}, v_{j+2}).
      hol.push_back(vs[j + 1] - vs[0]);
      hol.push_back(vs[j + 2] - vs[j + 1]);
      hol.push_back(vs[0] - vs[j + 2]);
      opp.push_back(-1);
      opp.push_back(-1);
      opp.push_back(-1);
    }
    // Interior diagonals between consecutive fan triangles.
    for (int j = 0; j + 3 < n; ++j) {
      int c = first_tri_edge + 3 * j + 2;      // v_{j+2} -> v0
      int a = first_tri_edge + 3 * (j + 1);    // v0 -> v_{j+2}
      opp[c] = a;
      opp[a] = c;
    }
    side_edge[p][0] = first_tri_edge;
    for (int k = 1; k + 1 < n; ++k) side_edge[p][k] = first_tri_edge + 3 * (k - 1) + 1;
    side_edge[p][n - 1] = first_tri_edge + 3 * (n - 3) + 2;
  }

  for (const auto& g : gluings) {
    int ea = side_edge[g.poly_a][g.side_a];
    int eb = side_edge[g.poly_b][g.side_b];
    require(opp[ea] == -1 && opp[eb] == -1, "BadGluing", "side glued twice");
    opp[ea] = eb;
    opp[eb] = ea;
  }
  for (size_t e = 0; e < opp.size(); ++e)
    require(opp[e] >= 0, "BadGluing", "unglued side");
  return TranslationSurface(std::move(hol), std::move(opp));
}

TranslationSurface make_torus() {
  std::vector<Vec2> hol = {
      {q(1), q(0)}, {q(0), q(1)}, {q(-1), q(-1)},
      {q(-1), q(0)}, {q(0), q(-1)}, {q(1), q(1)},
  };
  std::vector<int> opp = {3, 4, 5, 0, 1, 2};
  return TranslationSurface(std::move(hol), std::move(opp));
}

TranslationSurface make_octagon() {
  // Regular octagon with unit axis-parallel sides; s = sqrt(2)/2.
  Scalar s = surd(0, Rational(1, 2), 2);
  Scalar one = q(1), zero = q(0);
  std::vector<Vec2> vs = {
      {zero, zero},          {one, zero},           {one + s, s},
      {one + s, one + s},    {one, one + s + s},    {zero, one + s + s},
      {-s, one + s},         {-s, s},
  };
  std::vector<PolygonGluing> glue;
  for (int k = 0; k < 4; ++k) glue.push_back({0, k, 0, k + 4});
  return surface_from_polygons({vs}, glue);
}

TranslationSurface make_golden_l() {
  // L-shaped polygon [0,phi]x[0,1] union [0,1]x[0,phi]; phi = (1+sqrt5)/2.
  // The fan triangulation degenerates on the collinear boundary, so the six
  // triangles are listed explicitly.
  Scalar phi = surd(Rational(1, 2), Rational(1, 2), 5);
  Scalar one = q(1), zero = q(0);
  Scalar pm1 = phi - one;  // phi - 1 = 1/phi

  // Triangles (ccw): see the vertex labels V0..V7 around the L.
  std::vector<Vec2> hol = {
      // T0 (V0,V1,V4)
      {one, zero}, {zero, one}, {-one, -one},
      // T1 (V0,V4,V7)
      {one, one}, {-one, zero}, {zero, -one},
      // T2 (V1,V2,V3)
      {pm1, zero}, {zero, one}, {one - phi, -one},
      // T3 (V1,V3,V4)
      {pm1, one}, {one - phi, zero}, {zero, -one},
      // T4 (V7,V4,V5)
      {one, zero}, {zero, pm1}, {-one, one - phi},
      // T5 (V7,V5,V6)
      {one, pm1}, {-one, zero}, {zero, one - phi},
  };
  std::vector<int> opp(18, -1);
  auto glue = [&](int a, int b) { opp[a] = b; opp[b] = a; };
  glue(0, 16);   // bottom <-> top
  glue(1, 11);   // interior x=1, y in [0,1]
  glue(2, 3);    // diagonal of the unit square
  glue(4, 12);   // interior y=1, x in [0,1]
  glue(5, 7);    // left lower <-> right side of the long leg
  glue(6, 10);   // bottom of long leg <-> its ceiling
  glue(8, 9);    // diagonal of the long leg rectangle
  glue(13, 17);  // right of tall leg <-> left upper
  glue(14, 15);  // diagonal of the tall leg rectangle
  return TranslationSurface(std::move(hol), std::move(opp));
}

TranslationSurface make_double_pentagon() {
  // Regular pentagon rescaled vertically by 1/sin(72deg) so all vertex
  // coordinates lie in Q(sqrt5), glued to its point reflection along the
  // five parallel side pairs.
  Scalar c72 = surd(Rational(-1, 4), Rational(1, 4), 5);   // cos 72
  Scalar c144 = surd(Rational(-1, 4), Rational(-1, 4), 5); // cos 144
  Scalar s72 = q(1);                                        // sin 72 (rescaled)
  Scalar s144 = surd(Rational(-1, 2), Rational(1, 2), 5);  // sin 144 / sin 72
  std::vector<Vec2> a = {
      {q(1), q(0)}, {c72, s72}, {c144, s144}, {c144, -s144}, {c72, -s72},
  };
  std::vector<Vec2> b;
  for (const Vec2& v : a) b.push_back(-v);
  std::vector<PolygonGluing> glue;
  for (int k = 0; k < 5; ++k) glue.push_back({0, k, 1, k});
  return surface_from_polygons({a, b}, glue);
}

std::string surface_to_text(const TranslationSurface& s, const std::string& name) {
  std::ostringstream os;
  if (!name.empty()) os << "# " << name << "\n";
  os << "discriminant " << s.discriminant() << "\n";
  for (int t = 0; t < s.num_triangles(); ++t)
    os << "triangle " << t << ": " << 3 * t << " " << 3 * t + 1 << " " << 3 * t + 2
       << "\n";
  for (int e = 0; e < s.num_edges(); ++e) {
    const Vec2& v = s.hol(e);
    require(v.x.exact() && v.y.exact(), "TaintedSerialization",
            "cannot serialize tainted surface");
    os << "edge " << e << ": " << rational_str(v.x.rat()) << " "
       << rational_str(v.x.surd()) << " " << rational_str(v.y.rat()) << " "
       << rational_str(v.y.surd()) << "\n";
  }
  for (int e = 0; e < s.num_edges(); ++e)
    if (e < s.opp(e)) os << "glue " << e << " " << s.opp(e) << "\n";
  return os.str();
}

TranslationSurface surface_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long disc = 0;
  bool saw_disc = false;
  std::vector<std::array<int, 3>> triangles;
  std::map<int, Vec2> edges;
  std::vector<std::pair<int, int>> glues;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "discriminant") {
      require(static_cast<bool>(ls >> disc), "BadCatalogFile",
              "bad discriminant line");
      saw_disc = true;
    } else if (kw == "triangle") {
      std::string idx;
      ls >> idx;  // "i:" — index is positional, ids follow
      int a, b, c;
      require(static_cast<bool>(ls >> a >> b >> c), "BadCatalogFile",
              "bad triangle line");
      triangles.push_back({a, b, c});
    } else if (kw == "edge") {
      std::string idx;
      ls >> idx;
      require(!idx.empty() && idx.back() == ':', "BadCatalogFile", "bad edge line");
      int e = std::stoi(idx.substr(0, idx.size() - 1));
      std::string xr, xs, yr, ys;
      require(static_cast<bool>(ls >> xr >> xs >> yr >> ys), "BadCatalogFile",
              "bad edge line");
      Vec2 v(Scalar(rational_from_str(xr), rational_from_str(xs), disc),
             Scalar(rational_from_str(yr), rational_from_str(ys), disc));
      edges[e] = v;
    } else if (kw == "glue") {
      int a, b;
      require(static_cast<bool>(ls >> a >> b), "BadCatalogFile", "bad glue line");
      glues.push_back({a, b});
    } else {
      fail("BadCatalogFile", "unknown keyword '" + kw + "'");
    }
  }
  require(saw_disc, "BadCatalogFile", "missing discriminant header");
  require(!triangles.empty(), "BadCatalogFile", "no triangles");

  // Map file edge ids to slots in triangle listing order.
  std::map<int, int> slot;
  std::vector<Vec2> hol;
  for (const auto& t : triangles) {
    for (int id : t) {
      require(!slot.count(id), "BadCatalogFile",
              "edge " + std::to_string(id) + " appears in two triangles");
      require(edges.count(id), "BadCatalogFile",
              "edge " + std::to_string(id) + " has no holonomy line");
      slot[id] = static_cast<int>(hol.size());
      hol.push_back(edges[id]);
    }
  }
  require(slot.size() == edges.size(), "BadCatalogFile", "orphan edge lines");
  std::vector<int> opp(hol.size(), -1);
  for (auto [a, b] : glues) {
    require(slot.count(a) && slot.count(b), "BadCatalogFile", "glue of unknown edge");
    int ea = slot[a], eb = slot[b];
    require(opp[ea] == -1 && opp[eb] == -1, "BadCatalogFile", "edge glued twice");
    opp[ea] = eb;
    opp[eb] = ea;
  }
  return TranslationSurface(std::move(hol), std::move(opp));
}

TranslationSurface load_surface_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "BadCatalogFile", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return surface_from_text(buf.str());
  } catch (const Error& e) {
    fail(e.code(), std::string(e.what()) + " [" + path + "]");
  }
}

void write_surface_file(const TranslationSurface& s, const std::string& path,
                        const std::string& name) {
  std::ofstream out(path);
  require(out.good(), "BadCatalogFile", "cannot write '" + path + "'");
  out << surface_to_text(s, name);
}

std::vector<std::string> catalog_names() {
  return {"torus", "octagon", "golden_L", "double_pentagon"};
}

namespace {

TranslationSurface builtin(const std::string& name) {
  if (name == "torus") return make_torus();
  if (name == "octagon") return make_octagon();
  if (name == "golden_L") return make_golden_l();
  if (name == "double_pentagon") return make_double_pentagon();
  fail("UnknownSurface", "no catalog surface '" + name + "'");
}

}  // namespace

TranslationSurface catalog_surface(const std::string& name_or_path) {
  namespace fs = std::filesystem;
  if (fs::exists(name_or_path)) return load_surface_file(name_or_path);
  std::string name = name_or_path;
  if (name.size() > 5 && name.substr(name.size() - 5) == ".surf")
    name = name.substr(0, name.size() - 5);
  if (const char* dir = std::getenv("FLATWALK_CATALOG")) {
    fs::path p = fs::path(dir) / (name + ".surf");
    if (fs::exists(p)) return load_surface_file(p.string());
  }
  fs::path local = fs::path("catalog") / (name + ".surf");
  if (fs::exists(local)) return load_surface_file(local.string());
  return builtin(name);
}

std::string content_hash(const std::string& text) {
  // FNV-1a, 64 bit; stable across platforms for metadata echoing.
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace flatwalk
