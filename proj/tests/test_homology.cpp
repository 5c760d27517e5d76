#include <vector>

#include "doctest.h"
#include "flatwalk/catalog.hpp"
#include "flatwalk/homology.hpp"

using namespace flatwalk;

namespace {

// Independent oracle: rank of the triangle-boundary relation lattice by
// fraction-free integer row reduction, giving dim H_1(X,Z;Z) = E - rank.
int quotient_rank_oracle(const TranslationSurface& s) {
  const int E2 = s.num_edges();
  // One column per directed edge representative (e < opp(e)); a directed
  // edge contributes +-1 depending on orientation.
  std::vector<int> col(E2, -1);
  int ncols = 0;
  for (int e = 0; e < E2; ++e)
    if (e < s.opp(e)) col[e] = ncols++;
  std::vector<std::vector<Integer>> m;
  for (int t = 0; t < s.num_triangles(); ++t) {
    std::vector<Integer> row(ncols, Integer(0));
    for (int k = 0; k < 3; ++k) {
      int e = 3 * t + k;
      if (col[e] >= 0)
        row[col[e]] += 1;
      else
        row[col[s.opp(e)]] -= 1;
    }
    m.push_back(std::move(row));
  }
  int rank = 0;
  for (int c = 0; c < ncols && rank < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Integer a = m[rank][c], b = m[r][c];
      for (int cc = 0; cc < ncols; ++cc) m[r][cc] = m[r][cc] * a - m[rank][cc] * b;
    }
    ++rank;
  }
  return ncols - rank;
}

}  // namespace

TEST_CASE("homology basis has rank h on the catalog surfaces") {
  for (const auto& name : catalog_names()) {
    TranslationSurface s = catalog_surface(name);
    Homology h(s);
    CHECK(h.dim() == s.stratum().rel_homology_dim);
    CHECK(h.dim() == quotient_rank_oracle(s));
    CHECK(static_cast<int>(homology_basis(s).size()) == h.dim());
  }
}

TEST_CASE("edge classes satisfy the holonomy identity exactly") {
  for (const auto& name : catalog_names()) {
    TranslationSurface s = catalog_surface(name);
    Homology h(s);
    for (int e = 0; e < s.num_edges(); ++e) {
      Vec2 sum(Scalar(0), Scalar(0));
      const RelHomologyClass& c = h.edge_class(e);
      for (int i = 0; i < h.dim(); ++i) {
        long coef = c[i].get_si();
        for (long k = 0; k < std::abs(coef); ++k)
          sum += coef > 0 ? s.hol(h.basis_edges()[i]) : -s.hol(h.basis_edges()[i]);
      }
      CHECK(sum == s.hol(e));
      // Glued edges carry opposite classes.
      CHECK(h.edge_class(s.opp(e)) == hclass_neg(c));
    }
  }
}

TEST_CASE("triangle boundary classes vanish") {
  TranslationSurface s = catalog_surface("golden_L");
  Homology h(s);
  for (int t = 0; t < s.num_triangles(); ++t) {
    RelHomologyClass sum(h.dim(), Integer(0));
    for (int k = 0; k < 3; ++k) sum = hclass_add(sum, h.edge_class(3 * t + k));
    CHECK(hclass_is_zero(sum));
  }
}

TEST_CASE("pairing: antisymmetry and self-annihilation") {
  for (const auto& name : catalog_names()) {
    Homology h(catalog_surface(name));
    const auto& m = h.pairing_matrix();
    for (int i = 0; i < h.dim(); ++i)
      for (int j = 0; j < h.dim(); ++j) CHECK(m[i][j] == -m[j][i]);
  }
}

TEST_CASE("torus pairing is the standard symplectic form") {
  TranslationSurface s = make_torus();
  Homology h(s);
  REQUIRE(h.dim() == 2);
  Integer p = h.pairing_matrix()[0][1];
  CHECK((p == 1 || p == -1));
  // Pairing of (p,q) and (r,s) curves is ps - qr up to the global sign.
  RelHomologyClass a{Integer(2), Integer(1)}, b{Integer(1), Integer(1)};
  CHECK(abs(h.pair(a, b)) == 1);
  RelHomologyClass c{Integer(3), Integer(1)}, d{Integer(1), Integer(2)};
  CHECK(abs(h.pair(c, d)) == 5);
  CHECK(h.pair(c, c) == 0);
}

TEST_CASE("octagon pairing matrix is unimodular (symplectic)") {
  // k = 1, so every relative class is absolute and the form on the 4 basis
  // classes must have determinant 1.
  Homology h(catalog_surface("octagon"));
  REQUIRE(h.dim() == 4);
  const auto& m = h.pairing_matrix();
  // Determinant of the 4x4 integer matrix by cofactor expansion.
  auto det3 = [&](int r[3], int c[3]) -> Integer {
    Integer d = m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]]);
    d -= m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]]);
    d += m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]]);
    return d;
  };
  Integer det(0);
  int rows[3] = {1, 2, 3};
  int sign = 1;
  for (int c0 = 0; c0 < 4; ++c0) {
    int cols[3];
    int k = 0;
    for (int c = 0; c < 4; ++c)
      if (c != c0) cols[k++] = c;
    det += sign * m[0][c0] * det3(rows, cols);
    sign = -sign;
  }
  CHECK(abs(det) == 1);
}

TEST_CASE("polygon word uses every basis letter twice") {
  for (const auto& name : catalog_names()) {
    TranslationSurface s = catalog_surface(name);
    Homology h(s);
    CHECK(static_cast<int>(h.polygon_word().size()) == 2 * h.dim());
    for (int b : h.basis_edges()) {
      int plus = 0, minus = 0;
      for (int w : h.polygon_word()) {
        if (w == b) ++plus;
        if (w == s.opp(b)) ++minus;
      }
      CHECK(plus == 1);
      CHECK(minus == 1);
    }
  }
}
