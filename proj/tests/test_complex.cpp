#include <doctest.h>

#include "cauchy/complex.hpp"
#include "support/rng.hpp"

using namespace cauchy;

namespace {

Complex tetrahedron_boundary() {
  Complex c;
  c.add_vertices(4);
  c.add_triangle(0, 1, 2);
  c.add_triangle(0, 1, 3);
  c.add_triangle(0, 2, 3);
  c.add_triangle(1, 2, 3);
  return c;
}

Complex torus_grid3() {
  // 3x3 grid with opposite sides identified, built directly on vertex classes
  Complex c;
  c.add_vertices(9);
  auto vid = [](int i, int j) { return (j % 3) * 3 + (i % 3); };
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      c.add_triangle(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1));
      c.add_triangle(vid(i, j), vid(i + 1, j + 1), vid(i, j + 1));
    }
  return c;
}

Complex random_small_complex(testsupport::Rng& rng) {
  Complex c;
  int n = rng.range(3, 9);
  c.add_vertices(n);
  int t = rng.range(1, 7);
  for (int k = 0; k < t; ++k) {
    int a = rng.range(0, n - 1), b = rng.range(0, n - 1), d = rng.range(0, n - 1);
    if (a == b || b == d || a == d) continue;
    c.add_triangle(a, b, d);
  }
  return c;
}

}  // namespace

TEST_CASE("counts on small complexes") {
  Complex empty;
  CHECK(counts(empty) == CellCounts{0, 0, 0});
  CHECK(euler_characteristic(empty) == 0);

  Complex one;
  one.add_vertices(3);
  one.add_triangle(0, 1, 2);
  CHECK(counts(one) == CellCounts{3, 3, 1});
  CHECK(euler_characteristic(one) == 1);

  Complex tet = tetrahedron_boundary();
  CHECK(counts(tet) == CellCounts{4, 6, 4});
  CHECK(euler_characteristic(tet) == 2);
}

TEST_CASE("torus grid quotient counts") {
  Complex t = torus_grid3();
  CHECK(counts(t) == CellCounts{9, 27, 18});
  CHECK(euler_characteristic(t) == 0);
}

TEST_CASE("validate closed and boundary cases") {
  Complex tet = tetrahedron_boundary();
  CHECK(validate(tet, true).ok());

  Complex one;
  one.add_vertices(3);
  one.add_triangle(0, 1, 2);
  CHECK(validate(one, false).ok());
  CHECK_FALSE(validate(one, true).ok());  // a disc has boundary edges

  // two triangles glued along two edges plus a third across one of them
  Complex bad;
  bad.add_vertices(5);
  bad.add_triangle(0, 1, 2);
  bad.add_triangle(0, 1, 3);
  bad.add_triangle(0, 1, 4);
  auto rep = validate(bad, false);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.violations) found = found || v.find("3 triangles") != std::string::npos;
  CHECK(found);
}

TEST_CASE("boundary edges of small complexes") {
  Complex one;
  one.add_vertices(3);
  one.add_triangle(0, 1, 2);
  CHECK(boundary_edges(one).size() == 3);

  CHECK(boundary_edges(tetrahedron_boundary()).empty());

  Complex square;
  square.add_vertices(4);
  square.add_triangle(0, 1, 2);
  square.add_triangle(0, 2, 3);
  auto bes = boundary_edges(square);
  CHECK(bes.size() == 4);
  auto diag = square.find_edge(0, 2);
  REQUIRE(diag.has_value());
  for (EdgeId e : bes) CHECK(e != *diag);
}

TEST_CASE("chi additive under disjoint union") {
  testsupport::Rng rng(20260810);
  for (int it = 0; it < 200; ++it) {
    Complex a = random_small_complex(rng);
    Complex b = random_small_complex(rng);
    Complex u = disjoint_union(a, b);
    CHECK(euler_characteristic(u) == euler_characteristic(a) + euler_characteristic(b));
    CHECK(counts(u).n0 == counts(a).n0 + counts(b).n0);
    CHECK(counts(u).n1 == counts(a).n1 + counts(b).n1);
    CHECK(counts(u).n2 == counts(a).n2 + counts(b).n2);
  }
}

TEST_CASE("counts equal re-enumerated set sizes") {
  testsupport::Rng rng(42);
  for (int it = 0; it < 100; ++it) {
    Complex c = random_small_complex(rng);
    CellCounts cc = counts(c);
    CHECK(cc.n0 == c.vertex_count());
    CHECK(cc.n1 == c.edge_count());
    CHECK(cc.n2 == c.triangle_count());
  }
}
