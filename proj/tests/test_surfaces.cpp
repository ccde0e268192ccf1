#include <doctest.h>

#include <cmath>
#include <set>

#include "cauchy/errors.hpp"
#include "cauchy/io.hpp"
#include "cauchy/lift.hpp"
#include "cauchy/surfaces.hpp"

using namespace cauchy;

namespace {

std::string data_path(const std::string& name) { return std::string(CAUCHY_TEST_DATA) + "/" + name; }

std::int64_t surface_chi(SurfaceKind kind, int r, int g = 1) {
  SurfaceSpec spec;
  spec.kind = kind;
  spec.resolution = r;
  spec.genus = g;
  return euler_characteristic(quotient(generate(spec)));
}

}  // namespace

TEST_CASE("surface chi table at several resolutions") {
  for (int r : {3, 4, 5, 6}) {
    CHECK(surface_chi(SurfaceKind::kSphereTrilune, r) == 2);
    CHECK(surface_chi(SurfaceKind::kSphereGrid, r) == 2);
    CHECK(surface_chi(SurfaceKind::kTorus, r) == 0);
    CHECK(surface_chi(SurfaceKind::kProjectivePlane, r) == 1);
    CHECK(surface_chi(SurfaceKind::kKleinBottle, r) == 0);
    CHECK(surface_chi(SurfaceKind::kGenus, r, 3) == -4);
    CHECK(surface_chi(SurfaceKind::kPinchedTorus, r) == 1);
  }
}

TEST_CASE("lhuilier formula") {
  CHECK(lhuilier_expected(0, true) == 2);
  CHECK(lhuilier_expected(1, true) == 0);
  CHECK(lhuilier_expected(3, true) == -4);
  CHECK(lhuilier_expected(1, false) == 1);
  CHECK(lhuilier_expected(2, false) == 0);
  CHECK_THROWS_AS(lhuilier_expected(0, false), Error);
  for (int g = 1; g <= 4; ++g) CHECK(surface_chi(SurfaceKind::kGenus, 3, g) == lhuilier_expected(g, true));
}

TEST_CASE("generated polygons are valid embedded discs") {
  for (SurfaceKind k : {SurfaceKind::kSphereTrilune, SurfaceKind::kSphereGrid, SurfaceKind::kTorus,
                        SurfaceKind::kProjectivePlane, SurfaceKind::kKleinBottle,
                        SurfaceKind::kGenus, SurfaceKind::kPinchedTorus}) {
    SurfaceSpec spec;
    spec.kind = k;
    spec.resolution = 3;
    spec.genus = 2;
    PlanarPolygon p = generate(spec);
    CHECK(validate_polygon(p, true).ok());
    CHECK(euler_characteristic(p.cx) == 1);
  }
  SurfaceSpec bad;
  bad.resolution = 2;
  CHECK_THROWS_AS(generate(bad), Error);
}

TEST_CASE("verify_theorem1 agrees with direct counting on every generated surface") {
  for (SurfaceKind k : {SurfaceKind::kSphereTrilune, SurfaceKind::kSphereGrid, SurfaceKind::kTorus,
                        SurfaceKind::kProjectivePlane, SurfaceKind::kKleinBottle,
                        SurfaceKind::kGenus, SurfaceKind::kPinchedTorus}) {
    for (int r : {3, 4}) {
      SurfaceSpec spec;
      spec.kind = k;
      spec.resolution = r;
      spec.genus = 2;
      PlanarPolygon p = generate(spec);
      TheoremReport rep = verify_theorem1(p);
      CHECK(rep.ok());
      CHECK(rep.chi_complex == euler_characteristic(quotient(p)));
    }
  }
}

TEST_CASE("platonic goldens validate and verify Euler's formula") {
  struct Golden {
    const char* file;
    int n0, n1, n2;
  };
  const Golden goldens[] = {
      {"tetrahedron.poly", 4, 6, 4},   {"cube.poly", 8, 12, 6},
      {"octahedron.poly", 6, 12, 8},   {"icosahedron.poly", 12, 30, 20},
      {"dodecahedron.poly", 20, 30, 12},
  };
  for (const auto& g : goldens) {
    CAPTURE(g.file);
    ConvexPolyhedron poly = read_polyhedron_file(data_path(g.file));
    ValidationReport rep = validate_polyhedron(poly);
    CHECK(rep.ok());
    if (!rep.ok()) MESSAGE(rep.str());
    CHECK(static_cast<int>(poly.vertices.size()) == g.n0);
    std::set<std::pair<int, int>> edges;
    for (const auto& f : poly.faces)
      for (size_t i = 0; i < f.size(); ++i)
        edges.insert({std::min(f[i], f[(i + 1) % f.size()]),
                      std::max(f[i], f[(i + 1) % f.size()])});
    CHECK(static_cast<int>(edges.size()) == g.n1);
    CHECK(static_cast<int>(poly.faces.size()) == g.n2);
    CHECK(g.n0 - g.n1 + g.n2 == 2);
  }
}

TEST_CASE("descartes angle sums") {
  ConvexPolyhedron tet = read_polyhedron_file(data_path("tetrahedron.poly"));
  DescartesReport rt = descartes_check(tet, 1e-9);
  CHECK(rt.ok());
  CHECK(std::abs(rt.angle_sum - 4 * M_PI) < 1e-9);

  ConvexPolyhedron cube = read_polyhedron_file(data_path("cube.poly"));
  DescartesReport rc = descartes_check(cube, 1e-9);
  CHECK(rc.ok());
  CHECK(std::abs(rc.angle_sum - 12 * M_PI) < 1e-9);
  CHECK(rc.face_degree_sum == 24);
  CHECK(rc.edge_count == 12);
}

TEST_CASE("schlegel projection of the cube") {
  ConvexPolyhedron cube = read_polyhedron_file(data_path("cube.poly"));
  SchlegelResult res = project_schlegel(cube, 1);  // the top face
  CHECK(res.poly.cx.vertex_count() == 8);
  CHECK(res.removed_face.size() == 4);
  // 5 quadrilateral faces fan into 10 triangles; counts 8 - 17 + 10
  CHECK(counts(res.poly.cx) == CellCounts{8, 17, 10});
  CHECK(euler_characteristic(res.poly.cx) == 1);
  CHECK(validate_polygon(res.poly, true).ok());
  CHECK(res.poly.boundary_verts.size() == 4);  // the removed face's image frames the picture

  TheoremReport rep = verify_theorem1(res.poly);
  CHECK(rep.ok());
  CHECK(rep.chi_complex + 1 == 2);  // re-counting the removed face
}

TEST_CASE("schlegel projection of the tetrahedron") {
  ConvexPolyhedron tet = read_polyhedron_file(data_path("tetrahedron.poly"));
  SchlegelResult res = project_schlegel(tet, 0);
  CHECK(counts(res.poly.cx) == CellCounts{4, 6, 3});
  CHECK(res.poly.boundary_verts.size() == 3);
  CHECK(validate_polygon(res.poly, true).ok());
}

TEST_CASE("schlegel embeds every platonic golden") {
  for (const char* f : {"tetrahedron.poly", "cube.poly", "octahedron.poly", "icosahedron.poly",
                        "dodecahedron.poly"}) {
    CAPTURE(f);
    ConvexPolyhedron poly = read_polyhedron_file(data_path(f));
    SchlegelResult res = project_schlegel(poly, 0);
    CHECK(validate_polygon(res.poly, true).ok());
    CHECK(euler_characteristic(res.poly.cx) == 1);
  }
}
