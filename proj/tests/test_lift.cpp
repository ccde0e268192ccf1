#include <doctest.h>

#include "cauchy/errors.hpp"
#include "cauchy/hole.hpp"
#include "cauchy/io.hpp"
#include "cauchy/lift.hpp"
#include "cauchy/surfaces.hpp"
#include "support/oracle.hpp"
#include "support/polygen.hpp"

using namespace cauchy;

namespace {

std::string data_path(const std::string& name) { return std::string(CAUCHY_TEST_DATA) + "/" + name; }

PlanarPolygon fig8() { return read_complex_file(data_path("fig8.cplx")); }

Vec2 fig8_origin() { return Vec2(Rat(3, 5), Rat(7, 5)); }  // the marked origin, scaled by 2

}  // namespace

TEST_CASE("pick_base on the figure polygon") {
  PlanarPolygon p = fig8();
  CHECK(pick_base(p, fig8_origin()) == 0);  // the (a1,a2,a3) triangle is listed first

  // a point on an edge is rejected
  CHECK_THROWS_AS(pick_base(p, Vec2(Rat(-1), Rat(2))), Error);  // midpoint of a1-a2
  // a point in a triangle with a boundary edge is rejected
  CHECK_THROWS_AS(pick_base(p, Vec2(Rat(0), Rat(7))), Error);
}

TEST_CASE("order_vertices on the figure polygon") {
  PlanarPolygon p = fig8();
  HeightAssignment h = order_vertices(p, 0, LiftMetric::kEuclidean, fig8_origin());
  CHECK(h.interior_count == 2);
  CHECK(h.level[0] == 0);
  CHECK(h.level[1] == 0);
  CHECK(h.level[2] == 0);
  CHECK(h.level[3] == 1);  // y1 nearest to the origin
  CHECK(h.level[4] == 2);  // y2
  for (VertexId v = 5; v <= 10; ++v) CHECK(h.level[v] == 3);

  HeightAssignment hb = order_vertices(p, 0, LiftMetric::kEdgePath);
  CHECK(hb.interior_count == 2);
  CHECK(hb.level[3] == 1);
  CHECK(hb.level[4] == 2);
}

TEST_CASE("subdivide_levels on the figure polygon matches the crossing counts") {
  PlanarPolygon p = fig8();
  HeightAssignment h = order_vertices(p, 0, LiftMetric::kEuclidean, fig8_origin());
  SubdividedPolygon kpp = subdivide_levels(p, h);
  CHECK(counts(kpp.poly.cx) == CellCounts{28, 75, 48});
  CHECK(euler_characteristic(kpp.poly.cx) == 1);

  auto curves = level_curves(kpp);
  REQUIRE(curves.size() == 4);
  CHECK(curves[0].verts.size() == 3);
  CHECK(curves[1].verts.size() == 9);   // red curve through y1
  CHECK(curves[2].verts.size() == 10);  // blue curve through y2
  CHECK(curves[3].verts.size() == 6);   // the polygon boundary
  CHECK(validate_polygon(kpp.poly, true).ok());
}

TEST_CASE("subdivide_levels of a single split triangle") {
  // one triangle with corner levels (0,2,2) inside a small disc: two new
  // vertices at level 1, one quadrilateral split
  PlanarPolygon p;
  p.cx.add_vertices(3);
  p.has_coords = true;
  p.coords = {Vec2(Rat(0), Rat(0)), Vec2(Rat(4), Rat(0)), Vec2(Rat(0), Rat(4))};
  p.cx.add_triangle(0, 1, 2);
  rebuild_boundary(p);
  HeightAssignment h;
  h.base = -1;
  h.interior_count = 1;
  h.level = {0, 2, 2};
  SubdividedPolygon kpp = subdivide_levels(p, h);
  CellCounts before = counts(p.cx);
  CellCounts after = counts(kpp.poly.cx);
  CHECK(after.n0 - before.n0 == 2);
  CHECK(after.n1 - before.n1 == 4);
  CHECK(after.n2 - before.n2 == 2);
  CHECK(after.chi() == before.chi());
  int level1 = 0;
  for (int l : kpp.level)
    if (l == 1) ++level1;
  CHECK(level1 == 2);
}

TEST_CASE("region count oracle agrees with the subdivision on random level triples") {
  testsupport::Rng rng(5150);
  for (int it = 0; it < 60; ++it) {
    int la = 0;
    int lb = rng.range(0, 4);
    int lc = rng.range(lb, 5);
    PlanarPolygon p;
    p.cx.add_vertices(3);
    p.has_coords = true;
    p.coords = {Vec2(Rat(0), Rat(0)), Vec2(Rat(7), Rat(1)), Vec2(Rat(2), Rat(9))};
    p.cx.add_triangle(0, 1, 2);
    rebuild_boundary(p);
    HeightAssignment h;
    h.interior_count = 5;
    h.level = {la, lb, lc};
    SubdividedPolygon kpp = subdivide_levels(p, h);
    CHECK(counts(kpp.poly.cx).n2 == testsupport::region_triangle_count(la, lb, lc));
    CHECK(euler_characteristic(kpp.poly.cx) == 1);
  }
}

TEST_CASE("full pipeline on the figure polygon") {
  PlanarPolygon p = fig8();
  LiftPipeline pl = run_pipeline(p, fig8_origin());
  RemovalTrace t = replay(pl.kpp.poly.cx, pl.schedule.seed, pl.schedule.order(), Mode::kStrict,
                          false);
  CHECK(t.success);
  // every step keeps the rim a simple cycle
  for (const auto& s : t.steps) CHECK(s.simple_after);

  TheoremReport rep = verify_theorem1(p, fig8_origin());
  CHECK(rep.schedule_ok);
  CHECK(rep.chi_complex == 1);
  CHECK(rep.chi_boundary == 0);
  CHECK(rep.chi_by_schedule == 1);
  CHECK(rep.ok());
}

TEST_CASE("clockwise walk also replays strictly") {
  PlanarPolygon p = fig8();
  LiftPipeline pl = run_pipeline(p, fig8_origin(), LiftMetric::kEuclidean, true);
  RemovalTrace t =
      replay(pl.kpp.poly.cx, pl.schedule.seed, pl.schedule.order(), Mode::kStrict, false);
  CHECK(t.success);
}

TEST_CASE("single-band fan closes with two operation II moves") {
  // hexagon fan around an inner triangle: one band from sigma0 to the boundary
  PlanarPolygon p;
  p.cx.add_vertices(6 + 3);
  p.has_coords = true;
  p.coords.resize(9);
  // inner triangle
  p.coords[0] = Vec2(Rat(-1), Rat(0));
  p.coords[1] = Vec2(Rat(1), Rat(0));
  p.coords[2] = Vec2(Rat(0), Rat(2));
  // outer hexagon
  p.coords[3] = Vec2(Rat(-4), Rat(-2));
  p.coords[4] = Vec2(Rat(0), Rat(-3));
  p.coords[5] = Vec2(Rat(4), Rat(-2));
  p.coords[6] = Vec2(Rat(5), Rat(2));
  p.coords[7] = Vec2(Rat(0), Rat(6));
  p.coords[8] = Vec2(Rat(-5), Rat(2));
  p.cx.add_triangle(0, 1, 2);
  p.cx.add_triangle(3, 4, 0);
  p.cx.add_triangle(4, 1, 0);
  p.cx.add_triangle(4, 5, 1);
  p.cx.add_triangle(5, 6, 1);
  p.cx.add_triangle(6, 2, 1);
  p.cx.add_triangle(6, 7, 2);
  p.cx.add_triangle(7, 8, 2);
  p.cx.add_triangle(8, 0, 2);
  p.cx.add_triangle(8, 3, 0);
  rebuild_boundary(p);
  REQUIRE(validate_polygon(p, true).ok());

  LiftPipeline pl = run_pipeline(p);
  REQUIRE(pl.schedule.entries.size() == 9);
  CHECK(pl.schedule.entries.front().kind == OpKind::kI);
  size_t n = pl.schedule.entries.size();
  CHECK(pl.schedule.entries[n - 1].kind == OpKind::kII);
  RemovalTrace t =
      replay(pl.kpp.poly.cx, pl.schedule.seed, pl.schedule.order(), Mode::kStrict, false);
  CHECK(t.success);
  for (const auto& s : t.steps) CHECK(s.simple_after);
}

TEST_CASE("alternating band closes with two operation II moves") {
  // triangle inside a triangle: the single band alternates up/down strictly
  PlanarPolygon p;
  p.cx.add_vertices(6);
  p.has_coords = true;
  p.coords.resize(6);
  p.coords[0] = Vec2(Rat(-1), Rat(0));
  p.coords[1] = Vec2(Rat(1), Rat(0));
  p.coords[2] = Vec2(Rat(0), Rat(2));
  p.coords[3] = Vec2(Rat(-6), Rat(-3));
  p.coords[4] = Vec2(Rat(6), Rat(-3));
  p.coords[5] = Vec2(Rat(0), Rat(8));
  p.cx.add_triangle(0, 1, 2);
  p.cx.add_triangle(3, 4, 0);
  p.cx.add_triangle(4, 1, 0);
  p.cx.add_triangle(4, 5, 1);
  p.cx.add_triangle(5, 2, 1);
  p.cx.add_triangle(5, 3, 2);
  p.cx.add_triangle(3, 0, 2);
  rebuild_boundary(p);
  REQUIRE(validate_polygon(p, true).ok());

  LiftPipeline pl = run_pipeline(p);
  REQUIRE(pl.schedule.entries.size() == 6);
  size_t n = pl.schedule.entries.size();
  CHECK(pl.schedule.entries.front().kind == OpKind::kI);
  CHECK(pl.schedule.entries[n - 1].kind == OpKind::kII);
  CHECK(pl.schedule.entries[n - 2].kind == OpKind::kII);
  RemovalTrace t =
      replay(pl.kpp.poly.cx, pl.schedule.seed, pl.schedule.order(), Mode::kStrict, false);
  CHECK(t.success);
  for (const auto& s : t.steps) CHECK(s.simple_after);

  // Remark-4 variant closing: swap the last two, ending I then III
  auto order = pl.schedule.order();
  std::swap(order[n - 1], order[n - 2]);
  RemovalTrace t2 = replay(pl.kpp.poly.cx, pl.schedule.seed, order, Mode::kLenient, true);
  CHECK(t2.success);
  CHECK(t2.steps[n - 2].kind == OpKind::kI);
  CHECK(t2.steps[n - 1].kind == OpKind::kIII);
}

TEST_CASE("euclidean tie-break both ways yields valid schedules") {
  // symmetric polygon: two interior vertices equidistant from the base point
  PlanarPolygon p;
  p.cx.add_vertices(4 + 2 + 3);
  p.has_coords = true;
  p.coords.resize(9);
  p.coords[0] = Vec2(Rat(-8), Rat(0));
  p.coords[1] = Vec2(Rat(0), Rat(-8));
  p.coords[2] = Vec2(Rat(8), Rat(0));
  p.coords[3] = Vec2(Rat(0), Rat(8));
  p.coords[4] = Vec2(Rat(-4), Rat(0));  // interior, distance 4 from origin
  p.coords[5] = Vec2(Rat(4), Rat(0));   // interior, distance 4 from origin
  p.coords[6] = Vec2(Rat(-1), Rat(-1));
  p.coords[7] = Vec2(Rat(1), Rat(-1));
  p.coords[8] = Vec2(Rat(0), Rat(1));
  p.cx.add_triangle(6, 7, 8);  // base
  p.cx.add_triangle(4, 6, 8);
  p.cx.add_triangle(4, 1, 6);
  p.cx.add_triangle(1, 7, 6);
  p.cx.add_triangle(1, 5, 7);
  p.cx.add_triangle(5, 8, 7);
  p.cx.add_triangle(5, 3, 8);
  p.cx.add_triangle(3, 4, 8);
  p.cx.add_triangle(3, 0, 4);
  p.cx.add_triangle(0, 1, 4);
  p.cx.add_triangle(2, 5, 1);
  p.cx.add_triangle(2, 3, 5);
  rebuild_boundary(p);
  REQUIRE(validate_polygon(p, true).ok());

  Vec2 origin(Rat(0), Rat(0));
  CHECK(sq_dist(p.coords[4], origin) == sq_dist(p.coords[5], origin));

  TheoremReport rep = verify_theorem1(p, origin);
  CHECK(rep.ok());
  // reversed tie order, simulated by reflecting the polygon so the other
  // vertex wins the (distance, id) rule
  PlanarPolygon q = p;
  for (auto& c : q.coords) c.x = Rat(0) - c.x;
  rebuild_boundary(q);
  TheoremReport rep2 = verify_theorem1(q, origin);
  CHECK(rep2.ok());
}

TEST_CASE("perturbation below the distance gap keeps the schedule") {
  PlanarPolygon p = fig8();
  LiftPipeline pl = run_pipeline(p, fig8_origin());
  // nudge the base point by less than half the least distance gap
  Vec2 jittered = fig8_origin() + Vec2(Rat(1, 1000), Rat(-1, 1000));
  LiftPipeline pl2 = run_pipeline(p, jittered);
  CHECK(pl.heights.level == pl2.heights.level);
  CHECK(pl.schedule.order() == pl2.schedule.order());
}

TEST_CASE("random polygons run the full pipeline under both metrics") {
  testsupport::Rng rng(20260810);
  for (int it = 0; it < 30; ++it) {
    testsupport::PolygonGenOptions opt;
    opt.boundary = rng.range(6, 16);
    opt.interior = rng.range(4, 20);
    opt.random_flips = rng.range(0, 12);
    PlanarPolygon p = testsupport::random_convex_polygon(rng, opt);
    for (LiftMetric m : {LiftMetric::kEuclidean, LiftMetric::kEdgePath}) {
      TheoremReport rep = verify_theorem1(p, std::nullopt, m);
      CHECK(rep.ok());
      CHECK(rep.chi_complex == 1);
    }
  }
}

TEST_CASE("verify_theorem1 reproduces the paper's surface values") {
  SurfaceSpec spec;
  spec.resolution = 3;

  spec.kind = SurfaceKind::kTorus;
  TheoremReport torus = verify_theorem1(generate(spec));
  CHECK(torus.ok());
  CHECK(torus.chi_boundary == -1);
  CHECK(torus.chi_complex == 0);

  spec.kind = SurfaceKind::kSphereTrilune;
  TheoremReport sphere = verify_theorem1(generate(spec));
  CHECK(sphere.ok());
  CHECK(sphere.chi_boundary == 1);
  CHECK(sphere.chi_complex == 2);
}

TEST_CASE("level curve failure is a hard error on flat input") {
  // the single-band polygon with an extra ear: the ear's chord joins two
  // boundary vertices, so the base-plane subgraph is not a simple cycle
  PlanarPolygon p;
  p.cx.add_vertices(10);
  p.has_coords = true;
  p.coords.resize(10);
  p.coords[0] = Vec2(Rat(-1), Rat(0));
  p.coords[1] = Vec2(Rat(1), Rat(0));
  p.coords[2] = Vec2(Rat(0), Rat(2));
  p.coords[3] = Vec2(Rat(-4), Rat(-2));
  p.coords[4] = Vec2(Rat(0), Rat(-3));
  p.coords[5] = Vec2(Rat(4), Rat(-2));
  p.coords[6] = Vec2(Rat(5), Rat(2));
  p.coords[7] = Vec2(Rat(0), Rat(6));
  p.coords[8] = Vec2(Rat(-5), Rat(2));
  p.coords[9] = Vec2(Rat(-5, 2), Rat(-4));  // ear apex outside edge (3,4)
  p.cx.add_triangle(0, 1, 2);
  p.cx.add_triangle(3, 4, 0);
  p.cx.add_triangle(4, 1, 0);
  p.cx.add_triangle(4, 5, 1);
  p.cx.add_triangle(5, 6, 1);
  p.cx.add_triangle(6, 2, 1);
  p.cx.add_triangle(6, 7, 2);
  p.cx.add_triangle(7, 8, 2);
  p.cx.add_triangle(8, 0, 2);
  p.cx.add_triangle(8, 3, 0);
  p.cx.add_triangle(3, 9, 4);  // the ear
  rebuild_boundary(p);
  REQUIRE(validate_polygon(p, false).ok());
  CHECK_THROWS_AS(run_pipeline(p), Error);
}
