#include <doctest.h>

#include "cauchy/errors.hpp"
#include "cauchy/io.hpp"
#include "cauchy/scheme.hpp"
#include "cauchy/surfaces.hpp"
#include "support/polygen.hpp"

using namespace cauchy;

namespace {

PlanarPolygon unit_square(const std::string& word) {
  PlanarPolygon p;
  p.cx.add_vertices(4);
  p.has_coords = true;
  p.coords = {Vec2(Rat(0), Rat(0)), Vec2(Rat(1), Rat(0)), Vec2(Rat(1), Rat(1)),
              Vec2(Rat(0), Rat(1))};
  p.cx.add_triangle(0, 1, 2);
  p.cx.add_triangle(0, 2, 3);
  rebuild_boundary(p, 0);
  p.word = parse_word(word);
  return p;
}

}  // namespace

TEST_CASE("parse_word basics") {
  EdgeWord torus = parse_word("a b a- b-");
  REQUIRE(torus.size() == 4);
  CHECK(torus[0] == WordToken{"a", false});
  CHECK(torus[2] == WordToken{"a", true});

  EdgeWord digon = parse_word("a a");
  CHECK(digon.size() == 2);
  CHECK_FALSE(digon[1].inverted);

  EdgeWord sphere = parse_word("a b c c- b- a-");
  CHECK(sphere.size() == 6);
  int doubled = 0;
  for (const auto& t : sphere) doubled += t.inverted ? 1 : 0;
  CHECK(doubled == 3);

  CHECK_THROWS_AS(parse_word("a a a"), Error);
  CHECK_THROWS_AS(parse_word("a b@d"), Error);
}

TEST_CASE("quotient of the unit square") {
  SUBCASE("torus word") {
    PlanarPolygon p = unit_square("a b a- b-");
    Complex q = quotient(p);
    CHECK(counts(q) == CellCounts{1, 3, 2});
    CHECK(euler_characteristic(q) == 0);
  }
  SUBCASE("trivial word keeps counts") {
    PlanarPolygon p = unit_square("a b c d");
    Complex q = quotient(p);
    CHECK(counts(q) == CellCounts{4, 5, 2});
    CHECK(euler_characteristic(q) == 1);
  }
  SUBCASE("projective word") {
    PlanarPolygon p = unit_square("a b a b");
    Complex q = quotient(p);
    CHECK(euler_characteristic(q) == 1);
  }
}

TEST_CASE("quotient of grid surfaces") {
  SurfaceSpec spec;
  spec.kind = SurfaceKind::kTorus;
  spec.resolution = 3;
  PlanarPolygon torus = generate(spec);
  Complex q = quotient(torus);
  CHECK(counts(q) == CellCounts{9, 27, 18});
  CHECK(euler_characteristic(q) == 0);
  // quotient never changes n2
  CHECK(counts(q).n2 == counts(torus.cx).n2);
}

TEST_CASE("quotient is idempotent over an already-merged scheme") {
  SurfaceSpec spec;
  spec.kind = SurfaceKind::kKleinBottle;
  spec.resolution = 3;
  PlanarPolygon p = generate(spec);
  auto pairs = scheme_glue_pairs(p);
  Complex once = quotient_by_pairs(p.cx, pairs);
  // running the same union-find pass twice changes nothing
  std::vector<GluePair> twice = pairs;
  twice.insert(twice.end(), pairs.begin(), pairs.end());
  Complex again = quotient_by_pairs(p.cx, twice);
  CHECK(counts(once) == counts(again));
  CHECK(euler_characteristic(again) == 0);
}

TEST_CASE("boundary_chi of the paper's representations") {
  SurfaceSpec spec;
  spec.resolution = 3;

  spec.kind = SurfaceKind::kTorus;
  CHECK(boundary_chi(generate(spec)) == -1);

  spec.kind = SurfaceKind::kSphereTrilune;
  CHECK(boundary_chi(generate(spec)) == 1);

  spec.kind = SurfaceKind::kProjectivePlane;
  CHECK(boundary_chi(generate(spec)) == 0);

  spec.kind = SurfaceKind::kKleinBottle;
  CHECK(boundary_chi(generate(spec)) == -1);

  spec.kind = SurfaceKind::kPinchedTorus;
  CHECK(boundary_chi(generate(spec)) == 0);
}

TEST_CASE("arc length mismatch is refused") {
  PlanarPolygon p = unit_square("a b a- b-");
  p.word.pop_back();
  CHECK_THROWS_AS(quotient(p), Error);
}

TEST_CASE("trivial-scheme quotient of random polygons is a disc") {
  testsupport::Rng rng(7);
  for (int it = 0; it < 25; ++it) {
    testsupport::PolygonGenOptions opt;
    opt.boundary = rng.range(6, 14);
    opt.interior = rng.range(3, 12);
    PlanarPolygon p = testsupport::random_convex_polygon(rng, opt);
    CHECK(validate_polygon(p, false).ok());
    CHECK(euler_characteristic(quotient(p)) == 1);
  }
}

TEST_CASE("complex file round trip preserves cell classes") {
  SurfaceSpec spec;
  spec.kind = SurfaceKind::kTorus;
  spec.resolution = 4;
  PlanarPolygon p = generate(spec);
  PlanarPolygon q = parse_complex_text(complex_text(p));
  CHECK(counts(q.cx) == counts(p.cx));
  CHECK(q.word.size() == p.word.size());
  CHECK(counts(quotient(q)) == counts(quotient(p)));
  CHECK(boundary_chi(q) == boundary_chi(p));
}
