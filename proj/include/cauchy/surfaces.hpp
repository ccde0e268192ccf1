#ifndef CAUCHY_SURFACES_HPP
#define CAUCHY_SURFACES_HPP

#include <string>
#include <vector>

#include "cauchy/scheme.hpp"

namespace cauchy {

enum class SurfaceKind {
  kSphereTrilune,  // disc cut along three meridians meeting at a pole
  kSphereGrid,
  kTorus,
  kProjectivePlane,
  kKleinBottle,
  kGenus,
  kPinchedTorus,
};

struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::kTorus;
  int resolution = 3;  // grid subdivisions per side / arcs per word edge
  int genus = 1;
};

/// Triangulated fundamental polygon with the identification word for the
/// requested surface. Resolution must be at least 3.
PlanarPolygon generate(const SurfaceSpec& spec);

/// 2-2g for orientable surfaces, 2-g for non-orientable ones.
std::int64_t lhuilier_expected(int g, bool orientable);

struct ConvexPolyhedron {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;  // cyclic vertex index lists
};

/// Face planarity/convexity, edge two-face incidence, convex vertex position.
ValidationReport validate_polyhedron(const ConvexPolyhedron& poly);

struct DescartesReport {
  double angle_sum = 0;
  double expected = 0;
  std::int64_t face_degree_sum = 0;  // sum of k_i
  std::int64_t edge_count = 0;
  bool edge_identity_ok = false;  // sum k_i == 2 n1, exact
  bool angle_ok = false;          // |angle_sum - expected| < tol
  bool ok() const { return edge_identity_ok && angle_ok; }
};

/// Angle-defect check: interior angles summed over all faces against
/// 2(n0 - 2)pi, plus the exact integer identity sum k_i = 2 n1.
DescartesReport descartes_check(const ConvexPolyhedron& poly, double tol);

struct SchlegelResult {
  PlanarPolygon poly;              // trivial scheme, removed face's image as outer boundary
  std::vector<int> removed_face;   // vertex ids of the removed face cycle
};

/// Central projection of every cell except `face` onto that face's plane, from
/// a camera inside the face's beyond-region; non-triangular faces are
/// fan-triangulated afterward.
SchlegelResult project_schlegel(const ConvexPolyhedron& poly, int face);

}  // namespace cauchy

#endif
