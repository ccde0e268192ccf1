#ifndef CAUCHY_CUTTER_HPP
#define CAUCHY_CUTTER_HPP

#include <vector>

#include "cauchy/scheme.hpp"

namespace cauchy {

/// A simple polyline curve with exact rational points. Closed curves repeat
/// the first point at the end.
struct Curve {
  std::vector<Vec2> points;
  bool closed = false;
};

/// Checks that the curve is simple (no self-intersections, consecutive points
/// distinct). Throws CurveSelfIntersects otherwise.
void check_curve_simple(const Curve& c);

/// Returns a curve that crosses every edge in finitely many interior points:
/// segments lying partially along an edge and joints tangent to an edge are
/// nudged by less than half the polygon's minimum feature clearance. A curve
/// that is already transversal is returned unchanged.
Curve transversalize(const Curve& c, const PlanarPolygon& p);

struct SubdivisionResult {
  PlanarPolygon poly;                 // T'
  std::vector<VertexId> curve_verts;  // along the curve; closed curves repeat the first
  std::vector<EdgeId> curve_edges;    // edges of T' realizing the curve, in order
};

/// Lemma 3.1: sub-triangulates the polygon so the curve becomes a union of
/// edges, following the entry/exit case table; preserves n0 - n1 + n2 exactly.
/// Curve endpoints must lie strictly inside a triangle or on a vertex.
SubdivisionResult subdivide_along(const PlanarPolygon& p, const Curve& c);

struct CutResult {
  LabeledComplex complex;
  std::vector<std::string> labels;  // fresh labels, one per cut edge in path order
};

/// Cuts the complex open along a simple edge path or cycle: every cut edge is
/// duplicated into two boundary edges sharing a fresh label, and curve
/// vertices are duplicated per fan component. Re-quotienting by the labels
/// recovers the original cell class counts exactly. `label_seed` numbers the
/// fresh labels (c1, c2, ... by default).
CutResult cut_open(const LabeledComplex& lc, const std::vector<EdgeId>& path, int label_seed = 1);

}  // namespace cauchy

#endif
