#ifndef CAUCHY_LIFT_HPP
#define CAUCHY_LIFT_HPP

#include <optional>
#include <vector>

#include "cauchy/hole.hpp"
#include "cauchy/scheme.hpp"

namespace cauchy {

enum class LiftMetric { kEuclidean, kEdgePath };

/// Integer heights for the pyramid: the base triangle's corners sit on the top
/// plane (level 0), each interior vertex gets its own plane (levels 1..n in
/// increasing order of distance from the reference point), and every boundary
/// vertex sits on the base plane (level n+1).
struct HeightAssignment {
  TriId base = -1;
  LiftMetric metric = LiftMetric::kEuclidean;
  int interior_count = 0;
  std::vector<int> level;
};

/// The cycle where the lifted surface meets one plane: a simple closed curve,
/// counterclockwise in the plane.
struct LevelCurve {
  int index = 0;
  std::vector<VertexId> verts;
  std::vector<EdgeId> edges;  // edges[i] joins verts[i] and verts[i+1]
};

/// K'': the level-compatible subdivision of the polygon, with the per-vertex
/// level map. Boundary and word are carried over unchanged.
struct SubdividedPolygon {
  PlanarPolygon poly;
  std::vector<int> level;
  int interior_count = 0;
};

struct ScheduleEntry {
  TriId tri = -1;
  OpKind kind = OpKind::kI;
  int band = -1;
  int position = 0;
};

struct RemovalSchedule {
  TriId seed = -1;
  std::vector<ScheduleEntry> entries;
  std::vector<TriId> order() const;
};

/// The triangle strictly containing `point`. Rejects points on the skeleton
/// and triangles with a boundary edge (the proof needs an interior sigma0).
TriId pick_base(const PlanarPolygon& p, const Vec2& point);

/// Euclidean metric orders interior vertices by exact squared distance from
/// `reference` (defaults to the base centroid), ties by vertex id. The
/// edge-path metric uses BFS layers over interior edges from the base corners,
/// any fixed order (vertex id) within a layer.
HeightAssignment order_vertices(const PlanarPolygon& p, TriId base, LiftMetric metric,
                                std::optional<Vec2> reference = std::nullopt);

/// Inserts a vertex on every edge at each strictly-intermediate level plane,
/// positioned by linear interpolation of the lifted heights, and splits every
/// resulting quadrilateral with one diagonal. Preserves n0 - n1 + n2 exactly.
SubdividedPolygon subdivide_levels(const PlanarPolygon& p, const HeightAssignment& h);

/// One simple closed curve per level 0..n+1; level 0 is the base triangle's
/// boundary and level n+1 the polygon boundary. A level whose subgraph is not
/// a single simple cycle is a hard MultiplePointOnLevel error.
std::vector<LevelCurve> level_curves(const SubdividedPolygon& kpp);

/// The band-by-band removal order: the seed, then for each band a start
/// triangle removed by operation I and a walk alternating I/II, closed by two
/// operation II moves. Covers every triangle exactly once and replays cleanly
/// in strict mode.
RemovalSchedule build_schedule(const SubdividedPolygon& kpp, const std::vector<LevelCurve>& curves,
                               bool clockwise = false);

struct LiftPipeline {
  TriId base = -1;
  HeightAssignment heights;
  SubdividedPolygon kpp;
  std::vector<LevelCurve> curves;
  RemovalSchedule schedule;
};

/// Runs pick/order/subdivide/curves/schedule with a deterministic default base
/// (lowest-id interior triangle, preferring one with no boundary vertex).
LiftPipeline run_pipeline(const PlanarPolygon& p, std::optional<Vec2> point = std::nullopt,
                          LiftMetric metric = LiftMetric::kEuclidean, bool clockwise = false);

struct TheoremReport {
  std::int64_t chi_complex = 0;      // chi(quotient(p)) by counting
  std::int64_t chi_boundary = 0;     // n0 - n1 over identified boundary classes
  std::int64_t chi_by_schedule = 0;  // surviving boundary classes after the replay, plus one
  bool schedule_ok = false;
  bool base_touches_boundary = false;
  bool ok() const {
    return schedule_ok && chi_complex == chi_boundary + 1 && chi_by_schedule == chi_complex;
  }
};

/// chi(K) = chi(K0) + 1, computed both by counting quotient classes and by
/// executing the removal schedule on the disc with the boundary
/// identifications applied to the surviving cells.
TheoremReport verify_theorem1(const PlanarPolygon& p, std::optional<Vec2> point = std::nullopt,
                              LiftMetric metric = LiftMetric::kEuclidean);

}  // namespace cauchy

#endif
