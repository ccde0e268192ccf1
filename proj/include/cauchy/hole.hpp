#ifndef CAUCHY_HOLE_HPP
#define CAUCHY_HOLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cauchy/complex.hpp"

namespace cauchy {

/// The hole-expansion moves. I removes a triangle with one edge, II a triangle
/// with two edges and their shared vertex, III a triangle with three edges and
/// two vertices. kFinal is the terminal step on the last remaining triangle
/// (the process' base case, removing all of its cells).
enum class OpKind { kI, kII, kIII, kFinal };

const char* op_name(OpKind k);

/// Per-op cell deltas (dn0, dn1, dn2); each preserves n0 - n1 + n2 except the
/// terminal step, which ends the process.
std::array<int, 3> op_delta(OpKind k);

enum class Mode { kStrict, kLenient };

enum class HoleReason {
  kNone,
  kNoEdgeOnHole,
  kVertexStarNotExhausted,
  kWouldDisconnect,
  kBoundaryNotSimple,
  kOpIIIDisabled,
  kAlreadyRemoved,
  kSeedOnBoundary,
};

const char* reason_name(HoleReason r);

/// The growing removed region: removed cell flags, exposure (which edges
/// currently border the hole), and running counts of the remaining complex.
struct HoleState {
  std::vector<char> tri_removed;
  std::vector<char> edge_removed;
  std::vector<char> vert_removed;
  std::vector<char> edge_exposed;
  std::vector<int> edge_alive_tris;
  std::vector<int> vert_alive_edges;
  std::vector<std::vector<EdgeId>> vert_edges;
  CellCounts counts;
  int remaining_tris = 0;
  bool outer_seeded = false;

  bool on_rim(EdgeId e) const { return edge_exposed[e] && !edge_removed[e]; }
  std::vector<EdgeId> rim() const;
};

struct Classification {
  bool ok = false;
  OpKind kind = OpKind::kI;
  HoleReason reason = HoleReason::kNone;
  std::vector<EdgeId> edges;    // removed with the triangle
  std::vector<VertexId> verts;  // removed with the triangle
};

/// Removes the seed's open 2-cell; its edges and vertices stay and form the
/// initial hole boundary.
HoleState init_hole(const Complex& c, TriId seed);

/// Hole grown from outside the polygon: nothing removed yet, the complex's
/// boundary edges are the initial rim (the removed outer face of a planar
/// representation).
HoleState outer_hole(const Complex& c);

/// Decides which operation removes t, if any. Strict mode additionally
/// requires the remaining triangles to stay vertex-connected after removal.
/// `connected_after` overrides the connectivity probe when the caller has
/// precomputed it (replay does).
Classification classify(const Complex& c, const HoleState& h, TriId t, Mode mode,
                        bool allow_op3 = true,
                        std::optional<bool> connected_after = std::nullopt);

/// Applies a classification; throws ClassificationMismatch if `kind` is not
/// what classify returns for the current state.
void apply(const Complex& c, HoleState& h, TriId t, OpKind kind, Mode mode = Mode::kLenient,
           bool allow_op3 = true);

/// True iff the hole boundary is one closed cycle visiting no vertex twice.
bool is_simple_cycle(const Complex& c, const HoleState& h);

struct RemovalStep {
  int index = 0;  // 1-based
  TriId tri = -1;
  bool ok = false;
  OpKind kind = OpKind::kI;
  HoleReason reason = HoleReason::kNone;
  CellCounts after;
  bool simple_after = false;
};

struct RemovalTrace {
  std::vector<RemovalStep> steps;
  bool success = false;
  std::optional<int> failed_step;  // 1-based
};

/// Applies the order greedily, recording each step; stops at the first invalid
/// one. seed == nullopt grows the hole from outside. Success means every
/// listed triangle was removed, the whole complex was consumed, and (for
/// seeded runs) the surviving cells are exactly the original boundary.
RemovalTrace replay(const Complex& c, std::optional<TriId> seed, const std::vector<TriId>& order,
                    Mode mode, bool allow_op3);

std::string trace_str(const RemovalTrace& t);

}  // namespace cauchy

#endif
