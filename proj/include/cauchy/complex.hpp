#ifndef CAUCHY_COMPLEX_HPP
#define CAUCHY_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cauchy {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using TriId = std::int32_t;

struct CellCounts {
  std::int64_t n0 = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;

  std::int64_t chi() const { return n0 - n1 + n2; }
  bool operator==(const CellCounts& o) const = default;
};

/// A 2-dimensional cell complex: vertices, edges (unordered vertex pairs),
/// triangles (edge triples with their induced corners). Quotient complexes may
/// contain loops and parallel edges; cells are identified by id, and the
/// vertex-pair index is only used to deduplicate while building from scratch.
class Complex {
 public:
  VertexId add_vertex() {
    vertex_count_ += 1;
    return vertex_count_ - 1;
  }
  void add_vertices(int n) { vertex_count_ += n; }

  /// Edge for the pair {u,v}; created if absent.
  EdgeId ensure_edge(VertexId u, VertexId v);

  /// Always creates a fresh edge cell, even for an existing pair.
  EdgeId add_edge_raw(VertexId u, VertexId v);

  /// Triangle by corners; the three side edges are ensured.
  TriId add_triangle(VertexId a, VertexId b, VertexId c);

  /// Triangle over explicit edge cells (used when rebuilding quotients).
  TriId add_triangle_raw(const std::array<EdgeId, 3>& es, const std::array<VertexId, 3>& vs);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edge_verts_.size()); }
  int triangle_count() const { return static_cast<int>(tri_edges_.size()); }

  const std::array<VertexId, 2>& edge_vertices(EdgeId e) const { return edge_verts_[e]; }
  const std::array<EdgeId, 3>& triangle_edges(TriId t) const { return tri_edges_[t]; }
  const std::array<VertexId, 3>& triangle_vertices(TriId t) const { return tri_verts_[t]; }
  const std::vector<TriId>& edge_triangles(EdgeId e) const { return edge_tris_[e]; }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  VertexId opposite_vertex(TriId t, EdgeId e) const;

  const std::vector<EdgeId>& duplicate_edges() const { return duplicate_edges_; }

 private:
  static std::uint64_t pair_key(VertexId u, VertexId v);

  int vertex_count_ = 0;
  std::vector<std::array<VertexId, 2>> edge_verts_;
  std::vector<std::array<EdgeId, 3>> tri_edges_;
  std::vector<std::array<VertexId, 3>> tri_verts_;
  std::vector<std::vector<TriId>> edge_tris_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
  std::vector<EdgeId> duplicate_edges_;
};

CellCounts counts(const Complex& c);
std::int64_t euler_characteristic(const Complex& c);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

/// Structural checks; with `closed` additionally requires every edge in exactly
/// two triangles and every vertex on at least three edges.
ValidationReport validate(const Complex& c, bool closed);

/// Edges with exactly one incident triangle.
std::vector<EdgeId> boundary_edges(const Complex& c);

Complex disjoint_union(const Complex& a, const Complex& b);

}  // namespace cauchy

#endif
