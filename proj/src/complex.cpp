#include "cauchy/complex.hpp"

#include <algorithm>
#include <sstream>

#include "cauchy/errors.hpp"

namespace cauchy {

std::uint64_t Complex::pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

EdgeId Complex::ensure_edge(VertexId u, VertexId v) {
  auto it = edge_index_.find(pair_key(u, v));
  if (it != edge_index_.end()) return it->second;
  return add_edge_raw(u, v);
}

EdgeId Complex::add_edge_raw(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  EdgeId id = static_cast<EdgeId>(edge_verts_.size());
  edge_verts_.push_back({u, v});
  edge_tris_.emplace_back();
  auto [it, inserted] = edge_index_.try_emplace(pair_key(u, v), id);
  if (!inserted) duplicate_edges_.push_back(id);
  return id;
}

TriId Complex::add_triangle(VertexId a, VertexId b, VertexId c) {
  EdgeId e0 = ensure_edge(a, b);
  EdgeId e1 = ensure_edge(b, c);
  EdgeId e2 = ensure_edge(c, a);
  return add_triangle_raw({e0, e1, e2}, {a, b, c});
}

TriId Complex::add_triangle_raw(const std::array<EdgeId, 3>& es,
                                const std::array<VertexId, 3>& vs) {
  TriId id = static_cast<TriId>(tri_edges_.size());
  tri_edges_.push_back(es);
  tri_verts_.push_back(vs);
  for (EdgeId e : es) edge_tris_[e].push_back(id);
  return id;
}

std::optional<EdgeId> Complex::find_edge(VertexId u, VertexId v) const {
  auto it = edge_index_.find(pair_key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Complex::opposite_vertex(TriId t, EdgeId e) const {
  const auto& ev = edge_verts_[e];
  for (VertexId v : tri_verts_[t])
    if (v != ev[0] && v != ev[1]) return v;
  fail(Err::kInternal, "triangle has no vertex opposite the given edge");
}

CellCounts counts(const Complex& c) {
  return {c.vertex_count(), c.edge_count(), c.triangle_count()};
}

std::int64_t euler_characteristic(const Complex& c) { return counts(c).chi(); }

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v << "\n";
  return os.str();
}

ValidationReport validate(const Complex& c, bool closed) {
  ValidationReport rep;
  std::vector<int> vertex_edge_degree(c.vertex_count(), 0);
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const auto& vs = c.edge_vertices(e);
    if (vs[0] < 0 || vs[1] >= c.vertex_count()) {
      rep.violations.push_back("edge " + std::to_string(e) + " references unknown vertex");
      continue;
    }
    vertex_edge_degree[vs[0]] += 1;
    if (vs[1] != vs[0]) vertex_edge_degree[vs[1]] += 1;
    int deg = static_cast<int>(c.edge_triangles(e).size());
    if (deg > 2)
      rep.violations.push_back("edge " + std::to_string(e) + " lies in " + std::to_string(deg) +
                               " triangles");
    if (deg == 0)
      rep.violations.push_back("edge " + std::to_string(e) + " is dangling (no triangle)");
    if (closed && deg == 1)
      rep.violations.push_back("edge " + std::to_string(e) + " is a boundary edge");
  }
  for (TriId t = 0; t < c.triangle_count(); ++t) {
    const auto& es = c.triangle_edges(t);
    const auto& vs = c.triangle_vertices(t);
    for (EdgeId e : es)
      if (e < 0 || e >= c.edge_count())
        rep.violations.push_back("triangle " + std::to_string(t) + " references unknown edge");
    if (vs[0] == vs[1] && vs[1] == vs[2] && c.edge_vertices(es[0])[0] != c.edge_vertices(es[0])[1])
      rep.violations.push_back("triangle " + std::to_string(t) + " has inconsistent corners");
  }
  for (EdgeId e : c.duplicate_edges())
    rep.violations.push_back("edge " + std::to_string(e) + " duplicates an earlier vertex pair");
  if (closed) {
    for (VertexId v = 0; v < c.vertex_count(); ++v)
      if (vertex_edge_degree[v] < 3)
        rep.violations.push_back("vertex " + std::to_string(v) + " lies on only " +
                                 std::to_string(vertex_edge_degree[v]) + " edges");
  }
  return rep;
}

std::vector<EdgeId> boundary_edges(const Complex& c) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < c.edge_count(); ++e)
    if (c.edge_triangles(e).size() == 1) out.push_back(e);
  return out;
}

Complex disjoint_union(const Complex& a, const Complex& b) {
  Complex out;
  out.add_vertices(a.vertex_count() + b.vertex_count());
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    const auto& vs = a.edge_vertices(e);
    out.add_edge_raw(vs[0], vs[1]);
  }
  int voff = a.vertex_count();
  int eoff = a.edge_count();
  for (EdgeId e = 0; e < b.edge_count(); ++e) {
    const auto& vs = b.edge_vertices(e);
    out.add_edge_raw(vs[0] + voff, vs[1] + voff);
  }
  for (TriId t = 0; t < a.triangle_count(); ++t)
    out.add_triangle_raw(a.triangle_edges(t), a.triangle_vertices(t));
  for (TriId t = 0; t < b.triangle_count(); ++t) {
    auto es = b.triangle_edges(t);
    auto vs = b.triangle_vertices(t);
    for (auto& e : es) e += eoff;
    for (auto& v : vs) v += voff;
    out.add_triangle_raw(es, vs);
  }
  return out;
}

const char* err_name(Err code) {
  switch (code) {
    case Err::kMalformedToken: return "MalformedToken";
    case Err::kLabelUsedThrice: return "LabelUsedThrice";
    case Err::kArcLengthMismatch: return "ArcLengthMismatch";
    case Err::kUnknownTriangle: return "UnknownTriangle";
    case Err::kClassificationMismatch: return "ClassificationMismatch";
    case Err::kPointOnSkeleton: return "PointOnSkeleton";
    case Err::kPointInBoundaryTriangle: return "PointInBoundaryTriangle";
    case Err::kMultiplePointOnLevel: return "MultiplePointOnLevel";
    case Err::kCurveNotInPolygon: return "CurveNotInPolygon";
    case Err::kCurveNotTransversal: return "CurveNotTransversal";
    case Err::kCurveSelfIntersects: return "CurveSelfIntersects";
    case Err::kCutDisconnects: return "CutDisconnects";
    case Err::kCurveNotSubcomplex: return "CurveNotSubcomplex";
    case Err::kResolutionTooSmall: return "ResolutionTooSmall";
    case Err::kDegenerateFace: return "DegenerateFace";
    case Err::kCenterInsidePolyhedron: return "CenterInsidePolyhedron";
    case Err::kProjectionDegenerate: return "ProjectionDegenerate";
    case Err::kParse: return "ParseError";
    case Err::kIo: return "IoError";
    case Err::kInternal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace cauchy
