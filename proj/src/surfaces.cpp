#include "cauchy/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "cauchy/errors.hpp"

namespace cauchy {

namespace {

struct EdgeTag {
  std::string label;
  VertexId tail;
};

/// Word assembled from per-edge tags after the boundary cycle is rebuilt.
void assign_word(PlanarPolygon& p, const std::map<EdgeId, EdgeTag>& tags) {
  p.word.clear();
  size_t n = p.boundary_verts.size();
  for (size_t i = 0; i < n; ++i) {
    auto it = tags.find(p.boundary_edges[i]);
    if (it == tags.end()) fail(Err::kInternal, "untagged boundary edge");
    p.word.push_back({it->second.label, it->second.tail != p.boundary_verts[i]});
  }
}

/// Square grid triangulation on [0,r]^2: diagonals run down-left to up-right,
/// except the two anti-diagonal corner cells, whose figure-faithful diagonal
/// would create triangles with all three corners on the boundary.
PlanarPolygon grid_polygon(int r) {
  PlanarPolygon p;
  auto vid = [&](int i, int j) { return j * (r + 1) + i; };
  p.cx.add_vertices((r + 1) * (r + 1));
  p.has_coords = true;
  p.coords.resize(p.cx.vertex_count());
  for (int j = 0; j <= r; ++j)
    for (int i = 0; i <= r; ++i) p.coords[vid(i, j)] = Vec2(Rat(i), Rat(j));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) {
      bool flip = (i == r - 1 && j == 0) || (i == 0 && j == r - 1);
      if (!flip) {
        p.cx.add_triangle(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1));
        p.cx.add_triangle(vid(i, j), vid(i + 1, j + 1), vid(i, j + 1));
      } else {
        p.cx.add_triangle(vid(i, j), vid(i + 1, j), vid(i, j + 1));
        p.cx.add_triangle(vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1));
      }
    }
  rebuild_boundary(p, vid(0, 0));
  return p;
}

enum class SideRole { kBottom, kRight, kTop, kLeft };

/// Classifies a grid boundary edge and its offset along its side.
std::pair<SideRole, int> grid_side(const PlanarPolygon& p, EdgeId e, int r) {
  const auto& vs = p.cx.edge_vertices(e);
  const Vec2 &a = p.coords[vs[0]], &b = p.coords[vs[1]];
  if (a.y == 0 && b.y == 0) return {SideRole::kBottom, static_cast<int>(std::min(a.x.get_d(), b.x.get_d()))};
  if (a.y == r && b.y == r) return {SideRole::kTop, static_cast<int>(std::min(a.x.get_d(), b.x.get_d()))};
  if (a.x == 0 && b.x == 0) return {SideRole::kLeft, static_cast<int>(std::min(a.y.get_d(), b.y.get_d()))};
  return {SideRole::kRight, static_cast<int>(std::min(a.y.get_d(), b.y.get_d()))};
}

VertexId grid_vertex(int i, int j, int r) { return j * (r + 1) + i; }

PlanarPolygon grid_surface(SurfaceKind kind, int r) {
  PlanarPolygon p = grid_polygon(r);
  std::map<EdgeId, EdgeTag> tags;
  for (EdgeId e : p.boundary_edges) {
    auto [role, off] = grid_side(p, e, r);
    EdgeTag tag;
    switch (kind) {
      case SurfaceKind::kTorus:
        // opposite sides glued with equal orientation
        if (role == SideRole::kBottom || role == SideRole::kTop) {
          tag.label = "a" + std::to_string(off);
          tag.tail = role == SideRole::kBottom ? grid_vertex(off, 0, r) : grid_vertex(off, r, r);
        } else {
          tag.label = "b" + std::to_string(off);
          tag.tail = role == SideRole::kLeft ? grid_vertex(0, off, r) : grid_vertex(r, off, r);
        }
        break;
      case SurfaceKind::kKleinBottle:
        // horizontal pair as in the torus; vertical pair reversed
        if (role == SideRole::kBottom || role == SideRole::kTop) {
          tag.label = "a" + std::to_string(off);
          tag.tail = role == SideRole::kBottom ? grid_vertex(off, 0, r) : grid_vertex(off, r, r);
        } else if (role == SideRole::kRight) {
          tag.label = "b" + std::to_string(off);
          tag.tail = grid_vertex(r, off, r);
        } else {
          tag.label = "b" + std::to_string(r - 1 - off);
          tag.tail = grid_vertex(0, off + 1, r);  // arrow runs downward
        }
        break;
      case SurfaceKind::kProjectivePlane: {
        // antipodal identification: edge k pairs with edge k + 2r, both
        // carrying the arrow along the counterclockwise traversal
        int k = 0;
        switch (role) {
          case SideRole::kBottom: k = off; break;
          case SideRole::kRight: k = r + off; break;
          case SideRole::kTop: k = 2 * r + (r - 1 - off); break;
          case SideRole::kLeft: k = 3 * r + (r - 1 - off); break;
        }
        tag.label = "s" + std::to_string(k % (2 * r));
        switch (role) {
          case SideRole::kBottom: tag.tail = grid_vertex(off, 0, r); break;
          case SideRole::kRight: tag.tail = grid_vertex(r, off, r); break;
          case SideRole::kTop: tag.tail = grid_vertex(off + 1, r, r); break;
          case SideRole::kLeft: tag.tail = grid_vertex(0, off + 1, r); break;
        }
        break;
      }
      case SurfaceKind::kSphereGrid:
        // zip at (0,0): bottom to left; zip at (r,r): right to top
        if (role == SideRole::kBottom) {
          tag.label = "a" + std::to_string(off);
          tag.tail = grid_vertex(off, 0, r);
        } else if (role == SideRole::kLeft) {
          tag.label = "a" + std::to_string(off);
          tag.tail = grid_vertex(0, off, r);
        } else if (role == SideRole::kRight) {
          tag.label = "b" + std::to_string(off);
          tag.tail = grid_vertex(r, off, r);
        } else {
          tag.label = "b" + std::to_string(off);
          tag.tail = grid_vertex(off, r, r);
        }
        break;
      default:
        fail(Err::kInternal, "not a grid surface");
    }
    tags[e] = tag;
  }
  assign_word(p, tags);
  return p;
}

/// Convex polygon with `m` boundary vertices on the rational unit circle, an
/// inner ring at half radius, and a central fan; returns the polygon with the
/// boundary in counterclockwise order starting at the first circle point.
PlanarPolygon ring_fan_polygon(int m) {
  PlanarPolygon p;
  p.has_coords = true;
  p.cx.add_vertices(2 * m + 1);
  p.coords.resize(2 * m + 1);
  for (int k = 0; k < m; ++k) {
    // rational circle points by the half-angle parameter; the range covers
    // all but a small arc, so the hull strictly surrounds the origin
    Rat t = Rat(2 * k - (m - 1), 2);
    Rat den = t * t + 1;
    Vec2 pt((1 - t * t) / den, 2 * t / den);
    p.coords[k] = pt;
    p.coords[m + k] = pt * Rat(1, 2);
  }
  p.coords[2 * m] = Vec2(Rat(0), Rat(0));
  for (int k = 0; k < m; ++k) {
    int k1 = (k + 1) % m;
    p.cx.add_triangle(k, k1, m + k1);
    p.cx.add_triangle(k, m + k1, m + k);
    p.cx.add_triangle(2 * m, m + k, m + k1);
  }
  rebuild_boundary(p, 0);
  return p;
}

/// Labels the m = sides*r boundary arcs of a ring_fan_polygon. `pair_of` maps
/// a side to its partner and whether the gluing reverses arc order.
PlanarPolygon labeled_ring_fan(int sides, int r,
                               const std::vector<std::pair<int, bool>>& pairing,
                               const std::string& stem) {
  int m = sides * r;
  PlanarPolygon p = ring_fan_polygon(m);
  std::map<EdgeId, EdgeTag> tags;
  // boundary edge i runs from circle vertex i to i+1 (counterclockwise)
  for (int i = 0; i < m; ++i) {
    int side = i / r, arc = i % r;
    auto [partner, reversed] = pairing[side];
    int canon_side = std::min(side, partner);
    int canon_arc = (side == canon_side) ? arc : (reversed ? r - 1 - arc : arc);
    EdgeTag tag;
    tag.label = stem + std::to_string(canon_side) + "_" + std::to_string(canon_arc);
    // arrows run counterclockwise on the canonical side and on unreversed
    // partners; reversed partners carry the arrow against the traversal
    bool inverted = (side != canon_side) && reversed;
    tag.tail = inverted ? p.boundary_verts[(i + 1) % m] : p.boundary_verts[i];
    auto e = p.cx.find_edge(p.boundary_verts[i], p.boundary_verts[(i + 1) % m]);
    if (!e) fail(Err::kInternal, "missing boundary edge");
    tags[*e] = tag;
  }
  assign_word(p, tags);
  return p;
}

}  // namespace

PlanarPolygon generate(const SurfaceSpec& spec) {
  if (spec.resolution < 3)
    fail(Err::kResolutionTooSmall, "resolution " + std::to_string(spec.resolution) + " < 3");
  int r = spec.resolution;
  switch (spec.kind) {
    case SurfaceKind::kTorus:
    case SurfaceKind::kKleinBottle:
    case SurfaceKind::kProjectivePlane:
    case SurfaceKind::kSphereGrid:
      return grid_surface(spec.kind, r);
    case SurfaceKind::kSphereTrilune: {
      // hexagon g0 g0- g1 g1- g2 g2-: three meridians meeting at the pole
      std::vector<std::pair<int, bool>> pairing(6);
      for (int i = 0; i < 3; ++i) {
        pairing[2 * i] = {2 * i + 1, true};
        pairing[2 * i + 1] = {2 * i, true};
      }
      return labeled_ring_fan(6, r, pairing, "g");
    }
    case SurfaceKind::kGenus: {
      if (spec.genus < 1) fail(Err::kResolutionTooSmall, "genus must be at least 1");
      int g = spec.genus;
      // 4g-gon word a1 b1 a1- b1- ... ag bg ag- bg-
      std::vector<std::pair<int, bool>> pairing(4 * g);
      for (int i = 0; i < g; ++i) {
        pairing[4 * i] = {4 * i + 2, true};
        pairing[4 * i + 2] = {4 * i, true};
        pairing[4 * i + 1] = {4 * i + 3, true};
        pairing[4 * i + 3] = {4 * i + 1, true};
      }
      return labeled_ring_fan(4 * g, r, pairing, "w");
    }
    case SurfaceKind::kPinchedTorus: {
      // two mirrored copies of the same arc word; the duplicated corner
      // classes merge through the gluing
      std::vector<std::pair<int, bool>> pairing(2);
      pairing[0] = {1, false};
      pairing[1] = {0, false};
      return labeled_ring_fan(2, r, pairing, "p");
    }
  }
  fail(Err::kInternal, "unknown surface kind");
}

std::int64_t lhuilier_expected(int g, bool orientable) {
  if (orientable) {
    if (g < 0) fail(Err::kResolutionTooSmall, "genus must be non-negative");
    return 2 - 2 * static_cast<std::int64_t>(g);
  }
  if (g < 1) fail(Err::kResolutionTooSmall, "non-orientable genus must be at least 1");
  return 2 - static_cast<std::int64_t>(g);
}

namespace {

Vec3 face_normal(const ConvexPolyhedron& poly, int f) {
  const auto& face = poly.faces[f];
  if (face.size() < 3) fail(Err::kDegenerateFace, "face with fewer than 3 vertices");
  Vec3 n(Rat(0), Rat(0), Rat(0));
  const Vec3& p0 = poly.vertices[face[0]];
  for (size_t i = 1; i + 1 < face.size(); ++i) {
    Vec3 a = poly.vertices[face[i]] - p0;
    Vec3 b = poly.vertices[face[i + 1]] - p0;
    n = n + cross(a, b);
  }
  if (sgn(sq_norm(n)) == 0) fail(Err::kDegenerateFace, "degenerate face normal");
  return n;
}

Vec3 poly_centroid(const ConvexPolyhedron& poly) {
  Vec3 c(Rat(0), Rat(0), Rat(0));
  for (const auto& v : poly.vertices) c = c + v;
  return c * Rat(1, static_cast<int>(poly.vertices.size()));
}

Vec3 outward_normal(const ConvexPolyhedron& poly, int f) {
  Vec3 n = face_normal(poly, f);
  Vec3 c = poly_centroid(poly);
  Rat d = dot(n, poly.vertices[poly.faces[f][0]]);
  if (cmp(dot(n, c), d) > 0) n = Vec3(Rat(0) - n.x, Rat(0) - n.y, Rat(0) - n.z);
  return n;
}

}  // namespace

ValidationReport validate_polyhedron(const ConvexPolyhedron& poly) {
  ValidationReport rep;
  std::map<std::pair<int, int>, int> edge_uses;
  for (size_t f = 0; f < poly.faces.size(); ++f) {
    const auto& face = poly.faces[f];
    if (face.size() < 3) {
      rep.violations.push_back("face " + std::to_string(f) + " has fewer than 3 vertices");
      continue;
    }
    for (int v : face)
      if (v < 0 || v >= static_cast<int>(poly.vertices.size())) {
        rep.violations.push_back("face " + std::to_string(f) + " references unknown vertex");
        return rep;
      }
    Vec3 n;
    try {
      n = face_normal(poly, static_cast<int>(f));
    } catch (const Error&) {
      rep.violations.push_back("face " + std::to_string(f) + " is degenerate");
      continue;
    }
    Rat d = dot(n, poly.vertices[face[0]]);
    for (int v : face)
      if (cmp(dot(n, poly.vertices[v]), d) != 0) {
        rep.violations.push_back("face " + std::to_string(f) + " is not planar");
        break;
      }
    // convexity of the face cycle
    for (size_t i = 0; i < face.size(); ++i) {
      const Vec3& a = poly.vertices[face[i]];
      const Vec3& b = poly.vertices[face[(i + 1) % face.size()]];
      const Vec3& c = poly.vertices[face[(i + 2) % face.size()]];
      Vec3 t = cross(b - a, c - b);
      if (sgn(dot(t, n)) <= 0) {
        rep.violations.push_back("face " + std::to_string(f) + " is not convex");
        break;
      }
    }
    for (size_t i = 0; i < face.size(); ++i) {
      int u = face[i], v = face[(i + 1) % face.size()];
      edge_uses[{std::min(u, v), std::max(u, v)}] += 1;
    }
  }
  for (const auto& [e, uses] : edge_uses)
    if (uses != 2)
      rep.violations.push_back("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                               ") lies in " + std::to_string(uses) + " faces");
  // convex position: every vertex strictly inside every other face's plane
  for (size_t f = 0; f < poly.faces.size(); ++f) {
    Vec3 n = outward_normal(poly, static_cast<int>(f));
    Rat d = dot(n, poly.vertices[poly.faces[f][0]]);
    std::set<int> on_face(poly.faces[f].begin(), poly.faces[f].end());
    for (size_t v = 0; v < poly.vertices.size(); ++v) {
      if (on_face.count(static_cast<int>(v))) continue;
      if (cmp(dot(n, poly.vertices[v]), d) >= 0) {
        rep.violations.push_back("vertex " + std::to_string(v) + " not strictly inside face " +
                                 std::to_string(f) + " plane");
      }
    }
  }
  return rep;
}

DescartesReport descartes_check(const ConvexPolyhedron& poly, double tol) {
  DescartesReport rep;
  std::set<std::pair<int, int>> edges;
  for (const auto& face : poly.faces) {
    size_t k = face.size();
    rep.face_degree_sum += static_cast<std::int64_t>(k);
    for (size_t i = 0; i < k; ++i) {
      int u = face[i], v = face[(i + 1) % k];
      edges.insert({std::min(u, v), std::max(u, v)});
      const Vec3& prev = poly.vertices[face[(i + k - 1) % k]];
      const Vec3& cur = poly.vertices[face[i]];
      const Vec3& next = poly.vertices[face[(i + 1) % k]];
      Vec3 a = prev - cur, b = next - cur;
      double num = to_double(dot(a, b));
      double den = std::sqrt(to_double(sq_norm(a))) * std::sqrt(to_double(sq_norm(b)));
      if (den == 0) fail(Err::kDegenerateFace, "zero-length face edge");
      double c = std::clamp(num / den, -1.0, 1.0);
      rep.angle_sum += std::acos(c);
    }
  }
  rep.edge_count = static_cast<std::int64_t>(edges.size());
  rep.edge_identity_ok = rep.face_degree_sum == 2 * rep.edge_count;
  rep.expected = 2.0 * (static_cast<double>(poly.vertices.size()) - 2.0) * M_PI;
  rep.angle_ok = std::abs(rep.angle_sum - rep.expected) < tol;
  return rep;
}

SchlegelResult project_schlegel(const ConvexPolyhedron& poly, int face) {
  if (face < 0 || face >= static_cast<int>(poly.faces.size()))
    fail(Err::kUnknownTriangle, "no face " + std::to_string(face));
  ValidationReport val = validate_polyhedron(poly);
  if (!val.ok()) fail(Err::kDegenerateFace, "invalid polyhedron: " + val.violations.front());

  const auto& fverts = poly.faces[face];
  Vec3 n = outward_normal(poly, face);
  Rat d = dot(n, poly.vertices[fverts[0]]);
  Vec3 fc(Rat(0), Rat(0), Rat(0));
  for (int v : fverts) fc = fc + poly.vertices[v];
  fc = fc * Rat(1, static_cast<int>(fverts.size()));

  // camera inside the face's beyond-region: beyond this face's plane, strictly
  // inside every other face's plane
  Rat tmax(-1);
  bool bounded = false;
  for (size_t g = 0; g < poly.faces.size(); ++g) {
    if (static_cast<int>(g) == face) continue;
    Vec3 m = outward_normal(poly, static_cast<int>(g));
    Rat dg = dot(m, poly.vertices[poly.faces[g][0]]);
    Rat along = dot(m, n);
    if (sgn(along) <= 0) continue;
    Rat tg = (dg - dot(m, fc)) / along;
    if (!bounded || tg < tmax) {
      bounded = true;
      tmax = tg;
    }
  }
  Rat t;
  if (bounded) {
    if (sgn(tmax) <= 0) fail(Err::kCenterInsidePolyhedron, "face has no beyond-region");
    t = tmax / 2;
  } else {
    Rat r2(0);
    Vec3 pc = poly_centroid(poly);
    for (const auto& v : poly.vertices) r2 = std::max(r2, sq_norm(v - pc));
    Rat n2 = sq_norm(n);
    t = (1 + r2) * (1 + n2) / (2 * n2);
  }
  Vec3 camera = fc + n * t;

  // rational 2D frame on the face plane
  Vec3 e1 = poly.vertices[fverts[1]] - poly.vertices[fverts[0]];
  Vec3 e2 = cross(n, e1);
  const Vec3& origin = poly.vertices[fverts[0]];

  SchlegelResult out;
  out.poly.has_coords = true;
  out.poly.cx.add_vertices(static_cast<int>(poly.vertices.size()));
  out.poly.coords.resize(poly.vertices.size());
  for (size_t v = 0; v < poly.vertices.size(); ++v) {
    Rat denom = dot(n, poly.vertices[v] - camera);
    if (sgn(denom) == 0) fail(Err::kProjectionDegenerate, "vertex in the camera plane");
    Rat s = (d - dot(n, camera)) / denom;
    Vec3 img = camera + (poly.vertices[v] - camera) * s;
    out.poly.coords[v] = Vec2(dot(img - origin, e1), dot(img - origin, e2));
  }
  for (size_t g = 0; g < poly.faces.size(); ++g) {
    if (static_cast<int>(g) == face) continue;
    const auto& fv = poly.faces[g];
    size_t base = std::min_element(fv.begin(), fv.end()) - fv.begin();
    for (size_t i = 1; i + 1 < fv.size(); ++i)
      out.poly.cx.add_triangle(fv[base], fv[(base + i) % fv.size()],
                               fv[(base + i + 1) % fv.size()]);
  }
  rebuild_boundary(out.poly);
  out.removed_face = fverts;
  return out;
}

}  // namespace cauchy
