#include "cauchy/cutter.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cauchy/errors.hpp"

namespace cauchy {

namespace {

bool on_segment_closed(const Vec2& a, const Vec2& b, const Vec2& q) {
  if (orient2d(a, b, q) != 0) return false;
  return sgn(dot(q - a, b - a)) >= 0 && sgn(dot(q - b, a - b)) >= 0;
}

bool segments_touch(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
  int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  }
  if (o1 == 0 && on_segment_closed(a, b, c)) return true;
  if (o2 == 0 && on_segment_closed(a, b, d)) return true;
  if (o3 == 0 && on_segment_closed(c, d, a)) return true;
  if (o4 == 0 && on_segment_closed(c, d, b)) return true;
  return false;
}

}  // namespace

void check_curve_simple(const Curve& c) {
  size_t n = c.points.size();
  if (n < 2) fail(Err::kCurveSelfIntersects, "curve needs at least two points");
  if (c.closed) {
    if (c.points.front() != c.points.back())
      fail(Err::kCurveSelfIntersects, "closed curve must end at its base point");
    if (n < 4) fail(Err::kCurveSelfIntersects, "closed curve too short");
  }
  for (size_t i = 0; i + 1 < n; ++i)
    if (c.points[i] == c.points[i + 1])
      fail(Err::kCurveSelfIntersects, "consecutive curve points coincide");
  size_t nseg = n - 1;
  for (size_t i = 0; i < nseg; ++i) {
    for (size_t j = i + 1; j < nseg; ++j) {
      bool adjacent = (j == i + 1) || (c.closed && i == 0 && j == nseg - 1);
      const Vec2 &a = c.points[i], &b = c.points[i + 1];
      const Vec2 &d = c.points[j], &e = c.points[j + 1];
      if (adjacent) {
        const Vec2& joint = (j == i + 1) ? b : a;
        const Vec2& prev = (j == i + 1) ? a : b;
        const Vec2& next = (j == i + 1) ? e : d;
        if (orient2d(prev, joint, next) == 0 && sgn(dot(next - joint, prev - joint)) > 0)
          fail(Err::kCurveSelfIntersects, "curve folds back on itself");
      } else if (segments_touch(a, b, d, e)) {
        fail(Err::kCurveSelfIntersects, "curve segments " + std::to_string(i) + " and " +
                                            std::to_string(j) + " intersect");
      }
    }
  }
}

namespace {

Rat sq_point_segment(const Vec2& w, const Vec2& a, const Vec2& b) {
  Vec2 ab = b - a;
  Rat len2 = dot(ab, ab);
  if (sgn(len2) == 0) return sq_dist(w, a);
  Rat t = dot(w - a, ab) / len2;
  if (sgn(t) < 0) t = 0;
  if (cmp(t, 1) > 0) t = 1;
  return sq_dist(w, a + ab * t);
}

// squared half-minimum-feature clearance: half the least distance from a
// vertex to a non-incident edge
Rat sq_clearance(const PlanarPolygon& p) {
  Rat best(-1);
  const Complex& cx = p.cx;
  for (EdgeId e = 0; e < cx.edge_count(); ++e) {
    const auto& vs = cx.edge_vertices(e);
    for (VertexId w = 0; w < cx.vertex_count(); ++w) {
      if (w == vs[0] || w == vs[1]) continue;
      Rat d = sq_point_segment(p.coords[w], p.coords[vs[0]], p.coords[vs[1]]);
      if (best < 0 || d < best) best = d;
    }
  }
  if (best < 0) fail(Err::kInternal, "clearance undefined");
  return best / 4;
}

bool point_strictly_in_polygon(const PlanarPolygon& p, const Vec2& q) {
  for (TriId t = 0; t < p.cx.triangle_count(); ++t) {
    const auto& vs = p.cx.triangle_vertices(t);
    const Vec2 &a = p.coords[vs[0]], &b = p.coords[vs[1]], &c = p.coords[vs[2]];
    int o = orient2d(a, b, c);
    if (o == 0) continue;
    int s0 = orient2d(a, b, q), s1 = orient2d(b, c, q), s2 = orient2d(c, a, q);
    if ((s0 == o || s0 == 0) && (s1 == o || s1 == 0) && (s2 == o || s2 == 0)) return true;
  }
  return false;
}

bool is_mesh_vertex(const PlanarPolygon& p, const Vec2& q) {
  for (VertexId v = 0; v < p.cx.vertex_count(); ++v)
    if (p.coords[v] == q) return true;
  return false;
}

struct Violation {
  size_t joint;
  Vec2 perp;
};

std::optional<Violation> find_violation(const Curve& c, const PlanarPolygon& p) {
  const Complex& cx = p.cx;
  size_t nseg = c.points.size() - 1;
  for (size_t i = 0; i < nseg; ++i) {
    const Vec2 &s0 = c.points[i], &s1 = c.points[i + 1];
    for (EdgeId e = 0; e < cx.edge_count(); ++e) {
      const auto& vs = cx.edge_vertices(e);
      const Vec2 &a = p.coords[vs[0]], &b = p.coords[vs[1]];
      if (orient2d(a, b, s0) != 0 || orient2d(a, b, s1) != 0) continue;
      Vec2 dir = b - a;
      Rat len2 = dot(dir, dir);
      Rat t0 = dot(s0 - a, dir) / len2;
      Rat t1 = dot(s1 - a, dir) / len2;
      Rat lo = std::min(t0, t1), hi = std::max(t0, t1);
      Rat olo = std::max(lo, Rat(0)), ohi = std::min(hi, Rat(1));
      if (cmp(olo, ohi) >= 0) continue;
      Vec2 plo = a + dir * olo, phi = a + dir * ohi;
      if (is_mesh_vertex(p, plo) && is_mesh_vertex(p, phi)) continue;  // vertex-to-vertex track
      size_t joint = (cmp(t0, 0) > 0 && cmp(t0, 1) < 0) ? i : i + 1;
      Vec2 perp(Rat(0) - dir.y, dir.x);
      size_t other = (joint == i) ? i + 1 : i;
      if (joint == i && i > 0) other = i - 1;
      if (orient2d(a, b, c.points[other]) < 0) perp = Vec2(Rat(0) - perp.x, Rat(0) - perp.y);
      return Violation{joint, perp};
    }
  }
  for (size_t i = 1; i + 1 < c.points.size(); ++i) {
    const Vec2& q = c.points[i];
    if (is_mesh_vertex(p, q)) continue;
    for (EdgeId e = 0; e < cx.edge_count(); ++e) {
      const auto& vs = cx.edge_vertices(e);
      const Vec2 &a = p.coords[vs[0]], &b = p.coords[vs[1]];
      if (orient2d(a, b, q) != 0) continue;
      if (sgn(dot(q - a, b - a)) <= 0 || sgn(dot(q - b, a - b)) <= 0) continue;
      int sp = orient2d(a, b, c.points[i - 1]);
      int sn = orient2d(a, b, c.points[i + 1]);
      if (sp * sn > 0) {  // joint touches the edge without crossing it
        Vec2 dir = b - a;
        Vec2 perp(Rat(0) - dir.y, dir.x);
        if (sp < 0) perp = Vec2(Rat(0) - perp.x, Rat(0) - perp.y);
        return Violation{i, perp};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Curve transversalize(const Curve& c, const PlanarPolygon& p) {
  if (!p.has_coords) fail(Err::kInternal, "transversalize needs coordinates");
  check_curve_simple(c);
  for (const Vec2& q : c.points)
    if (!point_strictly_in_polygon(p, q))
      fail(Err::kCurveNotInPolygon, "curve leaves the polygon");
  Curve cur = c;
  Rat d2 = sq_clearance(p);
  for (int round = 0; round < 64; ++round) {
    auto v = find_violation(cur, p);
    if (!v) return cur;
    Rat scale(1);
    Vec2 base = cur.points[v->joint];
    bool placed = false;
    for (int halving = 0; halving < 200 && !placed; ++halving) {
      Vec2 cand = base + v->perp * scale;
      if (cmp(sq_dist(cand, base), d2) < 0 && point_strictly_in_polygon(p, cand)) {
        cur.points[v->joint] = cand;
        if (cur.closed && (v->joint == 0 || v->joint + 1 == cur.points.size())) {
          cur.points.front() = cand;
          cur.points.back() = cand;
        }
        placed = true;
      }
      scale /= 2;
    }
    if (!placed) fail(Err::kCurveNotTransversal, "cannot nudge the curve clear of the skeleton");
    check_curve_simple(cur);
  }
  fail(Err::kCurveNotTransversal, "perturbation did not converge");
}

namespace {

struct Locus {
  enum Kind { kInside, kOnEdge, kAtVertex } kind = kInside;
  VertexId v = -1;            // split-point or vertex id
  VertexId eu = -1, ev = -1;  // kOnEdge side corners
  Vec2 pt;
};

struct Carver {
  std::vector<std::array<VertexId, 3>> tris;
  std::vector<char> alive;
  std::vector<Vec2> coords;
  std::vector<VertexId> curve_verts;
  std::vector<std::pair<VertexId, VertexId>> curve_edges;
  std::set<std::pair<VertexId, VertexId>> curve_edge_set;
  std::set<VertexId> visited;
  bool closing_allowed = false;

  explicit Carver(const PlanarPolygon& p) : coords(p.coords) {
    for (TriId t = 0; t < p.cx.triangle_count(); ++t) {
      tris.push_back(p.cx.triangle_vertices(t));
      alive.push_back(1);
    }
  }

  VertexId add_vertex(const Vec2& pt) {
    coords.push_back(pt);
    return static_cast<VertexId>(coords.size() - 1);
  }

  int spawn(VertexId a, VertexId b, VertexId c) {
    tris.push_back({a, b, c});
    alive.push_back(1);
    return static_cast<int>(tris.size()) - 1;
  }

  void push_curve_vertex(VertexId v) {
    if (!curve_verts.empty()) {
      VertexId prev = curve_verts.back();
      if (prev == v) fail(Err::kInternal, "repeated curve vertex");
      auto key = std::minmax(prev, v);
      if (!curve_edge_set.insert({key.first, key.second}).second)
        fail(Err::kCurveSelfIntersects, "curve retraces its own edge");
      curve_edges.push_back({prev, v});
    }
    bool closes = closing_allowed && !curve_verts.empty() && v == curve_verts.front();
    if (visited.count(v) && !closes)
      fail(Err::kCurveSelfIntersects, "curve revisits vertex " + std::to_string(v));
    visited.insert(v);
    curve_verts.push_back(v);
  }

  void guard_side_split(VertexId u, VertexId v) {
    auto key = std::minmax(u, v);
    if (curve_edge_set.count({key.first, key.second}))
      fail(Err::kCurveSelfIntersects, "curve crosses its own path");
  }

  int containing(const Vec2& q, bool* on_skeleton = nullptr) const {
    if (on_skeleton) *on_skeleton = false;
    for (size_t t = 0; t < tris.size(); ++t) {
      if (!alive[t]) continue;
      const Vec2 &a = coords[tris[t][0]], &b = coords[tris[t][1]], &c = coords[tris[t][2]];
      int o = orient2d(a, b, c);
      if (o == 0) continue;
      int s0 = orient2d(a, b, q), s1 = orient2d(b, c, q), s2 = orient2d(c, a, q);
      if (s0 == o && s1 == o && s2 == o) return static_cast<int>(t);
      if ((s0 == o || s0 == 0) && (s1 == o || s1 == 0) && (s2 == o || s2 == 0) && on_skeleton)
        *on_skeleton = true;
    }
    return -1;
  }
};

Vec2 waypoint(const Vec2& a, const Vec2& b, const Vec2& opposite) {
  Rat half(1, 2);
  return ((a + b) * half + opposite) * half;
}

}  // namespace

SubdivisionResult subdivide_along(const PlanarPolygon& p, const Curve& curve) {
  if (!p.has_coords) fail(Err::kInternal, "subdivide_along needs coordinates");
  check_curve_simple(curve);
  const auto& pts = curve.points;
  size_t nseg = pts.size() - 1;

  Carver cv(p);
  cv.closing_allowed = curve.closed;

  Locus loc;
  {
    VertexId startv = -1;
    for (VertexId v = 0; v < p.cx.vertex_count(); ++v)
      if (p.coords[v] == pts[0]) startv = v;
    if (startv >= 0) {
      if (curve.closed)
        fail(Err::kCurveNotTransversal, "closed curve must start inside a face");
      loc.kind = Locus::kAtVertex;
      loc.v = startv;
      loc.pt = pts[0];
      cv.push_curve_vertex(startv);
    } else {
      bool on_skel = false;
      if (cv.containing(pts[0], &on_skel) < 0)
        fail(on_skel ? Err::kCurveNotTransversal : Err::kCurveNotInPolygon,
             "curve start must lie strictly inside a triangle or at a vertex");
      loc.kind = Locus::kInside;
      loc.pt = pts[0];
    }
  }

  size_t seg = 0;
  Rat tpar(0);
  auto forward_point = [&](size_t s, const Rat& t) -> std::optional<Vec2> {
    if (s < nseg && cmp(t, 1) < 0) return pts[s + 1];
    if (s + 2 < pts.size()) return pts[s + 2];
    return std::nullopt;
  };
  auto advance_full_segments = [&]() {
    while (seg < nseg && cmp(tpar, 1) == 0) {
      seg += 1;
      tpar = 0;
    }
  };

  int guard = 0;
  while (true) {
    if (++guard > 500000) fail(Err::kInternal, "curve walk did not terminate");
    advance_full_segments();

    if (loc.kind == Locus::kAtVertex) {
      if (seg >= nseg) break;  // curve ends at this vertex
      Vec2 fwd = pts[seg + 1];
      if (cv.coords[loc.v] == fwd) {  // the joint coincides with this vertex
        seg += 1;
        tpar = 0;
        continue;
      }
      // an existing edge running from here toward the target is consumed as-is
      VertexId best = -1;
      Rat best_d2;
      for (size_t t = 0; t < cv.tris.size(); ++t) {
        if (!cv.alive[t]) continue;
        bool has_v = false;
        for (VertexId w : cv.tris[t]) has_v = has_v || w == loc.v;
        if (!has_v) continue;
        for (VertexId w : cv.tris[t]) {
          if (w == loc.v) continue;
          const Vec2& wp = cv.coords[w];
          if (orient2d(loc.pt, fwd, wp) != 0) continue;
          if (sgn(dot(wp - loc.pt, fwd - loc.pt)) <= 0) continue;
          if (cmp(sq_dist(loc.pt, wp), sq_dist(loc.pt, fwd)) > 0) continue;
          Rat d2 = sq_dist(loc.pt, wp);
          if (best < 0 || d2 < best_d2) {
            best = w;
            best_d2 = d2;
          }
        }
      }
      if (best >= 0) {
        cv.guard_side_split(loc.v, best);
        cv.push_curve_vertex(best);
        Vec2 dir = pts[seg + 1] - pts[seg];
        tpar = dot(cv.coords[best] - pts[seg], dir) / dot(dir, dir);
        loc.v = best;
        loc.pt = cv.coords[best];
        continue;
      }
    }

    // triangle the curve proceeds into
    int T = -1;
    if (loc.kind == Locus::kInside) {
      T = cv.containing(loc.pt);
      if (T < 0) fail(Err::kInternal, "lost the containing triangle");
    } else if (loc.kind == Locus::kOnEdge) {
      auto fwd = forward_point(seg, tpar);
      if (!fwd) fail(Err::kCurveNotTransversal, "curve endpoint on an edge interior");
      int side = orient2d(cv.coords[loc.eu], cv.coords[loc.ev], *fwd);
      if (side == 0) fail(Err::kCurveNotTransversal, "curve grazes an edge");
      for (size_t t = 0; t < cv.tris.size() && T < 0; ++t) {
        if (!cv.alive[t]) continue;
        int iu = -1, iv = -1;
        for (int k = 0; k < 3; ++k) {
          if (cv.tris[t][k] == loc.eu) iu = k;
          if (cv.tris[t][k] == loc.ev) iv = k;
        }
        if (iu < 0 || iv < 0) continue;
        VertexId w = cv.tris[t][3 - iu - iv];
        if (orient2d(cv.coords[loc.eu], cv.coords[loc.ev], cv.coords[w]) == side)
          T = static_cast<int>(t);
      }
      if (T < 0) fail(Err::kCurveNotInPolygon, "curve crosses the polygon boundary");
    } else {
      if (seg >= nseg) break;
      Vec2 fwd = pts[seg + 1];
      for (size_t t = 0; t < cv.tris.size() && T < 0; ++t) {
        if (!cv.alive[t]) continue;
        int iv = -1;
        for (int k = 0; k < 3; ++k)
          if (cv.tris[t][k] == loc.v) iv = k;
        if (iv < 0) continue;
        VertexId x = cv.tris[t][(iv + 1) % 3], y = cv.tris[t][(iv + 2) % 3];
        const Vec2 &pv = cv.coords[loc.v], &px = cv.coords[x], &py = cv.coords[y];
        int o = orient2d(pv, px, py);
        if (o == 0) continue;
        if (orient2d(pv, px, fwd) == o && orient2d(pv, py, fwd) == -o) T = static_cast<int>(t);
      }
      if (T < 0) fail(Err::kCurveNotInPolygon, "curve leaves the polygon at a vertex");
    }

    // exit search
    const auto tv = cv.tris[T];
    Vec2 cur_pt = loc.pt;
    bool exited = false;
    Locus exit_loc;
    while (!exited && seg < nseg) {
      Vec2 s1 = pts[seg + 1];
      bool found = false;
      Rat best_t;
      Vec2 best_q;
      int best_side = -1;
      for (int k = 0; k < 3; ++k) {
        const Vec2 &pa = cv.coords[tv[k]], &pb = cv.coords[tv[(k + 1) % 3]];
        Vec2 d1 = s1 - cur_pt;
        Vec2 d2 = pb - pa;
        Rat den = cross(d1, d2);
        if (sgn(den) == 0) {
          if (orient2d(pa, pb, cur_pt) == 0 && orient2d(pa, pb, s1) == 0)
            fail(Err::kCurveNotTransversal, "curve runs along an edge");
          continue;
        }
        Rat tt = cross(pa - cur_pt, d2) / den;
        Rat ss = cross(pa - cur_pt, d1) / den;
        if (sgn(tt) <= 0 || cmp(tt, 1) > 0 || sgn(ss) < 0 || cmp(ss, 1) > 0) continue;
        Vec2 q = cur_pt + d1 * tt;
        if (q == loc.pt) continue;
        if (!found || tt < best_t) {
          found = true;
          best_t = tt;
          best_q = q;
          best_side = k;
        }
      }
      if (!found) {
        cur_pt = s1;
        seg += 1;
        tpar = 0;
        continue;
      }
      Vec2 dir = pts[seg + 1] - pts[seg];
      tpar = dot(best_q - pts[seg], dir) / dot(dir, dir);
      VertexId hit = -1;
      for (int k = 0; k < 3; ++k)
        if (cv.coords[tv[k]] == best_q) hit = tv[k];
      if (hit >= 0) {
        exit_loc.kind = Locus::kAtVertex;
        exit_loc.v = hit;
        exit_loc.pt = best_q;
      } else {
        exit_loc.kind = Locus::kOnEdge;
        exit_loc.eu = tv[best_side];
        exit_loc.ev = tv[(best_side + 1) % 3];
        exit_loc.pt = best_q;
        auto fwd = forward_point(seg, tpar);
        if (!fwd) fail(Err::kCurveNotTransversal, "curve endpoint on an edge interior");
        VertexId inner_v = tv[3 - best_side - (best_side + 1) % 3];
        int inner = orient2d(cv.coords[exit_loc.eu], cv.coords[exit_loc.ev], cv.coords[inner_v]);
        int fside = orient2d(cv.coords[exit_loc.eu], cv.coords[exit_loc.ev], *fwd);
        if (fside == inner || fside == 0)
          fail(Err::kCurveNotTransversal, "curve touches an edge without crossing");
      }
      exited = true;
    }

    VertexId A = tv[0], B = tv[1], C = tv[2];
    auto side_index = [&](VertexId u, VertexId v) {
      for (int k = 0; k < 3; ++k) {
        VertexId a = tv[k], b = tv[(k + 1) % 3];
        if ((a == u && b == v) || (a == v && b == u)) return k;
      }
      return -1;
    };
    cv.alive[T] = 0;

    // triangles around `apex`, splitting the given sides at their points
    auto fan_with_splits = [&](VertexId apex, const std::map<int, VertexId>& splits) {
      for (int k = 0; k < 3; ++k) {
        VertexId u = tv[k], v = tv[(k + 1) % 3];
        auto it = splits.find(k);
        if (it != splits.end()) {
          cv.guard_side_split(u, v);
          cv.spawn(u, it->second, apex);
          cv.spawn(it->second, v, apex);
        } else {
          cv.spawn(u, v, apex);
        }
      }
    };

    if (!exited) {
      // open curve ends strictly inside T
      Vec2 endpt = pts.back();
      VertexId x1 = cv.add_vertex(endpt);
      if (loc.kind == Locus::kInside) {
        // whole curve within one triangle: fan x0, then re-fan the piece with x1
        VertexId x0 = cv.add_vertex(loc.pt);
        cv.push_curve_vertex(x0);
        int f0 = cv.spawn(A, B, x0);
        int f1 = cv.spawn(B, C, x0);
        int f2 = cv.spawn(C, A, x0);
        int host = -1;
        for (int f : {f0, f1, f2}) {
          const auto& w = cv.tris[f];
          const Vec2 &a = cv.coords[w[0]], &b = cv.coords[w[1]], &c = cv.coords[w[2]];
          int o = orient2d(a, b, c);
          if (o != 0 && orient2d(a, b, endpt) == o && orient2d(b, c, endpt) == o &&
              orient2d(c, a, endpt) == o)
            host = f;
        }
        if (host < 0) fail(Err::kCurveNotTransversal, "curve end lies on a subdivision edge");
        auto w = cv.tris[host];
        cv.alive[host] = 0;
        cv.spawn(w[0], w[1], x1);
        cv.spawn(w[1], w[2], x1);
        cv.spawn(w[2], w[0], x1);
        cv.push_curve_vertex(x1);
      } else if (loc.kind == Locus::kOnEdge) {
        int k = side_index(loc.eu, loc.ev);
        fan_with_splits(x1, {{k, loc.v}});
        cv.push_curve_vertex(x1);
      } else {
        fan_with_splits(x1, {});
        cv.push_curve_vertex(x1);
      }
      break;
    }

    if (loc.kind == Locus::kInside) {
      VertexId x0 = cv.add_vertex(loc.pt);
      cv.push_curve_vertex(x0);
      if (exit_loc.kind == Locus::kOnEdge) {
        VertexId q = cv.add_vertex(exit_loc.pt);
        fan_with_splits(x0, {{side_index(exit_loc.eu, exit_loc.ev), q}});
        cv.push_curve_vertex(q);
        exit_loc.v = q;
      } else {
        fan_with_splits(x0, {});
        cv.push_curve_vertex(exit_loc.v);
      }
    } else if (loc.kind == Locus::kAtVertex) {
      VertexId v = loc.v;
      if (exit_loc.kind == Locus::kAtVertex) {
        VertexId w = exit_loc.v;
        VertexId u = -1;
        for (VertexId cand : {A, B, C})
          if (cand != v && cand != w) u = cand;
        VertexId f = cv.add_vertex(waypoint(cv.coords[v], cv.coords[w], cv.coords[u]));
        cv.spawn(v, u, f);
        cv.spawn(u, f, w);
        cv.spawn(v, f, w);
        cv.push_curve_vertex(f);
        cv.push_curve_vertex(w);
      } else {
        VertexId q = cv.add_vertex(exit_loc.pt);
        bool adjacent = (exit_loc.eu == v || exit_loc.ev == v);
        if (!adjacent) {
          int k = side_index(exit_loc.eu, exit_loc.ev);
          cv.guard_side_split(tv[k], tv[(k + 1) % 3]);
          cv.spawn(v, tv[k], q);
          cv.spawn(v, q, tv[(k + 1) % 3]);
          cv.push_curve_vertex(q);
        } else {
          VertexId cend = (exit_loc.eu == v) ? exit_loc.ev : exit_loc.eu;
          VertexId b = -1;
          for (VertexId cand : {A, B, C})
            if (cand != v && cand != cend) b = cand;
          VertexId f = cv.add_vertex(waypoint(cv.coords[v], exit_loc.pt, cv.coords[b]));
          cv.guard_side_split(v, cend);
          cv.spawn(v, b, f);
          cv.spawn(b, f, q);
          cv.spawn(b, q, cend);
          cv.spawn(v, f, q);
          cv.push_curve_vertex(f);
          cv.push_curve_vertex(q);
        }
        exit_loc.v = q;
      }
    } else {
      // entry through an edge at the split point created by the previous carve
      VertexId d = loc.v;
      VertexId X = loc.eu, Z = loc.ev;
      VertexId bopp = -1;
      for (VertexId cand : {A, B, C})
        if (cand != X && cand != Z) bopp = cand;

      if (exit_loc.kind == Locus::kAtVertex) {
        VertexId w = exit_loc.v;
        if (w == bopp) {
          cv.guard_side_split(X, Z);
          cv.spawn(X, bopp, d);
          cv.spawn(d, bopp, Z);
          cv.push_curve_vertex(w);
        } else {
          VertexId other = (w == X) ? Z : X;
          VertexId f = cv.add_vertex(waypoint(cv.coords[d], cv.coords[w], cv.coords[bopp]));
          cv.guard_side_split(X, Z);
          cv.spawn(other, bopp, d);
          cv.spawn(d, bopp, f);
          cv.spawn(bopp, f, w);
          cv.spawn(d, f, w);
          cv.push_curve_vertex(f);
          cv.push_curve_vertex(w);
        }
      } else {
        VertexId q = cv.add_vertex(exit_loc.pt);
        int ke = side_index(exit_loc.eu, exit_loc.ev);
        VertexId qu = tv[ke], qv = tv[(ke + 1) % 3];
        bool same_side = (qu == X && qv == Z) || (qu == Z && qv == X);
        if (same_side) {
          Vec2 dir = cv.coords[Z] - cv.coords[X];
          Rat pd = dot(cv.coords[d] - cv.coords[X], dir);
          Rat pq = dot(q >= 0 ? cv.coords[q] - cv.coords[X] : cv.coords[X], dir);
          VertexId nearX = d, nearZ = q;
          if (cmp(pd, pq) > 0) std::swap(nearX, nearZ);
          VertexId f = cv.add_vertex(waypoint(cv.coords[d], cv.coords[q], cv.coords[bopp]));
          cv.guard_side_split(X, Z);
          cv.spawn(X, bopp, nearX);
          cv.spawn(bopp, nearX, f);
          cv.spawn(bopp, f, nearZ);
          cv.spawn(bopp, nearZ, Z);
          cv.spawn(nearX, f, nearZ);
          cv.push_curve_vertex(f);
          cv.push_curve_vertex(q);
        } else {
          VertexId s = (qu == X || qu == Z) ? qu : qv;
          VertexId Q = (s == qu) ? qv : qu;
          VertexId P = (s == X) ? Z : X;
          cv.guard_side_split(X, Z);
          cv.guard_side_split(qu, qv);
          cv.spawn(s, d, q);
          cv.spawn(P, q, d);
          cv.spawn(P, q, Q);
          cv.push_curve_vertex(q);
        }
        exit_loc.v = q;
      }
    }

    loc = exit_loc;
    if (seg >= nseg) {
      if (loc.kind != Locus::kAtVertex)
        fail(Err::kCurveNotTransversal, "curve endpoint on an edge interior");
      break;
    }
  }

  SubdivisionResult res;
  res.poly.has_coords = true;
  res.poly.coords = cv.coords;
  res.poly.cx.add_vertices(static_cast<int>(cv.coords.size()));
  for (size_t t = 0; t < cv.tris.size(); ++t)
    if (cv.alive[t]) res.poly.cx.add_triangle(cv.tris[t][0], cv.tris[t][1], cv.tris[t][2]);
  res.poly.word = p.word;
  std::optional<VertexId> anchor;
  if (!p.boundary_verts.empty()) anchor = p.boundary_verts[0];
  rebuild_boundary(res.poly, anchor);
  if (euler_characteristic(res.poly.cx) != euler_characteristic(p.cx))
    fail(Err::kInternal, "subdivision changed the Euler characteristic");
  res.curve_verts = cv.curve_verts;
  for (const auto& [u, v] : cv.curve_edges) {
    auto e = res.poly.cx.find_edge(u, v);
    if (!e) fail(Err::kInternal, "curve edge missing from T'");
    res.curve_edges.push_back(*e);
  }
  return res;
}

CutResult cut_open(const LabeledComplex& lc, const std::vector<EdgeId>& path, int label_seed) {
  const Complex& cx = lc.cx;
  if (path.empty()) fail(Err::kCurveNotSubcomplex, "empty cut path");
  for (EdgeId e : path) {
    if (e < 0 || e >= cx.edge_count()) fail(Err::kCurveNotSubcomplex, "unknown edge");
    if (cx.edge_triangles(e).size() != 2)
      fail(Err::kCurveNotSubcomplex, "cut edge " + std::to_string(e) + " is not interior");
  }
  std::vector<VertexId> vpath;
  if (path.size() == 1) {
    vpath = {cx.edge_vertices(path[0])[0], cx.edge_vertices(path[0])[1]};
  } else {
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      const auto& a = cx.edge_vertices(path[i]);
      const auto& b = cx.edge_vertices(path[i + 1]);
      VertexId shared = (a[0] == b[0] || a[0] == b[1]) ? a[0] : a[1];
      if (shared != b[0] && shared != b[1])
        fail(Err::kCurveNotSubcomplex, "cut edges are not consecutive");
      if (i == 0) vpath.push_back(a[0] == shared ? a[1] : a[0]);
      vpath.push_back(shared);
      if (i + 2 == path.size()) vpath.push_back(b[0] == shared ? b[1] : b[0]);
    }
  }
  bool cycle = vpath.front() == vpath.back() && vpath.size() > 2;
  {
    std::set<VertexId> seen;
    size_t upto = vpath.size() - (cycle ? 1 : 0);
    for (size_t i = 0; i < upto; ++i)
      if (!seen.insert(vpath[i]).second) fail(Err::kCurveNotSubcomplex, "cut path is not simple");
  }
  std::set<EdgeId> cut(path.begin(), path.end());
  if (cut.size() != path.size()) fail(Err::kCurveNotSubcomplex, "repeated cut edge");

  std::vector<char> is_cut_vertex(cx.vertex_count(), 0);
  for (size_t i = 0; i < vpath.size() - (cycle ? 1 : 0); ++i) is_cut_vertex[vpath[i]] = 1;

  // fan components around each cut vertex through non-cut incident edges
  std::vector<std::map<TriId, int>> comp_of(cx.vertex_count());
  std::vector<int> ncomp(cx.vertex_count(), 0);
  for (VertexId v = 0; v < cx.vertex_count(); ++v) {
    if (!is_cut_vertex[v]) continue;
    std::vector<TriId> star;
    for (TriId t = 0; t < cx.triangle_count(); ++t)
      for (VertexId w : cx.triangle_vertices(t))
        if (w == v && !comp_of[v].count(t)) {
          comp_of[v][t] = -1;
          star.push_back(t);
        }
    int comp = 0;
    for (TriId s : star) {
      if (comp_of[v][s] >= 0) continue;
      std::vector<TriId> stack{s};
      comp_of[v][s] = comp;
      while (!stack.empty()) {
        TriId t = stack.back();
        stack.pop_back();
        for (EdgeId e : cx.triangle_edges(t)) {
          const auto& vs = cx.edge_vertices(e);
          if (vs[0] != v && vs[1] != v) continue;
          if (cut.count(e)) continue;
          for (TriId t2 : cx.edge_triangles(e))
            if (comp_of[v].count(t2) && comp_of[v][t2] < 0) {
              comp_of[v][t2] = comp;
              stack.push_back(t2);
            }
        }
      }
      ++comp;
    }
    ncomp[v] = comp;
  }

  CutResult out;
  Complex& nc = out.complex.cx;
  nc.add_vertices(cx.vertex_count());
  std::vector<std::vector<VertexId>> copy_id(cx.vertex_count());
  for (VertexId v = 0; v < cx.vertex_count(); ++v) {
    copy_id[v].assign(std::max(1, ncomp[v]), v);
  }
  for (VertexId v = 0; v < cx.vertex_count(); ++v)
    for (int k = 1; k < ncomp[v]; ++k) copy_id[v][k] = nc.add_vertex();

  auto mapped = [&](VertexId v, TriId t) {
    if (!is_cut_vertex[v]) return v;
    return copy_id[v][comp_of[v].at(t)];
  };

  std::vector<EdgeId> emap(cx.edge_count(), -1);
  std::map<std::pair<EdgeId, TriId>, EdgeId> cut_copy;
  for (EdgeId e = 0; e < cx.edge_count(); ++e) {
    const auto& vs = cx.edge_vertices(e);
    if (!cut.count(e)) {
      TriId t0 = cx.edge_triangles(e).empty() ? -1 : cx.edge_triangles(e)[0];
      VertexId u = t0 >= 0 ? mapped(vs[0], t0) : vs[0];
      VertexId v = t0 >= 0 ? mapped(vs[1], t0) : vs[1];
      emap[e] = nc.add_edge_raw(u, v);
    } else {
      for (TriId t : cx.edge_triangles(e))
        cut_copy[{e, t}] = nc.add_edge_raw(mapped(vs[0], t), mapped(vs[1], t));
    }
  }
  for (TriId t = 0; t < cx.triangle_count(); ++t) {
    const auto& es = cx.triangle_edges(t);
    const auto& vs = cx.triangle_vertices(t);
    std::array<EdgeId, 3> nes;
    for (int k = 0; k < 3; ++k) nes[k] = cut.count(es[k]) ? cut_copy.at({es[k], t}) : emap[es[k]];
    nc.add_triangle_raw(nes, {mapped(vs[0], t), mapped(vs[1], t), mapped(vs[2], t)});
  }

  for (const auto& [e, lab] : lc.labels) {
    TriId t0 = cx.edge_triangles(e)[0];
    out.complex.labels[emap[e]] = {lab.label, mapped(lab.tail, t0)};
  }
  for (size_t i = 0; i < path.size(); ++i) {
    EdgeId e = path[i];
    std::string label = "c" + std::to_string(label_seed + static_cast<int>(i));
    out.labels.push_back(label);
    VertexId tail = vpath[i];
    for (TriId t : cx.edge_triangles(e))
      out.complex.labels[cut_copy.at({e, t})] = {label, mapped(tail, t)};
  }

  if (nc.triangle_count() > 0) {
    std::vector<char> seen(nc.triangle_count(), 0);
    std::vector<TriId> stack{0};
    seen[0] = 1;
    int visited = 0;
    while (!stack.empty()) {
      TriId t = stack.back();
      stack.pop_back();
      ++visited;
      for (EdgeId e : nc.triangle_edges(t))
        for (TriId t2 : nc.edge_triangles(e))
          if (!seen[t2]) {
            seen[t2] = 1;
            stack.push_back(t2);
          }
    }
    if (visited != nc.triangle_count()) fail(Err::kCutDisconnects, "cut separates the surface");
  }
  return out;
}

}  // namespace cauchy
