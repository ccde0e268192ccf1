#include "cauchy/lift.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "cauchy/errors.hpp"

namespace cauchy {

std::vector<TriId> RemovalSchedule::order() const {
  std::vector<TriId> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.tri);
  return out;
}

namespace {

std::vector<char> boundary_vertex_flags(const PlanarPolygon& p) {
  std::vector<char> onb(p.cx.vertex_count(), 0);
  for (VertexId v : p.boundary_verts) onb[v] = 1;
  return onb;
}

bool has_boundary_edge(const Complex& cx, TriId t) {
  for (EdgeId e : cx.triangle_edges(t))
    if (cx.edge_triangles(e).size() == 1) return true;
  return false;
}

}  // namespace

TriId pick_base(const PlanarPolygon& p, const Vec2& point) {
  if (!p.has_coords) fail(Err::kInternal, "pick_base needs coordinates");
  for (TriId t = 0; t < p.cx.triangle_count(); ++t) {
    const auto& vs = p.cx.triangle_vertices(t);
    const Vec2& a = p.coords[vs[0]];
    const Vec2& b = p.coords[vs[1]];
    const Vec2& c = p.coords[vs[2]];
    int o = orient2d(a, b, c);
    if (o == 0) continue;
    int s0 = orient2d(a, b, point), s1 = orient2d(b, c, point), s2 = orient2d(c, a, point);
    if (s0 == o && s1 == o && s2 == o) {
      if (has_boundary_edge(p.cx, t))
        fail(Err::kPointInBoundaryTriangle,
             "triangle " + std::to_string(t) + " has a boundary edge");
      return t;
    }
    bool on_closure = (s0 == o || s0 == 0) && (s1 == o || s1 == 0) && (s2 == o || s2 == 0);
    if (on_closure && (s0 == 0 || s1 == 0 || s2 == 0))
      fail(Err::kPointOnSkeleton, "point lies on the 1-skeleton");
  }
  fail(Err::kPointOnSkeleton, "point is not strictly inside any triangle");
}

HeightAssignment order_vertices(const PlanarPolygon& p, TriId base, LiftMetric metric,
                                std::optional<Vec2> reference) {
  if (base < 0 || base >= p.cx.triangle_count()) fail(Err::kUnknownTriangle, std::to_string(base));
  HeightAssignment h;
  h.base = base;
  h.metric = metric;
  h.level.assign(p.cx.vertex_count(), -1);

  std::vector<char> onb = boundary_vertex_flags(p);
  const auto& bvs = p.cx.triangle_vertices(base);
  std::vector<char> is_base(p.cx.vertex_count(), 0);
  for (VertexId v : bvs) is_base[v] = 1;

  std::vector<VertexId> interior;
  for (VertexId v = 0; v < p.cx.vertex_count(); ++v)
    if (!is_base[v] && !onb[v]) interior.push_back(v);

  if (metric == LiftMetric::kEuclidean) {
    if (!p.has_coords) fail(Err::kInternal, "euclidean metric needs coordinates");
    Vec2 ref;
    if (reference) {
      ref = *reference;
    } else {
      Rat third(1, 3);
      ref = (p.coords[bvs[0]] + p.coords[bvs[1]] + p.coords[bvs[2]]) * third;
    }
    std::sort(interior.begin(), interior.end(), [&](VertexId a, VertexId b) {
      Rat da = sq_dist(p.coords[a], ref);
      Rat db = sq_dist(p.coords[b], ref);
      int c = cmp(da, db);
      if (c != 0) return c < 0;
      return a < b;
    });
  } else {
    // BFS layers over edges between non-boundary vertices, from the base corners
    std::vector<int> layer(p.cx.vertex_count(), -1);
    std::queue<VertexId> q;
    for (VertexId v : bvs) {
      layer[v] = 0;
      q.push(v);
    }
    std::vector<std::vector<VertexId>> nbrs(p.cx.vertex_count());
    for (EdgeId e = 0; e < p.cx.edge_count(); ++e) {
      const auto& vs = p.cx.edge_vertices(e);
      if (onb[vs[0]] || onb[vs[1]]) continue;
      nbrs[vs[0]].push_back(vs[1]);
      nbrs[vs[1]].push_back(vs[0]);
    }
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : nbrs[v])
        if (layer[w] < 0) {
          layer[w] = layer[v] + 1;
          q.push(w);
        }
    }
    for (VertexId v : interior)
      if (layer[v] < 0)
        fail(Err::kInternal, "interior vertex " + std::to_string(v) +
                                 " unreachable from the base through interior edges");
    std::sort(interior.begin(), interior.end(), [&](VertexId a, VertexId b) {
      if (layer[a] != layer[b]) return layer[a] < layer[b];
      return a < b;
    });
  }

  h.interior_count = static_cast<int>(interior.size());
  for (VertexId v : bvs) h.level[v] = 0;
  for (int i = 0; i < h.interior_count; ++i) h.level[interior[i]] = i + 1;
  for (VertexId v = 0; v < p.cx.vertex_count(); ++v)
    if (onb[v] && h.level[v] < 0) h.level[v] = h.interior_count + 1;
  for (VertexId v = 0; v < p.cx.vertex_count(); ++v)
    if (h.level[v] < 0) fail(Err::kInternal, "vertex without a level");
  return h;
}

namespace {

// a point of a level section with the triangle sides it lies on
struct SectionPt {
  VertexId v;
  int side_a;  // side indices 0..2, -1 when absent
  int side_b;
};

bool shares_side(const SectionPt& p, const SectionPt& q) {
  return (p.side_a >= 0 && (p.side_a == q.side_a || p.side_a == q.side_b)) ||
         (p.side_b >= 0 && (p.side_b == q.side_a || p.side_b == q.side_b));
}

}  // namespace

SubdividedPolygon subdivide_levels(const PlanarPolygon& p, const HeightAssignment& h) {
  if (!p.has_coords) fail(Err::kInternal, "subdivide_levels needs coordinates");
  int n = h.interior_count;
  SubdividedPolygon out;
  out.interior_count = n;
  out.poly.has_coords = true;
  out.poly.word = p.word;
  Complex& cx = out.poly.cx;
  cx.add_vertices(p.cx.vertex_count());
  out.poly.coords = p.coords;
  out.level = h.level;

  // chain of inserted vertices per original edge, ordered by increasing level
  std::vector<std::vector<VertexId>> chain(p.cx.edge_count());
  for (EdgeId e = 0; e < p.cx.edge_count(); ++e) {
    auto vs = p.cx.edge_vertices(e);
    VertexId u = vs[0], v = vs[1];
    if (h.level[u] > h.level[v]) std::swap(u, v);
    int lu = h.level[u], lv = h.level[v];
    for (int l = lu + 1; l < lv; ++l) {
      // lifted heights H = (n+1) - level are integers, so the crossing
      // parameter along the lifted segment is rational
      Rat t(l - lu, lv - lu);
      Vec2 pos = p.coords[u] + (p.coords[v] - p.coords[u]) * t;
      VertexId nv = cx.add_vertex();
      out.poly.coords.push_back(pos);
      out.level.push_back(l);
      chain[e].push_back(nv);
    }
  }

  // per-triangle piece construction between consecutive level planes
  for (TriId t = 0; t < p.cx.triangle_count(); ++t) {
    const auto& tvs = p.cx.triangle_vertices(t);
    const auto& tes = p.cx.triangle_edges(t);
    // side k joins corner k and corner k+1 (match edge ids by vertex pair)
    int side_edge[3];
    for (int k = 0; k < 3; ++k) {
      VertexId a = tvs[k], b = tvs[(k + 1) % 3];
      side_edge[k] = -1;
      for (EdgeId e : tes) {
        const auto& evs = p.cx.edge_vertices(e);
        if ((evs[0] == a && evs[1] == b) || (evs[0] == b && evs[1] == a)) side_edge[k] = e;
      }
      if (side_edge[k] < 0) fail(Err::kInternal, "triangle side without edge");
    }
    int lv[3] = {h.level[tvs[0]], h.level[tvs[1]], h.level[tvs[2]]};
    int minl = std::min({lv[0], lv[1], lv[2]});
    int maxl = std::max({lv[0], lv[1], lv[2]});

    auto section = [&](int l) {
      std::vector<SectionPt> pts;
      for (int k = 0; k < 3; ++k)
        if (lv[k] == l) pts.push_back({tvs[k], (k + 2) % 3, k});  // sides at corner k
      for (int k = 0; k < 3; ++k) {
        VertexId a = tvs[k], b = tvs[(k + 1) % 3];
        int la = h.level[a], lb = h.level[b];
        if (std::min(la, lb) < l && l < std::max(la, lb)) {
          EdgeId e = side_edge[k];
          VertexId u = p.cx.edge_vertices(e)[0], v = p.cx.edge_vertices(e)[1];
          int lu = h.level[u], lw = h.level[v];
          int lo = std::min(lu, lw);
          pts.push_back({chain[e][l - lo - 1], k, -1});
        }
      }
      return pts;
    };

    if (minl == maxl) {  // the base triangle; flat cells surface later as level-curve errors
      cx.add_triangle(tvs[0], tvs[1], tvs[2]);
      continue;
    }

    std::vector<SectionPt> prev = section(minl);
    for (int l = minl + 1; l <= maxl; ++l) {
      std::vector<SectionPt> cur = section(l);
      if (prev.size() == 1 && cur.size() == 2) {
        cx.add_triangle(prev[0].v, cur[0].v, cur[1].v);
      } else if (prev.size() == 2 && cur.size() == 1) {
        cx.add_triangle(prev[0].v, prev[1].v, cur[0].v);
      } else if (prev.size() == 2 && cur.size() == 2) {
        // match section points along shared triangle sides
        bool straight = shares_side(prev[0], cur[0]) && shares_side(prev[1], cur[1]);
        bool crossed = shares_side(prev[0], cur[1]) && shares_side(prev[1], cur[0]);
        if (!straight && !crossed) fail(Err::kInternal, "section matching failed");
        if (!straight) std::swap(cur[0], cur[1]);
        // quad prev0-prev1-cur1-cur0; diagonal from the smallest upper vertex
        VertexId p0 = prev[0].v, p1 = prev[1].v, q0 = cur[0].v, q1 = cur[1].v;
        if (p0 > p1) {
          std::swap(p0, p1);
          std::swap(q0, q1);
        }
        cx.add_triangle(p0, p1, q1);
        cx.add_triangle(p0, q1, q0);
      } else {
        fail(Err::kInternal, "unexpected section sizes");
      }
      prev = std::move(cur);
    }
  }

  std::optional<VertexId> anchor;
  if (!p.boundary_verts.empty()) anchor = p.boundary_verts[0];
  rebuild_boundary(out.poly, anchor);
  return out;
}

std::vector<LevelCurve> level_curves(const SubdividedPolygon& kpp) {
  const Complex& cx = kpp.poly.cx;
  int n = kpp.interior_count;
  for (EdgeId e = 0; e < cx.edge_count(); ++e) {
    const auto& vs = cx.edge_vertices(e);
    if (std::abs(kpp.level[vs[0]] - kpp.level[vs[1]]) > 1)
      fail(Err::kInternal, "subdivided edge spans more than one level");
  }
  std::vector<LevelCurve> curves;
  for (int l = 0; l <= n + 1; ++l) {
    std::vector<VertexId> verts;
    for (VertexId v = 0; v < cx.vertex_count(); ++v)
      if (kpp.level[v] == l) verts.push_back(v);
    std::map<VertexId, std::vector<EdgeId>> at;
    size_t ecount = 0;
    for (EdgeId e = 0; e < cx.edge_count(); ++e) {
      const auto& vs = cx.edge_vertices(e);
      if (kpp.level[vs[0]] == l && kpp.level[vs[1]] == l) {
        at[vs[0]].push_back(e);
        at[vs[1]].push_back(e);
        ++ecount;
      }
    }
    if (verts.size() < 3 || ecount != verts.size())
      fail(Err::kMultiplePointOnLevel,
           "level " + std::to_string(l) + " subgraph is not a cycle");
    for (const auto& [v, es] : at)
      if (es.size() != 2)
        fail(Err::kMultiplePointOnLevel, "level " + std::to_string(l) + " has a multiple point at vertex " +
                                             std::to_string(v));
    LevelCurve curve;
    curve.index = l;
    VertexId start = verts[0];
    VertexId cur = start;
    EdgeId cur_e = -1;
    do {
      curve.verts.push_back(cur);
      const auto& es = at[cur];
      EdgeId nxt = (es[0] == cur_e) ? es[1] : es[0];
      curve.edges.push_back(nxt);
      const auto& vs = cx.edge_vertices(nxt);
      cur = (vs[0] == cur) ? vs[1] : vs[0];
      cur_e = nxt;
    } while (cur != start && curve.verts.size() <= verts.size());
    if (curve.verts.size() != verts.size())
      fail(Err::kMultiplePointOnLevel, "level " + std::to_string(l) + " splits into several cycles");
    // counterclockwise orientation
    Rat area2 = 0;
    size_t m = curve.verts.size();
    for (size_t i = 0; i < m; ++i)
      area2 += cross(kpp.poly.coords[curve.verts[i]], kpp.poly.coords[curve.verts[(i + 1) % m]]);
    if (sgn(area2) == 0) fail(Err::kInternal, "degenerate level curve");
    if (sgn(area2) < 0) {
      std::reverse(curve.verts.begin(), curve.verts.end());
      std::reverse(curve.edges.begin(), curve.edges.end());
      std::rotate(curve.verts.begin(), curve.verts.end() - 1, curve.verts.end());
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

RemovalSchedule build_schedule(const SubdividedPolygon& kpp, const std::vector<LevelCurve>& curves,
                               bool clockwise) {
  const Complex& cx = kpp.poly.cx;
  int n = kpp.interior_count;
  RemovalSchedule sched;

  // the seed: the unique all-level-0 triangle
  sched.seed = -1;
  for (TriId t = 0; t < cx.triangle_count(); ++t) {
    const auto& vs = cx.triangle_vertices(t);
    if (kpp.level[vs[0]] == 0 && kpp.level[vs[1]] == 0 && kpp.level[vs[2]] == 0) {
      if (sched.seed >= 0) fail(Err::kInternal, "two base triangles");
      sched.seed = t;
    }
  }
  if (sched.seed < 0) fail(Err::kInternal, "no base triangle in the subdivision");

  // band membership by minimum corner level
  std::vector<std::vector<TriId>> band(n + 1);
  for (TriId t = 0; t < cx.triangle_count(); ++t) {
    if (t == sched.seed) continue;
    const auto& vs = cx.triangle_vertices(t);
    int lo = std::min({kpp.level[vs[0]], kpp.level[vs[1]], kpp.level[vs[2]]});
    int hi = std::max({kpp.level[vs[0]], kpp.level[vs[1]], kpp.level[vs[2]]});
    if (hi != lo + 1) fail(Err::kInternal, "triangle not contained in one band");
    band[lo].push_back(t);
  }

  for (int i = 0; i <= n; ++i) {
    const LevelCurve& top = curves[i];
    if (band[i].empty()) fail(Err::kInternal, "empty band");
    std::vector<char> in_band(cx.triangle_count(), 0);
    for (TriId t : band[i]) in_band[t] = 1;

    auto is_down = [&](TriId t) {
      int cnt = 0;
      for (VertexId v : cx.triangle_vertices(t))
        if (kpp.level[v] == i + 1) ++cnt;
      return cnt == 2;
    };
    // start: the band triangle under the lowest-id edge of the top curve
    EdgeId start_edge = *std::min_element(top.edges.begin(), top.edges.end());
    TriId start = -1;
    for (TriId t : cx.edge_triangles(start_edge))
      if (in_band[t]) start = t;
    if (start < 0) fail(Err::kInternal, "no band triangle under the start edge");

    // walk direction: advance across the radial at the ccw-forward endpoint
    size_t pos = std::find(top.edges.begin(), top.edges.end(), start_edge) - top.edges.begin();
    VertexId alpha0 = top.verts[pos];
    VertexId alpha1 = top.verts[(pos + 1) % top.verts.size()];
    if (clockwise) std::swap(alpha0, alpha1);
    VertexId beta0 = cx.opposite_vertex(start, start_edge);

    auto other_band_tri = [&](EdgeId e, TriId t) -> TriId {
      for (TriId s : cx.edge_triangles(e))
        if (s != t && in_band[s]) return s;
      return -1;
    };
    auto radial_edges = [&](TriId t) {
      std::vector<EdgeId> rs;
      for (EdgeId e : cx.triangle_edges(t)) {
        const auto& vs = cx.edge_vertices(e);
        if (kpp.level[vs[0]] != kpp.level[vs[1]]) rs.push_back(e);
      }
      return rs;
    };

    std::vector<TriId> ring{start};
    auto oe = cx.find_edge(alpha1, beta0);
    if (!oe) fail(Err::kInternal, "missing radial edge at the band start");
    EdgeId frontier = *oe;
    TriId cur = other_band_tri(frontier, start);
    while (cur >= 0 && cur != start) {
      ring.push_back(cur);
      auto rs = radial_edges(cur);
      if (rs.size() != 2) fail(Err::kInternal, "band triangle without two radial edges");
      EdgeId nxt = (rs[0] == frontier) ? rs[1] : rs[0];
      TriId nxt_tri = other_band_tri(nxt, cur);
      frontier = nxt;
      cur = nxt_tri;
    }
    if (ring.size() != band[i].size())
      fail(Err::kInternal, "band ring does not cover the band");

    // the closing down-triangle: last down in ring order
    int dstar = -1;
    for (int k = 0; k < static_cast<int>(ring.size()); ++k)
      if (is_down(ring[k])) dstar = k;
    if (dstar <= 0) fail(Err::kInternal, "band without a closing down-triangle");

    std::vector<std::pair<TriId, OpKind>> order;
    order.push_back({ring[0], OpKind::kI});
    for (int k = 1; k < dstar; ++k)
      order.push_back({ring[k], is_down(ring[k]) ? OpKind::kI : OpKind::kII});
    for (int k = static_cast<int>(ring.size()) - 1; k >= dstar; --k)
      order.push_back({ring[k], OpKind::kII});

    int posn = 0;
    for (auto& [t, kind] : order) sched.entries.push_back({t, kind, i, posn++});
  }

  if (sched.entries.size() + 1 != static_cast<size_t>(cx.triangle_count()))
    fail(Err::kInternal, "schedule does not cover every triangle");
  return sched;
}

LiftPipeline run_pipeline(const PlanarPolygon& p, std::optional<Vec2> point, LiftMetric metric,
                          bool clockwise) {
  LiftPipeline pl;
  if (point) {
    pl.base = pick_base(p, *point);
  } else {
    std::vector<char> onb = boundary_vertex_flags(p);
    TriId fallback = -1;
    pl.base = -1;
    for (TriId t = 0; t < p.cx.triangle_count(); ++t) {
      if (has_boundary_edge(p.cx, t)) continue;
      const auto& vs = p.cx.triangle_vertices(t);
      bool touches = onb[vs[0]] || onb[vs[1]] || onb[vs[2]];
      if (!touches) {
        pl.base = t;
        break;
      }
      if (fallback < 0) fallback = t;
    }
    if (pl.base < 0) pl.base = fallback;
    if (pl.base < 0)
      fail(Err::kPointInBoundaryTriangle, "polygon has no interior triangle for the base");
  }
  pl.heights = order_vertices(p, pl.base, metric, point);
  pl.kpp = subdivide_levels(p, pl.heights);
  pl.curves = level_curves(pl.kpp);
  pl.schedule = build_schedule(pl.kpp, pl.curves, clockwise);
  return pl;
}

TheoremReport verify_theorem1(const PlanarPolygon& p, std::optional<Vec2> point,
                              LiftMetric metric) {
  TheoremReport rep;
  LiftPipeline pl = run_pipeline(p, point, metric);

  std::vector<char> onb = boundary_vertex_flags(p);
  for (VertexId v : p.cx.triangle_vertices(pl.base))
    if (onb[v]) rep.base_touches_boundary = true;

  RemovalTrace trace =
      replay(pl.kpp.poly.cx, pl.schedule.seed, pl.schedule.order(), Mode::kStrict, false);
  rep.schedule_ok = trace.success;

  rep.chi_complex = euler_characteristic(quotient(p));
  rep.chi_boundary = boundary_chi(p);
  std::int64_t chi_kpp = euler_characteristic(quotient(pl.kpp.poly));
  if (chi_kpp != rep.chi_complex)
    fail(Err::kInternal, "subdivision changed the quotient Euler characteristic");
  rep.chi_by_schedule = boundary_chi(pl.kpp.poly) + 1;
  return rep;
}

}  // namespace cauchy
