#include "cauchy/hole.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cauchy/errors.hpp"
#include "cauchy/union_find.hpp"

namespace cauchy {

const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::kI: return "I";
    case OpKind::kII: return "II";
    case OpKind::kIII: return "III";
    case OpKind::kFinal: return "F";
  }
  return "?";
}

std::array<int, 3> op_delta(OpKind k) {
  switch (k) {
    case OpKind::kI: return {0, -1, -1};
    case OpKind::kII: return {-1, -2, -1};
    case OpKind::kIII: return {-2, -3, -1};
    case OpKind::kFinal: return {-3, -3, -1};
  }
  return {0, 0, 0};
}

const char* reason_name(HoleReason r) {
  switch (r) {
    case HoleReason::kNone: return "None";
    case HoleReason::kNoEdgeOnHole: return "NoEdgeOnHole";
    case HoleReason::kVertexStarNotExhausted: return "VertexStarNotExhausted";
    case HoleReason::kWouldDisconnect: return "WouldDisconnect";
    case HoleReason::kBoundaryNotSimple: return "BoundaryNotSimple";
    case HoleReason::kOpIIIDisabled: return "OpIIIDisabled";
    case HoleReason::kAlreadyRemoved: return "AlreadyRemoved";
    case HoleReason::kSeedOnBoundary: return "SeedOnBoundary";
  }
  return "?";
}

std::vector<EdgeId> HoleState::rim() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(edge_exposed.size()); ++e)
    if (on_rim(e)) out.push_back(e);
  return out;
}

namespace {

HoleState fresh_state(const Complex& c) {
  HoleState h;
  h.tri_removed.assign(c.triangle_count(), 0);
  h.edge_removed.assign(c.edge_count(), 0);
  h.vert_removed.assign(c.vertex_count(), 0);
  h.edge_exposed.assign(c.edge_count(), 0);
  h.edge_alive_tris.assign(c.edge_count(), 0);
  h.vert_alive_edges.assign(c.vertex_count(), 0);
  h.vert_edges.assign(c.vertex_count(), {});
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    h.edge_alive_tris[e] = static_cast<int>(c.edge_triangles(e).size());
    const auto& vs = c.edge_vertices(e);
    h.vert_edges[vs[0]].push_back(e);
    h.vert_alive_edges[vs[0]] += 1;
    if (vs[1] != vs[0]) {
      h.vert_edges[vs[1]].push_back(e);
      h.vert_alive_edges[vs[1]] += 1;
    }
  }
  h.counts = counts(c);
  h.remaining_tris = c.triangle_count();
  return h;
}

/// Vertex-connectivity of the remaining triangles with t also removed.
bool connected_without(const Complex& c, const HoleState& h, TriId t) {
  int total = h.remaining_tris - 1;
  if (total <= 1) return true;
  TriId first = -1;
  for (TriId s = 0; s < c.triangle_count(); ++s)
    if (!h.tri_removed[s] && s != t) {
      first = s;
      break;
    }
  std::vector<char> seen(c.triangle_count(), 0);
  std::vector<char> vert_seen(c.vertex_count(), 0);
  std::vector<TriId> stack{first};
  seen[first] = 1;
  int visited = 0;
  // vertex -> remaining triangles, built on the fly
  std::vector<std::vector<TriId>> at_vertex(c.vertex_count());
  for (TriId s = 0; s < c.triangle_count(); ++s)
    if (!h.tri_removed[s] && s != t)
      for (VertexId v : c.triangle_vertices(s)) at_vertex[v].push_back(s);
  while (!stack.empty()) {
    TriId s = stack.back();
    stack.pop_back();
    ++visited;
    for (VertexId v : c.triangle_vertices(s)) {
      if (vert_seen[v]) continue;
      vert_seen[v] = 1;
      for (TriId nb : at_vertex[v])
        if (!seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
    }
  }
  return visited == total;
}

}  // namespace

HoleState init_hole(const Complex& c, TriId seed) {
  if (seed < 0 || seed >= c.triangle_count())
    fail(Err::kUnknownTriangle, "seed " + std::to_string(seed));
  HoleState h = fresh_state(c);
  h.tri_removed[seed] = 1;
  h.remaining_tris -= 1;
  h.counts.n2 -= 1;
  for (EdgeId e : c.triangle_edges(seed)) {
    h.edge_exposed[e] = 1;
    h.edge_alive_tris[e] -= 1;
  }
  return h;
}

HoleState outer_hole(const Complex& c) {
  HoleState h = fresh_state(c);
  h.outer_seeded = true;
  for (EdgeId e = 0; e < c.edge_count(); ++e)
    if (c.edge_triangles(e).size() == 1) h.edge_exposed[e] = 1;
  return h;
}

Classification classify(const Complex& c, const HoleState& h, TriId t, Mode mode, bool allow_op3,
                        std::optional<bool> connected_after) {
  Classification out;
  if (t < 0 || t >= c.triangle_count()) fail(Err::kUnknownTriangle, std::to_string(t));
  if (h.tri_removed[t]) {
    out.reason = HoleReason::kAlreadyRemoved;
    return out;
  }
  const auto& es = c.triangle_edges(t);
  std::vector<EdgeId> rim_edges;
  for (EdgeId e : es)
    if (h.on_rim(e)) rim_edges.push_back(e);
  if (rim_edges.empty()) {
    out.reason = HoleReason::kNoEdgeOnHole;
    return out;
  }
  if (mode == Mode::kStrict) {
    bool conn = connected_after ? *connected_after : connected_without(c, h, t);
    if (!conn) {
      out.reason = HoleReason::kWouldDisconnect;
      return out;
    }
  }
  // a vertex is removable iff its surviving edges are exactly this triangle's
  auto exhausted = [&](VertexId v) { return h.vert_alive_edges[v] == 2; };
  if (rim_edges.size() == 1) {
    out.ok = true;
    out.kind = OpKind::kI;
    out.edges = rim_edges;
    return out;
  }
  if (rim_edges.size() == 2) {
    const auto& a = c.edge_vertices(rim_edges[0]);
    const auto& b = c.edge_vertices(rim_edges[1]);
    VertexId shared = (a[0] == b[0] || a[0] == b[1]) ? a[0] : a[1];
    if (!exhausted(shared)) {
      out.reason = HoleReason::kVertexStarNotExhausted;
      return out;
    }
    out.ok = true;
    out.kind = OpKind::kII;
    out.edges = rim_edges;
    out.verts = {shared};
    return out;
  }
  // all three edges border the hole
  std::vector<VertexId> removable;
  for (VertexId v : c.triangle_vertices(t))
    if (exhausted(v)) removable.push_back(v);
  if (removable.size() == 3 && h.remaining_tris == 1) {
    out.ok = true;
    out.kind = OpKind::kFinal;
    out.edges = {es[0], es[1], es[2]};
    out.verts = removable;
    return out;
  }
  if (!allow_op3) {
    out.reason = HoleReason::kOpIIIDisabled;
    return out;
  }
  if (removable.size() != 2) {
    out.reason = HoleReason::kVertexStarNotExhausted;
    return out;
  }
  out.ok = true;
  out.kind = OpKind::kIII;
  out.edges = {es[0], es[1], es[2]};
  out.verts = removable;
  return out;
}

void apply(const Complex& c, HoleState& h, TriId t, OpKind kind, Mode mode, bool allow_op3) {
  Classification cl = classify(c, h, t, mode, allow_op3);
  if (!cl.ok || cl.kind != kind)
    fail(Err::kClassificationMismatch,
         "triangle " + std::to_string(t) + " classifies as " +
             (cl.ok ? op_name(cl.kind) : reason_name(cl.reason)) + ", not " + op_name(kind));
  h.tri_removed[t] = 1;
  h.remaining_tris -= 1;
  h.counts.n2 -= 1;
  for (EdgeId e : c.triangle_edges(t)) {
    h.edge_exposed[e] = 1;
    h.edge_alive_tris[e] -= 1;
  }
  for (EdgeId e : cl.edges) {
    h.edge_removed[e] = 1;
    h.counts.n1 -= 1;
    const auto& vs = c.edge_vertices(e);
    h.vert_alive_edges[vs[0]] -= 1;
    if (vs[1] != vs[0]) h.vert_alive_edges[vs[1]] -= 1;
  }
  for (VertexId v : cl.verts) {
    h.vert_removed[v] = 1;
    h.counts.n0 -= 1;
  }
}

bool is_simple_cycle(const Complex& c, const HoleState& h) {
  std::map<VertexId, int> degree;
  std::map<VertexId, std::vector<EdgeId>> at;
  std::vector<EdgeId> rim = h.rim();
  if (rim.empty()) return false;
  for (EdgeId e : rim) {
    const auto& vs = c.edge_vertices(e);
    if (vs[0] == vs[1]) return false;
    degree[vs[0]] += 1;
    degree[vs[1]] += 1;
    at[vs[0]].push_back(e);
    at[vs[1]].push_back(e);
  }
  for (const auto& [v, d] : degree)
    if (d != 2) return false;
  // single cycle: walk from the first rim edge and count
  EdgeId e0 = rim.front();
  VertexId start = c.edge_vertices(e0)[0];
  VertexId cur = c.edge_vertices(e0)[1];
  EdgeId cur_e = e0;
  size_t steps = 1;
  while (cur != start) {
    const auto& es = at[cur];
    EdgeId nxt = (es[0] == cur_e) ? es[1] : es[0];
    const auto& vs = c.edge_vertices(nxt);
    cur = (vs[0] == cur) ? vs[1] : vs[0];
    cur_e = nxt;
    ++steps;
    if (steps > rim.size()) return false;
  }
  return steps == rim.size();
}

RemovalTrace replay(const Complex& c, std::optional<TriId> seed, const std::vector<TriId>& order,
                    Mode mode, bool allow_op3) {
  RemovalTrace trace;
  std::vector<char> listed(c.triangle_count(), 0);
  for (TriId t : order) {
    if (t < 0 || t >= c.triangle_count()) fail(Err::kUnknownTriangle, std::to_string(t));
    if (listed[t]) fail(Err::kParse, "triangle " + std::to_string(t) + " listed twice");
    listed[t] = 1;
  }

  HoleState h;
  if (seed) {
    if (listed[*seed]) fail(Err::kParse, "seed listed in the removal order");
    if (mode == Mode::kStrict)
      for (EdgeId e : c.triangle_edges(*seed))
        if (c.edge_triangles(e).size() == 1) {
          RemovalStep s;
          s.index = 0;
          s.tri = *seed;
          s.reason = HoleReason::kSeedOnBoundary;
          s.after = counts(c);
          trace.steps.push_back(s);
          trace.failed_step = 0;
          return trace;
        }
    h = init_hole(c, *seed);
  } else {
    h = outer_hole(c);
  }

  // offline connectivity: insert triangles in reverse removal order
  std::vector<char> connected_after(order.size(), 1);
  {
    std::vector<char> removed_at_end = h.tri_removed;
    for (TriId t : order) removed_at_end[t] = 1;
    UnionFind uf(c.triangle_count());
    std::vector<TriId> vert_slot(c.vertex_count(), -1);
    int comps = 0;
    auto insert_tri = [&](TriId t) {
      comps += 1;
      for (VertexId v : c.triangle_vertices(t)) {
        if (vert_slot[v] >= 0) {
          if (uf.find(vert_slot[v]) != uf.find(t)) {
            uf.unite(vert_slot[v], t);
            comps -= 1;
          }
        }
        vert_slot[v] = t;
      }
    };
    for (TriId t = 0; t < c.triangle_count(); ++t)
      if (!removed_at_end[t]) insert_tri(t);
    for (size_t k = order.size(); k-- > 0;) {
      connected_after[k] = comps <= 1;
      insert_tri(order[k]);
    }
  }

  for (size_t k = 0; k < order.size(); ++k) {
    TriId t = order[k];
    RemovalStep s;
    s.index = static_cast<int>(k) + 1;
    s.tri = t;
    Classification cl = classify(c, h, t, mode, allow_op3,
                                 mode == Mode::kStrict ? std::optional<bool>(connected_after[k] != 0)
                                                       : std::nullopt);
    if (!cl.ok) {
      s.ok = false;
      s.reason = cl.reason;
      s.after = h.counts;
      s.simple_after = is_simple_cycle(c, h);
      trace.steps.push_back(s);
      trace.failed_step = s.index;
      return trace;
    }
    apply(c, h, t, cl.kind, mode, allow_op3);
    s.ok = true;
    s.kind = cl.kind;
    s.after = h.counts;
    s.simple_after = is_simple_cycle(c, h);
    trace.steps.push_back(s);
  }

  bool all_removed = h.remaining_tris == 0;
  bool boundary_intact = true;
  if (seed) {
    for (EdgeId e = 0; e < c.edge_count(); ++e) {
      bool is_bd = c.edge_triangles(e).size() == 1;
      bool alive = !h.edge_removed[e];
      if (is_bd != alive && all_removed) boundary_intact = false;
    }
  }
  trace.success = all_removed && boundary_intact;
  return trace;
}

std::string trace_str(const RemovalTrace& t) {
  std::ostringstream os;
  for (const auto& s : t.steps) {
    os << s.index << " " << (s.tri + 1) << " ";
    if (s.ok)
      os << op_name(s.kind);
    else
      os << "FAIL:" << reason_name(s.reason);
    os << " " << s.after.n0 << " " << s.after.n1 << " " << s.after.n2 << "\n";
  }
  return os.str();
}

}  // namespace cauchy
