#include "cauchy/scheme.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cauchy/errors.hpp"

namespace cauchy {

EdgeWord parse_word(const std::string& text) {
  EdgeWord word;
  std::istringstream is(text);
  std::string tok;
  std::map<std::string, int> uses;
  while (is >> tok) {
    bool inv = false;
    if (tok.size() > 1 && tok.back() == '-') {
      inv = true;
      tok.pop_back();
    }
    for (char ch : tok)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\''))
        fail(Err::kMalformedToken, "bad word token '" + tok + "'");
    if (tok.empty()) fail(Err::kMalformedToken, "empty word token");
    if (++uses[tok] > 2) fail(Err::kLabelUsedThrice, "label '" + tok + "' used more than twice");
    word.push_back({tok, inv});
  }
  return word;
}

std::string word_str(const EdgeWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].label;
    if (w[i].inverted) out += '-';
  }
  return out;
}

namespace {

struct BoundaryCycle {
  std::vector<VertexId> verts;
  std::vector<EdgeId> edges;
};

std::optional<BoundaryCycle> trace_boundary(const Complex& cx, std::string* why) {
  std::vector<EdgeId> bes = boundary_edges(cx);
  if (bes.empty()) {
    if (why) *why = "no boundary edges";
    return std::nullopt;
  }
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : bes) {
    const auto& vs = cx.edge_vertices(e);
    if (vs[0] == vs[1]) {
      if (why) *why = "boundary loop edge " + std::to_string(e);
      return std::nullopt;
    }
    at[vs[0]].push_back(e);
    at[vs[1]].push_back(e);
  }
  for (const auto& [v, es] : at)
    if (es.size() != 2) {
      if (why)
        *why = "boundary vertex " + std::to_string(v) + " lies on " + std::to_string(es.size()) +
               " boundary edges";
      return std::nullopt;
    }
  BoundaryCycle cyc;
  VertexId start = at.begin()->first;
  VertexId prev = -1, cur = start;
  do {
    cyc.verts.push_back(cur);
    const auto& es = at[cur];
    EdgeId next_e = -1;
    for (EdgeId e : es) {
      const auto& vs = cx.edge_vertices(e);
      VertexId other = (vs[0] == cur) ? vs[1] : vs[0];
      if (!cyc.edges.empty() && e == cyc.edges.back()) continue;
      if (cyc.edges.empty() && other == prev) continue;
      next_e = e;
      break;
    }
    if (next_e < 0) {
      if (why) *why = "boundary walk stuck";
      return std::nullopt;
    }
    cyc.edges.push_back(next_e);
    const auto& vs = cx.edge_vertices(next_e);
    prev = cur;
    cur = (vs[0] == cur) ? vs[1] : vs[0];
  } while (cur != start);
  if (cyc.edges.size() != bes.size()) {
    if (why) *why = "boundary is not a single cycle";
    return std::nullopt;
  }
  return cyc;
}

void orient_and_anchor(PlanarPolygon& p, BoundaryCycle cyc, std::optional<VertexId> start) {
  if (p.has_coords) {
    Rat area2 = 0;
    size_t n = cyc.verts.size();
    for (size_t i = 0; i < n; ++i)
      area2 += cross(p.coords[cyc.verts[i]], p.coords[cyc.verts[(i + 1) % n]]);
    if (sgn(area2) < 0) {
      std::reverse(cyc.verts.begin(), cyc.verts.end());
      std::reverse(cyc.edges.begin(), cyc.edges.end());
      std::rotate(cyc.verts.begin(), cyc.verts.end() - 1, cyc.verts.end());
    }
  } else {
    size_t n = cyc.verts.size();
    size_t mi = std::min_element(cyc.verts.begin(), cyc.verts.end()) - cyc.verts.begin();
    VertexId succ = cyc.verts[(mi + 1) % n];
    VertexId pred = cyc.verts[(mi + n - 1) % n];
    if (pred < succ) {
      std::reverse(cyc.verts.begin(), cyc.verts.end());
      std::reverse(cyc.edges.begin(), cyc.edges.end());
      std::rotate(cyc.verts.begin(), cyc.verts.end() - 1, cyc.verts.end());
    }
  }
  VertexId anchor = start.value_or(*std::min_element(cyc.verts.begin(), cyc.verts.end()));
  auto it = std::find(cyc.verts.begin(), cyc.verts.end(), anchor);
  if (it == cyc.verts.end()) fail(Err::kParse, "start vertex not on the boundary");
  size_t k = it - cyc.verts.begin();
  std::rotate(cyc.verts.begin(), cyc.verts.begin() + k, cyc.verts.end());
  std::rotate(cyc.edges.begin(), cyc.edges.begin() + k, cyc.edges.end());
  p.boundary_verts = std::move(cyc.verts);
  p.boundary_edges = std::move(cyc.edges);
}

bool strictly_inside(const Vec2& pt, const Vec2& a, const Vec2& b, const Vec2& c) {
  int o = orient2d(a, b, c);
  if (o == 0) return false;
  return orient2d(a, b, pt) == o && orient2d(b, c, pt) == o && orient2d(c, a, pt) == o;
}

bool proper_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
  int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

void rebuild_boundary(PlanarPolygon& p, std::optional<VertexId> start) {
  std::string why;
  auto cyc = trace_boundary(p.cx, &why);
  if (!cyc) fail(Err::kParse, "polygon boundary: " + why);
  orient_and_anchor(p, std::move(*cyc), start);
}

ValidationReport validate_polygon(const PlanarPolygon& p, bool check_embedding) {
  ValidationReport rep = validate(p.cx, false);
  std::string why;
  auto cyc = trace_boundary(p.cx, &why);
  if (!cyc) rep.violations.push_back("boundary: " + why);
  if (euler_characteristic(p.cx) != 1)
    rep.violations.push_back("complex is not a disc (chi = " +
                             std::to_string(euler_characteristic(p.cx)) + ")");
  if (!p.word.empty() && p.word.size() != p.boundary_edges.size())
    rep.violations.push_back("word length " + std::to_string(p.word.size()) +
                             " != boundary edge count " + std::to_string(p.boundary_edges.size()));
  std::map<std::string, int> uses;
  for (const auto& t : p.word) ++uses[t.label];
  for (const auto& [label, n] : uses)
    if (n > 2) rep.violations.push_back("label '" + label + "' used " + std::to_string(n) + " times");
  if (check_embedding) {
    if (!p.has_coords || static_cast<int>(p.coords.size()) != p.cx.vertex_count()) {
      rep.violations.push_back("embedding check requested without full coordinates");
      return rep;
    }
    const Complex& cx = p.cx;
    for (TriId t = 0; t < cx.triangle_count(); ++t) {
      const auto& vs = cx.triangle_vertices(t);
      if (orient2d(p.coords[vs[0]], p.coords[vs[1]], p.coords[vs[2]]) == 0)
        rep.violations.push_back("triangle " + std::to_string(t) + " is degenerate");
    }
    for (TriId s = 0; s < cx.triangle_count(); ++s) {
      const auto& a = cx.triangle_vertices(s);
      for (TriId t = s + 1; t < cx.triangle_count(); ++t) {
        const auto& b = cx.triangle_vertices(t);
        bool bad = false;
        for (int i = 0; i < 3 && !bad; ++i) {
          bad = strictly_inside(p.coords[b[i]], p.coords[a[0]], p.coords[a[1]], p.coords[a[2]]) ||
                strictly_inside(p.coords[a[i]], p.coords[b[0]], p.coords[b[1]], p.coords[b[2]]);
        }
        for (int i = 0; i < 3 && !bad; ++i)
          for (int j = 0; j < 3 && !bad; ++j)
            bad = proper_cross(p.coords[a[i]], p.coords[a[(i + 1) % 3]], p.coords[b[j]],
                               p.coords[b[(j + 1) % 3]]);
        if (!bad) {
          Rat third(1, 3);
          Vec2 ca = (p.coords[a[0]] + p.coords[a[1]] + p.coords[a[2]]) * third;
          Vec2 cb = (p.coords[b[0]] + p.coords[b[1]] + p.coords[b[2]]) * third;
          bad = strictly_inside(ca, p.coords[b[0]], p.coords[b[1]], p.coords[b[2]]) ||
                strictly_inside(cb, p.coords[a[0]], p.coords[a[1]], p.coords[a[2]]);
        }
        if (bad)
          rep.violations.push_back("triangles " + std::to_string(s) + " and " + std::to_string(t) +
                                   " overlap");
      }
    }
  }
  return rep;
}

std::vector<GluePair> scheme_glue_pairs(const PlanarPolygon& p) {
  std::vector<GluePair> pairs;
  if (p.word.empty()) return pairs;
  if (p.word.size() != p.boundary_edges.size())
    fail(Err::kArcLengthMismatch, "word has " + std::to_string(p.word.size()) +
                                      " tokens for " + std::to_string(p.boundary_edges.size()) +
                                      " boundary edges");
  std::map<std::string, std::vector<size_t>> pos;
  for (size_t i = 0; i < p.word.size(); ++i) pos[p.word[i].label].push_back(i);
  size_t n = p.boundary_verts.size();
  auto tail = [&](size_t i) {
    VertexId from = p.boundary_verts[i];
    VertexId to = p.boundary_verts[(i + 1) % n];
    return p.word[i].inverted ? to : from;
  };
  for (const auto& [label, ps] : pos) {
    if (ps.size() == 1) continue;
    if (ps.size() > 2) fail(Err::kLabelUsedThrice, "label '" + label + "'");
    pairs.push_back({p.boundary_edges[ps[0]], tail(ps[0]), p.boundary_edges[ps[1]], tail(ps[1])});
  }
  return pairs;
}

Complex quotient_by_pairs(const Complex& cx, const std::vector<GluePair>& pairs,
                          QuotientResult* full) {
  UnionFind uv(cx.vertex_count());
  UnionFind ue(cx.edge_count());
  for (const auto& gp : pairs) {
    const auto& av = cx.edge_vertices(gp.a);
    const auto& bv = cx.edge_vertices(gp.b);
    VertexId ahead = (av[0] == gp.a_tail) ? av[1] : av[0];
    VertexId bhead = (bv[0] == gp.b_tail) ? bv[1] : bv[0];
    ue.unite(gp.a, gp.b);
    uv.unite(gp.a_tail, gp.b_tail);
    uv.unite(ahead, bhead);
  }
  std::vector<VertexId> vmap(cx.vertex_count(), -1);
  int nv = 0;
  for (VertexId v = 0; v < cx.vertex_count(); ++v)
    if (uv.find(v) == v) vmap[v] = nv++;
  for (VertexId v = 0; v < cx.vertex_count(); ++v) vmap[v] = vmap[uv.find(v)];

  Complex out;
  out.add_vertices(nv);
  std::vector<EdgeId> emap(cx.edge_count(), -1);
  for (EdgeId e = 0; e < cx.edge_count(); ++e) {
    if (ue.find(e) != e) continue;
    const auto& vs = cx.edge_vertices(e);
    emap[e] = out.add_edge_raw(vmap[vs[0]], vmap[vs[1]]);
  }
  for (EdgeId e = 0; e < cx.edge_count(); ++e) emap[e] = emap[ue.find(e)];
  for (TriId t = 0; t < cx.triangle_count(); ++t) {
    const auto& es = cx.triangle_edges(t);
    const auto& vs = cx.triangle_vertices(t);
    out.add_triangle_raw({emap[es[0]], emap[es[1]], emap[es[2]]},
                         {vmap[vs[0]], vmap[vs[1]], vmap[vs[2]]});
  }
  if (full) {
    full->vertex_map = std::move(vmap);
    full->edge_map = std::move(emap);
  }
  return out;
}

Complex quotient(const PlanarPolygon& p) { return quotient_by_pairs(p.cx, scheme_glue_pairs(p)); }

Complex quotient(const PlanarPolygon& p, QuotientResult& full) {
  Complex out = quotient_by_pairs(p.cx, scheme_glue_pairs(p), &full);
  full.cx = out;
  return out;
}

std::int64_t boundary_chi(const PlanarPolygon& p) {
  auto pairs = scheme_glue_pairs(p);
  UnionFind uv(p.cx.vertex_count());
  UnionFind ue(p.cx.edge_count());
  for (const auto& gp : pairs) {
    const auto& av = p.cx.edge_vertices(gp.a);
    const auto& bv = p.cx.edge_vertices(gp.b);
    VertexId ahead = (av[0] == gp.a_tail) ? av[1] : av[0];
    VertexId bhead = (bv[0] == gp.b_tail) ? bv[1] : bv[0];
    ue.unite(gp.a, gp.b);
    uv.unite(gp.a_tail, gp.b_tail);
    uv.unite(ahead, bhead);
  }
  std::vector<char> vseen(p.cx.vertex_count(), 0), eseen(p.cx.edge_count(), 0);
  std::int64_t n0 = 0, n1 = 0;
  for (VertexId v : p.boundary_verts) {
    VertexId r = uv.find(v);
    if (!vseen[r]) {
      vseen[r] = 1;
      ++n0;
    }
  }
  for (EdgeId e : p.boundary_edges) {
    EdgeId r = ue.find(e);
    if (!eseen[r]) {
      eseen[r] = 1;
      ++n1;
    }
  }
  return n0 - n1;
}

Complex quotient_labeled(const LabeledComplex& lc, QuotientResult* full) {
  std::map<std::string, std::vector<EdgeId>> groups;
  for (const auto& [e, lab] : lc.labels) groups[lab.label].push_back(e);
  std::vector<GluePair> pairs;
  for (auto& [label, es] : groups) {
    if (es.size() == 1) continue;
    if (es.size() > 2) fail(Err::kLabelUsedThrice, "label '" + label + "'");
    std::sort(es.begin(), es.end());
    pairs.push_back({es[0], lc.labels.at(es[0]).tail, es[1], lc.labels.at(es[1]).tail});
  }
  return quotient_by_pairs(lc.cx, pairs, full);
}

LabeledComplex as_labeled(const PlanarPolygon& p) {
  LabeledComplex lc;
  lc.cx = p.cx;
  size_t n = p.boundary_verts.size();
  for (size_t i = 0; i < p.word.size(); ++i) {
    VertexId from = p.boundary_verts[i];
    VertexId to = p.boundary_verts[(i + 1) % n];
    lc.labels[p.boundary_edges[i]] = {p.word[i].label,
                                      p.word[i].inverted ? to : from};
  }
  return lc;
}

PlanarPolygon to_polygon(const LabeledComplex& lc, const std::vector<Vec2>* coords) {
  PlanarPolygon p;
  p.cx = lc.cx;
  if (coords) {
    p.coords = *coords;
    p.has_coords = true;
  }
  rebuild_boundary(p);
  size_t n = p.boundary_verts.size();
  int fresh = 0;
  for (size_t i = 0; i < n; ++i) {
    EdgeId e = p.boundary_edges[i];
    auto it = lc.labels.find(e);
    if (it == lc.labels.end()) {
      p.word.push_back({"f" + std::to_string(fresh++), false});
    } else {
      p.word.push_back({it->second.label, it->second.tail != p.boundary_verts[i]});
    }
  }
  return p;
}

}  // namespace cauchy
