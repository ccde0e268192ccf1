#include "cauchy/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cauchy/cutter.hpp"
#include "cauchy/errors.hpp"
#include "cauchy/surfaces.hpp"

namespace cauchy {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

PlanarPolygon parse_complex_text(const std::string& text) {
  PlanarPolygon p;
  std::istringstream in(text);
  std::string line;
  std::map<long, VertexId> id_map;
  std::map<long, Vec2> coord_map;
  bool all_coords = true;
  std::string word_line;
  long start_file_id = -1;
  bool has_start = false;
  std::vector<std::array<long, 3>> tris;

  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      long id;
      if (!(ls >> id)) fail(Err::kParse, "line " + std::to_string(lineno) + ": bad vertex line");
      if (id_map.count(id))
        fail(Err::kParse, "line " + std::to_string(lineno) + ": duplicate vertex id");
      id_map[id] = p.cx.add_vertex();
      std::string xs, ys;
      if (ls >> xs >> ys) {
        coord_map[id] = Vec2(parse_rational(xs), parse_rational(ys));
      } else {
        all_coords = false;
      }
    } else if (tag == "t") {
      long a, b, c;
      if (!(ls >> a >> b >> c))
        fail(Err::kParse, "line " + std::to_string(lineno) + ": bad triangle line");
      tris.push_back({a, b, c});
    } else if (tag == "word") {
      std::string rest;
      std::getline(ls, rest);
      word_line = rest;
    } else if (tag == "start") {
      if (!(ls >> start_file_id))
        fail(Err::kParse, "line " + std::to_string(lineno) + ": bad start line");
      has_start = true;
    } else {
      fail(Err::kParse, "line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
    }
  }

  for (const auto& tv : tris) {
    VertexId m[3];
    for (int i = 0; i < 3; ++i) {
      auto it = id_map.find(tv[i]);
      if (it == id_map.end())
        fail(Err::kParse, "triangle references unknown vertex " + std::to_string(tv[i]));
      m[i] = it->second;
    }
    if (m[0] == m[1] || m[1] == m[2] || m[0] == m[2])
      fail(Err::kParse, "degenerate triangle in file");
    p.cx.add_triangle(m[0], m[1], m[2]);
  }

  if (all_coords && !id_map.empty()) {
    p.has_coords = true;
    p.coords.resize(p.cx.vertex_count());
    for (const auto& [fid, vid] : id_map) p.coords[vid] = coord_map.at(fid);
  }

  if (!boundary_edges(p.cx).empty()) {
    std::optional<VertexId> start;
    if (has_start) {
      auto it = id_map.find(start_file_id);
      if (it == id_map.end()) fail(Err::kParse, "start references unknown vertex");
      start = it->second;
    }
    rebuild_boundary(p, start);
  } else if (has_start) {
    fail(Err::kParse, "start given for a complex without boundary");
  }

  if (!word_line.empty()) {
    p.word = parse_word(word_line);
    if (p.boundary_edges.empty()) fail(Err::kParse, "word given for a complex without boundary");
    if (p.word.size() != p.boundary_edges.size())
      fail(Err::kArcLengthMismatch,
           "word has " + std::to_string(p.word.size()) + " tokens for " +
               std::to_string(p.boundary_edges.size()) + " boundary edges");
  }
  return p;
}

std::string complex_text(const PlanarPolygon& p) {
  std::ostringstream os;
  for (VertexId v = 0; v < p.cx.vertex_count(); ++v) {
    os << "v " << v;
    if (p.has_coords) os << " " << rational_str(p.coords[v].x) << " " << rational_str(p.coords[v].y);
    os << "\n";
  }
  for (TriId t = 0; t < p.cx.triangle_count(); ++t) {
    const auto& vs = p.cx.triangle_vertices(t);
    os << "t " << vs[0] << " " << vs[1] << " " << vs[2] << "\n";
  }
  if (!p.word.empty()) {
    os << "word " << word_str(p.word) << "\n";
    os << "start " << p.boundary_verts[0] << "\n";
  }
  return os.str();
}

PlanarPolygon read_complex_file(const std::string& path) {
  return parse_complex_text(read_text_file(path));
}

void write_complex_file(const std::string& path, const PlanarPolygon& p) {
  write_text_file(path, complex_text(p));
}

std::vector<TriId> parse_order_text(const std::string& text, int triangle_count) {
  std::vector<TriId> order;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(is, rest);
      continue;
    }
    long v;
    try {
      v = std::stol(tok);
    } catch (...) {
      fail(Err::kParse, "bad order token '" + tok + "'");
    }
    if (v < 1 || v > triangle_count)
      fail(Err::kParse, "order index " + std::to_string(v) + " out of range");
    order.push_back(static_cast<TriId>(v - 1));
  }
  return order;
}

std::vector<TriId> read_order_file(const std::string& path, int triangle_count) {
  return parse_order_text(read_text_file(path), triangle_count);
}

Curve parse_curve_text(const std::string& text) {
  Curve c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "p") {
      std::string xs, ys;
      if (!(ls >> xs >> ys)) fail(Err::kParse, "line " + std::to_string(lineno) + ": bad point");
      c.points.emplace_back(parse_rational(xs), parse_rational(ys));
    } else if (tag == "closed") {
      c.closed = true;
    } else {
      fail(Err::kParse, "line " + std::to_string(lineno) + ": unknown curve tag '" + tag + "'");
    }
  }
  if (c.closed && !c.points.empty() && c.points.front() != c.points.back())
    c.points.push_back(c.points.front());
  return c;
}

Curve read_curve_file(const std::string& path) { return parse_curve_text(read_text_file(path)); }

std::string curve_text(const Curve& c) {
  std::ostringstream os;
  size_t n = c.points.size();
  if (c.closed && n > 0) n -= 1;
  for (size_t i = 0; i < n; ++i)
    os << "p " << rational_str(c.points[i].x) << " " << rational_str(c.points[i].y) << "\n";
  if (c.closed) os << "closed\n";
  return os.str();
}

ConvexPolyhedron parse_polyhedron_text(const std::string& text) {
  ConvexPolyhedron poly;
  std::istringstream in(text);
  std::string line;
  std::map<long, int> id_map;
  int lineno = 0;
  std::vector<std::vector<long>> faces_raw;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v3") {
      long id;
      std::string xs, ys, zs;
      if (!(ls >> id >> xs >> ys >> zs))
        fail(Err::kParse, "line " + std::to_string(lineno) + ": bad v3 line");
      if (id_map.count(id)) fail(Err::kParse, "duplicate vertex id " + std::to_string(id));
      id_map[id] = static_cast<int>(poly.vertices.size());
      poly.vertices.emplace_back(parse_rational(xs), parse_rational(ys), parse_rational(zs));
    } else if (tag == "f") {
      std::vector<long> f;
      long id;
      while (ls >> id) f.push_back(id);
      if (f.size() < 3) fail(Err::kParse, "line " + std::to_string(lineno) + ": face too small");
      faces_raw.push_back(f);
    } else {
      fail(Err::kParse, "line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
    }
  }
  for (const auto& f : faces_raw) {
    std::vector<int> face;
    for (long id : f) {
      auto it = id_map.find(id);
      if (it == id_map.end()) fail(Err::kParse, "face references unknown vertex");
      face.push_back(it->second);
    }
    poly.faces.push_back(face);
  }
  return poly;
}

ConvexPolyhedron read_polyhedron_file(const std::string& path) {
  return parse_polyhedron_text(read_text_file(path));
}

std::string polyhedron_text(const ConvexPolyhedron& poly) {
  std::ostringstream os;
  for (size_t v = 0; v < poly.vertices.size(); ++v)
    os << "v3 " << v << " " << rational_str(poly.vertices[v].x) << " "
       << rational_str(poly.vertices[v].y) << " " << rational_str(poly.vertices[v].z) << "\n";
  for (const auto& f : poly.faces) {
    os << "f";
    for (int v : f) os << " " << v;
    os << "\n";
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Err::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) fail(Err::kIo, "cannot write " + path);
  f << content;
}

}  // namespace cauchy
