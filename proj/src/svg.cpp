#include "cauchy/svg.hpp"

#include <sstream>

#include "cauchy/errors.hpp"

namespace cauchy {

namespace {

const char* kCurvePalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#17becf", "#bcbd22"};

struct Frame {
  Rat minx, miny, maxy;
  Rat scale;

  std::string fmt(const Vec2& p) const {
    Rat x = (p.x - minx) * scale;
    Rat y = (maxy - p.y) * scale;  // svg y grows downward
    return rational_fixed(x, 3) + "," + rational_fixed(y, 3);
  }
};

}  // namespace

std::string render_svg(const PlanarPolygon& p, const HoleState* hole,
                       const std::vector<LevelCurve>* curves, std::optional<TriId> highlight) {
  if (!p.has_coords) fail(Err::kIo, "rendering needs coordinates");
  Frame fr;
  if (p.cx.vertex_count() == 0) fail(Err::kIo, "empty complex");
  fr.minx = p.coords[0].x;
  fr.miny = p.coords[0].y;
  Rat maxx = p.coords[0].x;
  fr.maxy = p.coords[0].y;
  for (const auto& c : p.coords) {
    fr.minx = std::min(fr.minx, c.x);
    maxx = std::max(maxx, c.x);
    fr.miny = std::min(fr.miny, c.y);
    fr.maxy = std::max(fr.maxy, c.y);
  }
  Rat w = maxx - fr.minx;
  Rat h = fr.maxy - fr.miny;
  if (sgn(w) == 0) w = 1;
  if (sgn(h) == 0) h = 1;
  fr.scale = Rat(720) / std::max(w, h);
  std::string width = rational_fixed(w * fr.scale, 3);
  std::string height = rational_fixed(h * fr.scale, 3);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-8 -8 "
     << rational_fixed(w * fr.scale + 16, 3) << " " << rational_fixed(h * fr.scale + 16, 3)
     << "\" width=\"" << width << "\" height=\"" << height << "\">\n";

  os << "<g class=\"triangles\">\n";
  for (TriId t = 0; t < p.cx.triangle_count(); ++t) {
    const auto& vs = p.cx.triangle_vertices(t);
    bool removed = hole && hole->tri_removed[t];
    const char* fill = removed ? "#cfe0f5" : "#eeeeee";
    if (highlight && *highlight == t) fill = "#f5b8c4";
    os << "<polygon class=\"" << (removed ? "removed" : "cell") << "\" points=\""
       << fr.fmt(p.coords[vs[0]]) << " " << fr.fmt(p.coords[vs[1]]) << " "
       << fr.fmt(p.coords[vs[2]]) << "\" fill=\"" << fill
       << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
  }
  os << "</g>\n";

  if (hole) {
    os << "<g class=\"rim\">\n";
    for (EdgeId e = 0; e < p.cx.edge_count(); ++e) {
      if (!hole->on_rim(e)) continue;
      const auto& vs = p.cx.edge_vertices(e);
      os << "<polyline class=\"rim-edge\" points=\"" << fr.fmt(p.coords[vs[0]]) << " "
         << fr.fmt(p.coords[vs[1]])
         << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.5\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g class=\"boundary\">\n";
  for (size_t i = 0; i < p.boundary_verts.size(); ++i) {
    const Vec2& a = p.coords[p.boundary_verts[i]];
    const Vec2& b = p.coords[p.boundary_verts[(i + 1) % p.boundary_verts.size()]];
    os << "<polyline class=\"boundary-edge\" points=\"" << fr.fmt(a) << " " << fr.fmt(b)
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  }
  os << "</g>\n";

  if (curves) {
    os << "<g class=\"level-curves\">\n";
    for (const auto& c : *curves) {
      os << "<polyline class=\"level level-" << c.index << "\" points=\"";
      for (size_t i = 0; i <= c.verts.size(); ++i) {
        if (i) os << " ";
        os << fr.fmt(p.coords[c.verts[i % c.verts.size()]]);
      }
      os << "\" fill=\"none\" stroke=\"" << kCurvePalette[c.index % 8]
         << "\" stroke-width=\"2\"/>\n";
    }
    os << "</g>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace cauchy
