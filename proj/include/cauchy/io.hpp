#ifndef CAUCHY_IO_HPP
#define CAUCHY_IO_HPP

#include <string>
#include <vector>

#include "cauchy/complex.hpp"
#include "cauchy/scheme.hpp"

namespace cauchy {

/// Line-based complex format. `#` starts a comment.
///   v <id> [<x> <y>]     vertex, optional exact rational coordinates
///   t <id1> <id2> <id3>  triangle by vertex ids, edges induced
///   word <tok> ...       boundary edge word
///   start <vertex-id>    word anchor on the boundary
/// File vertex ids may be arbitrary; they are remapped densely in order of
/// appearance. Triangles are numbered by file order (order files are 1-based).
PlanarPolygon parse_complex_text(const std::string& text);
std::string complex_text(const PlanarPolygon& p);

PlanarPolygon read_complex_file(const std::string& path);
void write_complex_file(const std::string& path, const PlanarPolygon& p);

/// Whitespace-separated 1-based triangle indices.
std::vector<TriId> parse_order_text(const std::string& text, int triangle_count);
std::vector<TriId> read_order_file(const std::string& path, int triangle_count);

/// Curve file: `p <x> <y>` lines, optional `closed`.
struct Curve;
Curve parse_curve_text(const std::string& text);
Curve read_curve_file(const std::string& path);
std::string curve_text(const Curve& c);

/// Polyhedron file: `v3 <id> <x> <y> <z>` and `f <id...>` lines.
struct ConvexPolyhedron;
ConvexPolyhedron parse_polyhedron_text(const std::string& text);
ConvexPolyhedron read_polyhedron_file(const std::string& path);
std::string polyhedron_text(const ConvexPolyhedron& poly);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cauchy

#endif
