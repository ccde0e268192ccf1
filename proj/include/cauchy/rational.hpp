#ifndef CAUCHY_RATIONAL_HPP
#define CAUCHY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cauchy {

/// Exact rational scalar used for all geometry.
using Rat = mpq_class;

struct Vec2 {
  Rat x, y;

  Vec2() : x(0), y(0) {}
  Vec2(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

struct Vec3 {
  Rat x, y, z;

  Vec3() : x(0), y(0), z(0) {}
  Vec3(Rat px, Rat py, Rat pz) : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(const Rat& s) const { return {x * s, y * s, z * s}; }
};

inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Sign of the signed area of triangle (a,b,c): >0 counterclockwise.
inline int orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
  Rat d = cross(b - a, c - a);
  return sgn(d);
}

inline Rat sq_dist(const Vec2& a, const Vec2& b) {
  Vec2 d = a - b;
  return d.x * d.x + d.y * d.y;
}

inline Rat sq_norm(const Vec3& a) { return dot(a, a); }

/// Parses "p/q", integers, and plain decimals ("-1.75") exactly.
Rat parse_rational(const std::string& text);

/// Canonical serialization: "p/q", or just "p" when q == 1.
std::string rational_str(const Rat& r);

/// Fixed-point decimal with `digits` fractional digits, round half up. Deterministic
/// (integer arithmetic only); used by the SVG writer.
std::string rational_fixed(const Rat& r, int digits);

double to_double(const Rat& r);

}  // namespace cauchy

#endif
