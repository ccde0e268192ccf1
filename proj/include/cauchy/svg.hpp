#ifndef CAUCHY_SVG_HPP
#define CAUCHY_SVG_HPP

#include <optional>
#include <string>
#include <vector>

#include "cauchy/hole.hpp"
#include "cauchy/lift.hpp"
#include "cauchy/scheme.hpp"

namespace cauchy {

/// Deterministic SVG of a polygon state: remaining triangles filled, removed
/// region shaded, the current removal highlighted, level curves stroked by
/// index. Byte-stable for identical inputs.
std::string render_svg(const PlanarPolygon& p, const HoleState* hole = nullptr,
                       const std::vector<LevelCurve>* curves = nullptr,
                       std::optional<TriId> highlight = std::nullopt);

}  // namespace cauchy

#endif
