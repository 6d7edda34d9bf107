#pragma once

#include <string>

#include "ramtower/polygon.hpp"

namespace ramtower {

/// Static drawing of a polygon: one <line> per side with its slope as a text
/// node, one <circle> per vertex labeled with its exact coordinates. The
/// viewBox is a fixed margin around the data bounds, so equal input gives
/// byte-identical output.
std::string render_svg(const NewtonPolygon& np);

} // namespace ramtower
