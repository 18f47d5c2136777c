#pragma once
#include "omega/figure.hpp"

#include <string>

namespace omega {

//! 9 significant digits, IEEE round-half-even, "-0" normalized away; the
//! renderer never emits any other number format, so output is byte-stable
std::string fmt_sig9(double v);

// Deterministic standalone SVG of a constructed figure: circumcircle, working
// circle, vertex-pivot circles, reference triangle, perspector axis, and the
// labeled special points. Same figure, same bytes.
std::string render_svg(const Figure& fig);

} // namespace omega
