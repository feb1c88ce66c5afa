#pragma once

#include <string>

#include "grmirror/mirror.hpp"
#include "grmirror/quantum.hpp"

namespace grmirror {

/// Self-contained 600x600 SVG of the eigenvalue multiset in the complex
/// plane: radii normalized by the maximum modulus, axes and an outer guide
/// circle included, multiplicity drawn as concentric rings.
std::string render_flower_svg(const SpectralSummary& s);

/// Same layout with occupied eigenvalue groups filled and unoccupied ones
/// hollow.
std::string render_branes_svg(const BranesSummary& b);

std::string render_flower_text(const SpectralSummary& s);
std::string render_branes_text(const BranesSummary& b);

}  // namespace grmirror
