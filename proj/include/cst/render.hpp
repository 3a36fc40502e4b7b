#pragma once

#include "cst/drawing.hpp"
#include "cst/edge_set.hpp"

#include <string>
#include <vector>

namespace cst {

/// SVG picture of the drawing: one path per edge, highlighted sets drawn wider
/// in their own colours, vertices as dots. Polar drawings get their vertex
/// circle and center marked; the text depends only on the input.
std::string render_svg(const Drawing& d, const std::vector<EdgeSet>& highlight = {});

}  // namespace cst
