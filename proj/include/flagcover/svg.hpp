#pragma once

#include <string>

#include "flagcover/flags.hpp"
#include "flagcover/prism.hpp"

namespace flagcover {

/// Draws the prism: columns U, V, W left to right with level i at height i.
/// G edges are solid, G~-only edges dashed, and compatible G~ triangles are
/// outlined in bold. W-U edges arc over the V column.
std::string render_prism_svg(const FlagTuple& t, const PrismGraph& g);

}  // namespace flagcover
