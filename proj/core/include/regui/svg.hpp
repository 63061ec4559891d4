#pragma once

#include <string>

#include "regui/resolver.hpp"

namespace regui {

// SVG with viewBox "0 0 width height" and one <rect> per visible block,
// converted to a top-left origin. Hidden blocks are not emitted.
std::string export_svg(const ResolvedLayout& layout);

}  // namespace regui
