#pragma once

#include <string>

#include "assoc/polygon.hpp"

namespace assoc {

struct SvgStyle {
    double size = 400.0;   // width and height in px
    double margin = 36.0;  // room for vertex labels
    bool labels = true;
};

/// Vertices evenly on a circle, 0 at the top, labels increasing clockwise;
/// boundary as a polygon, interior edges as chords. Output bytes depend only
/// on the input.
std::string render_svg(const Triangulation& t, const SvgStyle& style = {});

}  // namespace assoc
