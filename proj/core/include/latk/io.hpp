#pragma once

#include <string>
#include <string_view>

#include "latk/diagram.hpp"
#include "latk/link3.hpp"

namespace latk {

/// Line-oriented diagram text (.lkd):
///   component: (x,y) (x,y) ...     corner points, closure implied
///   crossing: (x,y) X|Y            one per crossing
/// `#` starts a comment, blank lines are ignored.  Parse errors carry the
/// 1-based line number; structural errors are the Diagram::build ones.
Diagram parse_diagram(std::string_view text);

/// Canonical form: components sorted by smallest corner and starting there,
/// crossings sorted lexicographically.  parse(serialize(d)) == d.
std::string serialize_diagram(const Diagram& d);

/// Same grammar with (x,y,z) points (.lk3).
Link3 parse_link3(std::string_view text);
std::string serialize_link3(const Link3& k);

struct SvgStyle {
    int scale = 24;         // pixels per lattice cell
    int margin_cells = 1;   // empty border, in cells
    int stroke_width = 3;
    double gap = 0.3;       // under-strand break half-width, in cells
};

/// Deterministic SVG of the diagram on the unit grid, y-axis pointing up,
/// with the under-strand broken at every crossing.
std::string render_svg(const Diagram& d, const SvgStyle& style = {});

/// Wavefront OBJ with one polyline object per component; emits exactly the
/// corner points as vertices.
std::string export_obj(const Link3& k);

}  // namespace latk
