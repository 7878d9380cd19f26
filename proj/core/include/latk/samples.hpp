#pragma once

#include <array>

#include "latk/diagram.hpp"

namespace latk::samples {

/// Single kinked rectangle with one crossing at (1,1), x-strand over.
Diagram twist();

/// Two interlocking rectangles; crossings at the corners of the unit square
/// (1,1)..(2,2) with the given types, counterclockwise from (1,1).
Diagram two_rectangles(const std::array<CrossingType, 4>& types);

/// The alternating two-rectangle link: the minimal non-liftable pattern.
Diagram celtic();

/// Two-rectangle link with every crossing x-over; lifts trivially.
Diagram rings();

/// Five-crossing link whose problem crossing graph is a three-vertex arc
/// (1,2)-(1,1)-(2,1).
Diagram pcg_arc_probe();

/// Thirteen-crossing link whose problem crossing graph is the eight-vertex
/// cycle around the square [0,2]x[0,2].
Diagram pcg_cycle_probe();

}  // namespace latk::samples
