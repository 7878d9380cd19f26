#pragma once

#include <cstdint>

#include "latk/diagram.hpp"

namespace latk {

struct GenParams {
    int grid = 8;             // coordinates drawn from [0, grid)
    int target_crossings = 4; // rejection-sample until exactly this many
    int components = 2;       // number of closed curves
    int max_attempts = 20000;  // retry cap before GenerationBudgetExhausted
    int kink_percent = 40;    // chance per loop of a non-rectangle shape
};

/// Deterministic random diagram: overlays simple rectilinear loops (plain
/// rectangles, notched rectangles, and self-crossing kinked rectangles),
/// resampling until the overlay is a valid diagram with the requested
/// crossing count; crossing types are uniform.  Throws
/// GenerationBudgetExhausted when the retry cap is hit.
Diagram random_diagram(std::uint64_t seed, const GenParams& params = {});

}  // namespace latk
