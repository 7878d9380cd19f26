#include "latk/samples.hpp"

namespace latk::samples {

Diagram twist() {
    return Diagram::build(
        {{{0, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 0}, {0, 0}}},
        {{{1, 1}, CrossingType::XOver}});
}

Diagram two_rectangles(const std::array<CrossingType, 4>& types) {
    return Diagram::build(
        {{{0, 1}, {3, 1}, {3, 2}, {0, 2}}, {{1, 0}, {2, 0}, {2, 3}, {1, 3}}},
        {{{1, 1}, types[0]},
         {{2, 1}, types[1]},
         {{2, 2}, types[2]},
         {{1, 2}, types[3]}});
}

Diagram celtic() {
    return two_rectangles({CrossingType::XOver, CrossingType::YOver,
                           CrossingType::XOver, CrossingType::YOver});
}

Diagram rings() {
    return two_rectangles({CrossingType::XOver, CrossingType::XOver,
                           CrossingType::XOver, CrossingType::XOver});
}

Diagram pcg_arc_probe() {
    // Component A self-crosses at (1,1); component B crosses A four times.
    // Only (1,1), (2,1) and (1,2) are problem crossings, chained in an arc.
    return Diagram::build(
        {{{0, 1}, {3, 1}, {3, 0}, {1, 0}, {1, 3}, {0, 3}},
         {{-1, 2}, {2, 2}, {2, -1}, {-1, -1}}},
        {{{1, 1}, CrossingType::XOver},
         {{2, 1}, CrossingType::YOver},
         {{1, 2}, CrossingType::YOver},
         {{0, 2}, CrossingType::XOver},
         {{2, 0}, CrossingType::XOver}});
}

Diagram pcg_cycle_probe() {
    // Two rectangles and one large self-crossing curve; the ring of eight
    // crossings around [0,2]x[0,2] alternates types, each straight-through
    // ring vertex borrowing its perpendicular bad neighbor from outside.
    return Diagram::build(
        {{{-1, 0}, {3, 0}, {3, 2}, {-1, 2}},
         {{0, -1}, {2, -1}, {2, 3}, {0, 3}},
         {{-2, 1}, {4, 1}, {4, 4}, {1, 4}, {1, -2}, {-2, -2}}},
        {// ring, counterclockwise from the origin
         {{0, 0}, CrossingType::XOver},
         {{1, 0}, CrossingType::YOver},
         {{2, 0}, CrossingType::XOver},
         {{2, 1}, CrossingType::YOver},
         {{2, 2}, CrossingType::XOver},
         {{1, 2}, CrossingType::YOver},
         {{0, 2}, CrossingType::XOver},
         {{0, 1}, CrossingType::YOver},
         // helpers that make the straight ring vertices problem crossings
         {{1, -1}, CrossingType::XOver},
         {{3, 1}, CrossingType::XOver},
         {{1, 3}, CrossingType::XOver},
         {{-1, 1}, CrossingType::XOver},
         // center of the big curve's self-crossing
         {{1, 1}, CrossingType::YOver}});
}

}  // namespace latk::samples
