#include "doctest.h"

#include <set>

#include "latk/lift.hpp"
#include "latk/oracle.hpp"
#include "latk/samples.hpp"
#include "latk/validate.hpp"

#include "support.hpp"

using namespace latk;
using namespace latk::testing;

namespace {

constexpr auto XO = CrossingType::XOver;
constexpr auto YO = CrossingType::YOver;

// Replays a lift trace from zero heights and checks that no step turns a
// resolved crossing unresolved; the independent route for the engine's own
// verification.
void check_backwards_compatible_trace(const Diagram& d,
                                      const std::vector<LiftSpec>& trace) {
    HeightAssignment h;
    int step = 0;
    for (const LiftSpec& spec : trace) {
        ++step;
        CHECK(h.max_abs() < std::abs(spec.height));
        const HeightAssignment next = apply_lift(h, d, spec);
        for (const auto& [w, type] : d.crossings()) {
            (void)type;
            if (w == spec.crossing)
                continue;
            INFO("step ", step, " at ", to_string(spec.crossing), " vs ",
                 to_string(w));
            CHECK(is_compatible(h, next, d, w));
        }
        CHECK(is_resolved(next, d, spec.crossing));
        h = next;
    }
}

}  // namespace

TEST_CASE("choose_proper_lift picks the over-strand up, under-strand down") {
    const Diagram dx = samples::twist();  // XOver at (1,1)
    HeightAssignment h;

    const LiftSpec free_choice = choose_proper_lift(h, dx, {1, 1}, std::nullopt, 3);
    CHECK(free_choice.axis == Axis::X);
    CHECK(free_choice.height == 3);

    const LiftSpec forced = choose_proper_lift(h, dx, {1, 1}, Axis::X, 3);
    CHECK(forced.axis == Axis::Y);
    CHECK(forced.height == -3);

    const Diagram dy = Diagram::build(
        {{{0, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 0}, {0, 0}}},
        {{{1, 1}, YO}});
    const LiftSpec sym = choose_proper_lift(h, dy, {1, 1}, Axis::Y, 3);
    CHECK(sym.axis == Axis::X);
    CHECK(sym.height == -3);
}

TEST_CASE("choose_proper_lift rejects a stale magnitude") {
    const Diagram d = samples::twist();
    HeightAssignment h;
    h.set_height(Edge2({1, 0}, {1, 1}), 5);  // y-stick reaches 5
    CHECK_THROWS_AS(choose_proper_lift(h, d, {1, 1}, std::nullopt, 2), Error);
}

TEST_CASE("lift_diagram on the twist") {
    const LiftResult r = lift_diagram(samples::twist());
    REQUIRE(r.lifted());
    CHECK(r.trace.size() == 1);
    CHECK(r.trace[0] == LiftSpec{{1, 1}, Axis::X, 1});
    CHECK(full_validate(samples::twist(), *r.link).ok());
}

TEST_CASE("lift_diagram on the crossing-free rectangle is the identity embedding") {
    const Diagram d = Diagram::build({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}, {});
    const LiftResult r = lift_diagram(d);
    REQUIRE(r.lifted());
    CHECK(r.trace.empty());
    CHECK(*r.link == assemble_link3(d, {}));
}

TEST_CASE("lift_diagram returns the celtic witness instead of a link") {
    const LiftResult r = lift_diagram(samples::celtic());
    CHECK_FALSE(r.lifted());
    REQUIRE(r.celtic.has_value());
    CHECK(r.celtic->corners ==
          std::array<Point2, 4>{{{1, 1}, {2, 1}, {2, 2}, {1, 2}}});
    CHECK(r.celtic->types == std::array<CrossingType, 4>{{XO, YO, XO, YO}});
}

TEST_CASE("lift_diagram resolves the arc and cycle probes") {
    for (const Diagram& d : {samples::pcg_arc_probe(), samples::pcg_cycle_probe()}) {
        const LiftResult r = lift_diagram(d, {.verify_backwards_compat = true});
        REQUIRE(r.lifted());
        CHECK(r.trace.size() == d.crossing_count());
        check_backwards_compatible_trace(d, r.trace);
        for (const auto& [c, type] : d.crossings()) {
            (void)type;
            CHECK(is_resolved(r.heights, d, c));
        }
        CHECK(full_validate(d, *r.link).ok());
    }
}

TEST_CASE("every crossing is lifted exactly once with fresh magnitudes") {
    std::vector<Diagram> corpus = two_rectangles_all_types();
    for (const Diagram& c : small_corpus(120))
        corpus.push_back(c);
    for (const Diagram& d : corpus) {
        const LiftResult r = lift_diagram(d, {.verify_backwards_compat = true});
        if (!r.lifted())
            continue;
        CHECK(r.trace.size() == d.crossing_count());
        std::set<Point2> seen;
        int k = 0;
        for (const LiftSpec& spec : r.trace) {
            CHECK(seen.insert(spec.crossing).second);
            CHECK(std::abs(spec.height) == ++k);
        }
        check_backwards_compatible_trace(d, r.trace);
    }
}

TEST_CASE("lift agrees with the constraint oracle on liftability") {
    std::vector<Diagram> corpus = two_rectangles_all_types();
    for (const Diagram& c : small_corpus(200))
        corpus.push_back(c);
    corpus.push_back(samples::twist());
    corpus.push_back(samples::pcg_arc_probe());
    corpus.push_back(samples::pcg_cycle_probe());
    for (const Diagram& d : corpus) {
        const bool lift_ok = lift_diagram(d).lifted();
        CHECK(lift_ok == oracle_liftable(d).liftable);
        CHECK(lift_ok == !find_celtic(d).has_value());
    }
}
