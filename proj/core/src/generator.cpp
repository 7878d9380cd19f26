#include "latk/generator.hpp"

#include <algorithm>
#include <random>

namespace latk {

namespace {

// Unbiased bounded draw; pinned here so generated corpora never depend on
// the standard library's distribution implementations.
int bounded(std::mt19937_64& rng, int n) {
    const std::uint64_t span = std::uint64_t(n);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return int(v % span);
}

// k distinct sorted values from [0, grid).
std::vector<int> distinct_sorted(std::mt19937_64& rng, int grid, int k) {
    std::vector<int> vals;
    while (int(vals.size()) < k) {
        int v = bounded(rng, grid);
        if (std::find(vals.begin(), vals.end(), v) == vals.end())
            vals.push_back(v);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<Point2> random_rectangle(std::mt19937_64& rng, int grid) {
    const std::vector<int> xs = distinct_sorted(rng, grid, 2);
    const std::vector<int> ys = distinct_sorted(rng, grid, 2);
    return {{xs[0], ys[0]}, {xs[1], ys[0]}, {xs[1], ys[1]}, {xs[0], ys[1]}};
}

void random_reflect(std::mt19937_64& rng, int grid, std::vector<Point2>& corners) {
    if (bounded(rng, 2))
        for (Point2& p : corners)
            p.x = (grid - 1) - p.x;
    if (bounded(rng, 2))
        for (Point2& p : corners)
            p.y = (grid - 1) - p.y;
    if (bounded(rng, 2))
        for (Point2& p : corners)
            std::swap(p.x, p.y);
}

// Rectangle with one corner folded through the opposite side; has exactly
// one self-crossing at (xm, ym).
std::vector<Point2> random_kinked_rectangle(std::mt19937_64& rng, int grid) {
    const std::vector<int> xs = distinct_sorted(rng, grid, 3);
    const std::vector<int> ys = distinct_sorted(rng, grid, 3);
    int x1 = xs[0], xm = xs[1], x2 = xs[2];
    int y1 = ys[0], ym = ys[1], y2 = ys[2];
    std::vector<Point2> corners = {{x1, ym}, {x2, ym}, {x2, y2},
                                   {xm, y2}, {xm, y1}, {x1, y1}};
    random_reflect(rng, grid, corners);
    return corners;
}

// Rectangle with one side dented inward; still a simple loop.
std::vector<Point2> random_notched_rectangle(std::mt19937_64& rng, int grid) {
    const std::vector<int> xs = distinct_sorted(rng, grid, 4);
    const std::vector<int> ys = distinct_sorted(rng, grid, 3);
    int x1 = xs[0], a = xs[1], b = xs[2], x2 = xs[3];
    int y1 = ys[0], yd = ys[1], y2 = ys[2];
    std::vector<Point2> corners = {{x1, y1}, {a, y1},  {a, yd}, {b, yd},
                                   {b, y1},  {x2, y1}, {x2, y2}, {x1, y2}};
    random_reflect(rng, grid, corners);
    return corners;
}

}  // namespace

Diagram random_diagram(std::uint64_t seed, const GenParams& params) {
    if (params.grid < 2 || params.components < 1 || params.target_crossings < 0)
        throw Error(ErrorCode::GenerationBudgetExhausted,
                    "generator parameters must be positive");
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
        std::vector<std::vector<Point2>> loops;
        loops.reserve(params.components);
        for (int i = 0; i < params.components; ++i) {
            const bool fancy =
                params.grid >= 3 && bounded(rng, 100) < params.kink_percent;
            if (!fancy)
                loops.push_back(random_rectangle(rng, params.grid));
            else if (params.grid >= 4 && bounded(rng, 2))
                loops.push_back(random_notched_rectangle(rng, params.grid));
            else
                loops.push_back(random_kinked_rectangle(rng, params.grid));
        }
        std::vector<Point2> crossing_points;
        try {
            crossing_points = detect_crossings(loops);
        } catch (const Error&) {
            continue;  // overlap or tangency; resample
        }
        if (int(crossing_points.size()) != params.target_crossings)
            continue;
        std::map<Point2, CrossingType> types;
        std::sort(crossing_points.begin(), crossing_points.end());
        for (const Point2& c : crossing_points)
            types[c] = bounded(rng, 2) ? CrossingType::XOver : CrossingType::YOver;
        return Diagram::build(std::move(loops), std::move(types));
    }
    throw Error(ErrorCode::GenerationBudgetExhausted,
                "no valid diagram with " + std::to_string(params.target_crossings) +
                    " crossings found in " + std::to_string(params.max_attempts) +
                    " attempts");
}

}  // namespace latk
