#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace latk {

/// Coordinate axis of a planar lattice edge or of a lift.
enum class Axis { X, Y };

inline Axis perpendicular(Axis a) { return a == Axis::X ? Axis::Y : Axis::X; }

inline char axis_letter(Axis a) { return a == Axis::X ? 'x' : 'y'; }

/// Vertex of the planar integer lattice.
struct Point2 {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Point2&, const Point2&) = default;

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
};

inline int taxicab(const Point2& a, const Point2& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

inline Point2 unit_step(Axis a, int sign) {
    return a == Axis::X ? Point2{sign, 0} : Point2{0, sign};
}

inline std::string to_string(const Point2& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

/// Vertex of the spatial integer lattice.
struct Point3 {
    int x = 0;
    int y = 0;
    int z = 0;

    friend auto operator<=>(const Point3&, const Point3&) = default;

    Point2 xy() const { return {x, y}; }
};

inline std::string to_string(const Point3& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," +
           std::to_string(p.z) + ")";
}

/// Unit lattice edge with endpoints stored in lexicographic order, so that
/// the same geometric edge always compares equal.
struct Edge2 {
    Point2 a;
    Point2 b;

    Edge2() = default;
    /// Canonicalizing constructor; p and q must be lattice neighbors.
    Edge2(Point2 p, Point2 q) : a(p < q ? p : q), b(p < q ? q : p) {}

    friend auto operator<=>(const Edge2&, const Edge2&) = default;

    Axis axis() const { return a.y == b.y ? Axis::X : Axis::Y; }
    bool is_x() const { return axis() == Axis::X; }
    bool is_y() const { return axis() == Axis::Y; }
    bool touches(const Point2& p) const { return a == p || b == p; }
    Point2 other_end(const Point2& p) const { return a == p ? b : a; }
};

inline std::string to_string(const Edge2& e) {
    return to_string(e.a) + "-" + to_string(e.b);
}

}  // namespace latk
