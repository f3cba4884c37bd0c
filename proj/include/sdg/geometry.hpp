#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace sdg {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Axis-aligned rectangle, used for generated meshes and outward-normal checks.
struct Rect {
    double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

// Twice the signed area of triangle (a, b, c); positive when CCW.
inline double signed_area2(Vec2 a, Vec2 b, Vec2 c) {
    return cross(b - a, c - a);
}

// Diameter of a triangle = its longest edge.
inline double tri_diameter(Vec2 a, Vec2 b, Vec2 c) {
    return std::max({norm(b - a), norm(c - b), norm(a - c)});
}

inline double tri_area(Vec2 a, Vec2 b, Vec2 c) {
    return 0.5 * std::abs(signed_area2(a, b, c));
}

// Inradius = area / semiperimeter.
inline double tri_inradius(Vec2 a, Vec2 b, Vec2 c) {
    const double per = norm(b - a) + norm(c - b) + norm(a - c);
    if (per <= 0.0) return 0.0;
    return 2.0 * tri_area(a, b, c) / per;
}

// Signed area of a simple polygon (positive when CCW).
double polygon_signed_area(const std::vector<Vec2>& pts);

// Area centroid of a simple polygon via the shoelace formula.
Vec2 polygon_centroid(const std::vector<Vec2>& pts);

// Max pairwise vertex distance (polygon diameter).
double polygon_diameter(const std::vector<Vec2>& pts);

// True if q lies in the kernel of the polygon, i.e. strictly to the left of
// (or on) every directed polygon edge. Used as an oracle for star-shapedness.
bool point_in_polygon_kernel(const std::vector<Vec2>& pts, Vec2 q, double tol = 0.0);

}  // namespace sdg
