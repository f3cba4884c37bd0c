#include "sdg/geometry.hpp"

namespace sdg {

double polygon_signed_area(const std::vector<Vec2>& pts) {
    const std::size_t n = pts.size();
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % n];
        a += cross(p, q);
    }
    return 0.5 * a;
}

Vec2 polygon_centroid(const std::vector<Vec2>& pts) {
    const std::size_t n = pts.size();
    double a = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % n];
        const double w = cross(p, q);
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    // a = 2*area; centroid = (1/(6*area)) * sums
    return {cx / (3.0 * a), cy / (3.0 * a)};
}

double polygon_diameter(const std::vector<Vec2>& pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, norm(pts[i] - pts[j]));
    return d;
}

bool point_in_polygon_kernel(const std::vector<Vec2>& pts, Vec2 q, double tol) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % n];
        if (cross(b - a, q - a) < -tol) return false;
    }
    return true;
}

}  // namespace sdg
