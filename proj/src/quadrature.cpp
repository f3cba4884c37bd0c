#include "sdg/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace sdg {

namespace {

// Golub-Welsch: nodes/weights of an n-point Gauss rule from the three-term
// recurrence of the orthogonal polynomials for the target weight function.
// diag/offsq are the Jacobi-matrix diagonal and squared off-diagonal entries,
// mu0 is the total mass of the weight.
void golub_welsch(const std::vector<double>& diag, const std::vector<double>& offsq,
                  double mu0, std::vector<double>& nodes, std::vector<double>& weights) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) J(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        const double b = std::sqrt(offsq[i]);
        J(i, i + 1) = b;
        J(i + 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        weights[i] = mu0 * v0 * v0;
    }
}

// Gauss-Jacobi rule on [-1,1] for weight (1-x)^alpha (1+x)^beta.
void gauss_jacobi(int n, double alpha, double beta, std::vector<double>& nodes,
                  std::vector<double>& weights) {
    std::vector<double> diag(n), offsq(std::max(0, n - 1));
    const double ab = alpha + beta;
    diag[0] = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double q = 2.0 * k + ab;
        diag[k] = (beta * beta - alpha * alpha) / (q * (q + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double q = 2.0 * k + ab;
        offsq[k - 1] = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                       (q * q * (q + 1.0) * (q - 1.0));
    }
    const double mu0 = std::pow(2.0, ab + 1.0) * std::tgamma(alpha + 1.0) *
                       std::tgamma(beta + 1.0) / std::tgamma(ab + 2.0);
    golub_welsch(diag, offsq, mu0, nodes, weights);
}

}  // namespace

EdgeQuadRule edge_quadrature(int degree) {
    if (degree < 0 || degree > 50)
        throw std::invalid_argument("edge_quadrature: degree out of range [0,50]");
    const int n = degree / 2 + 1;  // n-point Gauss-Legendre exact to 2n-1
    EdgeQuadRule rule;
    rule.exact_degree = 2 * n - 1;
    gauss_jacobi(n, 0.0, 0.0, rule.points, rule.weights);
    return rule;
}

TriQuadRule tri_quadrature(int degree) {
    if (degree < 0 || degree > 50)
        throw std::invalid_argument("tri_quadrature: degree out of range [0,50]");
    const int n = degree / 2 + 1;
    std::vector<double> gl_x, gl_w, gj_x, gj_w;
    gauss_jacobi(n, 0.0, 0.0, gl_x, gl_w);
    gauss_jacobi(n, 1.0, 0.0, gj_x, gj_w);

    // Collapsed (conical) product on x = xi*(1-eta), y = eta:
    //   int_T f dA = int_0^1 int_0^1 f(xi(1-eta), eta) (1-eta) dxi deta.
    TriQuadRule rule;
    rule.exact_degree = 2 * n - 1;
    rule.points.reserve(static_cast<std::size_t>(n) * n);
    rule.weights.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double xi = 0.5 * (gl_x[i] + 1.0);
        const double wxi = 0.5 * gl_w[i];
        for (int j = 0; j < n; ++j) {
            const double eta = 0.5 * (gj_x[j] + 1.0);
            const double weta = 0.25 * gj_w[j];  // includes (1-eta) mass
            rule.points.push_back({xi * (1.0 - eta), eta});
            rule.weights.push_back(wxi * weta);
        }
    }
    return rule;
}

namespace {

// Append `base` mapped onto the reference-coordinate sub-triangle (a, b, c).
void append_subtri(const TriQuadRule& base, Vec2 a, Vec2 b, Vec2 c,
                   TriQuadRule& out) {
    const double jac = signed_area2(a, b, c);  // relative area factor * 2
    for (std::size_t k = 0; k < base.points.size(); ++k) {
        const Vec2 p = base.points[k];
        out.points.push_back(a + p.x * (b - a) + p.y * (c - a));
        out.weights.push_back(base.weights[k] * jac * 2.0);
    }
}

}  // namespace

TriQuadRule composite_tri_quadrature(const TriQuadRule& base, int levels) {
    if (levels < 0 || levels > 12)
        throw std::invalid_argument("composite_tri_quadrature: levels out of range [0,12]");
    if (levels == 0) return base;
    const int n = 1 << levels;  // n^2 sub-triangles via uniform refinement
    TriQuadRule out;
    out.exact_degree = base.exact_degree;
    const double s = 1.0 / n;
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col + row < n; ++col) {
            const Vec2 p00{col * s, row * s};
            const Vec2 p10{(col + 1) * s, row * s};
            const Vec2 p01{col * s, (row + 1) * s};
            append_subtri(base, p00, p10, p01, out);
            if (col + row + 1 < n) {
                const Vec2 p11{(col + 1) * s, (row + 1) * s};
                append_subtri(base, p10, p11, p01, out);
            }
        }
    }
    return out;
}

MappedQuad map_to_triangle(const TriQuadRule& rule, Vec2 a, Vec2 b, Vec2 c) {
    const double jac = signed_area2(a, b, c);
    MappedQuad out;
    out.points.reserve(rule.points.size());
    out.weights.reserve(rule.weights.size());
    for (std::size_t k = 0; k < rule.points.size(); ++k) {
        const Vec2 p = rule.points[k];
        out.points.push_back(a + p.x * (b - a) + p.y * (c - a));
        out.weights.push_back(rule.weights[k] * jac * 2.0);
    }
    return out;
}

MappedQuad map_to_segment(const EdgeQuadRule& rule, Vec2 p0, Vec2 p1) {
    const double half_len = 0.5 * norm(p1 - p0);
    MappedQuad out;
    out.points.reserve(rule.points.size());
    out.weights.reserve(rule.weights.size());
    for (std::size_t k = 0; k < rule.points.size(); ++k) {
        const double t = rule.points[k];
        out.points.push_back(p0 + 0.5 * (t + 1.0) * (p1 - p0));
        out.weights.push_back(rule.weights[k] * half_len);
    }
    return out;
}

MappedQuad map_graded_corner(const TriQuadRule& base, Vec2 a, Vec2 b, Vec2 c,
                             int levels) {
    if (levels < 1 || levels > 64)
        throw std::invalid_argument("map_graded_corner: levels out of range [1,64]");
    MappedQuad out;
    auto push = [&](Vec2 u, Vec2 v, Vec2 w) {
        MappedQuad part = map_to_triangle(base, u, v, w);
        out.points.insert(out.points.end(), part.points.begin(), part.points.end());
        out.weights.insert(out.weights.end(), part.weights.begin(), part.weights.end());
    };
    // Shells between scale 2^-(k+1) and 2^-k toward vertex a, split into two
    // triangles each; innermost triangle covered by a single mapped rule.
    double t_out = 1.0;
    for (int k = 0; k < levels; ++k) {
        const double t_in = 0.5 * t_out;
        const Vec2 b_out = a + t_out * (b - a), c_out = a + t_out * (c - a);
        const Vec2 b_in = a + t_in * (b - a), c_in = a + t_in * (c - a);
        push(b_in, b_out, c_out);
        push(b_in, c_out, c_in);
        t_out = t_in;
    }
    push(a, a + t_out * (b - a), a + t_out * (c - a));
    return out;
}

MappedQuad map_graded_segment(const EdgeQuadRule& base, Vec2 p0, Vec2 p1,
                              int levels) {
    if (levels < 1 || levels > 64)
        throw std::invalid_argument("map_graded_segment: levels out of range [1,64]");
    MappedQuad out;
    auto push = [&](Vec2 u, Vec2 v) {
        MappedQuad part = map_to_segment(base, u, v);
        out.points.insert(out.points.end(), part.points.begin(), part.points.end());
        out.weights.insert(out.weights.end(), part.weights.begin(), part.weights.end());
    };
    double t_out = 1.0;
    for (int k = 0; k < levels; ++k) {
        const double t_in = 0.5 * t_out;
        push(p0 + t_in * (p1 - p0), p0 + t_out * (p1 - p0));
        t_out = t_in;
    }
    push(p0, p0 + t_out * (p1 - p0));
    return out;
}

}  // namespace sdg
