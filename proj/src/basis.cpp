#include "sdg/basis.hpp"

#include <stdexcept>

#include "sdg/quadrature.hpp"

namespace sdg {

TriBasis::TriBasis(Vec2 a, Vec2 b, Vec2 c, int degree) {
    if (degree < 0 || degree > 8)
        throw std::invalid_argument("TriBasis: degree out of range [0,8]");
    if (signed_area2(a, b, c) <= 0.0)
        throw std::invalid_argument("TriBasis: triangle not positively oriented");
    verts_ = {a, b, c};
    center_ = (1.0 / 3.0) * (a + b + c);
    scale_ = tri_diameter(a, b, c);
    degree_ = degree;
    size_ = dim_poly(degree);
    pow_x_.reserve(size_);
    pow_y_.reserve(size_);
    for (int d = 0; d <= degree; ++d) {
        for (int j = 0; j <= d; ++j) {
            pow_x_.push_back(d - j);
            pow_y_.push_back(j);
        }
    }

    // Gram matrix of scaled monomials by exact quadrature, then Cholesky
    // orthonormalization. A second pass squares down the roundoff so the
    // basis is orthonormal to machine precision.
    const MappedQuad q = map_to_triangle(tri_quadrature(2 * degree), a, b, c);
    coef_ = Eigen::MatrixXd::Identity(size_, size_);
    const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(
        q.weights.data(), static_cast<Eigen::Index>(q.weights.size()));
    for (int pass = 0; pass < 2; ++pass) {
        const Eigen::MatrixXd vals = eval(q.points);
        const Eigen::MatrixXd gram = vals.transpose() * w.asDiagonal() * vals;
        Eigen::LLT<Eigen::MatrixXd> llt(gram);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("TriBasis: Gram matrix not positive definite");
        coef_ = llt.matrixL().solve(coef_);
    }
}

Eigen::MatrixXd TriBasis::monomials(const std::vector<Vec2>& pts) const {
    const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd m(n, size_);
    for (Eigen::Index p = 0; p < n; ++p) {
        const double sx = (pts[p].x - center_.x) / scale_;
        const double sy = (pts[p].y - center_.y) / scale_;
        double px[9], py[9];
        px[0] = py[0] = 1.0;
        for (int d = 1; d <= degree_; ++d) {
            px[d] = px[d - 1] * sx;
            py[d] = py[d - 1] * sy;
        }
        for (int k = 0; k < size_; ++k) m(p, k) = px[pow_x_[k]] * py[pow_y_[k]];
    }
    return m;
}

Eigen::MatrixXd TriBasis::eval(const std::vector<Vec2>& pts) const {
    return monomials(pts) * coef_.transpose();
}

void TriBasis::eval_grad(const std::vector<Vec2>& pts, Eigen::MatrixXd& gx,
                         Eigen::MatrixXd& gy) const {
    const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd mx(n, size_), my(n, size_);
    for (Eigen::Index p = 0; p < n; ++p) {
        const double sx = (pts[p].x - center_.x) / scale_;
        const double sy = (pts[p].y - center_.y) / scale_;
        double px[9], py[9];
        px[0] = py[0] = 1.0;
        for (int d = 1; d <= degree_; ++d) {
            px[d] = px[d - 1] * sx;
            py[d] = py[d - 1] * sy;
        }
        for (int k = 0; k < size_; ++k) {
            const int ax = pow_x_[k], ay = pow_y_[k];
            mx(p, k) = ax > 0 ? ax * px[ax - 1] * py[ay] / scale_ : 0.0;
            my(p, k) = ay > 0 ? ay * px[ax] * py[ay - 1] / scale_ : 0.0;
        }
    }
    gx = mx * coef_.transpose();
    gy = my * coef_.transpose();
}

void TriBasis::check_inside(const std::vector<Vec2>& pts, double tol) const {
    const Vec2 a = verts_[0], b = verts_[1], c = verts_[2];
    const double area2 = signed_area2(a, b, c);
    for (const Vec2& p : pts) {
        const double l0 = signed_area2(p, b, c) / area2;
        const double l1 = signed_area2(a, p, c) / area2;
        const double l2 = signed_area2(a, b, p) / area2;
        if (l0 < -tol || l1 < -tol || l2 < -tol)
            throw std::invalid_argument("TriBasis: evaluation point outside element");
    }
}

EdgeBasis::EdgeBasis(int degree, double edge_length) {
    if (degree < 0 || degree > 8)
        throw std::invalid_argument("EdgeBasis: degree out of range [0,8]");
    if (!(edge_length > 0.0))
        throw std::invalid_argument("EdgeBasis: edge length must be positive");
    degree_ = degree;
    length_ = edge_length;
}

Eigen::MatrixXd EdgeBasis::eval(const std::vector<double>& ts) const {
    const Eigen::Index n = static_cast<Eigen::Index>(ts.size());
    Eigen::MatrixXd vals(n, degree_ + 1);
    for (Eigen::Index p = 0; p < n; ++p) {
        const double t = ts[p];
        double pk_m1 = 1.0, pk = t;
        for (int k = 0; k <= degree_; ++k) {
            double leg;
            if (k == 0) {
                leg = 1.0;
            } else if (k == 1) {
                leg = t;
            } else {
                const double pk_p1 =
                    ((2.0 * k - 1.0) * t * pk - (k - 1.0) * pk_m1) / k;
                pk_m1 = pk;
                pk = pk_p1;
                leg = pk;
            }
            vals(p, k) = leg * std::sqrt((2.0 * k + 1.0) / length_);
        }
    }
    return vals;
}

}  // namespace sdg
