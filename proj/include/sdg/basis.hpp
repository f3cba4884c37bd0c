#pragma once

#include <Eigen/Dense>
#include <array>

#include "sdg/geometry.hpp"

namespace sdg {

// L2-orthonormal polynomial basis of degree <= m on one physical triangle,
// built by Gram-Schmidt (Cholesky) from centered/scaled monomials. Functions
// are graded by total degree, so the leading dim P^{m-1} entries span P^{m-1}.
class TriBasis {
  public:
    TriBasis() = default;
    TriBasis(Vec2 a, Vec2 b, Vec2 c, int degree);

    int degree() const { return degree_; }
    int size() const { return size_; }
    // Number of basis functions of degree <= d (d in [-1, degree]).
    static int dim_poly(int d) { return (d + 1) * (d + 2) / 2; }

    // Values of all basis functions at physical points: (npts x size).
    Eigen::MatrixXd eval(const std::vector<Vec2>& pts) const;
    // Gradients: gx, gy each (npts x size).
    void eval_grad(const std::vector<Vec2>& pts, Eigen::MatrixXd& gx,
                   Eigen::MatrixXd& gy) const;

    // Throws if a point lies outside the triangle beyond `tol` in barycentric
    // coordinates (relative to the triangle scale).
    void check_inside(const std::vector<Vec2>& pts, double tol = 1e-10) const;

    const std::array<Vec2, 3>& vertices() const { return verts_; }
    double scale() const { return scale_; }

  private:
    std::array<Vec2, 3> verts_{};
    Vec2 center_{};       // centroid, expansion point for monomials
    double scale_ = 1.0;  // triangle diameter, monomial scaling
    int degree_ = 0;
    int size_ = 0;
    std::vector<int> pow_x_, pow_y_;  // monomial exponents, graded order
    Eigen::MatrixXd coef_;            // row i = monomial coefficients of basis func i

    Eigen::MatrixXd monomials(const std::vector<Vec2>& pts) const;
};

// Legendre polynomials on an edge parametrized by t in [-1,1], scaled to be
// orthonormal w.r.t. the arclength inner product on an edge of given length.
class EdgeBasis {
  public:
    EdgeBasis() = default;
    EdgeBasis(int degree, double edge_length);

    int degree() const { return degree_; }
    int size() const { return degree_ + 1; }

    // Values of basis functions 0..degree at parameters t: (npts x size).
    Eigen::MatrixXd eval(const std::vector<double>& ts) const;

  private:
    int degree_ = 0;
    double length_ = 1.0;
};

}  // namespace sdg
