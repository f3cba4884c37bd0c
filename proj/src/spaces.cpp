#include "sdg/spaces.hpp"

#include <algorithm>

#include "sdg/errors.hpp"

namespace sdg {

namespace {

constexpr double kMaxLocalCondition = 1e10;

// Local dof matrix rows for the edge moments of `eid` against the simplex
// basis `basis`: row k, col j = <phi_k, psi_j>_e (psi_j scalar values given
// by `vals` at the mapped rule points).
Eigen::MatrixXd edge_moment_rows(const StaggeredMesh& mesh, int eid,
                                 const EdgeBasis& ebasis, const EdgeQuadRule& rule,
                                 const Eigen::MatrixXd& vals) {
    const Edge& e = mesh.edges[eid];
    const double half_len = 0.5 * e.length;
    const Eigen::MatrixXd phi = ebasis.eval(rule.points);
    Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(ebasis.size(), vals.cols());
    for (Eigen::Index q = 0; q < phi.rows(); ++q) {
        const double w = rule.weights[q] * half_len;
        rows.noalias() += w * phi.row(q).transpose() * vals.row(q);
    }
    return rows;
}

double condition_estimate(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    return smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
}

Eigen::VectorXcd apply_real(const Eigen::MatrixXd& m, const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(m.rows());
    out.real() = m * v.real();
    out.imag() = m * v.imag();
    return out;
}

}  // namespace

std::vector<Vec2> edge_points(const StaggeredMesh& mesh, int eid,
                              const std::vector<double>& ts) {
    const Edge& e = mesh.edges[eid];
    const Vec2 p0 = mesh.vertices[e.vertex_ids[0]];
    const Vec2 p1 = mesh.vertices[e.vertex_ids[1]];
    std::vector<Vec2> pts;
    pts.reserve(ts.size());
    for (double t : ts) pts.push_back(p0 + 0.5 * (t + 1.0) * (p1 - p0));
    return pts;
}

ScalarSpace::ScalarSpace(const StaggeredMesh& mesh, int degree) : mesh_(&mesh) {
    if (degree < 0 || degree > 4)
        throw config_error("ScalarSpace: degree out of range [0,4]");
    degree_ = degree;
    const int n_tri = static_cast<int>(mesh.triangles.size());
    dim_ = n_edge_dofs() + dofs_per_tri() * n_tri;

    tri_basis_.reserve(n_tri);
    dof_to_coef_.reserve(n_tri);
    local_dofs_.reserve(n_tri);
    const EdgeQuadRule erule = edge_quadrature(2 * degree);
    const int n_loc = TriBasis::dim_poly(degree);
    const int n_int = dofs_per_tri();

    for (const Triangle& tri : mesh.triangles) {
        const TriBasis basis(mesh.vertices[tri.vertex_ids[0]],
                             mesh.vertices[tri.vertex_ids[1]],
                             mesh.vertices[tri.vertex_ids[2]], degree);

        const Edge& pe = mesh.edges[tri.primal_edge];
        const Eigen::MatrixXd vals =
            basis.eval(edge_points(mesh, pe.id, erule.points));
        Eigen::MatrixXd D(n_loc, n_loc);
        D.topRows(dofs_per_edge()) =
            edge_moment_rows(mesh, pe.id, edge_basis(pe.id), erule, vals);
        // Interior moments against the orthonormal P^{m-1} sub-basis are the
        // leading coefficients themselves.
        D.bottomRows(n_int).setZero();
        D.bottomRows(n_int).leftCols(n_int).setIdentity();

        const double cond = condition_estimate(D);
        if (!(cond < kMaxLocalCondition))
            throw numeric_error("ScalarSpace: ill-conditioned local dof matrix");
        max_cond_ = std::max(max_cond_, cond);

        std::vector<int> dofs;
        dofs.reserve(n_loc);
        for (int k = 0; k <= degree; ++k) dofs.push_back(edge_dof(pe.space_index, k));
        for (int k = 0; k < n_int; ++k) dofs.push_back(tri_dof(tri.id, k));

        tri_basis_.push_back(basis);
        dof_to_coef_.push_back(D.fullPivLu().inverse());
        local_dofs_.push_back(std::move(dofs));
    }
}

Eigen::VectorXcd ScalarSpace::coefficients(const Eigen::VectorXcd& dofs, int tid) const {
    if (dofs.size() != dim_) throw config_error("ScalarSpace: dof vector size mismatch");
    const std::vector<int>& loc = local_dofs_[tid];
    Eigen::VectorXcd w(loc.size());
    for (std::size_t i = 0; i < loc.size(); ++i) w(i) = dofs(loc[i]);
    return apply_real(dof_to_coef_[tid], w);
}

Eigen::VectorXcd ScalarSpace::eval(const Eigen::VectorXcd& dofs, int tid,
                                   const std::vector<Vec2>& pts) const {
    tri_basis_[tid].check_inside(pts);
    const Eigen::MatrixXd vals = tri_basis_[tid].eval(pts);
    const Eigen::VectorXcd c = coefficients(dofs, tid);
    Eigen::VectorXcd out(vals.rows());
    out.real() = vals * c.real();
    out.imag() = vals * c.imag();
    return out;
}

void ScalarSpace::eval_grad(const Eigen::VectorXcd& dofs, int tid,
                            const std::vector<Vec2>& pts, Eigen::VectorXcd& gx,
                            Eigen::VectorXcd& gy) const {
    tri_basis_[tid].check_inside(pts);
    Eigen::MatrixXd bx, by;
    tri_basis_[tid].eval_grad(pts, bx, by);
    const Eigen::VectorXcd c = coefficients(dofs, tid);
    gx.resize(bx.rows());
    gy.resize(by.rows());
    gx.real() = bx * c.real();
    gx.imag() = bx * c.imag();
    gy.real() = by * c.real();
    gy.imag() = by * c.imag();
}

VectorSpace::VectorSpace(const StaggeredMesh& mesh, int degree) : mesh_(&mesh) {
    if (degree < 0 || degree > 4)
        throw config_error("VectorSpace: degree out of range [0,4]");
    degree_ = degree;
    const int n_tri = static_cast<int>(mesh.triangles.size());
    dim_ = n_edge_dofs() + dofs_per_tri() * n_tri;

    tri_basis_.reserve(n_tri);
    dof_to_coef_.reserve(n_tri);
    local_dofs_.reserve(n_tri);
    sorted_duals_.reserve(n_tri);
    const EdgeQuadRule erule = edge_quadrature(2 * degree);
    const int n_scal = TriBasis::dim_poly(degree);
    const int n_loc = 2 * n_scal;  // columns: psi_j * e_c, col = 2j + c
    const int n_int = dofs_per_tri();

    for (const Triangle& tri : mesh.triangles) {
        const TriBasis basis(mesh.vertices[tri.vertex_ids[0]],
                             mesh.vertices[tri.vertex_ids[1]],
                             mesh.vertices[tri.vertex_ids[2]], degree);

        std::array<int, 2> duals = tri.dual_edges;
        if (duals[0] > duals[1]) std::swap(duals[0], duals[1]);

        Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n_loc, n_loc);
        for (int s = 0; s < 2; ++s) {
            const Edge& e = mesh.edges[duals[s]];
            const Eigen::MatrixXd vals =
                basis.eval(edge_points(mesh, e.id, erule.points));
            const Eigen::MatrixXd rows =
                edge_moment_rows(mesh, e.id, edge_basis(e.id), erule, vals);
            for (int k = 0; k <= degree; ++k)
                for (int j = 0; j < n_scal; ++j) {
                    D(s * dofs_per_edge() + k, 2 * j + 0) = rows(k, j) * e.normal.x;
                    D(s * dofs_per_edge() + k, 2 * j + 1) = rows(k, j) * e.normal.y;
                }
        }
        D.bottomRows(n_int).setZero();
        D.bottomRows(n_int).leftCols(n_int).setIdentity();

        const double cond = condition_estimate(D);
        if (!(cond < kMaxLocalCondition))
            throw numeric_error("VectorSpace: ill-conditioned local dof matrix");
        max_cond_ = std::max(max_cond_, cond);

        std::vector<int> dofs;
        dofs.reserve(n_loc);
        for (int s = 0; s < 2; ++s) {
            const int sidx = mesh.edges[duals[s]].space_index;
            for (int k = 0; k <= degree; ++k) dofs.push_back(edge_dof(sidx, k));
        }
        for (int k = 0; k < n_int; ++k) dofs.push_back(tri_dof(tri.id, k));

        tri_basis_.push_back(basis);
        dof_to_coef_.push_back(D.fullPivLu().inverse());
        local_dofs_.push_back(std::move(dofs));
        sorted_duals_.push_back(duals);
    }
}

Eigen::VectorXcd VectorSpace::coefficients(const Eigen::VectorXcd& dofs, int tid) const {
    if (dofs.size() != dim_) throw config_error("VectorSpace: dof vector size mismatch");
    const std::vector<int>& loc = local_dofs_[tid];
    Eigen::VectorXcd w(loc.size());
    for (std::size_t i = 0; i < loc.size(); ++i) w(i) = dofs(loc[i]);
    return apply_real(dof_to_coef_[tid], w);
}

void VectorSpace::eval(const Eigen::VectorXcd& dofs, int tid,
                       const std::vector<Vec2>& pts, Eigen::VectorXcd& vx,
                       Eigen::VectorXcd& vy) const {
    tri_basis_[tid].check_inside(pts);
    const Eigen::MatrixXd vals = tri_basis_[tid].eval(pts);
    const Eigen::VectorXcd c = coefficients(dofs, tid);
    const int n_scal = static_cast<int>(vals.cols());
    Eigen::VectorXcd cx(n_scal), cy(n_scal);
    for (int j = 0; j < n_scal; ++j) {
        cx(j) = c(2 * j + 0);
        cy(j) = c(2 * j + 1);
    }
    vx.resize(vals.rows());
    vy.resize(vals.rows());
    vx.real() = vals * cx.real();
    vx.imag() = vals * cx.imag();
    vy.real() = vals * cy.real();
    vy.imag() = vals * cy.imag();
}

Eigen::VectorXcd VectorSpace::eval_div(const Eigen::VectorXcd& dofs, int tid,
                                       const std::vector<Vec2>& pts) const {
    tri_basis_[tid].check_inside(pts);
    Eigen::MatrixXd bx, by;
    tri_basis_[tid].eval_grad(pts, bx, by);
    const Eigen::VectorXcd c = coefficients(dofs, tid);
    const int n_scal = static_cast<int>(bx.cols());
    Eigen::VectorXcd cx(n_scal), cy(n_scal);
    for (int j = 0; j < n_scal; ++j) {
        cx(j) = c(2 * j + 0);
        cy(j) = c(2 * j + 1);
    }
    Eigen::VectorXcd out(bx.rows());
    out.real() = bx * cx.real() + by * cy.real();
    out.imag() = bx * cx.imag() + by * cy.imag();
    return out;
}

Eigen::VectorXcd VectorSpace::eval_normal(const Eigen::VectorXcd& dofs, int tid,
                                          const std::vector<Vec2>& pts, Vec2 n) const {
    Eigen::VectorXcd vx, vy;
    eval(dofs, tid, pts, vx, vy);
    return n.x * vx + n.y * vy;
}

}  // namespace sdg
