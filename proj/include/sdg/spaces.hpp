#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sdg/basis.hpp"
#include "sdg/mesh.hpp"
#include "sdg/quadrature.hpp"

namespace sdg {

using Complex = std::complex<double>;

// Edge parametrization shared by every consumer: t in [-1,1] runs from the
// lower-id endpoint to the higher-id endpoint of the edge.
std::vector<Vec2> edge_points(const StaggeredMesh& mesh, int eid,
                              const std::vector<double>& ts);

// Scalar staggered space of degree m: per primal edge, m+1 trace moments
// against the orthonormal edge basis; per simplex, moments against the
// orthonormal P^{m-1} sub-basis. Fields are continuous across interior
// primal edges and may jump across dual edges.
class ScalarSpace {
  public:
    ScalarSpace(const StaggeredMesh& mesh, int degree);

    const StaggeredMesh& mesh() const { return *mesh_; }
    int degree() const { return degree_; }
    int dim() const { return dim_; }
    int dofs_per_edge() const { return degree_ + 1; }
    int dofs_per_tri() const { return degree_ * (degree_ + 1) / 2; }
    int n_edge_dofs() const { return dofs_per_edge() * mesh_->n_primal_edges(); }

    int edge_dof(int edge_space_index, int k) const {
        return edge_space_index * dofs_per_edge() + k;
    }
    int tri_dof(int tid, int k) const { return n_edge_dofs() + tid * dofs_per_tri() + k; }

    // Global dof ids of the simplex-local dofs: edge moments of its primal
    // edge, then its interior moments.
    const std::vector<int>& local_dofs(int tid) const { return local_dofs_[tid]; }
    const TriBasis& tri_basis(int tid) const { return tri_basis_[tid]; }
    EdgeBasis edge_basis(int eid) const {
        return EdgeBasis(degree_, mesh_->edges[eid].length);
    }
    // Maps local dof values to coefficients in the simplex basis.
    const Eigen::MatrixXd& dof_to_coef(int tid) const { return dof_to_coef_[tid]; }
    double max_local_condition() const { return max_cond_; }

    Eigen::VectorXcd coefficients(const Eigen::VectorXcd& dofs, int tid) const;
    Eigen::VectorXcd eval(const Eigen::VectorXcd& dofs, int tid,
                          const std::vector<Vec2>& pts) const;
    void eval_grad(const Eigen::VectorXcd& dofs, int tid, const std::vector<Vec2>& pts,
                   Eigen::VectorXcd& gx, Eigen::VectorXcd& gy) const;

  private:
    const StaggeredMesh* mesh_;
    int degree_;
    int dim_;
    std::vector<TriBasis> tri_basis_;
    std::vector<Eigen::MatrixXd> dof_to_coef_;
    std::vector<std::vector<int>> local_dofs_;
    double max_cond_ = 0.0;
};

// Vector staggered space of degree m: per dual edge, m+1 normal-trace
// moments; per simplex, componentwise moments against P^{m-1}. Fields have
// continuous normal component across dual edges.
class VectorSpace {
  public:
    VectorSpace(const StaggeredMesh& mesh, int degree);

    const StaggeredMesh& mesh() const { return *mesh_; }
    int degree() const { return degree_; }
    int dim() const { return dim_; }
    int dofs_per_edge() const { return degree_ + 1; }
    int dofs_per_tri() const { return degree_ * (degree_ + 1); }
    int n_edge_dofs() const { return dofs_per_edge() * mesh_->n_dual_edges(); }

    int edge_dof(int edge_space_index, int k) const {
        return edge_space_index * dofs_per_edge() + k;
    }
    // Interior moment r = 2*j + c: component c against P^{m-1} basis func j.
    int tri_dof(int tid, int r) const { return n_edge_dofs() + tid * dofs_per_tri() + r; }

    // Local order: dofs of the two dual edges (ascending edge id), interior.
    const std::vector<int>& local_dofs(int tid) const { return local_dofs_[tid]; }
    const std::array<int, 2>& sorted_dual_edges(int tid) const {
        return sorted_duals_[tid];
    }
    const TriBasis& tri_basis(int tid) const { return tri_basis_[tid]; }
    EdgeBasis edge_basis(int eid) const {
        return EdgeBasis(degree_, mesh_->edges[eid].length);
    }
    const Eigen::MatrixXd& dof_to_coef(int tid) const { return dof_to_coef_[tid]; }
    double max_local_condition() const { return max_cond_; }

    Eigen::VectorXcd coefficients(const Eigen::VectorXcd& dofs, int tid) const;
    void eval(const Eigen::VectorXcd& dofs, int tid, const std::vector<Vec2>& pts,
              Eigen::VectorXcd& vx, Eigen::VectorXcd& vy) const;
    Eigen::VectorXcd eval_div(const Eigen::VectorXcd& dofs, int tid,
                              const std::vector<Vec2>& pts) const;
    Eigen::VectorXcd eval_normal(const Eigen::VectorXcd& dofs, int tid,
                                 const std::vector<Vec2>& pts, Vec2 n) const;

  private:
    const StaggeredMesh* mesh_;
    int degree_;
    int dim_;
    std::vector<TriBasis> tri_basis_;
    std::vector<Eigen::MatrixXd> dof_to_coef_;
    std::vector<std::vector<int>> local_dofs_;
    std::vector<std::array<int, 2>> sorted_duals_;
    double max_cond_ = 0.0;
};

}  // namespace sdg
