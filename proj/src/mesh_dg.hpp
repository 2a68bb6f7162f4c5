#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <vector>

#include "legendre.hpp"

namespace swdg {

struct CoercivityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform 1-D mesh on (a,b) with a per-element diffusion coefficient d_T.
struct Mesh1D {
  int n_elements = 0;
  double a = 0.0;
  double b = 1.0;
  std::vector<double> coefficient;  // empty means d_T = 1 everywhere

  double h() const { return (b - a) / n_elements; }
  double coeff(int e) const { return coefficient.empty() ? 1.0 : coefficient[e]; }
  void validate() const;
};

// Discontinuous piecewise-polynomial space with an L2-orthonormal Legendre
// basis per element, so the mass matrix is the identity and P_h is a pure
// quadrature operation. Construction assembles the interior-penalty stiffness
// matrix and verifies coercivity (positive definiteness); it throws
// CoercivityError if sigma0 is too small.
class DGSpace {
 public:
  DGSpace(Mesh1D mesh, int degree, double sigma0 = -1.0);

  const Mesh1D& mesh() const { return mesh_; }
  int degree() const { return degree_; }
  double sigma0() const { return sigma0_; }
  int n_dofs() const { return n_dofs_; }
  double h() const { return mesh_.h(); }
  int quad_count() const { return quad_.points.size(); }
  const Quadrature& quad() const { return quad_; }

  // basis value tables at the reference quadrature points, (p+1) x nq
  const Eigen::MatrixXd& basis_values() const { return val_; }
  const Eigen::MatrixXd& basis_derivatives() const { return der_; }
  const Eigen::MatrixXd& basis_second_derivatives() const { return der2_; }

  // traces at the element endpoints
  const Eigen::VectorXd& trace_left() const { return trace_l_; }
  const Eigen::VectorXd& trace_right() const { return trace_r_; }
  const Eigen::VectorXd& dtrace_left() const { return dtrace_l_; }
  const Eigen::VectorXd& dtrace_right() const { return dtrace_r_; }

  double element_center(int e) const { return mesh_.a + (e + 0.5) * h(); }
  // physical quadrature points of element e
  Eigen::VectorXd quad_points(int e) const;
  // physical quadrature weights (same for every element)
  Eigen::VectorXd quad_weights() const { return quad_.weights * (0.5 * h()); }

  // symmetric banded stiffness, LAPACK lower 'L' column layout: band(i-j, j) = A(i,j)
  const Eigen::MatrixXd& stiffness_band() const { return band_; }
  int bandwidth() const { return 2 * degree_ + 1; }

 private:
  void assemble();
  void coercivity_probe() const;

  Mesh1D mesh_;
  int degree_;
  double sigma0_;
  int n_dofs_;
  Quadrature quad_;
  Eigen::MatrixXd val_, der_, der2_;
  Eigen::VectorXd trace_l_, trace_r_, dtrace_l_, dtrace_r_;
  Eigen::MatrixXd band_;
};

// Coefficient vector of a V_h function in the element-wise orthonormal basis.
struct Field {
  const DGSpace* space = nullptr;
  Eigen::VectorXd coeffs;

  Field() = default;
  explicit Field(const DGSpace& s) : space(&s), coeffs(Eigen::VectorXd::Zero(s.n_dofs())) {}
  Field(const DGSpace& s, Eigen::VectorXd c) : space(&s), coeffs(std::move(c)) {}

  // ||u||_{L2}: the basis is orthonormal, so this is the coefficient norm
  double norm() const { return coeffs.norm(); }
};

inline double l2_inner(const Field& u, const Field& v) { return u.coeffs.dot(v.coeffs); }

// Matrix realization of B_h(.,.) in the modal basis.
class StiffnessOperator {
 public:
  explicit StiffnessOperator(const DGSpace& space) : space_(&space) {}

  const DGSpace& space() const { return *space_; }
  const Eigen::MatrixXd& band() const { return space_->stiffness_band(); }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd dense() const;
  // B_h(u, v) = v^T A u
  double bilinear(const Field& u, const Field& v) const;

 private:
  const DGSpace* space_;
};

StiffnessOperator assemble_stiffness(const DGSpace& space);

// L2 projection by per-element Gauss quadrature; exact on V_h.
Field l2_project(const DGSpace& space, const std::function<double(double)>& f);

// Galerkin projection: B_h(Pi_h f - f, v) = 0 for all v. Needs f and f' to
// evaluate B_h(f, v) by quadrature; f is assumed continuous.
Field galerkin_project(const DGSpace& space, const StiffnessOperator& stiffness,
                       const std::function<double(double)>& f,
                       const std::function<double(double)>& fprime);

// Broken norm: (sum_T ||u'||^2 + sum_T h^2 ||u''||^2 + sum_F h^-1 |[u]|^2)^{1/2}
double broken_norm(const Field& u);

// Gram matrix S with u^T S u = ||u||_*^2, modal basis. Dense; used by the
// energy observables for batched evaluation.
Eigen::MatrixXd star_norm_gram(const DGSpace& space);

// Pointwise value; at interior element interfaces the left-element trace is
// returned. Throws std::out_of_range outside the domain closure.
double evaluate(const Field& u, double x);

}  // namespace swdg
