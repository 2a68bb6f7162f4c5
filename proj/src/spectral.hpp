#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>

#include "mesh_dg.hpp"

namespace swdg {

struct CflError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State in the eigenbasis of Lambda_h: a = spectral coefficients of the
// displacement, b = of the velocity.
struct SpectralState {
  Eigen::VectorXd a, b;
};

// Eigenpairs of Lambda_h. Everything diagonal in this basis lives here:
// fractional powers, trig operator functions, the discrete norms, and the
// CFL bookkeeping.
class SpectralOperator {
 public:
  // full symmetric eigendecomposition of the banded stiffness
  static SpectralOperator decompose(const StiffnessOperator& stiffness);

  // direct construction (surrogate operators in tests, e.g. a free lambda=0 mode)
  SpectralOperator(Eigen::VectorXd eigenvalues, Eigen::MatrixXd eigenvectors, double h);

  int size() const { return eigenvalues_.size(); }
  double h() const { return h_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  // columns are the L2-orthonormal eigenvectors in modal coordinates
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
  double lambda_max() const { return lambda_max_; }
  double lambda_min() const { return eigenvalues_[0]; }

  Eigen::VectorXd to_spectral(const Eigen::VectorXd& modal) const {
    return eigenvectors_.transpose() * modal;
  }
  Eigen::VectorXd to_modal(const Eigen::VectorXd& spectral) const {
    return eigenvectors_ * spectral;
  }
  SpectralState to_spectral(const Field& u1, const Field& u2) const {
    return {to_spectral(u1.coeffs), to_spectral(u2.coeffs)};
  }

  // Lambda_h^alpha u, mode-wise. alpha < 0 requires strictly positive modes.
  Field frac_power(double alpha, const Field& u) const;

  // ||Lambda_h^{alpha/2} u||
  double norm_h_alpha(const Field& u, double alpha) const;
  double norm_h_alpha(const Eigen::VectorXd& spectral, double alpha) const;

  // diagonal multipliers of the discrete semigroup blocks:
  // cos(t sqrt(lambda)) and lambda^{shift/2} sin(t sqrt(lambda)), shift in
  // {-1, 0, +1}; the shift = -1 multiplier takes the limit value t at lambda=0
  Eigen::VectorXd trig_cos(double t) const;
  Eigen::VectorXd trig_sin_scaled(double t, int shift) const;

  // E_h(t) applied to a state via the block form
  SpectralState apply_semigroup(double t, const SpectralState& v) const;

  // tau-weighted norm preserved by the Verlet propagator; requires strict CFL
  double norm_m_alpha(double tau, const SpectralState& v, double alpha) const;

  // safety * 2 / sqrt(lambda_max)
  double max_stable_tau(double safety = 0.9) const;

  // tau * sqrt(lambda_max) / 2; stepping requires margin < safety
  double cfl_margin(double tau) const { return 0.5 * tau * std::sqrt(lambda_max_); }

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  double h_;
  double lambda_max_;
};

SpectralOperator decompose(const StiffnessOperator& stiffness);

// Spectral-coordinate transform to physical quadrature values and back;
// the nonlinearity is applied pointwise in between. Batched columns.
class QuadratureMap {
 public:
  QuadratureMap(const DGSpace& space, const SpectralOperator& op);

  const Eigen::MatrixXd& to_quad() const { return to_quad_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  const Eigen::VectorXd& points() const { return points_; }

  // P_h f(u) in spectral coordinates, column-wise over states
  void apply_projected(const Eigen::MatrixXd& spectral,
                       const std::function<double(double)>& f,
                       Eigen::MatrixXd& out) const;
  Eigen::VectorXd apply_projected(const Eigen::VectorXd& spectral,
                                  const std::function<double(double)>& f) const;

  // integral of g(u) over the domain, column-wise
  Eigen::VectorXd integrate_pointwise(const Eigen::MatrixXd& spectral,
                                      const std::function<double(double)>& g) const;

 private:
  Eigen::MatrixXd to_quad_;  // (n_elements * nq) x N
  Eigen::VectorXd weights_;  // physical quadrature weights
  Eigen::VectorXd points_;   // physical quadrature points
};

}  // namespace swdg
