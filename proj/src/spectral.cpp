#include "spectral.hpp"

#include <lapacke.h>

#include <cmath>

#include "blas.hpp"

namespace swdg {

SpectralOperator SpectralOperator::decompose(const StiffnessOperator& stiffness) {
  const DGSpace& sp = stiffness.space();
  const int n = sp.n_dofs();
  const int kd = sp.bandwidth();
  Eigen::MatrixXd ab = stiffness.band();
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z(n, n);
  const int info = LAPACKE_dsbevd(LAPACK_COL_MAJOR, 'V', 'L', n, kd, ab.data(),
                                  kd + 1, w.data(), z.data(), n);
  if (info != 0) throw std::runtime_error("decompose: banded eigensolver failed");
  return SpectralOperator(std::move(w), std::move(z), sp.h());
}

SpectralOperator::SpectralOperator(Eigen::VectorXd eigenvalues,
                                   Eigen::MatrixXd eigenvectors, double h)
    : eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)),
      h_(h) {
  lambda_max_ = eigenvalues_.size() ? eigenvalues_.maxCoeff() : 0.0;
  // clamp near-zero modes so fractional powers are well defined on them
  const double tol = 1e-12 * lambda_max_;
  for (int i = 0; i < eigenvalues_.size(); ++i)
    if (std::abs(eigenvalues_[i]) < tol) eigenvalues_[i] = 0.0;
  if (eigenvalues_.size() && eigenvalues_.minCoeff() < 0.0)
    throw std::runtime_error("SpectralOperator: negative eigenvalue");
}

Field SpectralOperator::frac_power(double alpha, const Field& u) const {
  Eigen::VectorXd s = to_spectral(u.coeffs);
  for (int i = 0; i < s.size(); ++i) {
    const double lam = eigenvalues_[i];
    if (lam == 0.0) {
      if (alpha < 0.0 && s[i] != 0.0)
        throw std::domain_error("frac_power: negative power of a null mode");
      if (alpha != 0.0) s[i] = 0.0;
    } else {
      s[i] *= std::pow(lam, alpha);
    }
  }
  return Field(*u.space, to_modal(s));
}

double SpectralOperator::norm_h_alpha(const Eigen::VectorXd& spectral,
                                      double alpha) const {
  double total = 0.0;
  for (int i = 0; i < spectral.size(); ++i) {
    const double lam = eigenvalues_[i];
    if (lam == 0.0) {
      if (alpha < 0.0 && spectral[i] != 0.0)
        throw std::domain_error("norm_h_alpha: negative power of a null mode");
      if (alpha == 0.0) total += spectral[i] * spectral[i];
    } else {
      total += std::pow(lam, alpha) * spectral[i] * spectral[i];
    }
  }
  return std::sqrt(total);
}

double SpectralOperator::norm_h_alpha(const Field& u, double alpha) const {
  return norm_h_alpha(to_spectral(u.coeffs), alpha);
}

Eigen::VectorXd SpectralOperator::trig_cos(double t) const {
  return eigenvalues_.array().sqrt().unaryExpr(
      [t](double s) { return std::cos(t * s); });
}

Eigen::VectorXd SpectralOperator::trig_sin_scaled(double t, int shift) const {
  if (shift < -1 || shift > 1)
    throw std::invalid_argument("trig_sin_scaled: shift must be -1, 0, or +1");
  Eigen::VectorXd out(eigenvalues_.size());
  for (int i = 0; i < out.size(); ++i) {
    const double lam = eigenvalues_[i];
    const double s = std::sqrt(lam);
    if (shift == -1)
      out[i] = lam == 0.0 ? t : std::sin(t * s) / s;  // limit t at lambda = 0
    else if (shift == 0)
      out[i] = std::sin(t * s);
    else
      out[i] = s * std::sin(t * s);
  }
  return out;
}

SpectralState SpectralOperator::apply_semigroup(double t, const SpectralState& v) const {
  const Eigen::VectorXd c = trig_cos(t);
  const Eigen::VectorXd sm = trig_sin_scaled(t, -1);
  const Eigen::VectorXd sp = trig_sin_scaled(t, +1);
  SpectralState out;
  out.a = c.cwiseProduct(v.a) + sm.cwiseProduct(v.b);
  out.b = -sp.cwiseProduct(v.a) + c.cwiseProduct(v.b);
  return out;
}

double SpectralOperator::norm_m_alpha(double tau, const SpectralState& v,
                                      double alpha) const {
  if (tau * tau * lambda_max_ >= 4.0)
    throw CflError("norm_m_alpha: tau^2 lambda_max >= 4");
  double total = 0.0;
  for (int i = 0; i < eigenvalues_.size(); ++i) {
    const double lam = eigenvalues_[i];
    const double w = 1.0 - 0.25 * tau * tau * lam;
    double pa, pb;
    if (lam == 0.0) {
      pa = alpha == 0.0 ? 1.0 : 0.0;
      if (alpha - 1.0 < 0.0 && v.b[i] != 0.0)
        throw std::domain_error("norm_m_alpha: negative power of a null mode");
      pb = alpha == 1.0 ? 1.0 : 0.0;
    } else {
      pa = std::pow(lam, alpha);
      pb = std::pow(lam, alpha - 1.0);
    }
    total += 0.5 * pa / w * v.a[i] * v.a[i] + 0.5 * pb * v.b[i] * v.b[i];
  }
  return std::sqrt(total);
}

double SpectralOperator::max_stable_tau(double safety) const {
  if (!(safety > 0.0 && safety < 1.0))
    throw std::invalid_argument("max_stable_tau: safety must be in (0,1)");
  if (!(lambda_max_ > 0.0))
    throw std::domain_error("max_stable_tau: lambda_max must be positive");
  return safety * 2.0 / std::sqrt(lambda_max_);
}

SpectralOperator decompose(const StiffnessOperator& stiffness) {
  return SpectralOperator::decompose(stiffness);
}

QuadratureMap::QuadratureMap(const DGSpace& space, const SpectralOperator& op) {
  const int n = space.mesh().n_elements;
  const int nb = space.degree() + 1;
  const int nq = space.quad_count();
  Eigen::MatrixXd quad_eval = Eigen::MatrixXd::Zero(n * nq, space.n_dofs());
  for (int e = 0; e < n; ++e)
    quad_eval.block(e * nq, e * nb, nq, nb) = space.basis_values().transpose();
  to_quad_ = quad_eval * op.eigenvectors();
  const Eigen::VectorXd w = space.quad_weights();
  weights_.resize(n * nq);
  points_.resize(n * nq);
  for (int e = 0; e < n; ++e) {
    weights_.segment(e * nq, nq) = w;
    points_.segment(e * nq, nq) = space.quad_points(e);
  }
}

void QuadratureMap::apply_projected(const Eigen::MatrixXd& spectral,
                                    const std::function<double(double)>& f,
                                    Eigen::MatrixXd& out) const {
  Eigen::MatrixXd vals(to_quad_.rows(), spectral.cols());
  gemm(to_quad_, spectral, vals);
  for (int c = 0; c < vals.cols(); ++c)
    for (int r = 0; r < vals.rows(); ++r)
      vals(r, c) = weights_[r] * f(vals(r, c));
  out.resize(spectral.rows(), spectral.cols());
  gemm_tn(to_quad_, vals, out);
}

Eigen::VectorXd QuadratureMap::apply_projected(
    const Eigen::VectorXd& spectral, const std::function<double(double)>& f) const {
  Eigen::MatrixXd out;
  apply_projected(Eigen::MatrixXd(spectral), f, out);
  return out.col(0);
}

Eigen::VectorXd QuadratureMap::integrate_pointwise(
    const Eigen::MatrixXd& spectral, const std::function<double(double)>& g) const {
  Eigen::MatrixXd vals(to_quad_.rows(), spectral.cols());
  gemm(to_quad_, spectral, vals);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(spectral.cols());
  for (int c = 0; c < vals.cols(); ++c) {
    double acc = 0.0;
    for (int r = 0; r < vals.rows(); ++r) acc += weights_[r] * g(vals(r, c));
    out[c] = acc;
  }
  return out;
}

}  // namespace swdg
