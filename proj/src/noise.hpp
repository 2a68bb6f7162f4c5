#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "mesh_dg.hpp"
#include "rng.hpp"
#include "spectral.hpp"

namespace swdg {

// Q-Wiener process with Q = Lambda^{-s} through the continuous eigenpairs
// lambda_j = (j pi)^2, psi_j = sqrt(2) sin(j pi x) on (0,1). Sampling uses the
// truncated Karhunen-Loeve expansion: P_h dW = sum_j sqrt(q_j) dbeta_j P_h psi_j.
//
// Increments are generated from a counter-based stream keyed by
// (master_seed, realization, fine_step, mode). Convergence studies at
// different h or tau share the same draws: coarser time levels aggregate the
// scaled fine coefficients (ascending substep order, so sums are bit-exact),
// and every mesh level projects the same continuous modes.
class NoiseModel {
 public:
  NoiseModel(double s, int truncation, uint64_t master_seed);

  static int default_truncation(const DGSpace& space) { return 4 * space.n_dofs(); }

  double s() const { return s_; }
  int truncation() const { return truncation_; }
  uint64_t master_seed() const { return master_seed_; }
  const Eigen::VectorXd& q() const { return q_; }
  // Tr(Q) over the truncated expansion; for s=1 this tends to 1/6
  double trace_q() const { return q_.sum(); }

  // scaled KL coefficients of P_h dW over one fine step:
  // c_j = sqrt(q_j tau_fine) xi_{j, step}
  void increment_coeffs(double tau_fine, uint64_t realization, uint64_t fine_step,
                        Eigen::VectorXd& out) const;
  // sum of `aggregate` consecutive fine-step coefficient vectors
  void aggregated_coeffs(double tau_fine, int aggregate, uint64_t realization,
                         uint64_t coarse_step, Eigen::VectorXd& out) const;

 private:
  double s_;
  int truncation_;
  uint64_t master_seed_;
  Eigen::VectorXd q_;
};

// P_h psi_j for one space, held in spectral coordinates.
class NoiseProjection {
 public:
  NoiseProjection(const NoiseModel& model, const DGSpace& space,
                  const SpectralOperator& op);

  const NoiseModel& model() const { return *model_; }
  const SpectralOperator& op() const { return *op_; }
  // N x J; column j holds the spectral coordinates of P_h psi_j
  const Eigen::MatrixXd& modes() const { return modes_; }
  // ||P_h psi_j||^2 (projection never exceeds 1)
  const Eigen::VectorXd& mode_norm2() const { return mode_norm2_; }
  // Tr(P_h Q P_h) = sum_j q_j ||P_h psi_j||^2
  double trace() const { return trace_; }

  // spectral coordinates of P_h dW over one step of size tau
  Eigen::VectorXd sample_spectral(double tau, uint64_t realization,
                                  uint64_t step) const;
  // same increment as a modal Field
  Field sample_increment(const DGSpace& space, double tau, uint64_t realization,
                         uint64_t step) const;

 private:
  const NoiseModel* model_;
  const SpectralOperator* op_;
  Eigen::MatrixXd modes_;
  Eigen::VectorXd mode_norm2_;
  double trace_;
};

NoiseProjection project_modes(const NoiseModel& model, const DGSpace& space,
                              const SpectralOperator& op);

// Batched increment generator for a set of realizations advancing in lockstep.
// Coarse step n aggregates fine steps [n*aggregate, (n+1)*aggregate).
class IncrementBatch {
 public:
  IncrementBatch(const NoiseProjection& proj, double tau_fine, int aggregate,
                 std::vector<uint64_t> realizations);

  double tau() const { return tau_fine_ * aggregate_; }
  // fills out (N x M) with spectral increments for the given coarse step
  void generate(uint64_t coarse_step, Eigen::MatrixXd& out);

 private:
  const NoiseProjection* proj_;
  double tau_fine_;
  int aggregate_;
  std::vector<uint64_t> realizations_;
  Eigen::MatrixXd coeffs_;  // J x M work buffer
};

}  // namespace swdg
