#pragma once

#include <Eigen/Dense>

namespace swdg {

// Thin dgemm wrappers for the two hot products (noise assembly and the
// quadrature transforms). Everything else uses Eigen directly.

// C = A * B
void gemm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, Eigen::MatrixXd& c);
// C = A^T * B
void gemm_tn(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, Eigen::MatrixXd& c);

// number of BLAS threads used by the wrappers
void set_blas_threads(int n);

}  // namespace swdg
