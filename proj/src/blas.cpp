#include "blas.hpp"

#include <cassert>

extern "C" {
void dgemm_(const char* transa, const char* transb, const int* m, const int* n,
            const int* k, const double* alpha, const double* a, const int* lda,
            const double* b, const int* ldb, const double* beta, double* c,
            const int* ldc);
void openblas_set_num_threads(int);
}

namespace swdg {

void gemm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, Eigen::MatrixXd& c) {
  assert(a.cols() == b.rows());
  c.resize(a.rows(), b.cols());
  const int m = a.rows(), n = b.cols(), k = a.cols();
  const double one = 1.0, zero = 0.0;
  dgemm_("N", "N", &m, &n, &k, &one, a.data(), &m, b.data(), &k, &zero, c.data(), &m);
}

void gemm_tn(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, Eigen::MatrixXd& c) {
  assert(a.rows() == b.rows());
  c.resize(a.cols(), b.cols());
  const int m = a.cols(), n = b.cols(), k = a.rows();
  const double one = 1.0, zero = 0.0;
  dgemm_("T", "N", &m, &n, &k, &one, a.data(), &k, b.data(), &k, &zero, c.data(), &m);
}

void set_blas_threads(int n) {
  if (n >= 1) openblas_set_num_threads(n);
}

}  // namespace swdg
