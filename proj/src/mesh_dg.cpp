#include "mesh_dg.hpp"

#include <lapacke.h>

#include <cmath>

namespace swdg {

void Mesh1D::validate() const {
  if (n_elements < 2) throw std::invalid_argument("Mesh1D: n_elements must be >= 2");
  if (!(b > a)) throw std::invalid_argument("Mesh1D: domain must satisfy a < b");
  if (!coefficient.empty()) {
    if (static_cast<int>(coefficient.size()) != n_elements)
      throw std::invalid_argument("Mesh1D: coefficient size mismatch");
    for (double d : coefficient)
      if (!(d > 0.0)) throw std::invalid_argument("Mesh1D: coefficient must be positive");
  }
}

DGSpace::DGSpace(Mesh1D mesh, int degree, double sigma0)
    : mesh_(std::move(mesh)), degree_(degree) {
  mesh_.validate();
  if (degree_ < 1) throw std::invalid_argument("DGSpace: degree must be >= 1");
  sigma0_ = sigma0 > 0.0 ? sigma0 : 10.0 * degree_ * degree_;
  if (sigma0 == 0.0) throw std::invalid_argument("DGSpace: sigma0 must be positive");
  n_dofs_ = mesh_.n_elements * (degree_ + 1);

  const int nq = degree_ + 2;
  quad_ = gauss_legendre(nq);
  const double h = mesh_.h();
  const int nb = degree_ + 1;
  val_.resize(nb, nq);
  der_.resize(nb, nq);
  der2_.resize(nb, nq);
  trace_l_.resize(nb);
  trace_r_.resize(nb);
  dtrace_l_.resize(nb);
  dtrace_r_.resize(nb);
  for (int k = 0; k < nb; ++k) {
    const double scale = std::sqrt((2.0 * k + 1.0) / h);
    const double dxi = 2.0 / h;
    for (int q = 0; q < nq; ++q) {
      const double xi = quad_.points[q];
      val_(k, q) = scale * legendre_value(k, xi);
      der_(k, q) = scale * dxi * legendre_derivative(k, xi);
      der2_(k, q) = scale * dxi * dxi * legendre_second_derivative(k, xi);
    }
    trace_l_[k] = scale * ((k % 2 == 0) ? 1.0 : -1.0);
    trace_r_[k] = scale;
    dtrace_l_[k] = scale * dxi * ((k % 2 == 0) ? -1.0 : 1.0) * 0.5 * k * (k + 1);
    dtrace_r_[k] = scale * dxi * 0.5 * k * (k + 1);
  }

  assemble();
  coercivity_probe();
}

Eigen::VectorXd DGSpace::quad_points(int e) const {
  const double xc = element_center(e);
  return (quad_.points.array() * (0.5 * h()) + xc).matrix();
}

void DGSpace::assemble() {
  const int n = mesh_.n_elements;
  const int nb = degree_ + 1;
  const int kd = bandwidth();
  const double h = mesh_.h();
  band_ = Eigen::MatrixXd::Zero(kd + 1, n_dofs_);

  auto add = [&](int i, int j, double v) {
    if (i >= j) band_(i - j, j) += v;  // lower triangle only; symmetry fills the rest
  };

  // volume terms
  const Eigen::VectorXd wphys = quad_.weights * (0.5 * h);
  Eigen::MatrixXd vol = der_ * wphys.asDiagonal() * der_.transpose();
  for (int e = 0; e < n; ++e) {
    const double d = mesh_.coeff(e);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j <= i; ++j) add(e * nb + i, e * nb + j, d * vol(i, j));
  }

  // face terms; face f sits between elements f-1 (left) and f (right)
  struct Side {
    int offset;
    const Eigen::VectorXd* v;   // value trace
    Eigen::VectorXd dflux;      // d * derivative trace
    double sign;                // jump sign: +1 left trace, -1 right trace
  };
  for (int f = 0; f <= n; ++f) {
    std::vector<Side> sides;
    if (f > 0)
      sides.push_back({(f - 1) * nb, &trace_r_, mesh_.coeff(f - 1) * dtrace_r_, +1.0});
    if (f < n)
      sides.push_back({f * nb, &trace_l_, mesh_.coeff(f) * dtrace_l_, -1.0});
    const bool interior = sides.size() == 2;
    const double avg = interior ? 0.5 : 1.0;
    double dpen = 0.0;
    if (f > 0) dpen += mesh_.coeff(f - 1);
    if (f < n) dpen += mesh_.coeff(f);
    if (interior) dpen *= 0.5;
    const double pen = sigma0_ * dpen / h;

    for (const Side& su : sides) {
      for (const Side& sv : sides) {
        for (int iu = 0; iu < nb; ++iu) {
          for (int iv = 0; iv < nb; ++iv) {
            const double uj = su.sign * (*su.v)[iu];
            const double vj = sv.sign * (*sv.v)[iv];
            const double value = -avg * su.dflux[iu] * vj - uj * avg * sv.dflux[iv] +
                                 pen * uj * vj;
            // row = test index, col = trial index; symmetric, keep lower
            const int row = sv.offset + iv;
            const int col = su.offset + iu;
            if (row >= col) band_(row - col, col) += value;
          }
        }
      }
    }
  }
}

void DGSpace::coercivity_probe() const {
  // positive definiteness of the stiffness via banded Cholesky
  Eigen::MatrixXd ab = band_;
  const int info = LAPACKE_dpbtrf(LAPACK_COL_MAJOR, 'L', n_dofs_, bandwidth(),
                                  ab.data(), bandwidth() + 1);
  if (info != 0)
    throw CoercivityError("DGSpace: stiffness not positive definite; increase sigma0");
}

Eigen::VectorXd StiffnessOperator::apply(const Eigen::VectorXd& x) const {
  const Eigen::MatrixXd& ab = band();
  const int n = space_->n_dofs();
  const int kd = space_->bandwidth();
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j) {
    y[j] += ab(0, j) * x[j];
    const int top = std::min(kd, n - 1 - j);
    for (int k = 1; k <= top; ++k) {
      y[j + k] += ab(k, j) * x[j];
      y[j] += ab(k, j) * x[j + k];
    }
  }
  return y;
}

Eigen::MatrixXd StiffnessOperator::dense() const {
  const int n = space_->n_dofs();
  const int kd = space_->bandwidth();
  const Eigen::MatrixXd& ab = band();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k <= std::min(kd, n - 1 - j); ++k) {
      A(j + k, j) = ab(k, j);
      A(j, j + k) = ab(k, j);
    }
  }
  return A;
}

double StiffnessOperator::bilinear(const Field& u, const Field& v) const {
  return v.coeffs.dot(apply(u.coeffs));
}

StiffnessOperator assemble_stiffness(const DGSpace& space) {
  return StiffnessOperator(space);
}

Field l2_project(const DGSpace& space, const std::function<double(double)>& f) {
  const int nb = space.degree() + 1;
  const int nq = space.quad_count();
  const Eigen::VectorXd w = space.quad_weights();
  Field out(space);
  Eigen::VectorXd fv(nq);
  for (int e = 0; e < space.mesh().n_elements; ++e) {
    const Eigen::VectorXd x = space.quad_points(e);
    for (int q = 0; q < nq; ++q) fv[q] = f(x[q]);
    out.coeffs.segment(e * nb, nb) = space.basis_values() * (w.cwiseProduct(fv));
  }
  return out;
}

Field galerkin_project(const DGSpace& space, const StiffnessOperator& stiffness,
                       const std::function<double(double)>& f,
                       const std::function<double(double)>& fprime) {
  // rhs_v = B_h(f, v) with f continuous: volume d f' v' plus face terms using
  // the exact traces of f and f'
  const int n = space.mesh().n_elements;
  const int nb = space.degree() + 1;
  const int nq = space.quad_count();
  const double h = space.h();
  const Eigen::VectorXd w = space.quad_weights();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(space.n_dofs());
  Eigen::VectorXd fpv(nq);
  for (int e = 0; e < n; ++e) {
    const Eigen::VectorXd x = space.quad_points(e);
    for (int q = 0; q < nq; ++q) fpv[q] = fprime(x[q]);
    rhs.segment(e * nb, nb) +=
        space.mesh().coeff(e) * (space.basis_derivatives() * w.cwiseProduct(fpv));
  }
  for (int fidx = 0; fidx <= n; ++fidx) {
    const double xf = space.mesh().a + fidx * h;
    const double fv = f(xf);
    const double fp = fprime(xf);
    const bool interior = fidx > 0 && fidx < n;
    const double avg = interior ? 0.5 : 1.0;
    // jump of continuous f vanishes at interior faces; at the boundary it is f * n
    double dpen = 0.0;
    if (fidx > 0) dpen += space.mesh().coeff(fidx - 1);
    if (fidx < n) dpen += space.mesh().coeff(fidx);
    if (interior) dpen *= 0.5;

    struct Side {
      int offset;
      const Eigen::VectorXd* v;
      Eigen::VectorXd dflux;
      double sign;
    };
    std::vector<Side> sides;
    if (fidx > 0)
      sides.push_back({(fidx - 1) * nb, &space.trace_right(),
                       space.mesh().coeff(fidx - 1) * space.dtrace_right(), +1.0});
    if (fidx < n)
      sides.push_back({fidx * nb, &space.trace_left(),
                       space.mesh().coeff(fidx) * space.dtrace_left(), -1.0});
    double favg = 0.0;
    if (fidx > 0) favg += avg * space.mesh().coeff(fidx - 1) * fp;
    if (fidx < n) favg += avg * space.mesh().coeff(fidx) * fp;
    const double fjump = interior ? 0.0 : ((fidx == 0) ? -fv : fv);
    const double pen = space.sigma0() * dpen / h;

    for (const Side& sv : sides) {
      for (int iv = 0; iv < nb; ++iv) {
        const double vj = sv.sign * (*sv.v)[iv];
        rhs[sv.offset + iv] += -favg * vj - fjump * avg * sv.dflux[iv] +
                               pen * fjump * vj;
      }
    }
  }

  Eigen::MatrixXd ab = stiffness.band();
  Eigen::VectorXd sol = rhs;
  const int info =
      LAPACKE_dpbsv(LAPACK_COL_MAJOR, 'L', space.n_dofs(), space.bandwidth(), 1,
                    ab.data(), space.bandwidth() + 1, sol.data(), space.n_dofs());
  if (info != 0)
    throw CoercivityError("galerkin_project: singular system; sigma0 too small");
  return Field(space, std::move(sol));
}

double broken_norm(const Field& u) {
  const DGSpace& sp = *u.space;
  const int n = sp.mesh().n_elements;
  const int nb = sp.degree() + 1;
  const double h = sp.h();
  const Eigen::VectorXd w = sp.quad_weights();
  double total = 0.0;
  for (int e = 0; e < n; ++e) {
    const Eigen::VectorXd ce = u.coeffs.segment(e * nb, nb);
    const Eigen::VectorXd du = sp.basis_derivatives().transpose() * ce;
    const Eigen::VectorXd d2u = sp.basis_second_derivatives().transpose() * ce;
    total += du.cwiseProduct(du).dot(w) + h * h * d2u.cwiseProduct(d2u).dot(w);
  }
  for (int f = 0; f <= n; ++f) {
    double jump = 0.0;
    if (f > 0) jump += sp.trace_right().dot(u.coeffs.segment((f - 1) * nb, nb));
    if (f < n) jump -= sp.trace_left().dot(u.coeffs.segment(f * nb, nb));
    total += jump * jump / h;
  }
  return std::sqrt(total);
}

Eigen::MatrixXd star_norm_gram(const DGSpace& space) {
  const int n = space.mesh().n_elements;
  const int nb = space.degree() + 1;
  const double h = space.h();
  const Eigen::VectorXd w = space.quad_weights();
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(space.n_dofs(), space.n_dofs());
  const Eigen::MatrixXd grad =
      space.basis_derivatives() * w.asDiagonal() * space.basis_derivatives().transpose();
  const Eigen::MatrixXd lap = space.basis_second_derivatives() * w.asDiagonal() *
                              space.basis_second_derivatives().transpose();
  for (int e = 0; e < n; ++e)
    S.block(e * nb, e * nb, nb, nb) += grad + h * h * lap;
  for (int f = 0; f <= n; ++f) {
    struct Side {
      int offset;
      Eigen::VectorXd v;
    };
    std::vector<Side> sides;
    if (f > 0) sides.push_back({(f - 1) * nb, space.trace_right()});
    if (f < n) sides.push_back({f * nb, -space.trace_left()});
    for (const Side& s1 : sides)
      for (const Side& s2 : sides)
        S.block(s1.offset, s2.offset, nb, nb) += (s1.v * s2.v.transpose()) / h;
  }
  return S;
}

double evaluate(const Field& u, double x) {
  const DGSpace& sp = *u.space;
  const Mesh1D& m = sp.mesh();
  const double tol = 1e-12 * (m.b - m.a);
  if (x < m.a - tol || x > m.b + tol)
    throw std::out_of_range("evaluate: point outside the domain");
  const double h = sp.h();
  int e = static_cast<int>((x - m.a) / h);
  // interface convention: take the left element's trace
  if (e > 0 && std::abs(m.a + e * h - x) <= tol) e -= 1;
  e = std::min(std::max(e, 0), m.n_elements - 1);
  const double xi = 2.0 * (x - sp.element_center(e)) / h;
  const int nb = sp.degree() + 1;
  double out = 0.0;
  for (int k = 0; k < nb; ++k) {
    out += u.coeffs[e * nb + k] * std::sqrt((2.0 * k + 1.0) / h) * legendre_value(k, xi);
  }
  return out;
}

}  // namespace swdg
