#pragma once

#include <Eigen/Dense>

namespace swdg {

// Legendre polynomials on [-1,1] and Gauss-Legendre rules.

double legendre_value(int k, double x);
double legendre_derivative(int k, double x);
double legendre_second_derivative(int k, double x);

struct Quadrature {
  Eigen::VectorXd points;   // on (-1,1)
  Eigen::VectorXd weights;  // sum to 2
};

Quadrature gauss_legendre(int n);

}  // namespace swdg
