#include "legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace swdg {

double legendre_value(int k, double x) {
  if (k == 0) return 1.0;
  if (k == 1) return x;
  double pm = 1.0, p = x;
  for (int n = 1; n < k; ++n) {
    const double pn = ((2 * n + 1) * x * p - n * pm) / (n + 1);
    pm = p;
    p = pn;
  }
  return p;
}

double legendre_derivative(int k, double x) {
  if (k == 0) return 0.0;
  const double den = 1.0 - x * x;
  if (std::abs(den) > 1e-12) {
    return k * (legendre_value(k - 1, x) - x * legendre_value(k, x)) / den;
  }
  const double s = x > 0 ? 1.0 : -1.0;
  return std::pow(s, k + 1) * 0.5 * k * (k + 1);
}

double legendre_second_derivative(int k, double x) {
  if (k <= 1) return 0.0;
  const double den = 1.0 - x * x;
  if (std::abs(den) > 1e-12) {
    return (2.0 * x * legendre_derivative(k, x) -
            static_cast<double>(k) * (k + 1) * legendre_value(k, x)) /
           den;
  }
  const double s = x > 0 ? 1.0 : -1.0;
  return std::pow(s, k) * (k - 1.0) * k * (k + 1.0) * (k + 2.0) / 8.0;
}

Quadrature gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  Quadrature q;
  q.points.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, then Newton on P_n
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const double p = legendre_value(n, x);
      dp = legendre_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    dp = legendre_derivative(n, x);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.points[i] = -x;
    q.weights[i] = w;
    q.points[n - 1 - i] = x;
    q.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) q.points[n / 2] = 0.0;
  return q;
}

}  // namespace swdg
