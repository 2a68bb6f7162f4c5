#pragma once

#include <cmath>
#include <cstdint>

namespace swdg {

// Counter-based Gaussian stream. Each draw is keyed by
// (master_seed, realization, step, mode); there is no sequential state, so
// realizations and steps can be generated in any order or in parallel and
// always reproduce bit-identical values.
//
// Keys are mixed with the splitmix64 finalizer; normals come from Box-Muller
// on the two uniforms derived from the mixed key. Modes 2k and 2k+1 share one
// Box-Muller pair.

namespace detail {

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// uniform in (0,1]: never 0, so log() below is safe
inline double to_unit(uint64_t x) {
  return (static_cast<double>(x >> 11) + 1.0) * 0x1p-53;
}

}  // namespace detail

class GaussianStream {
 public:
  GaussianStream(uint64_t master_seed, uint64_t realization)
      : base_(detail::mix64(master_seed ^ 0x9e3779b97f4a7c15ULL) +
              detail::mix64(realization * 0xd1342543de82ef95ULL + 1)) {}

  // standard normal for (step, mode)
  double normal(uint64_t step, uint64_t mode) const {
    const uint64_t k = pair_key(step, mode >> 1);
    const uint64_t u = detail::mix64(k);
    const uint64_t v = detail::mix64(k + 0x6a09e667f3bcc909ULL);
    const double r = std::sqrt(-2.0 * std::log(detail::to_unit(u)));
    const double t = 6.283185307179586476925287 * detail::to_unit(v);
    return (mode & 1) ? r * std::sin(t) : r * std::cos(t);
  }

  // fill z[0..n) with normals for modes 0..n at the given step
  void fill(uint64_t step, double* z, int n) const {
    const uint64_t s = detail::mix64(base_ + step * 0x2545f4914f6cdd1dULL);
    int k = 0;
    for (; k + 1 < n; k += 2) {
      const uint64_t key = s + static_cast<uint64_t>(k >> 1) * 0x9e3779b97f4a7c15ULL;
      const uint64_t u = detail::mix64(key);
      const uint64_t v = detail::mix64(key + 0x6a09e667f3bcc909ULL);
      const double r = std::sqrt(-2.0 * std::log(detail::to_unit(u)));
      const double t = 6.283185307179586476925287 * detail::to_unit(v);
      z[k] = r * std::cos(t);
      z[k + 1] = r * std::sin(t);
    }
    if (k < n) z[k] = normal(step, static_cast<uint64_t>(k));
  }

 private:
  uint64_t pair_key(uint64_t step, uint64_t pair) const {
    return detail::mix64(base_ + step * 0x2545f4914f6cdd1dULL) +
           pair * 0x9e3779b97f4a7c15ULL;
  }

  uint64_t base_;
};

}  // namespace swdg
