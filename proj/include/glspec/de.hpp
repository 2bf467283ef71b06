#pragma once
// Double-exponential nodes for integrals over (0, inf).

#include <cmath>
#include <vector>

namespace glspec {

struct DENode {
  double u;
  double w;
};

/// Nodes for integral_0^inf g(u) du under u = exp(t - exp(-t)), t = k h,
/// t in [t_lo, t_hi]. The map clusters double-exponentially at 0 and grows
/// like e^t, which suits algebraic endpoint behaviour times exponential decay.
inline std::vector<DENode> half_line_de(double h, double t_lo, double t_hi) {
  std::vector<DENode> nodes;
  const auto k_lo = static_cast<long>(std::floor(t_lo / h));
  const auto k_hi = static_cast<long>(std::ceil(t_hi / h));
  nodes.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
  for (long k = k_lo; k <= k_hi; ++k) {
    const double t = static_cast<double>(k) * h;
    const double e = std::exp(-t);
    const double u = std::exp(t - e);
    nodes.push_back({u, h * u * (1.0 + e)});
  }
  return nodes;
}

/// t such that the map reaches u (inverse of u = exp(t - exp(-t)) for u > 1).
inline double de_parameter_for(double u) {
  double t = std::log(u);
  for (int i = 0; i < 60; ++i) {
    const double e = std::exp(-t);
    const double f = t - e - std::log(u);
    t -= f / (1.0 + e);
  }
  return t;
}

} // namespace glspec
