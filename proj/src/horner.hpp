#pragma once
// Horner evaluation with a cancellation estimate, shared by the polynomial
// families.

#include "glspec/real.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace glspec::detail {

struct Horner {
  double value;
  double condition;
};

// Compensated Horner on double-double coefficients (hi[j] + lo[j]); the
// result is accurate to about eps + condition * eps^2.
inline Horner compensated_horner(const std::vector<double> &hi,
                          const std::vector<double> &lo, double x) {
  const int m = static_cast<int>(hi.size()) - 1;
  double s = hi[m];
  double c = lo[m];
  double abs_sum = std::abs(hi[m]);
  const double ax = std::abs(x);
  for (int j = m - 1; j >= 0; --j) {
    const double prod = s * x;
    const double prod_err = std::fma(s, x, -prod);
    const double sum = prod + hi[j];
    const double z = sum - prod;
    const double sum_err = (prod - (sum - z)) + (hi[j] - z);
    s = sum;
    c = c * x + (prod_err + sum_err + lo[j]);
    abs_sum = abs_sum * ax + std::abs(hi[j]);
  }
  const double v = s + c;
  return {v, v == 0.0 ? std::numeric_limits<double>::infinity()
                      : abs_sum / std::abs(v)};
}

/// Horner at width T; the argument is taken at that width so that callers
/// can pass a point computed beyond double precision.
template <class T>
Horner ext_horner(const std::vector<Ext256> &coef, const T &xt) {
  T s = T(coef.back());
  T abs_sum = abs(s);
  const T ax = abs(xt);
  for (int j = static_cast<int>(coef.size()) - 2; j >= 0; --j) {
    const T cj = T(coef[j]);
    s = s * xt + cj;
    abs_sum = abs_sum * ax + abs(cj);
  }
  const double v = to_double(s);
  return {v, v == 0.0 ? std::numeric_limits<double>::infinity()
                      : to_double(abs_sum / abs(s))};
}

/// Splits 259-bit coefficients into double-double pairs.
inline void split_coefficients(const std::vector<Ext256> &c,
                               std::vector<double> &hi,
                               std::vector<double> &lo) {
  hi.resize(c.size());
  lo.resize(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    hi[j] = to_double(c[j]);
    lo[j] = to_double(c[j] - Ext256(hi[j]));
  }
}

} // namespace glspec::detail
