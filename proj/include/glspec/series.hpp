#pragma once
// Truncated power-series summation with the shared stopping rule and the
// binary64 -> 133-bit -> 259-bit escalation policy.

#include "glspec/core.hpp"

#include <cmath>
#include <complex>
#include <type_traits>

namespace glspec {

/// Outcome of a series evaluation. abs_term_sum / |value| is the
/// cancellation estimate that drives precision escalation.
struct SeriesResult {
  std::complex<double> value{0.0, 0.0};
  double abs_term_sum = 0.0;
  int terms_used = 0;
  bool converged = false;
  Precision precision_used = Precision::binary64;

  double real() const { return value.real(); }
  double condition() const;
};

struct SeriesOptions {
  int max_terms = 10000;
  /// Terms that must be summed before the stopping test may fire.
  int min_terms = 0;
  /// Escalate once the cancellation estimate exceeds this at binary64.
  double condition_limit = 1e8;
};

template <class T>
struct RealOf {
  using type = T;
};
template <class T>
struct RealOf<std::complex<T>> {
  using type = T;
};
template <class T>
using real_of_t = typename RealOf<T>::type;

template <class T>
struct SeriesAccum {
  T sum{0};
  real_of_t<T> abs_sum{0};
  int terms = 0;
  bool converged = false;
};

/// Sums term(k), k = 0, 1, ..., until |term| <= eps_T |sum| holds for three
/// consecutive terms past opts.min_terms.
template <class T, class Term>
SeriesAccum<T> sum_series(Term &&term, const SeriesOptions &opts) {
  using std::abs;
  SeriesAccum<T> acc;
  using R = real_of_t<T>;
  NeumaierSum<T> s;
  const R tol = R(unit_roundoff<R>());
  int quiet = 0;
  for (int k = 0; k < opts.max_terms; ++k) {
    const T t = term(k);
    s.add(t);
    acc.abs_sum += abs(t);
    acc.terms = k + 1;
    if (k + 1 < opts.min_terms) {
      continue;
    }
    if (abs(t) <= tol * abs(s.value())) {
      if (++quiet >= 3) {
        acc.converged = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  acc.sum = s.value();
  return acc;
}

namespace detail {

template <class T>
SeriesResult to_result(const SeriesAccum<T> &acc, Precision used) {
  SeriesResult r;
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    r.value = acc.sum;
  } else {
    r.value = to_double(acc.sum);
  }
  r.abs_term_sum = to_double(acc.abs_sum);
  r.terms_used = acc.terms;
  r.converged = acc.converged;
  r.precision_used = used;
  return r;
}

// Largest cancellation estimate each width resolves to ~1e-16 relative.
inline double condition_ceiling(Precision p) {
  switch (p) {
  case Precision::ext128:
    return 1e24;
  case Precision::ext256:
    return 1e62;
  default:
    return 1e8;
  }
}

} // namespace detail

/// Runs kernel(T{}) -> SeriesAccum<T> under the precision policy. A fixed
/// extended request runs once at that width; binary64 escalates on demand.
template <class Kernel>
SeriesResult run_with_policy(Precision requested, Kernel &&kernel,
                             double condition_limit = 1e8) {
  if (requested == Precision::ext128) {
    return detail::to_result(kernel(Ext128{}), Precision::ext128);
  }
  if (requested == Precision::ext256) {
    return detail::to_result(kernel(Ext256{}), Precision::ext256);
  }
  SeriesResult r = detail::to_result(kernel(double{}), Precision::binary64);
  if (r.converged && r.condition() <= condition_limit) {
    return r;
  }
  r = detail::to_result(kernel(Ext128{}), Precision::ext128);
  if (r.converged &&
      r.condition() <= detail::condition_ceiling(Precision::ext128)) {
    return r;
  }
  return detail::to_result(kernel(Ext256{}), Precision::ext256);
}

/// True when the result is trustworthy to roughly binary64 accuracy.
bool precision_adequate(const SeriesResult &r);

} // namespace glspec
