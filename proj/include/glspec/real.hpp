#pragma once
// Scalar types and precision-generic helpers shared by every kernel.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <type_traits>

namespace glspec {

namespace bmp = boost::multiprecision;

// Fixed widths keep precision thread-safe: Boost 1.74 stores the variable
// mpfr_float default precision in a process-wide static.
using Ext128 = bmp::number<bmp::mpfr_float_backend<40>, bmp::et_off>;
using Ext256 = bmp::number<bmp::mpfr_float_backend<78>, bmp::et_off>;

/// Evaluation precision. `binary64` starts in double and escalates
/// automatically when a cancellation estimate demands it.
enum class Precision { binary64, ext128, ext256 };

int mantissa_bits(Precision p);

template <class T>
inline double to_double(const T &x) {
  if constexpr (std::is_same_v<T, double>) {
    return x;
  } else {
    return x.template convert_to<double>();
  }
}

template <class T>
inline T pi_v() {
  return boost::math::constants::pi<T>();
}

template <class T>
inline double unit_roundoff() {
  return static_cast<double>(std::numeric_limits<T>::epsilon());
}

/// Kahan-Neumaier compensated accumulator.
template <class T>
class NeumaierSum {
public:
  void add(const T &v) {
    const T t = sum_ + v;
    using std::abs;
    if (abs(sum_) >= abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

private:
  T sum_{0};
  T comp_{0};
};

/// True when x is a nonpositive integer (a pole of Gamma).
template <class T>
inline bool is_gamma_pole(const T &x) {
  using std::floor;
  return x <= 0 && floor(x) == x;
}

/// log|Gamma(x)| for real x that is not a pole.
template <class T>
T log_abs_gamma(const T &x) {
  using std::abs;
  using std::lgamma;
  using std::log;
  using std::sin;
  if (x >= T(0.5)) {
    return lgamma(x);
  }
  // Reflection keeps the library call on the positive axis.
  const T s = sin(pi_v<T>() * x);
  return log(pi_v<T>()) - log(abs(s)) - lgamma(T(1) - x);
}

/// Sign of Gamma(x) for real x that is not a pole.
template <class T>
int gamma_sign(const T &x) {
  using std::floor;
  if (x > 0) {
    return 1;
  }
  const auto k = static_cast<std::int64_t>(to_double(floor(x)));
  return (k % 2 == 0) ? 1 : -1;
}

/// 1/Gamma(x), exactly zero at the poles.
template <class T>
T rgamma(const T &x) {
  using std::exp;
  if (is_gamma_pole(x)) {
    return T(0);
  }
  return T(gamma_sign(x)) * exp(-log_abs_gamma(x));
}

/// Gamma(a)/Gamma(b) through a log-gamma difference; zero when b is a pole.
template <class T>
T gamma_ratio(const T &a, const T &b) {
  using std::exp;
  if (is_gamma_pole(b)) {
    return T(0);
  }
  return T(gamma_sign(a) * gamma_sign(b)) *
         exp(log_abs_gamma(a) - log_abs_gamma(b));
}

/// Calls f(T{}) with T matching the requested precision.
template <class F>
decltype(auto) with_precision(Precision p, F &&f) {
  switch (p) {
  case Precision::ext128:
    return f(Ext128{});
  case Precision::ext256:
    return f(Ext256{});
  default:
    return f(double{});
  }
}

} // namespace glspec
