#include "glspec/eigen.hpp"

#include "glspec/specfun.hpp"
#include "horner.hpp"

#include <cmath>
#include <memory>
#include <string>

namespace glspec {

PolySeq::PolySeq(const GLParams &params, int degree)
    : params_(params), degree_(degree) {
  if (degree < 0) {
    throw DomainError("p_coeffs: degree must be nonnegative");
  }
  const Ext256 a(params.alpha());
  const Ext256 ab1 = a * Ext256(params.beta()) + 1;
  const Ext256 lg0 = log_abs_gamma(ab1);
  base_.reserve(degree + 1);
  log_base_.reserve(degree + 1);
  for (int k = 0; k <= degree; ++k) {
    const Ext256 lg = lg0 - log_abs_gamma(a * Ext256(k) + ab1);
    base_.push_back(k == 0 ? Ext256(1) : Ext256(exp(lg)));
    log_base_.push_back(to_double(lg));
  }
  log_binom_.resize(degree + 1);
  for (int n = 0; n <= degree; ++n) {
    auto &row = log_binom_[n];
    row.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      row[k] = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
               std::lgamma(n - k + 1.0);
    }
  }
}

void PolySeq::check(int n, int k) const {
  if (n < 0 || n > degree_ || k < 0 || k > n) {
    throw IndexError("PolySeq index out of range");
  }
}

double PolySeq::coeff(int n, int k) const {
  check(n, k);
  return coeff_sign(n, k) * std::exp(log_abs_coeff(n, k));
}

Ext256 PolySeq::coeff_ext(int n, int k) const {
  check(n, k);
  Ext256 binom = 1;
  for (int i = 1; i <= k; ++i) {
    binom = binom * Ext256(n - k + i) / Ext256(i);
  }
  const Ext256 c = binom * base_[k];
  return (k % 2 == 0) ? c : Ext256(-c);
}

int PolySeq::coeff_sign(int n, int k) const {
  check(n, k);
  return (k % 2 == 0) ? 1 : -1;
}

double PolySeq::log_abs_coeff(int n, int k) const {
  check(n, k);
  return log_binom_[n][k] + log_base_[k];
}

std::vector<double> PolySeq::coefficients(int n) const {
  check(n, 0);
  std::vector<double> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    c[k] = to_double(coeff_ext(n, k));
  }
  return c;
}

const Ext256 &PolySeq::base(int k) const {
  if (k < 0 || k > degree_) {
    throw IndexError("PolySeq base index out of range");
  }
  return base_[k];
}

PolySeq p_coeffs(const GLParams &params, int N) { return PolySeq(params, N); }

//------------------------------------------------------------------------------

namespace {

// Classical Laguerre polynomial of order b by the three-term recurrence.
double laguerre_recurrence(int m, double b, double x) {
  double prev = 1.0;
  if (m == 0) {
    return prev;
  }
  double cur = 1.0 + b - x;
  for (int k = 1; k < m; ++k) {
    const double next = ((2.0 * k + 1.0 + b - x) * cur - (k + b) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

} // namespace

double p_eval(const PolySeq &seq, int n, double x, int p) {
  if (n < 0 || n > seq.degree()) {
    throw IndexError("p_eval: n exceeds the sequence degree");
  }
  if (p < 0) {
    throw DomainError("p_eval: derivative order must be nonnegative");
  }
  if (p > n) {
    return 0.0;
  }
  const GLParams &params = seq.params();
  const int m = n - p;
  if (params.classical()) {
    const double b = params.beta();
    const double scale = std::exp(std::lgamma(n + 1.0) + std::lgamma(b + 1.0) -
                                  std::lgamma(n + b + 1.0));
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    return sign * scale * laguerre_recurrence(m, b + p, x);
  }
  // Shifted polynomial: (-1)^j C(m, j) g_{j+p}/g_p, i.e. P_m with beta + p.
  std::vector<Ext256> shifted(m + 1);
  Ext256 binom = 1;
  const Ext256 &gp = seq.base(p);
  for (int j = 0; j <= m; ++j) {
    if (j > 0) {
      binom = binom * Ext256(m - j + 1) / Ext256(j);
    }
    const Ext256 d = binom * seq.base(j + p) / gp;
    shifted[j] = (j % 2 == 0) ? d : Ext256(-d);
  }
  // (-1)^p n!/(n-p)! g_p
  Ext256 prefactor = gp;
  for (int i = 0; i < p; ++i) {
    prefactor *= Ext256(n - i);
  }
  if (p % 2 == 1) {
    prefactor = -prefactor;
  }

  Precision use = params.precision();
  detail::Horner h{0.0, 0.0};
  if (use == Precision::binary64) {
    if (m <= 60) {
      std::vector<double> hi;
      std::vector<double> lo;
      detail::split_coefficients(shifted, hi, lo);
      h = detail::compensated_horner(hi, lo, x);
      if (h.condition <= 1e14) {
        return to_double(prefactor) * h.value;
      }
    }
    h = detail::ext_horner(shifted, Ext128(x));
    if (h.condition <= 1e24) {
      return to_double(prefactor) * h.value;
    }
    use = Precision::ext256;
  }
  h = use == Precision::ext128 ? detail::ext_horner(shifted, Ext128(x))
                               : detail::ext_horner(shifted, Ext256(x));
  return to_double(prefactor) * h.value;
}

RealFn eigen_function(const PolySeq &seq, int n) {
  if (n < 0 || n > seq.degree()) {
    throw IndexError("eigen_function: n exceeds the sequence degree");
  }
  auto shared = std::make_shared<const PolySeq>(seq);
  RealFn f("P_" + std::to_string(n),
           [shared, n](double x, int order) { return p_eval(*shared, n, x, order); },
           n + 2);
  return f.with_coefficients(seq.coefficients(n));
}

double jensen_check(const GLParams &params, double x, double t, int N) {
  if (N < 0) {
    throw DomainError("jensen_check: N must be nonnegative");
  }
  const PolySeq seq(params, N);
  NeumaierSum<double> sum;
  double last = 0.0;
  double tn_over_fact = 1.0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) {
      tn_over_fact *= t / n;
    }
    last = p_eval(seq, n, -x, 0) * tn_over_fact;
    sum.add(last);
  }
  if (std::abs(last) > 1e-13 * std::abs(sum.value()) && last != 0.0) {
    throw ConvergenceError("jensen_check: generating series not converged at N");
  }
  const double closed = std::exp(t) * cal_I(params, x * t).real();
  return std::abs(closed - sum.value());
}

GrowthReport p_growth_bound_check(const GLParams &params, int n, double x,
                                  int p) {
  if (n < 0 || p < 0) {
    throw DomainError("p_growth_bound_check: n and p must be nonnegative");
  }
  GrowthReport r;
  r.n = n;
  r.x = x;
  r.order = p;
  r.value = p_eval(PolySeq(params, n), n, x, p);
  const double nn = std::max(n, 1);
  r.log_envelope = (p + 0.5) * std::log(nn) +
                   params.poly_growth_rate() *
                       std::pow(nn * std::abs(x), 1.0 / (params.alpha() + 1.0));
  r.ratio = std::abs(r.value) * std::exp(-r.log_envelope);
  return r;
}

} // namespace glspec
