#include "glspec/coeigen.hpp"

#include "glspec/density.hpp"
#include "glspec/specfun.hpp"
#include "horner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace glspec {

const char *to_string(CoeigPath path) {
  switch (path) {
  case CoeigPath::bell_poly:
    return "bell_poly";
  case CoeigPath::wright_series:
    return "wright_series";
  case CoeigPath::mellin_barnes:
    return "mellin_barnes";
  }
  return "unknown";
}

//------------------------------------------------------------------------------

CoeigTable::CoeigTable(const GLParams &params, int degree)
    : params_(params), degree_(degree) {
  if (degree < 0) {
    throw DomainError("CoeigTable: degree must be nonnegative");
  }
  const Ext256 shift = Ext256(params.density_exponent()) + 1;
  std::optional<BellTable> bell;
  if (!params.classical()) {
    bell.emplace(params.alpha(), degree);
  }
  std::vector<Ext256> fact(degree + 1, Ext256(1));
  for (int i = 1; i <= degree; ++i) {
    fact[i] = fact[i - 1] * Ext256(i);
  }
  rows_.resize(degree + 1);
  for (int n = 0; n <= degree; ++n) {
    // weight[k] = Gamma(n+shift)/(Gamma(k+shift) k! (n-k)!)
    std::vector<Ext256> weight(n + 1);
    Ext256 rising = 1;
    for (int k = n; k >= 0; --k) {
      weight[k] = rising / (fact[k] * fact[n - k]);
      rising *= Ext256(k) - 1 + shift;
    }
    auto &row = rows_[n];
    row.assign(n + 1, Ext256(0));
    if (!bell) {
      for (int j = 0; j <= n; ++j) {
        row[j] = (j % 2 == 0) ? weight[j] : Ext256(-weight[j]);
      }
      continue;
    }
    for (int j = 0; j <= n; ++j) {
      Ext256 acc = 0;
      for (int k = j; k <= n; ++k) {
        const Ext256 term = weight[k] * bell->at(k, j);
        acc += ((j + k) % 2 == 0) ? term : Ext256(-term);
      }
      row[j] = acc;
    }
  }
}

const Ext256 &CoeigTable::coeff_ext(int n, int j) const {
  if (n < 0 || n > degree_ || j < 0 || j > n) {
    throw IndexError("CoeigTable index out of range");
  }
  return rows_[n][j];
}

double CoeigTable::coeff(int n, int j) const {
  return to_double(coeff_ext(n, j));
}

std::vector<Ext256> CoeigTable::row(int n) const {
  if (n < 0 || n > degree_) {
    throw IndexError("CoeigTable row out of range");
  }
  return rows_[n];
}

//------------------------------------------------------------------------------

namespace {

// Sensitivity of R_n to the rounding of u is about n times the cancellation
// estimate, so the binary64 path is kept only while that product is small.
constexpr double kBellDoubleLimit = 1e4;
// Wright series at binary64: the argument u = x^{1/alpha} is rounded as well.
constexpr double kWrightDoubleLimit = 1e6;

template <class T>
T u_of(double x, double alpha) {
  return exp(log(T(x)) / T(alpha));
}

CoeigValue bell_value(const std::vector<Ext256> &row, double x, double alpha,
                      Precision requested) {
  const int n = static_cast<int>(row.size()) - 1;
  CoeigValue out;
  out.path = CoeigPath::bell_poly;
  auto finish = [&](const detail::Horner &h, Precision used) {
    out.value = h.value;
    out.condition = h.condition;
    out.precision_used = used;
    return out;
  };
  if (requested == Precision::ext128) {
    return finish(detail::ext_horner(row, u_of<Ext128>(x, alpha)),
                  Precision::ext128);
  }
  if (requested == Precision::ext256) {
    return finish(detail::ext_horner(row, u_of<Ext256>(x, alpha)),
                  Precision::ext256);
  }
  std::vector<double> hi;
  std::vector<double> lo;
  detail::split_coefficients(row, hi, lo);
  const auto h = detail::compensated_horner(hi, lo, std::pow(x, 1.0 / alpha));
  if (h.condition * (n + 1) <= kBellDoubleLimit) {
    return finish(h, Precision::binary64);
  }
  const auto h128 = detail::ext_horner(row, u_of<Ext128>(x, alpha));
  if (h128.condition * (n + 1) <= 1e24) {
    return finish(h128, Precision::ext128);
  }
  return finish(detail::ext_horner(row, u_of<Ext256>(x, alpha)),
                Precision::ext256);
}

} // namespace

CoeigValue r_eval_bell(const CoeigTable &table, int n, double x) {
  if (!(x > 0.0)) {
    throw DomainError("r_eval_bell: x must be positive");
  }
  if (n < 0 || n > table.degree()) {
    throw IndexError("r_eval_bell: n exceeds the table degree");
  }
  const GLParams &p = table.params();
  return bell_value(table.row(n), x, p.alpha(), p.precision());
}

double r_eval_bell(const GLParams &params, int n, double x) {
  if (n < 0) {
    throw DomainError("r_eval_bell: n must be nonnegative");
  }
  return r_eval_bell(CoeigTable(params, n), n, x).value;
}

//------------------------------------------------------------------------------

namespace {

// log of x^{beta_alpha - q} / (n! alpha Gamma(alpha beta + 1))
double wright_log_prefactor(const GLParams &p, int n, int q, double x) {
  return (p.density_exponent() - q) * std::log(x) - std::lgamma(n + 1.0) -
         std::log(p.alpha()) - std::lgamma(p.laguerre_exponent() + 1.0);
}

} // namespace

CoeigValue w_eval_wright(const GLParams &params, int n, int q, double x) {
  if (!(x > 0.0)) {
    throw DomainError("w_eval_wright: x must be positive");
  }
  if (n < 0 || q < 0) {
    throw DomainError("w_eval_wright: n and q must be nonnegative");
  }
  const double alpha = params.alpha();
  const double shift = params.density_exponent() + 1.0;
  const double u = std::pow(x, 1.0 / alpha);
  SeriesOptions opts;
  opts.min_terms = 5 + static_cast<int>(u + (n + q) / alpha);
  // term_k = (-u)^k/k! * Gamma(a_k + n)/Gamma(a_k - q), a_k = k/alpha + shift,
  // the gamma ratio being the rising factorial (a_k - q)_{n+q}.
  auto kernel = [&](auto tag) {
    using T = decltype(tag);
    const T ut = u_of<T>(x, alpha);
    const T inv_alpha = T(1) / T(alpha);
    T power = 1;
    auto term = [&](int k) {
      if (k > 0) {
        power *= -ut / T(k);
      }
      const T base = T(k) * inv_alpha + T(shift) - T(q);
      T rising = 1;
      for (int i = 0; i < n + q; ++i) {
        rising *= base + T(i);
      }
      return power * rising;
    };
    return sum_series<T>(term, opts);
  };
  const SeriesResult r = run_with_policy(params.precision(), kernel,
                                         kWrightDoubleLimit);
  if (!r.converged) {
    throw ConvergenceError("w_eval_wright: series did not converge");
  }
  if (r.condition() > detail::condition_ceiling(r.precision_used)) {
    throw ConvergenceError("w_eval_wright: cancellation beyond the working precision");
  }
  CoeigValue out;
  out.path = CoeigPath::wright_series;
  out.value = r.real() * std::exp(wright_log_prefactor(params, n, q, x));
  out.condition = r.condition();
  out.precision_used = r.precision_used;
  return out;
}

std::vector<double> w_eval_wright_all(const GLParams &params, int N, double x) {
  if (!(x > 0.0)) {
    throw DomainError("w_eval_wright_all: x must be positive");
  }
  if (N < 0) {
    throw DomainError("w_eval_wright_all: N must be nonnegative");
  }
  const double alpha = params.alpha();
  const double shift = params.density_exponent() + 1.0;
  const double u = std::pow(x, 1.0 / alpha);
  const int min_terms = 5 + static_cast<int>(u + N / alpha);
  struct Batch {
    std::vector<double> values;
    double worst_condition = 0.0;
    bool converged = false;
  };
  auto run = [&](auto tag) {
    using T = decltype(tag);
    const T ut = u_of<T>(x, alpha);
    const T inv_alpha = T(1) / T(alpha);
    const T tol = T(unit_roundoff<T>());
    std::vector<T> sum(N + 1, T(0));
    std::vector<T> abs_sum(N + 1, T(0));
    std::vector<int> quiet(N + 1, 0);
    T power = 1;
    Batch b;
    for (int k = 0; k < 10000; ++k) {
      if (k > 0) {
        power *= -ut / T(k);
      }
      const T base = T(k) * inv_alpha + T(shift);
      T t = power;
      bool all_quiet = true;
      for (int n = 0; n <= N; ++n) {
        if (n > 0) {
          t *= base + T(n - 1);
        }
        sum[n] += t;
        abs_sum[n] += abs(t);
        quiet[n] = abs(t) <= tol * abs(sum[n]) ? quiet[n] + 1 : 0;
        all_quiet = all_quiet && quiet[n] >= 3;
      }
      if (k + 1 >= min_terms && all_quiet) {
        b.converged = true;
        break;
      }
    }
    b.values.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      // Combine in logs: the raw sum can exceed the double range.
      const double log_v = to_double(log(abs(sum[n])));
      const double log_w = wright_log_prefactor(params, n, 0, x);
      const double mag = std::exp(log_v + log_w);
      b.values[n] = sum[n] < 0 ? -mag : mag;
      const double cond = to_double(log(abs_sum[n])) - log_v;
      b.worst_condition = std::max(b.worst_condition, std::isnan(cond) ? INFINITY : std::exp(cond));
      if (std::isnan(b.values[n])) {
        b.converged = false;
      }
    }
    return b;
  };
  const Precision req = params.precision();
  Batch b;
  if (req == Precision::ext128) {
    b = run(Ext128{});
  } else if (req == Precision::ext256) {
    b = run(Ext256{});
  } else {
    b = run(double{});
    if (!b.converged || b.worst_condition > kWrightDoubleLimit) {
      b = run(Ext128{});
      if (!b.converged || b.worst_condition > 1e24) {
        b = run(Ext256{});
      }
    }
  }
  if (!b.converged) {
    throw ConvergenceError("w_eval_wright_all: series did not converge");
  }
  const Precision used = req == Precision::binary64 ? Precision::ext256 : req;
  if (b.worst_condition > detail::condition_ceiling(used)) {
    throw ConvergenceError("w_eval_wright_all: cancellation beyond the working precision");
  }
  return b.values;
}

//------------------------------------------------------------------------------

CoeigValue w_eval_mellin(const GLParams &params, int n, double x,
                         const Contour &contour, int q) {
  if (!(x > 0.0)) {
    throw DomainError("w_eval_mellin: x must be positive");
  }
  if (n < 0 || q < 0) {
    throw DomainError("w_eval_mellin: n and q must be nonnegative");
  }
  const double alpha = params.alpha();
  const double beta = params.beta();
  const double pole = 1.0 - beta - 1.0 / alpha; // first pole of the gamma factor
  const double lead = 1.0 - alpha + params.laguerre_exponent();
  const double lx = std::log(x);
  const double floor_a = std::max(1.0, 1.5 - beta - 1.0 / alpha);
  if (contour.abscissa && !(*contour.abscissa > std::max(0.0, pole))) {
    throw DomainError("w_eval_mellin: abscissa must exceed max(0, 1-beta-1/alpha)");
  }

  // Smoothed real log-magnitude; the +1 keeps the polynomial zeros from
  // trapping the minimizer.
  auto phi = [&](double a) {
    double v = -(a + q) * lx + std::lgamma(alpha * a + lead);
    for (int j = 1; j <= n; ++j) {
      v += 0.5 * std::log((a - j) * (a - j) + 1.0);
    }
    for (int i = 0; i < q; ++i) {
      v += 0.5 * std::log((a + i) * (a + i) + 1.0);
    }
    return v;
  };
  double a = floor_a;
  if (contour.abscissa) {
    a = *contour.abscissa;
  } else {
    const double u = std::pow(x, 1.0 / alpha);
    const double hi = std::max({floor_a + 2.0, n + 5.0, 2.0 * u / alpha + 10.0});
    const int grid = 400;
    double best = phi(floor_a);
    for (int i = 1; i <= grid; ++i) {
      const double c = floor_a + (hi - floor_a) * i / grid;
      const double v = phi(c);
      if (v < best) {
        best = v;
        a = c;
      }
    }
    // Golden-section polish around the grid minimum.
    double lo_b = std::max(floor_a, a - (hi - floor_a) / grid);
    double hi_b = std::min(hi, a + (hi - floor_a) / grid);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 60; ++it) {
      const double c1 = hi_b - g * (hi_b - lo_b);
      const double c2 = lo_b + g * (hi_b - lo_b);
      if (phi(c1) < phi(c2)) {
        hi_b = c2;
      } else {
        lo_b = c1;
      }
    }
    a = std::max(floor_a, 0.5 * (lo_b + hi_b));
  }

  const double strip = a - pole;
  const double h = contour.step ? *contour.step
                                : std::min(0.05 / alpha, 2.0 * pi_v<double>() * strip / 45.0);
  if (!(h > 0.0)) {
    throw DomainError("w_eval_mellin: step must be positive");
  }
  const double lg_norm = std::lgamma(n + 1.0) + std::lgamma(params.laguerre_exponent() + 1.0);
  auto integrand = [&](double b) {
    const std::complex<double> s(a, b);
    std::complex<double> l = -(s + static_cast<double>(q)) * lx +
                             log_gamma(alpha * s + lead) - lg_norm;
    for (int j = 1; j <= n; ++j) {
      l += std::log(s - static_cast<double>(j));
    }
    for (int i = 0; i < q; ++i) {
      l += std::log(-s - static_cast<double>(i));
    }
    return std::exp(l);
  };

  // Height: from the e^{-alpha pi b/2} decay with the polynomial factor
  // |b|^{n+q+alpha a}, or as supplied.
  const double cap = contour.height.value_or(
      50.0 * (26.4 / alpha + n + q + a) + 200.0);
  const std::complex<double> f0 = integrand(0.0);
  double peak = std::abs(f0);
  NeumaierSum<double> acc;
  NeumaierSum<double> abs_acc;
  acc.add(0.5 * f0.real());
  abs_acc.add(0.5 * std::abs(f0));
  int quiet = 0;
  double last = peak;
  bool decayed = false;
  const long steps = static_cast<long>(std::ceil(cap / h));
  for (long k = 1; k <= steps; ++k) {
    const std::complex<double> f = integrand(static_cast<double>(k) * h);
    const double m = std::abs(f);
    acc.add(f.real());
    abs_acc.add(m);
    peak = std::max(peak, m);
    last = m;
    quiet = m < 1e-18 * peak ? quiet + 1 : 0;
    if (!contour.height && quiet > 20) {
      decayed = true;
      break;
    }
  }
  if (contour.height) {
    decayed = last < 1e-18 * peak;
  }
  if (!decayed) {
    throw ContourError("w_eval_mellin: integrand has not decayed at the truncation height");
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  CoeigValue out;
  out.path = CoeigPath::mellin_barnes;
  out.value = sign * h * acc.value() / pi_v<double>();
  out.condition = out.value == 0.0 ? INFINITY
                                   : h * abs_acc.value() / pi_v<double>() /
                                         std::abs(out.value);
  return out;
}

//------------------------------------------------------------------------------

CoeigEvaluator::CoeigEvaluator(const GLParams &params, int degree)
    : table_(params, degree) {}

CoeigValue CoeigEvaluator::r(int n, double x) const {
  CoeigValue v = r_eval_bell(table_, n, x);
  if (v.condition <= detail::condition_ceiling(Precision::ext256)) {
    return v;
  }
  const double e = weight_eval(Weight::invariant(params()), x);
  CoeigValue w = this->w(n, x);
  w.value /= e;
  return w;
}

CoeigValue CoeigEvaluator::w(int n, double x) const {
  const GLParams &p = params();
  const double e = weight_eval(Weight::invariant(p), x);
  CoeigValue v = r_eval_bell(table_, n, x);
  if (v.condition <= detail::condition_ceiling(Precision::ext256)) {
    v.value *= e;
    return v;
  }
  if (std::pow(x, 1.0 / p.alpha()) < 60.0) {
    try {
      return w_eval_wright(p, n, 0, x);
    } catch (const ConvergenceError &) {
      // fall through to the contour integral
    }
  }
  return w_eval_mellin(p, n, x);
}

double w_eval(const GLParams &params, int n, double x) {
  if (n < 0) {
    throw DomainError("w_eval: n must be nonnegative");
  }
  return CoeigEvaluator(params, n).w(n, x).value;
}

RealFn coeig_function(std::shared_ptr<const CoeigEvaluator> evaluator, int n) {
  if (n < 0 || n > evaluator->table().degree()) {
    throw IndexError("coeig_function: n exceeds the table degree");
  }
  return RealFn("R_" + std::to_string(n),
                [evaluator, n](double x, int) { return evaluator->r(n, x).value; });
}

//------------------------------------------------------------------------------

CrudeBoundReport w_crude_bound_check(const GLParams &params, int n, int q,
                                     double x) {
  if (n < 0 || q < 0) {
    throw DomainError("w_crude_bound_check: n and q must be nonnegative");
  }
  const double alpha = params.alpha();
  const double limit = std::exp(-2.0 * alpha) *
                       std::pow((1.0 + alpha) / alpha, alpha) *
                       std::pow(static_cast<double>(n), alpha);
  if (!(x > 0.0) || (n > 0 && !(x < limit))) {
    throw DomainError("w_crude_bound_check: x outside (0, e^{-2a}((1+a)/a)^a n^a)");
  }
  CrudeBoundReport r;
  r.n = n;
  r.order = q;
  r.x = x;
  CoeigValue v;
  try {
    v = w_eval_wright(params, n, q, x);
  } catch (const ConvergenceError &) {
    v = w_eval_mellin(params, n, x, {}, q);
  }
  r.value = v.value;
  const double power = params.beta() + 1.0 / alpha;
  const double nn = std::max(n, 1);
  r.log_envelope = (power - q) * std::log(x) +
                   (std::abs(power - 1.0 - q) + 2.0) * std::log(nn) +
                   params.coeig_growth_rate() *
                       std::pow(nn * x, 1.0 / (alpha + 1.0));
  r.ratio = std::abs(r.value) * std::exp(-r.log_envelope);
  return r;
}

} // namespace glspec
