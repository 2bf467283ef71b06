#include "glspec/density.hpp"

#include "glspec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/digamma.hpp>

namespace glspec {

Weight::Weight(WeightKind kind, GLParams params, double normalizer)
    : kind_(kind), params_(params), normalizer_(normalizer) {}

Weight Weight::invariant(const GLParams &params) {
  const double a = params.alpha();
  const double norm = 1.0 / (a * std::tgamma(a * params.beta() + 1.0));
  return Weight(WeightKind::invariant, params, norm);
}

Weight Weight::auxiliary(const GLParams &params, double gamma, double eta) {
  if (!(gamma > 0.0 && gamma < params.alpha())) {
    throw DomainError("auxiliary weight needs 0 < gamma < alpha");
  }
  if (!(eta > 0.0)) {
    throw DomainError("auxiliary weight needs eta > 0");
  }
  Weight w(WeightKind::auxiliary, params, 1.0);
  w.gamma_ = gamma;
  w.eta_ = eta;
  return w;
}

Weight Weight::classical(double beta) {
  if (!(beta > -1.0)) {
    throw DomainError("classical weight needs beta > -1");
  }
  return Weight(WeightKind::classical, make_params(1.0, beta),
                1.0 / std::tgamma(beta + 1.0));
}

double weight_eval(const Weight &w, double x) {
  if (!(x > 0.0)) {
    throw DomainError("weight_eval: x must be positive");
  }
  const GLParams &p = w.params();
  switch (w.kind()) {
  case WeightKind::invariant: {
    const double u = std::pow(x, 1.0 / p.alpha());
    return w.normalizer() * std::exp(p.density_exponent() * std::log(x) - u);
  }
  case WeightKind::auxiliary:
    return std::exp(p.density_exponent() * std::log(x) +
                    w.eta() * std::pow(x, 1.0 / w.gamma()));
  case WeightKind::classical:
    return w.normalizer() * std::exp(p.beta() * std::log(x) - x);
  }
  return 0.0;
}

double moment(const GLParams &params, int k) {
  if (k < 0) {
    throw DomainError("moment: k must be nonnegative");
  }
  return moment(params, static_cast<double>(k));
}

double moment(const GLParams &params, double s) {
  const double a = params.alpha();
  const double ab1 = a * params.beta() + 1.0;
  if (!(a * s + ab1 > 0.0)) {
    throw DomainError("moment: power below the integrability threshold");
  }
  return gamma_ratio(a * s + ab1, ab1);
}

std::complex<double> mellin_lambda(const GLParams &params,
                                   std::complex<double> s) {
  if (!(s.real() > -1.0)) {
    throw DomainError("mellin_lambda: Re(s) must exceed -1");
  }
  const double a = params.alpha();
  const double ab1 = a * params.beta() + 1.0;
  return std::exp(log_gamma(s + 1.0) + std::lgamma(ab1) -
                  log_gamma(a * s + ab1));
}

std::complex<double> mellin_density(const GLParams &params,
                                    std::complex<double> s) {
  const double a = params.alpha();
  const double ab1 = a * params.beta() + 1.0;
  if (!(a * s.real() + ab1 > 0.0)) {
    throw DomainError("mellin_density: Re(s) below the integrability threshold");
  }
  return std::exp(log_gamma(a * s + ab1) - std::lgamma(ab1));
}

std::complex<double> mellin_density_quadrature(const GLParams &params,
                                               std::complex<double> s) {
  const double a = params.alpha();
  const double ab = a * params.beta();
  if (!(a * s.real() + ab + 1.0 > 0.0)) {
    throw DomainError(
        "mellin_density_quadrature: Re(s) below the integrability threshold");
  }
  // With u = x^{1/alpha}: (1/Gamma(ab+1)) integral u^{alpha s + ab} e^{-u} du.
  const std::complex<double> p = a * s + ab;
  auto run = [&](double h) {
    std::complex<double> acc = 0.0;
    for (const auto &n : half_line_de(h, -6.0, 6.8)) {
      acc += n.w * std::exp(p * std::log(n.u) - n.u);
    }
    return acc / std::tgamma(ab + 1.0);
  };
  const auto fine = run(1.0 / 64);
  const auto coarse = run(1.0 / 32);
  if (std::abs(fine - coarse) > 1e-8 * std::abs(fine)) {
    throw QuadratureError("mellin_density_quadrature: step halving disagrees");
  }
  return fine;
}

//------------------------------------------------------------------------------

namespace {

// Largest cancellation the series is trusted with before Mellin-Barnes
// takes over (resolved to ~1e-37 at 259 bits).
constexpr double kSeriesCondition = 1e40;

int peak_index(const std::vector<double> &log_abs, double z) {
  const double lz = std::log(std::max(z, 1e-300));
  double peak = -std::numeric_limits<double>::infinity();
  int k_peak = 0;
  for (int k = 0; k < static_cast<int>(log_abs.size()); ++k) {
    const double v = log_abs[k] + k * lz;
    if (v > peak) {
      peak = v;
      k_peak = k;
    }
  }
  return k_peak;
}

// Number of coefficients after which |c_k| z^k has passed its peak and
// decayed by 1e-139, or -1 if the cache is too short.
int terms_needed(const std::vector<double> &log_abs, double z) {
  const double lz = std::log(z);
  double peak = -std::numeric_limits<double>::infinity();
  int k_peak = 0;
  for (int k = 0; k < static_cast<int>(log_abs.size()); ++k) {
    const double v = log_abs[k] + k * lz;
    if (v > peak) {
      peak = v;
      k_peak = k;
    }
    if (std::isinf(v)) {
      continue; // pole of the reciprocal gamma, coefficient is zero
    }
    if (k > k_peak + 5 && v < peak - 320.0) {
      return k + 1;
    }
  }
  return -1;
}

} // namespace

LambdaKernel::LambdaKernel(const GLParams &params, double z_max)
    : params_(params) {
  if (params.classical()) {
    throw DomainError("LambdaKernel: alpha = 1 has no density (Beta or point mass)");
  }
  const Ext256 a(params.alpha());
  const Ext256 ab1 = a * Ext256(params.beta()) + 1;
  const Ext256 shift = a * (Ext256(params.beta()) - 1) + 1;
  const Ext256 lead_log = log_abs_gamma(ab1);
  std::vector<double> &log_abs = log_abs_;
  Ext256 log_fact = 0;
  auto extend_to = [&](int K) {
    for (int k = static_cast<int>(coeff_.size()); k < K; ++k) {
      if (k > 0) {
        log_fact += log(Ext256(k));
      }
      const Ext256 arg = shift - a * Ext256(k);
      if (is_gamma_pole(arg)) {
        coeff_.push_back(Ext256(0));
        log_abs.push_back(-std::numeric_limits<double>::infinity());
        continue;
      }
      const Ext256 lg = lead_log - log_abs_gamma(arg) - log_fact;
      coeff_.push_back(Ext256(gamma_sign(arg)) * exp(lg));
      log_abs.push_back(to_double(lg));
    }
  };
  extend_to(64);
  const double lambda0 = std::abs(to_double(coeff_[0]));
  // Walk out until the density is negligible. The series serves while its
  // cancellation stays within reach of 259 bits; Mellin-Barnes takes over.
  bool series_ok = true;
  double z = 0.5;
  for (int iter = 0; iter < 400; ++iter) {
    double value = 0.0;
    if (series_ok) {
      int need = terms_needed(log_abs, z);
      while (need < 0 && coeff_.size() < 20000) {
        extend_to(static_cast<int>(coeff_.size()) * 2);
        need = terms_needed(log_abs, z);
      }
      const SeriesResult r = need < 0 ? SeriesResult{} : evaluate(z);
      if (need >= 0 && r.converged && r.condition() <= kSeriesCondition) {
        series_limit_ = z;
        value = r.real();
      } else {
        series_ok = false;
      }
    }
    if (!series_ok) {
      value = mellin_barnes(z);
    }
    if (std::abs(value) < 1e-22 * lambda0 || (z_max > 0.0 && z >= z_max)) {
      cutoff_ = z;
      break;
    }
    z *= 1.1;
  }
  if (cutoff_ == 0.0) {
    throw ConvergenceError("LambdaKernel: density does not decay");
  }
}

SeriesResult LambdaKernel::evaluate(double z) const {
  if (z < 0.0) {
    throw DomainError("lambda density: z must be nonnegative");
  }
  const int K = static_cast<int>(coeff_.size());
  SeriesOptions opts;
  opts.max_terms = K;
  // Sum past the peak of |c_k| z^k before testing for convergence.
  opts.min_terms = std::min(K, peak_index(log_abs_, z) + 8);
  auto kernel = [&](auto tag) {
    using T = decltype(tag);
    const T zt = -T(z);
    T zk = 1;
    auto term = [&](int k) {
      if (k > 0) {
        zk *= zt;
      }
      return T(coeff_[k]) * zk;
    };
    return sum_series<T>(term, opts);
  };
  return run_with_policy(params_.precision(), kernel);
}

double LambdaKernel::mellin_barnes(double z) const {
  if (!(z > 0.0)) {
    throw DomainError("lambda Mellin-Barnes: z must be positive");
  }
  const double a = params_.alpha();
  const double ab1 = a * params_.beta() + 1.0;
  const double lz = std::log(z);
  // Saddle of the real log-integrand -(c+1) ln z + lnG(c+1) - lnG(a c + ab1).
  auto slope = [&](double c) {
    return -lz + boost::math::digamma(c + 1.0) -
           a * boost::math::digamma(a * c + ab1);
  };
  double lo = -1.0 + 1e-6;
  double hi = 1.0;
  while (slope(hi) < 0.0 && hi < 1e6) {
    hi *= 2.0;
  }
  if (slope(lo) > 0.0) {
    hi = lo;
  }
  for (int i = 0; i < 100 && hi - lo > 1e-12 * (1.0 + std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) < 0.0 ? lo : hi) = mid;
  }
  const double c = std::max(hi, -0.5);
  const double lg_ab1 = std::lgamma(ab1);
  auto integrand = [&](double b) {
    const std::complex<double> s(c, b);
    return std::exp(-(s + 1.0) * lz + log_gamma(s + 1.0) + lg_ab1 -
                    log_gamma(a * s + ab1));
  };
  // Trapezoid in b on a line analytic to distance c + 1 from the first pole.
  const double h = std::min(0.25, 2.0 * pi_v<double>() * (c + 1.0) / 45.0);
  const double peak = std::abs(integrand(0.0));
  NeumaierSum<double> acc;
  acc.add(0.5 * integrand(0.0).real());
  int quiet = 0;
  for (long k = 1; k < 4000000; ++k) {
    const double b = static_cast<double>(k) * h;
    const std::complex<double> v = integrand(b);
    acc.add(v.real());
    quiet = std::abs(v) < 1e-20 * peak ? quiet + 1 : 0;
    if (quiet > 20) {
      return h * acc.value() / pi_v<double>();
    }
  }
  throw QuadratureError("lambda Mellin-Barnes: integrand does not decay");
}

double LambdaKernel::operator()(double z) const {
  if (z > cutoff_) {
    return 0.0;
  }
  if (z > series_limit_) {
    return std::max(0.0, mellin_barnes(z));
  }
  const SeriesResult r = evaluate(z);
  if (!r.converged) {
    throw ConvergenceError("lambda density: series did not converge");
  }
  return std::max(0.0, r.real());
}

double lambda_density(const GLParams &params, double z) {
  const LambdaKernel k(params, std::max(z, 1.0));
  if (z > k.support_cutoff()) {
    return 0.0;
  }
  return k(z);
}

//------------------------------------------------------------------------------

MarkovOperator::MarkovOperator(const GLParams &params, double h)
    : params_(params) {
  if (params.classical()) {
    if (params.beta() == 0.0) {
      identity_ = true;
      return;
    }
    // Beta(1, beta) kernel beta (1-y)^{beta-1} on (0,1). With v = (1-y)^beta
    // the kernel becomes dv, leaving a smooth integrand for tanh-sinh in v.
    beta_kernel_ = true;
    const double inv_b = 1.0 / params.beta();
    const double half_pi = pi_v<double>() / 2;
    for (long k = -static_cast<long>(4.0 / h); k <= static_cast<long>(4.0 / h);
         ++k) {
      const double t = static_cast<double>(k) * h;
      const double s = half_pi * std::sinh(t);
      const double v = 1.0 / (1.0 + std::exp(-2 * s));
      const double cs = std::cosh(s);
      const double w = h * half_pi * std::cosh(t) / (2.0 * cs * cs);
      const double y = -std::expm1(std::log(v) * inv_b);
      if (v > 0.0 && y > 0.0 && w > 0.0) {
        nodes_.push_back({y, w});
      }
    }
    return;
  }
  const LambdaKernel kernel(params);
  const double t_hi = de_parameter_for(kernel.support_cutoff());
  // Refine until the even sub-rule reproduces the unit mass; kernels near
  // alpha = 1 are sharply peaked and need a finer step.
  for (int refine = 0; refine < 6; ++refine, h /= 2) {
    nodes_.clear();
    for (const auto &n : half_line_de(h, -5.0, t_hi)) {
      if (n.u > kernel.support_cutoff()) {
        break;
      }
      nodes_.push_back({n.u, n.w * kernel(n.u)});
    }
    NeumaierSum<double> full;
    NeumaierSum<double> half;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      full.add(nodes_[i].w);
      if (i % 2 == 0) {
        half.add(2.0 * nodes_[i].w);
      }
    }
    if (std::abs(full.value() - half.value()) < 1e-10) {
      return;
    }
  }
  throw QuadratureError("Markov operator: kernel rule does not resolve lambda");
}

template <class Integrand>
double MarkovOperator::integrate(Integrand &&g) const {
  NeumaierSum<double> full;
  NeumaierSum<double> half;
  double scale = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double v = nodes_[i].w * g(nodes_[i].u);
    full.add(v);
    if (i % 2 == 0) {
      half.add(2.0 * v);
    }
    scale += std::abs(v);
  }
  // Odd/even sub-rules both converge; their gap bounds the coarse error.
  if (std::abs(full.value() - half.value()) > 1e-6 * std::max(scale, 1e-300)) {
    throw QuadratureError("Markov operator: step halving disagrees");
  }
  return full.value();
}

double MarkovOperator::apply(const RealFn &f, double x) const {
  if (!(x > 0.0)) {
    throw DomainError("Markov operator: x must be positive");
  }
  if (identity_) {
    return f(x);
  }
  return integrate([&](double y) { return f(x * y); });
}

double MarkovOperator::adjoint_apply(const RealFn &f, double x) const {
  if (!(x > 0.0)) {
    throw DomainError("Markov adjoint: x must be positive");
  }
  if (identity_) {
    return f(x);
  }
  const Weight e = Weight::invariant(params_);
  return std::exp(x) * integrate([&](double v) {
           const double z = x / v;
           const double ez = weight_eval(e, z);
           return ez == 0.0 ? 0.0 : f(z) * ez / v;
         });
}

double markov_lambda_apply(const GLParams &params, const RealFn &f, double x) {
  return MarkovOperator(params).apply(f, x);
}

double markov_lambda_adjoint_apply(const GLParams &params, const RealFn &f,
                                   double x) {
  return MarkovOperator(params).adjoint_apply(f, x);
}

} // namespace glspec
