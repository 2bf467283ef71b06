#include "glspec/core.hpp"

#include "glspec/series.hpp"
#include "glspec/specfun.hpp"

#include <cmath>
#include <sstream>

namespace glspec {

int mantissa_bits(Precision p) {
  switch (p) {
  case Precision::ext128:
    return std::numeric_limits<Ext128>::digits;
  case Precision::ext256:
    return std::numeric_limits<Ext256>::digits;
  default:
    return std::numeric_limits<double>::digits;
  }
}

double SeriesResult::condition() const {
  const double v = std::abs(value);
  if (v == 0.0) {
    return abs_term_sum == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return abs_term_sum / v;
}

bool precision_adequate(const SeriesResult &r) {
  return r.converged &&
         r.condition() <= detail::condition_ceiling(r.precision_used);
}

GLParams make_params(double alpha, double beta, Precision precision,
                     double epsilon) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "alpha must lie in (0,1], got " << alpha;
    throw DomainError(msg.str());
  }
  if (!(beta >= 1.0 - 1.0 / alpha) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "beta must be >= 1 - 1/alpha = " << 1.0 - 1.0 / alpha << ", got "
        << beta;
    throw DomainError(msg.str());
  }
  if (!(epsilon > 0.0)) {
    throw DomainError("epsilon must be positive");
  }
  GLParams p;
  p.alpha_ = alpha;
  p.beta_ = beta;
  p.precision_ = precision;
  p.epsilon_ = epsilon;
  const double ab = alpha * beta;
  p.drift_ = std::exp(std::lgamma(ab + alpha + 1.0) - std::lgamma(ab + 1.0));
  p.density_exponent_ = beta + 1.0 / alpha - 1.0;
  p.scaled_density_exponent_ = ab - alpha + 1.0;
  p.expansion_time_ = alpha == 1.0 ? 0.0 : -std::log(std::pow(2.0, alpha) - 1.0);
  p.poly_growth_rate_ =
      (alpha + 1.0) * std::pow(alpha, -alpha / (alpha + 1.0));
  p.coeig_growth_rate_ =
      p.poly_growth_rate_ *
      std::pow((alpha + 1.0) / alpha + epsilon, 1.0 / (alpha + 1.0));
  return p;
}

std::complex<double> phi(const GLParams &params, std::complex<double> s) {
  const double a = params.alpha();
  const double ab1 = a * params.beta() + 1.0;
  if (s.real() <= -params.beta() - 1.0 / a) {
    throw DomainError("phi: Re(s) must exceed -beta - 1/alpha");
  }
  const std::complex<double> top = a * s + ab1;
  return std::exp(log_gamma(top) - log_gamma(top - a));
}

double phi(const GLParams &params, double s) {
  const double a = params.alpha();
  if (s <= -params.beta() - 1.0 / a) {
    throw DomainError("phi: s must exceed -beta - 1/alpha");
  }
  const double top = a * s + a * params.beta() + 1.0;
  return gamma_ratio(top, top - a);
}

AsympConstants asymp_constants(double alpha, double epsilon) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("asymp_constants: alpha must lie in (0,1]");
  }
  const double pi = pi_v<double>();
  const double a = alpha;
  AsympConstants c;
  c.C_bar = std::pow(a, a) * std::pow(std::cos(pi * a / 2), a + 1) /
            std::pow(std::sin(pi * a / 2), a);
  c.B_bar = std::pow(a, a) / std::sin(pi / (2 * (1 + a))) /
            std::pow(std::sin(pi * a / (2 * (1 + a))), a);
  c.A_bar = std::pow(1 + a, a + 1);
  c.B_cal = std::pow(2.0, a) *
            std::pow(std::pow(a + 1, 1 + 1 / a) / 2 - (a + 1), a);
  c.K_bar = std::exp(-2 * a - epsilon) * std::pow((1 + a) / a, a);
  return c;
}

//------------------------------------------------------------------------------

RealFn::RealFn(std::string description, Eval eval, int max_order)
    : description_(std::move(description)), eval_(std::move(eval)),
      max_order_(max_order) {}

double RealFn::derivative(double x, int order) const {
  if (order < 0 || order > max_order_) {
    throw DomainError("RealFn '" + description_ + "' has no derivative of order " +
                      std::to_string(order));
  }
  return eval_(x, order);
}

RealFn RealFn::with_coefficients(std::vector<double> coeffs) const {
  RealFn f = *this;
  f.coeffs_ = std::move(coeffs);
  return f;
}

RealFn RealFn::polynomial(std::vector<double> coeffs, std::string description) {
  auto eval = [coeffs](double x, int order) {
    // Horner on the order-th derivative's coefficients.
    double acc = 0.0;
    const int deg = static_cast<int>(coeffs.size()) - 1;
    for (int k = deg; k >= order; --k) {
      double c = coeffs[k];
      for (int j = 0; j < order; ++j) {
        c *= static_cast<double>(k - j);
      }
      acc = acc * x + c;
    }
    return acc;
  };
  const int max_order = static_cast<int>(coeffs.size()) + 1;
  RealFn f(std::move(description), eval, max_order);
  f.coeffs_ = std::move(coeffs);
  return f;
}

RealFn RealFn::constant(double c) {
  return polynomial({c}, "constant " + std::to_string(c));
}

RealFn RealFn::monomial(int k) {
  if (k < 0) {
    throw DomainError("monomial degree must be nonnegative");
  }
  std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
  c.back() = 1.0;
  return polynomial(std::move(c), "x^" + std::to_string(k));
}

RealFn RealFn::laguerre(int n, double beta) {
  if (n < 0) {
    throw DomainError("Laguerre degree must be nonnegative");
  }
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double lg = std::lgamma(n + beta + 1.0) - std::lgamma(n - k + 1.0) -
                      std::lgamma(k + beta + 1.0) - std::lgamma(k + 1.0);
    c[k] = (k % 2 == 0 ? 1.0 : -1.0) * std::exp(lg);
  }
  std::ostringstream d;
  d << "Laguerre L_" << n << "^(" << beta << ")";
  return polynomial(std::move(c), d.str());
}

} // namespace glspec
