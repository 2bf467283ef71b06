#include "glspec/asymptotics.hpp"

#include "glspec/coeigen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace glspec {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require_alpha(double alpha, const char *where) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError(std::string(where) + ": alpha must lie in (0,1]");
  }
}

void require_theta(double theta, const char *where) {
  if (!(theta > 0.0 && theta < kHalfPi)) {
    throw DomainError(std::string(where) + ": theta must lie in (0, pi/2)");
  }
}

} // namespace

double g_func(double alpha, double varsigma, double tau) {
  require_alpha(alpha, "g_func");
  if (!(tau >= 0.0) || !(varsigma >= 0.0)) {
    throw DomainError("g_func: need tau >= 0 and varsigma >= 0");
  }
  const double s = 1.0 - varsigma;
  const double t2 = tau * tau;
  // s ln(1 + tau^2/s^2) = s (ln(s^2 + tau^2) - 2 ln|s|), which tends to 0 as s -> 0.
  const double cross = s == 0.0 ? 0.0 : s * std::log1p(t2 / (s * s));
  return 0.5 * ((1 + alpha) * std::log1p(t2) - cross) -
         tau * ((1 + alpha) * std::atan(tau) - std::atan2(tau, s));
}

double g_func_derivative(double alpha, double varsigma, double tau) {
  require_alpha(alpha, "g_func_derivative");
  return -(1 + alpha) * std::atan(tau) + std::atan2(tau, 1.0 - varsigma);
}

double varsigma_of_theta(double alpha, double theta) {
  require_alpha(alpha, "varsigma_of_theta");
  require_theta(theta, "varsigma_of_theta");
  return std::sin(alpha * theta) /
         (std::sin((1 + alpha) * theta) * std::cos(theta));
}

double tau_star(double alpha, double varsigma) {
  require_alpha(alpha, "tau_star");
  if (!(varsigma > 0.0)) {
    throw DomainError("tau_star: varsigma must be positive");
  }
  if (varsigma <= alpha / (1 + alpha)) {
    return 0.0;
  }
  double lo = 0.0;
  double hi = kHalfPi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-13 || mid == lo || mid == hi) {
      return std::tan(mid);
    }
    if (varsigma_of_theta(alpha, mid) < varsigma) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("tau_star: bisection did not converge");
}

double kappa_bar(double alpha, double theta_star) {
  require_alpha(alpha, "kappa_bar");
  require_theta(theta_star, "kappa_bar");
  const double top = std::sin((1 + alpha) * theta_star);
  return std::pow(alpha, alpha) * (top / std::sin(theta_star)) *
         std::pow(top / std::sin(alpha * theta_star), alpha);
}

SaddleState saddle_state(double alpha, double theta_star) {
  SaddleState st;
  st.theta_star = theta_star;
  st.varsigma = varsigma_of_theta(alpha, theta_star);
  st.tau_star = std::tan(theta_star);
  st.kappa_bar = kappa_bar(alpha, theta_star);
  st.kappa = std::pow(st.kappa_bar, 1.0 / alpha) / alpha;
  return st;
}

double H_star(double alpha, double kappa, double varsigma) {
  require_alpha(alpha, "H_star");
  if (!(kappa > 0.0) || !(varsigma > 0.0)) {
    throw DomainError("H_star: kappa and varsigma must be positive");
  }
  const double s = varsigma;
  const double sb = 1.0 - s;
  const double sb_log = sb == 0.0 ? 0.0 : sb * std::log(std::abs(sb));
  double h = -(alpha * std::log(kappa) / s + alpha / s + std::log(s) +
               alpha / s * std::log(s) + sb_log / s);
  if (s > alpha / (1 + alpha)) {
    h += g_func(alpha, s, tau_star(alpha, s)) / s;
  }
  return h;
}

double H_star_stationary(const SaddleState &state, double alpha) {
  const double s = state.varsigma;
  const double sb = 1.0 - s;
  // -ln(s/|sb|) + (1/2) ln(1 + tau^2/sb^2) = -ln s + (1/2) ln(sb^2 + tau^2).
  return -alpha / s - std::log(s) +
         0.5 * std::log(sb * sb + state.tau_star * state.tau_star);
}

double H_alpha_eta(double alpha, double eta) {
  require_alpha(alpha, "H_alpha_eta");
  if (!(eta < 1.0)) {
    throw DomainError("H_alpha_eta: eta must be below 1");
  }
  const double first = eta * std::pow(1 + alpha, (alpha + 1) / alpha) -
                       (alpha + 1) - std::log(alpha);
  if (eta >= std::pow(1 + alpha, -1.0 / alpha)) {
    return std::max(first, -std::log(std::pow(eta, -alpha) - 1.0));
  }
  return first;
}

//------------------------------------------------------------------------------

const char *to_string(BoundRegion region) {
  switch (region) {
  case BoundRegion::fixed_x:
    return "fixed_x";
  case BoundRegion::middle:
    return "middle";
  case BoundRegion::suboptimal:
    return "suboptimal";
  case BoundRegion::large:
    return "large";
  }
  return "?";
}

RegionReport bound_region_check(const GLParams &params, int n, BoundRegion region,
                                const RegionSamples &samples) {
  if (n < 1) {
    throw DomainError("bound_region_check: n must be positive");
  }
  const double a = params.alpha();
  const double ba = params.density_exponent();
  const double bba = params.scaled_density_exponent();
  const AsympConstants k = asymp_constants(a, params.epsilon());
  const double scale = std::pow(static_cast<double>(n), a);
  const double ln_n = std::log(static_cast<double>(n));

  RegionReport rep;
  rep.region = region;
  rep.n = n;
  for (double pt : samples.points) {
    double x = 0.0;
    double log_bound = 0.0;
    switch (region) {
    case BoundRegion::fixed_x: {
      const double eps = samples.epsilon.value_or(a / 10);
      if (!(eps > 0.0 && eps < a)) {
        throw DomainError("bound_region_check: fixed_x needs 0 < epsilon < alpha");
      }
      if (!(pt > 0.0)) {
        throw DomainError("bound_region_check: fixed_x needs x > 0");
      }
      x = pt;
      const double shift = -ba / 2;
      log_bound = (1.5 - shift) * ln_n -
                  n * std::log(std::sin((a - eps) * kHalfPi)) - shift * std::log(x);
      break;
    }
    case BoundRegion::middle: {
      require_theta(pt, "bound_region_check");
      const double th = pt;
      x = kappa_bar(a, th) * scale;
      const double shape =
          std::cos(th) * std::pow(std::sin(th) / std::sin((1 + a) * th), 1.0 / a);
      log_bound = (bba + 0.5) * std::log(shape) + ba * std::log(x) +
                  n * (-a * std::sin((1 + a) * th) * std::cos(th) / std::sin(a * th) +
                       std::log(std::sin(th) / std::sin(a * th)));
      break;
    }
    case BoundRegion::suboptimal: {
      const double eps = samples.epsilon.value_or((k.B_bar - k.C_bar) / 2);
      const double lower = a >= 0.3 ? k.C_bar + eps : k.B_bar;
      if (!(pt > lower && pt < k.A_bar)) {
        throw DomainError("bound_region_check: multiplier outside the suboptimal range");
      }
      x = pt * scale;
      log_bound = ba * std::log(x) - 0.5 * std::pow(x, 1.0 / a) +
                  n * (-std::log(a) + 0.5 * std::pow(1 + a, (1 + a) / a) - 1 - a);
      break;
    }
    case BoundRegion::large: {
      if (!(pt >= k.A_bar)) {
        throw DomainError("bound_region_check: large region needs x >= A n^alpha");
      }
      x = pt * scale;
      log_bound = -2.5 * std::log(a) + ba * std::log(x) -
                  samples.eta * std::pow(x, 1.0 / a) + n * H_alpha_eta(a, samples.eta);
      break;
    }
    }
    const double w = w_eval(params, n, x);
    const double ratio = w == 0.0 ? 0.0 : std::exp(std::log(std::abs(w)) - log_bound);
    rep.xs.push_back(x);
    rep.values.push_back(w);
    rep.log_bounds.push_back(log_bound);
    rep.ratios.push_back(ratio);
    rep.max_ratio = std::isnan(ratio) ? ratio : std::max(rep.max_ratio, ratio);
  }
  return rep;
}

RegionSequence bound_region_sequence(const GLParams &params, BoundRegion region,
                                     const RegionSamples &samples,
                                     const std::vector<int> &ns,
                                     double growth_allowance) {
  if (ns.empty()) {
    throw DomainError("bound_region_sequence: no n given");
  }
  RegionSequence seq;
  seq.ns = ns;
  bool finite = true;
  for (int n : ns) {
    const RegionReport rep = bound_region_check(params, n, region, samples);
    finite = finite && std::isfinite(rep.max_ratio);
    seq.max_ratios.push_back(rep.max_ratio);
  }
  seq.bounded = finite && seq.max_ratios.back() <= growth_allowance * seq.max_ratios.front();
  return seq;
}

//------------------------------------------------------------------------------

NormEnvelopeReport norm_envelope_check(const GLParams &params, int n_max,
                                       const QuadRule *rule) {
  if (n_max < 1 || n_max > 30) {
    throw DomainError("norm_envelope_check: n_max must lie in [1, 30]");
  }
  const double a = params.alpha();
  NormEnvelopeReport rep;
  rep.invariant_limit = params.expansion_time() + 0.1;
  rep.auxiliary_limit = params.coeig_growth_rate() + 0.2;
  double deviation = 0.0;
  const int tail_from = (n_max + 1) / 2;
  rep.invariant_limsup = -INFINITY;
  rep.auxiliary_limsup = -INFINITY;
  for (int n = 1; n <= n_max; ++n) {
    const NormPair np = r_norm(params, n);
    const double inv = std::log(np.invariant) / n;
    const double aux = std::log(np.auxiliary) / std::pow(n, 1.0 / (a + 1));
    rep.ns.push_back(n);
    rep.invariant_rates.push_back(inv);
    rep.auxiliary_rates.push_back(aux);
    if (n >= tail_from) {
      rep.invariant_limsup = std::max(rep.invariant_limsup, inv);
      rep.auxiliary_limsup = std::max(rep.auxiliary_limsup, aux);
    }
    if (rule) {
      const double q = r_norm_quadrature(*rule, n);
      deviation = std::max(deviation, std::abs(q - np.invariant) / np.invariant);
    }
  }
  if (rule) {
    rep.rule_deviation = deviation;
  }
  rep.holds = rep.invariant_limsup <= rep.invariant_limit &&
              rep.auxiliary_limsup <= rep.auxiliary_limit;
  return rep;
}

} // namespace glspec
