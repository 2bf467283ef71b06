#pragma once
// Saddle-point functions behind the uniform bounds on W_n, the bound regions
// and the growth of the co-eigenfunction norms.

#include "glspec/core.hpp"
#include "glspec/quad.hpp"

#include <optional>
#include <vector>

namespace glspec {

/// g(tau) = (1/2)((1+a) ln(1+tau^2) - s' ln(1+tau^2/s'^2))
///          - tau((1+a) atan(tau) - arg(s' + i tau)),  s' = 1 - varsigma.
/// arg is the continuous branch, so varsigma >= 1 needs no special case.
double g_func(double alpha, double varsigma, double tau);

/// d/dtau of g_func: -(1+a) atan(tau) + arg(s' + i tau).
double g_func_derivative(double alpha, double varsigma, double tau);

/// varsigma(theta) = sin(a theta)/(sin((1+a) theta) cos(theta)), increasing
/// from a/(1+a) to infinity on (0, pi/2).
double varsigma_of_theta(double alpha, double theta);

/// Maximizer of g on [0, inf): zero for varsigma <= a/(1+a), otherwise the
/// positive root of g' (bisection in theta = atan(tau), tolerance 1e-13).
double tau_star(double alpha, double varsigma);

/// a^a (sin((1+a)t)/sin t)(sin((1+a)t)/sin(a t))^a for t in (0, pi/2).
double kappa_bar(double alpha, double theta_star);

struct SaddleState {
  double varsigma = 0.0;
  double tau_star = 0.0;
  double theta_star = 0.0;
  /// Stationary kappa: kappa_bar = (alpha kappa)^alpha.
  double kappa = 0.0;
  double kappa_bar = 0.0;
};

/// The stationary pair parametrized by theta_star in (0, pi/2).
SaddleState saddle_state(double alpha, double theta_star);

/// H_kappa(varsigma) + g(tau_star)/varsigma when varsigma > a/(1+a).
double H_star(double alpha, double kappa, double varsigma);

/// -a/s - ln(s/|1-s|) + (1/2) ln(1 + tau^2/(s-1)^2), the value of H_star at a
/// stationary pair.
double H_star_stationary(const SaddleState &state, double alpha);

/// Exponent of the large-x bound: eta(1+a)^{(1+a)/a} - (1+a) - ln a, raised
/// to -ln(eta^{-a} - 1) when eta lies in [(1+a)^{-1/a}, 1).
double H_alpha_eta(double alpha, double eta);

//------------------------------------------------------------------------------

enum class BoundRegion { fixed_x, middle, suboptimal, large };

const char *to_string(BoundRegion region);

struct RegionSamples {
  /// fixed_x: the points x. middle: angles theta in (0, pi/2), x =
  /// kappa_bar(theta) n^a. suboptimal and large: multipliers c, x = c n^a.
  std::vector<double> points;
  /// Large region decay rate (< 1).
  double eta = 0.9;
  /// fixed_x: shrinks the csc rate (default a/10). suboptimal: widens the
  /// lower edge (default (B - C)/2).
  std::optional<double> epsilon;
};

struct RegionReport {
  BoundRegion region = BoundRegion::fixed_x;
  int n = 0;
  std::vector<double> xs;
  std::vector<double> values;
  /// log of the bound expression without its unspecified constant.
  std::vector<double> log_bounds;
  std::vector<double> ratios;
  double max_ratio = 0.0;
};

/// |W_n(x)| against the region's bound at each sample. Throws DomainError for
/// samples outside the region.
RegionReport bound_region_check(const GLParams &params, int n, BoundRegion region,
                                const RegionSamples &samples);

struct RegionSequence {
  std::vector<int> ns;
  std::vector<double> max_ratios;
  /// Every ratio finite and the last max ratio at most growth_allowance
  /// times the first.
  bool bounded = false;
};

RegionSequence bound_region_sequence(const GLParams &params, BoundRegion region,
                                     const RegionSamples &samples,
                                     const std::vector<int> &ns = {20, 30, 40},
                                     double growth_allowance = 10.0);

//------------------------------------------------------------------------------

struct NormEnvelopeReport {
  std::vector<int> ns;
  /// log ||R_n|| / n.
  std::vector<double> invariant_rates;
  /// log ||R_n e / e_aux||_{e_aux} / n^{1/(a+1)}.
  std::vector<double> auxiliary_rates;
  /// Maxima over the upper half of the range.
  double invariant_limsup = 0.0;
  double auxiliary_limsup = 0.0;
  double invariant_limit = 0.0;
  double auxiliary_limit = 0.0;
  /// Largest relative gap between the exact norms and the rule, when given.
  std::optional<double> rule_deviation;
  bool holds = false;
};

/// Norm growth for n = 1..n_max (n_max <= 30) against T_a + 0.1 and
/// tbar_a + 0.2.
NormEnvelopeReport norm_envelope_check(const GLParams &params, int n_max,
                                       const QuadRule *rule = nullptr);

} // namespace glspec
