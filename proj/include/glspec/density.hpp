#pragma once
// Invariant density, auxiliary weight, the intertwining kernel and its
// Markov operator.

#include "glspec/core.hpp"
#include "glspec/de.hpp"
#include "glspec/series.hpp"

#include <complex>
#include <vector>

namespace glspec {

enum class WeightKind { invariant, auxiliary, classical };

/// A weight on (0, inf): the invariant density e_{alpha,beta}, the growing
/// auxiliary weight x^{beta_alpha} e^{eta x^{1/gamma}}, or the classical
/// Laguerre density x^b e^{-x}/Gamma(b+1).
class Weight {
public:
  static Weight invariant(const GLParams &params);
  /// Requires 0 < gamma < alpha and eta > 0.
  static Weight auxiliary(const GLParams &params, double gamma, double eta);
  static Weight classical(double beta);

  WeightKind kind() const { return kind_; }
  const GLParams &params() const { return params_; }
  /// Multiplicative normalizer (1/(alpha Gamma(alpha beta+1)) for e).
  double normalizer() const { return normalizer_; }
  double gamma() const { return gamma_; }
  double eta() const { return eta_; }

private:
  Weight(WeightKind kind, GLParams params, double normalizer);

  WeightKind kind_;
  GLParams params_;
  double normalizer_;
  double gamma_ = 0.0;
  double eta_ = 0.0;
};

double weight_eval(const Weight &w, double x);

/// E[x^k] = Gamma(alpha k + alpha beta + 1)/Gamma(alpha beta + 1).
double moment(const GLParams &params, int k);
/// Same for a real power s > -beta - 1/alpha.
double moment(const GLParams &params, double s);

/// integral y^s lambda(y) dy = Gamma(s+1)Gamma(alpha beta+1)/Gamma(alpha s+alpha beta+1).
std::complex<double> mellin_lambda(const GLParams &params,
                                   std::complex<double> s);
/// integral x^s e(x) dx from the closed form.
std::complex<double> mellin_density(const GLParams &params,
                                    std::complex<double> s);
/// integral x^s e(x) dx by double-exponential quadrature (independent route).
std::complex<double> mellin_density_quadrature(const GLParams &params,
                                               std::complex<double> s);

/// Series of the kernel density
///   lambda(z) = Gamma(alpha beta+1) sum_k (-z)^k / (k! Gamma(alpha(beta-1) - alpha k + 1))
/// with coefficients cached at 259 bits. Requires alpha < 1.
class LambdaKernel {
public:
  explicit LambdaKernel(const GLParams &params, double z_max = 0.0);

  /// Raw series value with its cancellation diagnostics.
  SeriesResult evaluate(double z) const;
  /// Inverse Mellin transform of the closed-form kernel moments along the
  /// saddle abscissa; accurate where the series cancels catastrophically.
  double mellin_barnes(double z) const;
  /// Series up to series_limit(), Mellin-Barnes beyond; clamped at 0.
  double operator()(double z) const;
  double series_limit() const { return series_limit_; }
  /// Point beyond which lambda is below 1e-22 of lambda(0).
  double support_cutoff() const { return cutoff_; }
  const GLParams &params() const { return params_; }

private:
  GLParams params_;
  double cutoff_ = 0.0;
  double series_limit_ = 0.0;
  std::vector<Ext256> coeff_;
  std::vector<double> log_abs_;
};

double lambda_density(const GLParams &params, double z);

/// The Markov operator with kernel lambda and its adjoint from L^2(e) to
/// L^2(e^{-x}). Holds a lambda-weighted double-exponential rule.
class MarkovOperator {
public:
  explicit MarkovOperator(const GLParams &params, double h = 1.0 / 32);

  /// integral f(x y) lambda(y) dy
  double apply(const RealFn &f, double x) const;
  /// e^{x} integral f(x/v) e(x/v) lambda(v) dv / v
  double adjoint_apply(const RealFn &f, double x) const;
  const GLParams &params() const { return params_; }

private:
  template <class Integrand>
  double integrate(Integrand &&g) const;

  GLParams params_;
  // (y_i, w_i lambda(y_i)); empty in the classical identity case.
  std::vector<DENode> nodes_;
  bool identity_ = false;
  bool beta_kernel_ = false;
};

double markov_lambda_apply(const GLParams &params, const RealFn &f, double x);
double markov_lambda_adjoint_apply(const GLParams &params, const RealFn &f,
                                   double x);

} // namespace glspec
