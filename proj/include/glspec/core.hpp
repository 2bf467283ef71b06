#pragma once
// Parameters, derived constants, error types and the generic function type.

#include "glspec/real.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glspec {

//------------------------------------------------------------------------------
// Errors. Everything numerical derives from NumericalError so front ends can
// map it to a single exit code.

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class TruncationError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class ContourError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

//------------------------------------------------------------------------------

/// Validated (alpha, beta) pair with every derived constant precomputed.
/// Build through make_params; instances are immutable.
class GLParams {
public:
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  Precision precision() const { return precision_; }
  /// Smoothing parameter of the coefficient growth rate; default 0.01.
  double epsilon() const { return epsilon_; }

  /// alpha == 1: the classical Laguerre semigroup of order beta.
  bool classical() const { return alpha_ == 1.0; }

  /// Gamma(alpha*beta+alpha+1)/Gamma(alpha*beta+1), the first-order drift.
  double drift() const { return drift_; }
  /// beta + 1/alpha - 1, the power of x in the invariant density.
  double density_exponent() const { return density_exponent_; }
  /// alpha*beta - alpha + 1 (= alpha * density_exponent()).
  double scaled_density_exponent() const { return scaled_density_exponent_; }
  /// alpha*beta, the Laguerre exponent after the substitution u = x^{1/alpha}.
  double laguerre_exponent() const { return alpha_ * beta_; }
  /// -ln(2^alpha - 1): time beyond which the full-space expansion converges.
  double expansion_time() const { return expansion_time_; }
  /// (alpha+1) alpha^{-alpha/(alpha+1)}: exponential type of P_n growth.
  double poly_growth_rate() const { return poly_growth_rate_; }
  /// Growth rate of W_n derivatives near the origin (epsilon-smoothed).
  double coeig_growth_rate() const { return coeig_growth_rate_; }

  GLParams with_precision(Precision p) const {
    GLParams q = *this;
    q.precision_ = p;
    return q;
  }

  friend GLParams make_params(double alpha, double beta, Precision precision,
                              double epsilon);

private:
  GLParams() = default;

  double alpha_ = 1.0;
  double beta_ = 0.0;
  Precision precision_ = Precision::binary64;
  double epsilon_ = 0.01;
  double drift_ = 1.0;
  double density_exponent_ = 0.0;
  double scaled_density_exponent_ = 1.0;
  double expansion_time_ = 0.0;
  double poly_growth_rate_ = 2.0;
  double coeig_growth_rate_ = 2.0;
};

/// Throws DomainError unless alpha in (0,1] and beta >= 1 - 1/alpha.
GLParams make_params(double alpha, double beta,
                     Precision precision = Precision::binary64,
                     double epsilon = 0.01);

/// Gamma(alpha s + alpha beta + 1)/Gamma(alpha s + alpha beta + 1 - alpha).
std::complex<double> phi(const GLParams &params, std::complex<double> s);
double phi(const GLParams &params, double s);

/// Region constants of the uniform bounds on W_n.
struct AsympConstants {
  double C_bar = 0.0;
  double B_bar = 0.0;
  double A_bar = 0.0;
  double B_cal = 0.0;
  double K_bar = 0.0;
};

AsympConstants asymp_constants(double alpha, double epsilon = 0.01);

//------------------------------------------------------------------------------

/// A real function on (0, inf), optionally carrying derivatives and, when it
/// is a polynomial, its monomial coefficients (which enable exact routes).
class RealFn {
public:
  /// eval(x, order) returns the order-th derivative; order 0 is the value.
  using Eval = std::function<double(double, int)>;

  RealFn(std::string description, Eval eval, int max_order = 0);

  double operator()(double x) const { return eval_(x, 0); }
  double derivative(double x, int order) const;
  int max_order() const { return max_order_; }
  const std::string &description() const { return description_; }

  /// Monomial coefficients when the function is a known polynomial.
  const std::optional<std::vector<double>> &coefficients() const {
    return coeffs_;
  }

  /// Copy that also advertises the given monomial coefficients.
  RealFn with_coefficients(std::vector<double> coeffs) const;

  static RealFn polynomial(std::vector<double> coeffs, std::string description);
  static RealFn constant(double c);
  static RealFn monomial(int k);
  /// Classical Laguerre polynomial of order beta and degree n.
  static RealFn laguerre(int n, double beta);

private:
  std::string description_;
  Eval eval_;
  int max_order_ = 0;
  std::optional<std::vector<double>> coeffs_;
};

} // namespace glspec
