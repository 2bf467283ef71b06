#pragma once
// Eigenpolynomials P_n of the semigroup generator.

#include "glspec/core.hpp"

#include <vector>

namespace glspec {

/// Coefficients c_{n,k} = (-1)^k C(n,k) Gamma(ab+1)/Gamma(ak+ab+1) of P_n,
/// 0 <= k <= n <= degree(), kept at 259 bits and as sign/log-magnitude.
class PolySeq {
public:
  PolySeq(const GLParams &params, int degree);

  const GLParams &params() const { return params_; }
  int degree() const { return degree_; }

  /// Rounded coefficient.
  double coeff(int n, int k) const;
  Ext256 coeff_ext(int n, int k) const;
  int coeff_sign(int n, int k) const;
  double log_abs_coeff(int n, int k) const;
  /// Monomial coefficients of P_n, rounded.
  std::vector<double> coefficients(int n) const;

  /// Gamma(ab+1)/Gamma(ak+ab+1), the moment reciprocal shared by every n.
  const Ext256 &base(int k) const;

private:
  void check(int n, int k) const;

  GLParams params_;
  int degree_;
  std::vector<Ext256> base_;
  std::vector<double> log_base_;
  // Row n holds log C(n, k) for k <= n.
  std::vector<std::vector<double>> log_binom_;
};

PolySeq p_coeffs(const GLParams &params, int N);

/// p-th derivative of P_n at x. Uses P_n^{(p)} = (-1)^p n!/(n-p)! g_p P_{n-p}
/// with beta raised by p, evaluated by compensated Horner on double-double
/// coefficients, or at 133/259 bits when n > 60 or the sum cancels heavily.
/// At alpha = 1 the classical three-term recurrence is used.
double p_eval(const PolySeq &seq, int n, double x, int p = 0);

/// P_n as a RealFn with all derivatives and its monomial coefficients.
RealFn eigen_function(const PolySeq &seq, int n);

/// |e^t I(xt) - sum_{n<=N} P_n(-x) t^n/n!| for the generating function.
double jensen_check(const GLParams &params, double x, double t, int N);

struct GrowthReport {
  int n = 0;
  double x = 0.0;
  int order = 0;
  double value = 0.0;
  /// log of n^{p+1/2} exp(rate (n|x|)^{1/(alpha+1)}).
  double log_envelope = 0.0;
  double ratio = 0.0;
};

GrowthReport p_growth_bound_check(const GLParams &params, int n, double x,
                                  int p);

} // namespace glspec
