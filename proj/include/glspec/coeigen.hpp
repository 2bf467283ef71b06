#pragma once
// Co-eigenfunctions R_n and the densities W_n = R_n e, by three
// representations: the polynomial in u = x^{1/alpha} (Bell form), the Wright
// series and the Mellin-Barnes integral.

#include "glspec/core.hpp"
#include "glspec/series.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace glspec {

enum class CoeigPath { bell_poly, wright_series, mellin_barnes };

const char *to_string(CoeigPath path);

/// A value together with how it was obtained.
struct CoeigValue {
  double value = 0.0;
  /// Cancellation estimate sum|terms| / |value| of the chosen path.
  double condition = 1.0;
  Precision precision_used = Precision::binary64;
  CoeigPath path = CoeigPath::bell_poly;
};

/// Contour for the Mellin-Barnes path. Unset fields are chosen
/// automatically: the abscissa at the saddle of the integrand (never below
/// max(1, 1.5 - beta - 1/alpha)), the step from the strip width, the height
/// from the integrand's decay.
struct Contour {
  std::optional<double> abscissa;
  std::optional<double> step;
  std::optional<double> height;
};

/// Coefficients r_{n,j} of R_n(x) = sum_j r_{n,j} u^j, u = x^{1/alpha}, for
/// n <= degree(), held at 259 bits. At alpha = 1 these are the classical
/// Laguerre coefficients.
class CoeigTable {
public:
  CoeigTable(const GLParams &params, int degree);

  const GLParams &params() const { return params_; }
  int degree() const { return degree_; }
  const Ext256 &coeff_ext(int n, int j) const;
  double coeff(int n, int j) const;
  /// Row n as a vector (length n+1).
  std::vector<Ext256> row(int n) const;

private:
  GLParams params_;
  int degree_;
  std::vector<std::vector<Ext256>> rows_;
};

/// R_n(x) from the polynomial in u, with escalation on cancellation.
CoeigValue r_eval_bell(const CoeigTable &table, int n, double x);
double r_eval_bell(const GLParams &params, int n, double x);

/// q-th derivative of W_n by the Wright series.
CoeigValue w_eval_wright(const GLParams &params, int n, int q, double x);

/// W_0(x), ..., W_N(x) from one pass over the Wright series.
std::vector<double> w_eval_wright_all(const GLParams &params, int N, double x);

/// q-th derivative of W_n by trapezoidal Mellin-Barnes inversion.
CoeigValue w_eval_mellin(const GLParams &params, int n, double x,
                         const Contour &contour = {}, int q = 0);

/// Evaluator that caches the coefficient table and picks the path by the
/// cancellation diagnostic: the u-polynomial while it is well conditioned,
/// then the Wright series, then Mellin-Barnes.
class CoeigEvaluator {
public:
  CoeigEvaluator(const GLParams &params, int degree);

  const CoeigTable &table() const { return table_; }
  CoeigValue w(int n, double x) const;
  CoeigValue r(int n, double x) const;
  const GLParams &params() const { return table_.params(); }

private:
  CoeigTable table_;
};

double w_eval(const GLParams &params, int n, double x);

/// R_n as a RealFn (values only), sharing the evaluator's table.
RealFn coeig_function(std::shared_ptr<const CoeigEvaluator> evaluator, int n);

struct CrudeBoundReport {
  int n = 0;
  int order = 0;
  double x = 0.0;
  double value = 0.0;
  double log_envelope = 0.0;
  double ratio = 0.0;
};

/// |W_n^{(q)}(x)| / (x^{beta+1/alpha-q} n^{|beta+1/alpha-1-q|+2}
/// e^{rate (n x)^{1/(alpha+1)}}). Throws DomainError unless
/// 0 < x < e^{-2 alpha}((1+alpha)/alpha)^alpha n^alpha (n = 0 is exempt).
CrudeBoundReport w_crude_bound_check(const GLParams &params, int n, int q,
                                     double x);

} // namespace glspec
