#pragma once
// Quadrature against the invariant density, inner products, Gram matrices,
// Bessel sums and co-eigenfunction norms.

#include "glspec/core.hpp"
#include "glspec/density.hpp"

#include <Eigen/Dense>

#include <functional>
#include <span>
#include <vector>

namespace glspec {

enum class RuleKind {
  /// Gauss-Laguerre in u = x^{1/alpha} (exponent alpha*beta); exact for
  /// polynomials in u of degree <= 2m-1, hence for R_n R_m.
  gauss_u,
  /// Gauss rule in x built from the exact moments; exact for polynomials in
  /// x of degree <= 2m-1, hence for P_n P_m and x^k.
  gauss_x,
  /// Double-exponential rule in u; spectrally accurate for the mixed
  /// integrands P_n(u^alpha) R_m(u).
  double_exponential,
};

/// Nodes x_i and normalized weights w_i with integral f e ~ sum w_i f(x_i),
/// plus a coarser companion rule (order m/2, or every other DE node) for the
/// error estimate.
class QuadRule {
public:
  const Weight &weight() const { return weight_; }
  RuleKind kind() const { return kind_; }
  /// Number of nodes for Gauss rules, number of DE nodes otherwise.
  int order() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  std::span<const double> coarse_nodes() const { return coarse_nodes_; }
  std::span<const double> coarse_weights() const { return coarse_weights_; }

  friend QuadRule build_rule(const Weight &w, int m, RuleKind kind);
  friend QuadRule build_de_rule(const Weight &w, double h);

private:
  QuadRule(Weight w, RuleKind kind) : weight_(std::move(w)), kind_(kind) {}

  Weight weight_;
  RuleKind kind_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> coarse_nodes_;
  std::vector<double> coarse_weights_;
};

/// Gauss rule with m nodes (1 <= m <= 500) for the invariant or classical
/// weight. The auxiliary weight grows and has no Gauss rule here.
QuadRule build_rule(const Weight &w, int m, RuleKind kind = RuleKind::gauss_u);
QuadRule build_de_rule(const Weight &w, double h = 1.0 / 64);

struct InnerResult {
  double value = 0.0;
  /// |fine - coarse|.
  double error_estimate = 0.0;
};

/// <f, g> against the rule's weight. Throws QuadratureError when the
/// coarse and fine rules differ by more than tol * sum w|f g|.
InnerResult inner(const QuadRule &rule, const RealFn &f, const RealFn &g,
                  double tol = 1e-6);
InnerResult inner(const QuadRule &rule, const std::function<double(double)> &fg,
                  double tol = 1e-6);

struct GramReport {
  Eigen::MatrixXd gram;
  /// max |G - I|
  double max_deviation = 0.0;
};

/// G_{nm} = <P_n, R_m>, n, m <= N, by the rule.
GramReport gram_biorth(const GLParams &params, int N, const QuadRule &rule);
/// Same matrix from the moment algebra sum c_{n,k} r_{m,j} E[x^{k+j/alpha}]
/// at 259 bits; no quadrature involved.
GramReport gram_biorth_exact(const GLParams &params, int N);

struct BesselReport {
  /// sum_{k<=n} <f, P_k>^2 for n = 0..N.
  std::vector<double> partial_sums;
  double norm_sq = 0.0;
  bool holds = false;
};

BesselReport bessel_check(const GLParams &params, const RealFn &f, int N,
                          const QuadRule &rule);

struct NormPair {
  /// ||R_n|| in L^2(e).
  double invariant = 0.0;
  /// ||R_n e / e_aux|| in L^2(e_aux).
  double auxiliary = 0.0;
};

/// Default auxiliary weight parameters: gamma = alpha/2, eta = 1.
Weight default_auxiliary(const GLParams &params);

/// ||R_n|| exactly from the moment algebra; the auxiliary norm by adaptive
/// exp-sinh quadrature.
NormPair r_norm(const GLParams &params, int n);
NormPair r_norm(const GLParams &params, int n, const Weight &auxiliary);

class CoeigTable;

/// <f, R_n> for the polynomial f = sum_k coeffs[k] x^k from the moment
/// algebra at 259 bits (R_n taken from the table).
double inner_polynomial_r(const CoeigTable &table, std::span<const double> coeffs,
                          int n);

/// ||R_n|| by a Gauss rule in u (exact once m > n); cross-check of r_norm.
double r_norm_quadrature(const QuadRule &rule, int n);

} // namespace glspec
