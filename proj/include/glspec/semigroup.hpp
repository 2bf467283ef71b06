#pragma once
// The generator, the spectral expansion of the semigroup, its heat kernel,
// the classical Laguerre semigroup, the intertwining check and the
// self-similar kernel.

#include "glspec/core.hpp"
#include "glspec/eigen.hpp"
#include "glspec/quad.hpp"

#include <memory>
#include <span>
#include <vector>

namespace glspec {

/// g(y) = Gamma(alpha)/(beta+1/alpha+1) y^{beta+1/alpha+1}
///        2F1(alpha(beta+1)+1, alpha+1; alpha(beta+1)+2; y^{1/alpha}).
double generator_kernel(const GLParams &params, double y);

/// (d - x) f'(x) + (sin(alpha pi)/pi) x integral_0^1 f''(xy) g(y) dy, or
/// x f'' + (beta+1-x) f' at alpha = 1. Derivatives the RealFn does not carry
/// are taken by central differences.
double generator_apply(const GLParams &params, const RealFn &f, double x);

/// |(sin(alpha pi)/pi) k(k-1) integral y^{k-2} g - (k Phi(k) - k d)|.
double generator_moment_identity_check(const GLParams &params, int k);

enum class ExpansionRegime {
  /// Generic f in L^2(e); convergence needs t > expansion_time().
  full_space,
  /// f known to lie in a smaller space (range of the Markov operator, or the
  /// auxiliary weighted space); any t > 0.
  small_space,
};

struct ExpandOptions {
  double tol = 1e-10;
  ExpansionRegime regime = ExpansionRegime::full_space;
  /// The tail is measured by sup |P_n| on [0, window].
  double window = 10.0;
  int max_terms = 200;
  /// Terms computed before the stopping test may fire when f carries no
  /// coefficients (a known polynomial runs at least to its degree).
  int min_terms = 16;
};

/// a_n = e^{-nt} <f, R_n>, truncated once |a_n| sup|P_n| (plus the
/// quadrature error of a_n) stays below tol for three consecutive n.
struct SpectralExpansion {
  GLParams params;
  double t = 0.0;
  std::vector<double> coeffs{};
  /// Highest index kept.
  int N = 0;
  double tail_estimate = 0.0;
  ExpansionRegime regime = ExpansionRegime::full_space;
  /// full_space requested with t <= expansion_time(): computed anyway.
  bool regime_violation = false;
  /// Coefficients came from exact moment algebra (f a known polynomial).
  bool exact_coefficients = false;
  std::shared_ptr<const PolySeq> polys{};
};

/// Throws TruncationError when max_terms is reached with the tail above tol.
SpectralExpansion expand(const GLParams &params, const RealFn &f, double t,
                         const QuadRule &rule, const ExpandOptions &opts = {});

/// sum_n (-n)^k a_n P_n^{(p)}(x): the k-th time and p-th space derivative.
double evaluate_expansion(const SpectralExpansion &expansion, double x,
                          int k = 0, int p = 0);

/// The expansion as a RealFn of x (derivatives up to 8).
RealFn expansion_function(const SpectralExpansion &expansion);

struct HeatKernelOptions {
  int k = 0;
  int p = 0;
  int q = 0;
  /// Stop after three terms below tol * max(1, |partial sum|), so values
  /// much smaller than 1 are resolved only to about tol absolutely.
  double tol = 1e-12;
  int max_terms = 200;
};

/// d^k/dt^k d^p/dx^p d^q/dy^q of P_t(x, y) =
/// sum_n e^{-nt} W_n(y) P_n(x). Throws TruncationError.
double heat_kernel(const GLParams &params, double t, double x, double y,
                   const HeatKernelOptions &opts = {});

/// Same series at every y in ys (shares the coefficient tables).
std::vector<double> heat_kernel_row(const GLParams &params, double t, double x,
                                    std::span<const double> ys,
                                    const HeatKernelOptions &opts = {});

/// Q_t f for the Laguerre semigroup of order beta, from its orthogonal
/// expansion; the coefficients are computed once.
RealFn laguerre_semigroup_fn(double beta, double t, const RealFn &f,
                             double tol = 1e-12);
double laguerre_semigroup(double beta, double t, const RealFn &f, double x,
                          double tol = 1e-12);

struct IntertwineReport {
  std::vector<double> lhs;
  std::vector<double> rhs;
  double max_discrepancy = 0.0;
};

/// P_t(Lambda f) by the spectral expansion against Lambda Q_t f by the
/// classical expansion followed by the Markov operator, on the grid xs.
IntertwineReport intertwine_check(const GLParams &params, const RealFn &f,
                                  double t, std::span<const double> xs,
                                  const QuadRule &rule);

/// K_t(x, y) = sum_n (1+t)^{-n-1} W_n(y/(1+t)) P_n(x).
double selfsimilar_kernel(const GLParams &params, double t, double x, double y,
                          double tol = 1e-12);

} // namespace glspec
