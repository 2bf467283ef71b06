#pragma once
// Special functions: complex log-gamma, Gauss 2F1, the Wright-type series and
// the entire functions built on them, and partial Bell polynomials.

#include "glspec/core.hpp"
#include "glspec/series.hpp"

#include <complex>
#include <vector>

namespace glspec {

/// Principal branch of log Gamma(z). Throws PoleError at nonpositive integers.
std::complex<double> log_gamma(std::complex<double> z);

/// Gauss hypergeometric 2F1(a,b;c;z) for 0 <= z < 1. Uses the 1-z connection
/// formula above z = 1/2 when c-a-b is not an integer.
double gauss_2f1(double a, double b, double c, double z);

/// sum_k Gamma(k/alpha + n + beta + 1/alpha)/Gamma(k/alpha + beta + 1/alpha)
///       z^k / k!
SeriesResult wright_1psi1(const GLParams &params, int n, std::complex<double> z);

/// sum_k z^k / (Gamma(k/alpha + beta + 1/alpha) k!)
SeriesResult frak_I(const GLParams &params, std::complex<double> z);

/// Gamma(alpha beta + 1) sum_k z^k / (Gamma(alpha k + alpha beta + 1) k!)
SeriesResult cal_I(const GLParams &params, std::complex<double> z);

/// Partial Bell polynomials B_{k,j}(a_1, a_2, ...) with
/// a_i = Gamma(i - 1/alpha)/Gamma(-1/alpha), for 0 <= j <= k <= K.
class BellTable {
public:
  BellTable(double alpha, int K);

  int size() const { return K_; }
  double operator()(int k, int j) const { return to_double(at(k, j)); }
  const Ext256 &at(int k, int j) const;
  /// Argument sequence a_i, i >= 1.
  const Ext256 &argument(int i) const;

private:
  int K_;
  std::vector<Ext256> args_;
  std::vector<Ext256> table_;
};

/// Throws DomainError at alpha = 1 (the argument sequence degenerates;
/// callers use the Laguerre path there).
BellTable bell_table(const GLParams &params, int K);

} // namespace glspec
