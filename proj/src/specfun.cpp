#include "glspec/specfun.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace glspec {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Valid for Re z >= 1/2.
std::complex<double> lanczos_log_gamma(std::complex<double> z) {
  z -= 1.0;
  std::complex<double> x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (z + static_cast<double>(i));
  }
  const std::complex<double> t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi_v<double>()) + (z + 0.5) * std::log(t) - t +
         std::log(x);
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && is_gamma_pole(z.real())) {
    std::ostringstream msg;
    msg << "log_gamma: pole at " << z.real();
    throw PoleError(msg.str());
  }
  if (z.real() >= 0.5) {
    return lanczos_log_gamma(z);
  }
  // Shift right with the recurrence. Every z + j shares Im z, so the sum of
  // principal logs never wraps and stays on the principal branch.
  const auto m = static_cast<long>(std::ceil(0.5 - z.real()));
  NeumaierSum<double> re;
  NeumaierSum<double> im;
  for (long j = 0; j < m; ++j) {
    const std::complex<double> l = std::log(z + static_cast<double>(j));
    re.add(l.real());
    im.add(l.imag());
  }
  const std::complex<double> shifted =
      lanczos_log_gamma(z + static_cast<double>(m));
  return shifted - std::complex<double>(re.value(), im.value());
}

//------------------------------------------------------------------------------

namespace {

double series_2f1(double a, double b, double c, double z) {
  SeriesOptions opts;
  opts.min_terms =
      10 + static_cast<int>(std::max({std::abs(a), std::abs(b), std::abs(c)}));
  double t = 1.0;
  auto term = [&](int k) {
    if (k > 0) {
      const double km = k - 1.0;
      t *= (a + km) * (b + km) / ((c + km) * k) * z;
    }
    return t;
  };
  const auto acc = sum_series<double>(term, opts);
  if (!acc.converged) {
    throw ConvergenceError("gauss_2f1: series did not converge");
  }
  return acc.sum;
}

bool near_integer(double v) {
  return std::abs(v - std::round(v)) < 1e-12;
}

} // namespace

double gauss_2f1(double a, double b, double c, double z) {
  if (is_gamma_pole(c)) {
    throw DomainError("gauss_2f1: c is a nonpositive integer");
  }
  if (!(z > -1.0 && z < 1.0)) {
    throw DomainError("gauss_2f1: z must lie in (-1, 1)");
  }
  if (z == 0.0) {
    return 1.0;
  }
  const double s = c - a - b;
  if (z <= 0.5 || near_integer(s)) {
    return series_2f1(a, b, c, z);
  }
  const double w = 1.0 - z;
  // Connection coefficients; a zero reciprocal gamma kills its term.
  const double first_coeff = gamma_ratio(c, c - a) * gamma_ratio(s, c - b);
  const double second_coeff = gamma_ratio(c, a) * gamma_ratio(-s, b);
  double value = first_coeff * series_2f1(a, b, 1.0 - s, w);
  if (second_coeff != 0.0) {
    value += second_coeff * std::pow(w, s) *
             series_2f1(c - a, c - b, 1.0 + s, w);
  }
  return value;
}

//------------------------------------------------------------------------------

namespace {

// Power-series driver shared by the three entire functions. coeff(k, T{})
// returns the k-th coefficient without the z^k/k! factor.
template <class Coeff>
SeriesResult entire_series(Precision precision, std::complex<double> z,
                           int min_terms, Coeff &&coeff) {
  SeriesOptions opts;
  opts.min_terms = min_terms;
  if (z.imag() != 0.0) {
    // Complex arguments stay in binary64; the condition estimate is reported.
    std::complex<double> zk = 1.0;
    auto term = [&](int k) {
      if (k > 0) {
        zk *= z / static_cast<double>(k);
      }
      return zk * coeff(k, double{});
    };
    return detail::to_result(sum_series<std::complex<double>>(term, opts),
                             Precision::binary64);
  }
  const double x = z.real();
  auto kernel = [&](auto tag) {
    using T = decltype(tag);
    T zk = 1;
    const T xt = T(x);
    auto term = [&](int k) {
      if (k > 0) {
        zk *= xt / T(k);
      }
      return zk * coeff(k, T{});
    };
    return sum_series<T>(term, opts);
  };
  return run_with_policy(precision, kernel);
}

} // namespace

SeriesResult wright_1psi1(const GLParams &params, int n,
                          std::complex<double> z) {
  if (n < 0) {
    throw DomainError("wright_1psi1: n must be nonnegative");
  }
  const double alpha = params.alpha();
  const double base = params.density_exponent() + 1.0;
  // Gamma(x + n)/Gamma(x) is the rising factorial (x)_n.
  auto coeff = [&](int k, auto tag) {
    using T = decltype(tag);
    const T x = T(k) / T(alpha) + T(base);
    T r = 1;
    for (int j = 0; j < n; ++j) {
      r *= x + T(j);
    }
    return r;
  };
  const int min_terms =
      5 + static_cast<int>(std::abs(z) + static_cast<double>(n) / alpha);
  auto r = entire_series(params.precision(), z, min_terms, coeff);
  if (!r.converged) {
    throw ConvergenceError("wright_1psi1: term cap reached");
  }
  return r;
}

SeriesResult frak_I(const GLParams &params, std::complex<double> z) {
  const double alpha = params.alpha();
  const double base = params.density_exponent() + 1.0;
  auto coeff = [&](int k, auto tag) {
    using T = decltype(tag);
    return rgamma(T(k) / T(alpha) + T(base));
  };
  auto r = entire_series(params.precision(), z,
                         5 + static_cast<int>(std::abs(z)), coeff);
  if (!r.converged) {
    throw ConvergenceError("frak_I: term cap reached");
  }
  return r;
}

SeriesResult cal_I(const GLParams &params, std::complex<double> z) {
  const double alpha = params.alpha();
  const double ab1 = alpha * params.beta() + 1.0;
  auto coeff = [&](int k, auto tag) {
    using T = decltype(tag);
    return gamma_ratio(T(ab1), T(alpha) * T(k) + T(ab1));
  };
  auto r = entire_series(params.precision(), z,
                         5 + static_cast<int>(std::abs(z)), coeff);
  if (!r.converged) {
    throw ConvergenceError("cal_I: term cap reached");
  }
  return r;
}

//------------------------------------------------------------------------------

BellTable::BellTable(double alpha, int K) : K_(K) {
  if (K < 0) {
    throw DomainError("bell_table: K must be nonnegative");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("bell_table: requires alpha in (0,1)");
  }
  const Ext256 inv_alpha = Ext256(1) / Ext256(alpha);
  // a_1 = -1/alpha, a_{i+1} = a_i (i - 1/alpha): the ratio never touches a
  // pole even when Gamma(-1/alpha) itself is infinite.
  args_.assign(static_cast<std::size_t>(K) + 2, Ext256(0));
  args_[1] = -inv_alpha;
  for (int i = 1; i + 1 <= K; ++i) {
    args_[i + 1] = args_[i] * (Ext256(i) - inv_alpha);
  }
  const auto idx = [K](int k, int j) {
    return static_cast<std::size_t>(k) * (K + 1) + j;
  };
  table_.assign(static_cast<std::size_t>(K + 1) * (K + 1), Ext256(0));
  table_[idx(0, 0)] = 1;
  // Binomials C(k-1, i-1) built row by row.
  std::vector<Ext256> binom(static_cast<std::size_t>(K) + 1, Ext256(0));
  for (int k = 1; k <= K; ++k) {
    // binom[i] = C(k-1, i) after this update.
    if (k == 1) {
      binom[0] = 1;
    } else {
      for (int i = k - 1; i >= 1; --i) {
        binom[i] += binom[i - 1];
      }
    }
    for (int j = 1; j <= k; ++j) {
      Ext256 acc = 0;
      for (int i = 1; i <= k - j + 1; ++i) {
        const Ext256 &prev = table_[idx(k - i, j - 1)];
        if (prev != 0) {
          acc += binom[i - 1] * args_[i] * prev;
        }
      }
      table_[idx(k, j)] = acc;
    }
  }
}

const Ext256 &BellTable::at(int k, int j) const {
  if (k < 0 || k > K_ || j < 0 || j > k) {
    throw IndexError("BellTable index out of range");
  }
  return table_[static_cast<std::size_t>(k) * (K_ + 1) + j];
}

const Ext256 &BellTable::argument(int i) const {
  if (i < 1 || i > K_) {
    throw IndexError("BellTable argument index out of range");
  }
  return args_[i];
}

BellTable bell_table(const GLParams &params, int K) {
  if (params.classical()) {
    throw DomainError(
        "bell_table: alpha = 1 has no Bell form; use the Laguerre path");
  }
  return BellTable(params.alpha(), K);
}

} // namespace glspec
