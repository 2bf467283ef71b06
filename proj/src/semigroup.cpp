#include "glspec/semigroup.hpp"

#include "glspec/coeigen.hpp"
#include "glspec/density.hpp"
#include "glspec/specfun.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <optional>

namespace glspec {

namespace {

// g(y) (1 - y^{1/alpha})^alpha given the gap w = 1 - y. Above z = 1/2 the
// 2F1 is continued through the 1 - z connection formula, where c - a - b =
// -alpha, so the (1-z)^{-alpha} singularity is removed analytically.
double scaled_kernel(const GLParams &params, double w) {
  const double a = params.alpha();
  const double b = params.beta();
  const double y = 1.0 - w;
  if (!(y > 0.0)) {
    return 0.0;
  }
  const double gap = -std::expm1(std::log1p(-w) / a); // 1 - z
  const double z = 1.0 - gap;
  const double pa = a * (b + 1.0) + 1.0;
  const double pb = a + 1.0;
  const double pc = a * (b + 1.0) + 2.0;
  const double power = b + 1.0 / a + 1.0;
  const double prefactor = std::tgamma(a) / power * std::exp(power * std::log(y));
  double core = 0.0;
  if (z <= 0.5) {
    core = gauss_2f1(pa, pb, pc, z) * std::pow(gap, a);
  } else {
    const double first = std::exp(std::lgamma(pc) - std::lgamma(a * b + 1.0)) *
                         std::tgamma(-a);
    const double second =
        std::exp(std::lgamma(pc) - std::lgamma(pa) - std::lgamma(pb)) * std::tgamma(a);
    core = first * std::pow(gap, a) * gauss_2f1(pa, pb, 1.0 + a, gap) +
           second * gauss_2f1(1.0, a * b + 1.0, 1.0 - a, gap);
  }
  return prefactor * core;
}

// integral_0^1 h(y) g(y) dy after y = 1 - v^{1/(1-alpha)}, which absorbs the
// (1-y)^{-alpha} behaviour of g at y = 1.
template <class H>
double kernel_integral(const GLParams &params, H &&h) {
  const double a = params.alpha();
  auto integrand = [&](double v) {
    const double w = std::pow(v, 1.0 / (1.0 - a));
    const double y = 1.0 - w;
    if (!(y > 0.0) || !(w > 0.0)) {
      return 0.0;
    }
    const double gap = -std::expm1(std::log1p(-w) / a);
    return h(y) * scaled_kernel(params, w) * std::pow(w / gap, a) / (1.0 - a);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0;
  double l1 = 0.0;
  const double value = integrator.integrate(integrand, 0.0, 1.0, 1e-12, &err, &l1);
  if (!std::isfinite(value) || err > 1e-9 * std::max(l1, 1e-300)) {
    throw QuadratureError("generator: kernel integral did not converge");
  }
  return value;
}

double derivative_of(const RealFn &f, double x, int order) {
  if (order <= f.max_order()) {
    return f.derivative(x, order);
  }
  const double h = (order == 1 ? 1e-5 : 1e-4) * std::max(1.0, x);
  const double lo = std::max(x - h, 0.5 * x);
  const double step = x - lo;
  if (order == 1) {
    return (f(x + step) - f(x - step)) / (2.0 * step);
  }
  return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
}

// sup |P_n| on [0, window] sampled at 17 points.
double window_sup(const PolySeq &seq, int n, double window) {
  double sup = 0.0;
  for (int i = 0; i <= 16; ++i) {
    sup = std::max(sup, std::abs(p_eval(seq, n, window * i / 16.0)));
  }
  return sup;
}

// Coefficient tables that grow on demand: degree 48 first, then the cap.
class GrowingTables {
public:
  GrowingTables(const GLParams &params, int cap) : params_(params), cap_(cap) {}

  const CoeigEvaluator &coeig(int n) {
    if (!coeig_ || coeig_->table().degree() < n) {
      coeig_.emplace(params_, n <= 48 ? std::min(48, cap_) : cap_);
    }
    return *coeig_;
  }
  const PolySeq &polys(int n) {
    if (!polys_ || polys_->degree() < n) {
      polys_.emplace(params_, n <= 48 ? std::min(48, cap_) : cap_);
    }
    return *polys_;
  }

private:
  GLParams params_;
  int cap_;
  std::optional<CoeigEvaluator> coeig_;
  std::optional<PolySeq> polys_;
};

// q-th derivative of W_n at y: the automatic evaluator for q = 0, else the
// Wright series with the Mellin-Barnes fallback.
double coeig_density(const GLParams &params, GrowingTables &tables, int n, int q,
                     double y) {
  if (q == 0) {
    return tables.coeig(n).w(n, y).value;
  }
  try {
    return w_eval_wright(params, n, q, y).value;
  } catch (const ConvergenceError &) {
    return w_eval_mellin(params, n, y, {}, q).value;
  }
}

double time_factor(int n, int k) { return k == 0 ? 1.0 : std::pow(-double(n), k); }

} // namespace

//------------------------------------------------------------------------------

double generator_kernel(const GLParams &params, double y) {
  if (params.classical()) {
    throw DomainError("generator_kernel: not defined at alpha = 1");
  }
  if (!(y > 0.0 && y < 1.0)) {
    throw DomainError("generator_kernel: y must lie in (0, 1)");
  }
  const double w = 1.0 - y;
  const double gap = -std::expm1(std::log1p(-w) / params.alpha());
  return scaled_kernel(params, w) * std::pow(gap, -params.alpha());
}

double generator_apply(const GLParams &params, const RealFn &f, double x) {
  if (!(x >= 0.0)) {
    throw DomainError("generator_apply: x must be nonnegative");
  }
  const double d1 = derivative_of(f, x, 1);
  if (x == 0.0) {
    return params.drift() * d1;
  }
  if (params.classical()) {
    return x * derivative_of(f, x, 2) + (params.beta() + 1.0 - x) * d1;
  }
  const double a = params.alpha();
  const double integral =
      kernel_integral(params, [&](double y) { return derivative_of(f, x * y, 2); });
  return (params.drift() - x) * d1 + std::sin(a * pi_v<double>()) / pi_v<double>() * x * integral;
}

double generator_moment_identity_check(const GLParams &params, int k) {
  if (k < 1) {
    throw DomainError("generator_moment_identity_check: k must be >= 1");
  }
  const double rhs = k * phi(params, double(k)) - k * params.drift();
  if (params.classical()) {
    return std::abs(double(k) * (k - 1) - rhs);
  }
  if (k == 1) {
    return std::abs(rhs);
  }
  const double a = params.alpha();
  const double integral = kernel_integral(
      params, [&](double y) { return k == 2 ? 1.0 : std::pow(y, k - 2); });
  const double lhs =
      std::sin(a * pi_v<double>()) / pi_v<double>() * k * (k - 1) * integral;
  return std::abs(lhs - rhs);
}

//------------------------------------------------------------------------------

SpectralExpansion expand(const GLParams &params, const RealFn &f, double t,
                         const QuadRule &rule, const ExpandOptions &opts) {
  if (!(t >= 0.0)) {
    throw DomainError("expand: t must be nonnegative");
  }
  if (opts.max_terms < 1 || opts.max_terms > 500) {
    throw DomainError("expand: max_terms must be in [1, 500]");
  }
  const GLParams &rp = rule.weight().params();
  if (rp.alpha() != params.alpha() || rp.beta() != params.beta()) {
    throw DomainError("expand: rule built for other parameters");
  }
  SpectralExpansion out{.params = params};
  out.t = t;
  out.regime = opts.regime;
  out.regime_violation =
      opts.regime == ExpansionRegime::full_space && t <= params.expansion_time();
  out.exact_coefficients = f.coefficients().has_value();

  GrowingTables tables(params, opts.max_terms);
  std::vector<double> fine_f;
  std::vector<double> coarse_f;
  if (!out.exact_coefficients) {
    for (double x : rule.nodes()) {
      fine_f.push_back(f(x));
    }
    for (double x : rule.coarse_nodes()) {
      coarse_f.push_back(f(x));
    }
  }

  const int min_terms =
      out.exact_coefficients ? static_cast<int>(f.coefficients()->size()) : opts.min_terms;
  int quiet = 0;
  std::vector<double> recent;
  for (int n = 0; n < opts.max_terms; ++n) {
    const CoeigEvaluator &ev = tables.coeig(n);
    double value = 0.0;
    double error = 0.0;
    if (out.exact_coefficients) {
      value = inner_polynomial_r(ev.table(), *f.coefficients(), n);
    } else {
      NeumaierSum<double> fine;
      NeumaierSum<double> coarse;
      double l1 = 0.0;
      const auto nodes = rule.nodes();
      const auto weights = rule.weights();
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double term = weights[i] * fine_f[i] * ev.r(n, nodes[i]).value;
        fine.add(term);
        l1 += std::abs(term);
      }
      const auto cn = rule.coarse_nodes();
      const auto cw = rule.coarse_weights();
      for (std::size_t i = 0; i < cn.size(); ++i) {
        coarse.add(cw[i] * coarse_f[i] * ev.r(n, cn[i]).value);
      }
      value = fine.value();
      error = std::abs(value - coarse.value());
      if (!std::isfinite(value) || error > 1e-6 * l1) {
        throw QuadratureError("expand: fine and coarse rules disagree at n = " +
                              std::to_string(n));
      }
    }
    const double decay = std::exp(-n * t);
    out.coeffs.push_back(decay * value);
    const double sup = window_sup(tables.polys(n), n, opts.window);
    const double tail = decay * (std::abs(value) + error) * sup;
    recent.push_back(tail);
    quiet = tail < opts.tol ? quiet + 1 : 0;
    if (quiet >= 3 && n >= min_terms) {
      out.N = n;
      out.tail_estimate = recent[n] + recent[n - 1] + recent[n - 2];
      out.polys = std::make_shared<const PolySeq>(params, n);
      return out;
    }
  }
  throw TruncationError("expand: tail above tolerance after " +
                        std::to_string(opts.max_terms) + " terms");
}

double evaluate_expansion(const SpectralExpansion &expansion, double x, int k,
                          int p) {
  if (!(x >= 0.0)) {
    throw DomainError("evaluate_expansion: x must be nonnegative");
  }
  if (k < 0 || p < 0) {
    throw DomainError("evaluate_expansion: derivative orders must be nonnegative");
  }
  NeumaierSum<double> acc;
  for (int n = std::max(p, k > 0 ? 1 : 0); n <= expansion.N; ++n) {
    const double a = expansion.coeffs[n];
    if (a == 0.0) {
      continue;
    }
    acc.add(time_factor(n, k) * a * p_eval(*expansion.polys, n, x, p));
  }
  return acc.value();
}

RealFn expansion_function(const SpectralExpansion &expansion) {
  auto shared = std::make_shared<const SpectralExpansion>(expansion);
  RealFn fn("P_t f", [shared](double x, int order) {
    return evaluate_expansion(*shared, x, 0, order);
  }, 8);
  if (!expansion.exact_coefficients) {
    return fn;
  }
  // Polynomial f gives a polynomial P_t f: collect its monomial coefficients.
  std::vector<double> coeffs(expansion.N + 1, 0.0);
  for (int n = 0; n <= expansion.N; ++n) {
    for (int j = 0; j <= n; ++j) {
      coeffs[j] += expansion.coeffs[n] * expansion.polys->coeff(n, j);
    }
  }
  return fn.with_coefficients(std::move(coeffs));
}

//------------------------------------------------------------------------------

namespace {

// sum_{n >= p} (-n)^k r^n W_n^{(q)}(y) P_n^{(p)}(x) with the same stopping rule
// for every y; P_n^{(p)}(x) is computed once.
std::vector<double> kernel_series(const GLParams &params, double ratio, double x,
                                  std::span<const double> ys,
                                  const HeatKernelOptions &opts,
                                  bool wright_batch) {
  if (opts.k < 0 || opts.p < 0 || opts.q < 0) {
    throw DomainError("heat kernel: derivative orders must be nonnegative");
  }
  GrowingTables tables(params, opts.max_terms);
  std::vector<double> pvals;
  auto p_at = [&](int n) {
    while (static_cast<int>(pvals.size()) <= n) {
      const int m = static_cast<int>(pvals.size());
      pvals.push_back(p_eval(tables.polys(m), m, x, opts.p));
    }
    return pvals[n];
  };
  std::vector<double> out;
  out.reserve(ys.size());
  for (double y : ys) {
    if (!(y > 0.0)) {
      throw DomainError("heat kernel: y must be positive");
    }
    std::vector<double> batch;
    if (wright_batch && opts.q == 0) {
      try {
        batch = w_eval_wright_all(params, opts.max_terms - 1, y);
      } catch (const ConvergenceError &) {
        batch.clear();
      }
    }
    NeumaierSum<double> acc;
    int quiet = 0;
    bool done = false;
    double rn = std::pow(ratio, opts.p);
    for (int n = opts.p; n < opts.max_terms; ++n, rn *= ratio) {
      const double w = batch.empty() ? coeig_density(params, tables, n, opts.q, y)
                                     : batch[n];
      const double term = time_factor(n, opts.k) * rn * w * p_at(n);
      acc.add(term);
      const double scale = std::max(1.0, std::abs(acc.value()));
      quiet = std::abs(term) < opts.tol * scale ? quiet + 1 : 0;
      if (quiet >= 3 && n > opts.p + 3) {
        done = true;
        break;
      }
    }
    if (!done) {
      throw TruncationError("heat kernel: series did not settle within " +
                            std::to_string(opts.max_terms) + " terms");
    }
    out.push_back(acc.value());
  }
  return out;
}

} // namespace

double heat_kernel(const GLParams &params, double t, double x, double y,
                   const HeatKernelOptions &opts) {
  const double ys[] = {y};
  return heat_kernel_row(params, t, x, ys, opts).front();
}

std::vector<double> heat_kernel_row(const GLParams &params, double t, double x,
                                    std::span<const double> ys,
                                    const HeatKernelOptions &opts) {
  if (!(t > 0.0)) {
    throw DomainError("heat_kernel: t must be positive");
  }
  if (!(x >= 0.0)) {
    throw DomainError("heat_kernel: x must be nonnegative");
  }
  return kernel_series(params, std::exp(-t), x, ys, opts, false);
}

double selfsimilar_kernel(const GLParams &params, double t, double x, double y,
                          double tol) {
  if (!(t > 0.0)) {
    throw DomainError("selfsimilar_kernel: t must be positive");
  }
  if (!(y > 0.0) || !(x >= 0.0)) {
    throw DomainError("selfsimilar_kernel: need x >= 0 and y > 0");
  }
  HeatKernelOptions opts;
  opts.tol = tol;
  const double scale = 1.0 + t;
  const double ys[] = {y / scale};
  return kernel_series(params, 1.0 / scale, x, ys, opts, true).front() / scale;
}

//------------------------------------------------------------------------------

namespace {

// L_0^{(b)}(x), ..., L_N^{(b)}(x) by the three-term recurrence.
std::vector<double> laguerre_values(int N, double b, double x) {
  std::vector<double> v(N + 1);
  v[0] = 1.0;
  if (N >= 1) {
    v[1] = 1.0 + b - x;
  }
  for (int n = 1; n < N; ++n) {
    v[n + 1] = ((2 * n + 1 + b - x) * v[n] - (n + b) * v[n - 1]) / (n + 1);
  }
  return v;
}

} // namespace

RealFn laguerre_semigroup_fn(double beta, double t, const RealFn &f, double tol) {
  if (!(t >= 0.0)) {
    throw DomainError("laguerre_semigroup: t must be nonnegative");
  }
  constexpr int kCap = 200;
  const GLParams classical = make_params(1.0, beta);
  std::vector<double> coeffs;
  std::optional<QuadRule> rule;
  std::optional<CoeigTable> table;
  if (f.coefficients()) {
    table.emplace(classical, std::min<int>(kCap - 1, f.coefficients()->size() + 3));
  } else {
    rule.emplace(build_rule(Weight::classical(beta), 250, RuleKind::gauss_u));
  }
  std::vector<std::vector<double>> node_values;
  if (rule) {
    for (double x : rule->nodes()) {
      node_values.push_back(laguerre_values(kCap - 1, beta, x));
    }
  }
  const int min_terms =
      table ? static_cast<int>(f.coefficients()->size()) : 16;
  int quiet = 0;
  bool done = false;
  for (int n = 0; n < kCap && !done; ++n) {
    // ||L_n||^2 = Gamma(n+b+1)/(n! Gamma(b+1))
    const double norm_sq =
        std::exp(std::lgamma(n + beta + 1) - std::lgamma(n + 1.0) - std::lgamma(beta + 1));
    double c = 0.0;
    if (table) {
      c = n <= table->degree() ? inner_polynomial_r(*table, *f.coefficients(), n) : 0.0;
    } else {
      NeumaierSum<double> acc;
      for (std::size_t i = 0; i < rule->nodes().size(); ++i) {
        acc.add(rule->weights()[i] * f(rule->nodes()[i]) * node_values[i][n]);
      }
      c = acc.value();
    }
    const double a = std::exp(-n * t) * c / norm_sq;
    coeffs.push_back(a);
    quiet = std::abs(a) * std::sqrt(norm_sq) < tol ? quiet + 1 : 0;
    done = quiet >= 3 && n >= min_terms;
  }
  if (!done) {
    throw TruncationError("laguerre_semigroup: tail above tolerance after 200 terms");
  }
  const int N = static_cast<int>(coeffs.size()) - 1;
  RealFn out("Q_t f", [coeffs, beta, N](double x, int) {
    const auto v = laguerre_values(N, beta, x);
    NeumaierSum<double> acc;
    for (int n = 0; n <= N; ++n) {
      acc.add(coeffs[n] * v[n]);
    }
    return acc.value();
  });
  if (!table) {
    return out;
  }
  // Monomial coefficients of sum a_n L_n.
  const CoeigTable lag(classical, N);
  std::vector<double> mono(N + 1, 0.0);
  for (int n = 0; n <= N; ++n) {
    for (int j = 0; j <= n; ++j) {
      mono[j] += coeffs[n] * lag.coeff(n, j);
    }
  }
  return out.with_coefficients(std::move(mono));
}

double laguerre_semigroup(double beta, double t, const RealFn &f, double x,
                          double tol) {
  return laguerre_semigroup_fn(beta, t, f, tol)(x);
}

//------------------------------------------------------------------------------

IntertwineReport intertwine_check(const GLParams &params, const RealFn &f,
                                  double t, std::span<const double> xs,
                                  const QuadRule &rule) {
  const MarkovOperator lambda(params);
  // Left: Lambda f pointwise, then the spectral expansion of P_t.
  const RealFn lf("Lambda f", [&](double x, int) { return lambda.apply(f, x); });
  ExpandOptions opts;
  opts.regime = ExpansionRegime::small_space;
  opts.tol = 1e-10;
  const SpectralExpansion left = expand(params, lf, t, rule, opts);
  // Right: classical expansion of Q_t f, then the Markov operator.
  const RealFn qf = laguerre_semigroup_fn(0.0, t, f);
  IntertwineReport rep;
  for (double x : xs) {
    rep.lhs.push_back(evaluate_expansion(left, x));
    rep.rhs.push_back(lambda.apply(qf, x));
    rep.max_discrepancy =
        std::max(rep.max_discrepancy, std::abs(rep.lhs.back() - rep.rhs.back()));
  }
  return rep;
}

} // namespace glspec
