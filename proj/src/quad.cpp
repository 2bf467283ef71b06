#include "glspec/quad.hpp"

#include "glspec/coeigen.hpp"
#include "glspec/eigen.hpp"
#include "glspec/series.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <memory>

namespace glspec {

namespace {

// Laguerre exponent after u = x^{1/alpha}; the classical weight has alpha 1.
double exponent_of(const Weight &w) { return w.params().laguerre_exponent(); }

struct NodesWeights {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// L_m^{(a)}(u) and L_{m-1}^{(a)}(u) by the three-term recurrence, rescaled as
// it goes; the returned log_scale is added to both logs.
struct LaguerrePair {
  double lm = 0.0;
  double lm1 = 0.0;
  double log_scale = 0.0;
};

LaguerrePair laguerre_pair(int m, double a, double u) {
  double prev = 1.0;
  double cur = 1.0 + a - u;
  double log_scale = 0.0;
  if (m == 1) {
    return {cur, prev, 0.0};
  }
  for (int k = 1; k < m; ++k) {
    const double next = ((2 * k + 1 + a - u) * cur - (k + a) * prev) / (k + 1);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e150) {
      prev *= 1e-150;
      cur *= 1e-150;
      log_scale += 150.0 * std::log(10.0);
    }
  }
  return {cur, prev, log_scale};
}

// Generalized Gauss-Laguerre rule for u^a e^{-u}/Gamma(a+1): Golub-Welsch
// eigenvalues, Newton-polished on L_m, and weights from
// Gamma(m+a+1) u / (m! (m+a)^2 L_{m-1}(u)^2), which keeps tiny weights
// relatively accurate.
NodesWeights gauss_laguerre(int m, double a) {
  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(std::max(m - 1, 1));
  for (int k = 0; k < m; ++k) {
    diag(k) = 2.0 * k + a + 1.0;
    if (k + 1 < m) {
      sub(k) = std::sqrt((k + 1.0) * (k + 1.0 + a));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(m - 1), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw QuadratureError("gauss_laguerre: tridiagonal eigensolver failed");
  }
  NodesWeights out;
  const double log_const = std::lgamma(m + a + 1.0) - std::lgamma(m + 1.0) -
                           std::lgamma(a + 1.0) - 2.0 * std::log(m + a);
  for (int i = 0; i < m; ++i) {
    double u = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const LaguerrePair lp = laguerre_pair(m, a, u);
      const double deriv = (m * lp.lm - (m + a) * lp.lm1) / u;
      const double step = lp.lm / deriv;
      if (!std::isfinite(step) || std::abs(step) > 1e-6 * u) {
        break;
      }
      u -= step;
    }
    const LaguerrePair lp = laguerre_pair(m, a, u);
    const double log_l = std::log(std::abs(lp.lm1)) + lp.log_scale;
    out.nodes.push_back(u);
    out.weights.push_back(std::exp(log_const + std::log(u) - 2.0 * log_l));
  }
  double mass = 0.0;
  for (double w : out.weights) {
    mass += w;
  }
  for (double &w : out.weights) {
    w /= mass;
  }
  return out;
}

// Three-term recurrence of the measure with moments Gamma(alpha k + a + 1) /
// Gamma(a + 1), by the Chebyshev algorithm at Digits decimal digits.
template <unsigned Digits>
bool chebyshev_recurrence(double alpha, double a, int m,
                          std::vector<double> &diag, std::vector<double> &offd) {
  using Big = bmp::number<bmp::mpfr_float_backend<Digits>, bmp::et_off>;
  const Big al(alpha);
  const Big aa(a);
  const Big g0 = tgamma(aa + 1);
  const int len = 2 * m;
  std::vector<Big> mu(len);
  for (int k = 0; k < len; ++k) {
    mu[k] = tgamma(al * k + aa + 1) / g0;
  }
  std::vector<Big> rec_a(m);
  std::vector<Big> rec_b(m);
  std::vector<Big> prev(len, Big(0));
  std::vector<Big> cur = mu;
  std::vector<Big> next(len);
  rec_a[0] = mu[1] / mu[0];
  rec_b[0] = mu[0];
  for (int k = 1; k < m; ++k) {
    for (int l = k; l < len - k; ++l) {
      next[l] = cur[l + 1] - rec_a[k - 1] * cur[l] - rec_b[k - 1] * prev[l];
    }
    rec_a[k] = next[k + 1] / next[k] - cur[k] / cur[k - 1];
    rec_b[k] = next[k] / cur[k - 1];
    if (!(rec_b[k] > 0) || !(rec_a[k] > 0)) {
      return false;
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  diag.resize(m);
  offd.resize(m);
  for (int k = 0; k < m; ++k) {
    diag[k] = to_double(rec_a[k]);
    offd[k] = to_double(sqrt(rec_b[k]));
  }
  return true;
}

// The algorithm loses about m (1 + 0.6 (1 - alpha)) digits.
void x_recurrence(double alpha, double a, int m, std::vector<double> &diag,
                  std::vector<double> &offd) {
  const double needed = m * (1.0 + 0.6 * (1.0 - alpha)) + 30.0;
  bool ok = false;
  if (needed <= 160) {
    ok = chebyshev_recurrence<160>(alpha, a, m, diag, offd);
  } else if (needed <= 320) {
    ok = chebyshev_recurrence<320>(alpha, a, m, diag, offd);
  } else if (needed <= 640) {
    ok = chebyshev_recurrence<640>(alpha, a, m, diag, offd);
  } else if (needed <= 1280) {
    ok = chebyshev_recurrence<1280>(alpha, a, m, diag, offd);
  }
  if (!ok) {
    throw QuadratureError("gauss_x rule: moment recurrence lost positivity");
  }
}

// Orthonormal recurrence evaluated at x with rescaling: value and derivative
// of p_m (up to a common positive factor) and log of sum_{k<m} p_k(x)^2.
struct OrthoEval {
  double pm = 0.0;
  double dpm = 0.0;
  double log_christoffel = 0.0;
};

OrthoEval ortho_eval(std::span<const double> diag, std::span<const double> offd,
                     int m, double x) {
  // offd[0] = sqrt(mass); offd[k] couples k-1 and k.
  double p_prev = 0.0;
  double p = 1.0 / offd[0];
  double d_prev = 0.0;
  double d = 0.0;
  double sum = 0.0;
  double log_scale = 0.0;
  for (int k = 0; k < m; ++k) {
    sum += p * p;
    const double b_next = (k + 1 < m) ? offd[k + 1] : 1.0;
    const double b_cur = offd[k];
    const double back = k == 0 ? 0.0 : b_cur;
    const double p_next = ((x - diag[k]) * p - back * p_prev) / b_next;
    const double d_next = (p + (x - diag[k]) * d - back * d_prev) / b_next;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    if (std::abs(p) > 1e150 || std::abs(d) > 1e150) {
      p *= 1e-150;
      p_prev *= 1e-150;
      d *= 1e-150;
      d_prev *= 1e-150;
      sum *= 1e-300;
      log_scale += 150.0 * std::log(10.0);
    }
  }
  return {p, d, std::log(sum) + 2.0 * log_scale};
}

// Gauss rule from recurrence coefficients: Golub-Welsch eigenvalues,
// Newton-polished, with Christoffel weights 1/sum p_k(x)^2 so the tiny tail
// weights stay relatively accurate.
NodesWeights gauss_from_recurrence(std::span<const double> diag,
                                   std::span<const double> offd, int m) {
  Eigen::VectorXd d(m);
  Eigen::VectorXd s(std::max(m - 1, 1));
  for (int k = 0; k < m; ++k) {
    d(k) = diag[k];
    if (k + 1 < m) {
      s(k) = offd[k + 1];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, s.head(m - 1), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw QuadratureError("gauss rule: tridiagonal eigensolver failed");
  }
  NodesWeights out;
  for (int i = 0; i < m; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const OrthoEval e = ortho_eval(diag, offd, m, x);
      const double step = e.pm / e.dpm;
      if (!std::isfinite(step) || std::abs(step) > 1e-6 * std::abs(x)) {
        break;
      }
      x -= step;
    }
    out.nodes.push_back(x);
    out.weights.push_back(std::exp(-ortho_eval(diag, offd, m, x).log_christoffel));
  }
  return out;
}

void check_same_params(const GLParams &rule_params, const GLParams &params,
                       const char *who) {
  if (rule_params.alpha() != params.alpha() ||
      rule_params.beta() != params.beta()) {
    throw DomainError(std::string(who) + ": rule built for other parameters");
  }
}

// E[x^{k + j/alpha}] for k, j <= N at 259 bits.
std::vector<std::vector<Ext256>> mixed_moments(const GLParams &params, int K,
                                               int J) {
  const Ext256 a(params.laguerre_exponent());
  const Ext256 al(params.alpha());
  const Ext256 g0 = tgamma(a + 1);
  std::vector<std::vector<Ext256>> m(K + 1, std::vector<Ext256>(J + 1));
  for (int k = 0; k <= K; ++k) {
    for (int j = 0; j <= J; ++j) {
      m[k][j] = tgamma(al * k + j + a + 1) / g0;
    }
  }
  return m;
}

} // namespace

//------------------------------------------------------------------------------

QuadRule build_rule(const Weight &w, int m, RuleKind kind) {
  if (m < 1 || m > 500) {
    throw DomainError("build_rule: order must be in [1, 500]");
  }
  if (w.kind() == WeightKind::auxiliary) {
    throw DomainError("build_rule: the auxiliary weight has no Gauss rule");
  }
  if (kind == RuleKind::double_exponential) {
    return build_de_rule(w);
  }
  const double alpha = w.params().alpha();
  const double a = exponent_of(w);
  const int coarse_m = std::max(1, m / 2);
  QuadRule rule(w, kind);
  NodesWeights fine;
  NodesWeights coarse;
  if (kind == RuleKind::gauss_u) {
    fine = gauss_laguerre(m, a);
    coarse = gauss_laguerre(coarse_m, a);
    for (double &u : fine.nodes) {
      u = std::pow(u, alpha);
    }
    for (double &u : coarse.nodes) {
      u = std::pow(u, alpha);
    }
  } else {
    std::vector<double> diag;
    std::vector<double> offd;
    x_recurrence(alpha, a, m, diag, offd);
    fine = gauss_from_recurrence(diag, offd, m);
    coarse = gauss_from_recurrence(diag, offd, coarse_m);
  }
  rule.nodes_ = std::move(fine.nodes);
  rule.weights_ = std::move(fine.weights);
  rule.coarse_nodes_ = std::move(coarse.nodes);
  rule.coarse_weights_ = std::move(coarse.weights);
  return rule;
}

QuadRule build_de_rule(const Weight &w, double h) {
  if (w.kind() == WeightKind::auxiliary) {
    throw DomainError("build_de_rule: the auxiliary weight is not supported");
  }
  if (!(h > 0.0 && h <= 0.25)) {
    throw DomainError("build_de_rule: step must be in (0, 1/4]");
  }
  const double alpha = w.params().alpha();
  const double a = exponent_of(w);
  const double log_norm = std::lgamma(a + 1.0);
  QuadRule rule(w, RuleKind::double_exponential);
  const auto de = half_line_de(h, -6.5, de_parameter_for(1000.0));
  for (std::size_t i = 0; i < de.size(); ++i) {
    const double u = de[i].u;
    if (!(u > 0.0) || !(de[i].w > 0.0)) {
      continue;
    }
    const double weight = de[i].w * std::exp(a * std::log(u) - u - log_norm);
    if (!(weight > 0.0)) {
      continue;
    }
    const double x = std::pow(u, alpha);
    rule.nodes_.push_back(x);
    rule.weights_.push_back(weight);
    if (i % 2 == 0) {
      rule.coarse_nodes_.push_back(x);
      rule.coarse_weights_.push_back(2.0 * weight);
    }
  }
  return rule;
}

//------------------------------------------------------------------------------

InnerResult inner(const QuadRule &rule, const std::function<double(double)> &fg,
                  double tol) {
  NeumaierSum<double> fine;
  NeumaierSum<double> abs_fine;
  NeumaierSum<double> coarse;
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double v = weights[i] * fg(nodes[i]);
    fine.add(v);
    abs_fine.add(std::abs(v));
  }
  const auto cn = rule.coarse_nodes();
  const auto cw = rule.coarse_weights();
  for (std::size_t i = 0; i < cn.size(); ++i) {
    coarse.add(cw[i] * fg(cn[i]));
  }
  InnerResult r;
  r.value = fine.value();
  r.error_estimate = std::abs(r.value - coarse.value());
  if (!std::isfinite(r.value) || r.error_estimate > tol * abs_fine.value()) {
    throw QuadratureError("inner: fine and coarse rules disagree");
  }
  return r;
}

InnerResult inner(const QuadRule &rule, const RealFn &f, const RealFn &g,
                  double tol) {
  return inner(rule, [&](double x) { return f(x) * g(x); }, tol);
}

//------------------------------------------------------------------------------

GramReport gram_biorth(const GLParams &params, int N, const QuadRule &rule) {
  if (N < 0) {
    throw DomainError("gram_biorth: N must be nonnegative");
  }
  check_same_params(rule.weight().params(), params, "gram_biorth");
  const PolySeq seq(params, N);
  const CoeigEvaluator ev(params, N);
  // Values at every node once: rows are functions, columns nodes.
  auto tabulate = [&](std::span<const double> nodes) {
    Eigen::MatrixXd pv(N + 1, nodes.size());
    Eigen::MatrixXd rv(N + 1, nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (int n = 0; n <= N; ++n) {
        pv(n, i) = p_eval(seq, n, nodes[i]);
        rv(n, i) = ev.r(n, nodes[i]).value;
      }
    }
    return std::pair{pv, rv};
  };
  auto as_vector = [](std::span<const double> w) {
    return Eigen::Map<const Eigen::VectorXd>(w.data(), w.size());
  };
  const auto [pf, rf] = tabulate(rule.nodes());
  const auto [pc, rc] = tabulate(rule.coarse_nodes());
  const Eigen::VectorXd wf = as_vector(rule.weights());
  const Eigen::VectorXd wc = as_vector(rule.coarse_weights());
  GramReport rep;
  rep.gram = pf * wf.asDiagonal() * rf.transpose();
  const Eigen::MatrixXd coarse = pc * wc.asDiagonal() * rc.transpose();
  const Eigen::MatrixXd scale = pf.cwiseAbs() * wf.asDiagonal() *
                                rf.cwiseAbs().transpose();
  if (((rep.gram - coarse).cwiseAbs().array() > 1e-6 * scale.array()).any()) {
    throw QuadratureError("gram_biorth: fine and coarse rules disagree");
  }
  rep.max_deviation =
      (rep.gram - Eigen::MatrixXd::Identity(N + 1, N + 1)).cwiseAbs().maxCoeff();
  return rep;
}

GramReport gram_biorth_exact(const GLParams &params, int N) {
  if (N < 0) {
    throw DomainError("gram_biorth_exact: N must be nonnegative");
  }
  const PolySeq seq(params, N);
  const CoeigTable table(params, N);
  const auto mom = mixed_moments(params, N, N);
  GramReport rep;
  rep.gram.resize(N + 1, N + 1);
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= N; ++m) {
      Ext256 acc = 0;
      for (int k = 0; k <= n; ++k) {
        for (int j = 0; j <= m; ++j) {
          acc += seq.coeff_ext(n, k) * table.coeff_ext(m, j) * mom[k][j];
        }
      }
      rep.gram(n, m) = to_double(acc);
    }
  }
  rep.max_deviation =
      (rep.gram - Eigen::MatrixXd::Identity(N + 1, N + 1)).cwiseAbs().maxCoeff();
  return rep;
}

//------------------------------------------------------------------------------

BesselReport bessel_check(const GLParams &params, const RealFn &f, int N,
                          const QuadRule &rule) {
  if (N < 0) {
    throw DomainError("bessel_check: N must be nonnegative");
  }
  check_same_params(rule.weight().params(), params, "bessel_check");
  const PolySeq seq(params, N);
  BesselReport rep;
  rep.norm_sq = inner(rule, f, f).value;
  double acc = 0.0;
  rep.holds = true;
  for (int n = 0; n <= N; ++n) {
    const double c =
        inner(rule, [&](double x) { return f(x) * p_eval(seq, n, x); }).value;
    acc += c * c;
    rep.partial_sums.push_back(acc);
    rep.holds = rep.holds && acc <= rep.norm_sq * (1.0 + 1e-8);
  }
  return rep;
}

//------------------------------------------------------------------------------

Weight default_auxiliary(const GLParams &params) {
  return Weight::auxiliary(params, params.alpha() / 2.0, 1.0);
}

namespace {

// ||R_n||^2 = sum_{i,j} r_i r_j Gamma(i+j+a+1)/Gamma(a+1) when that sum is
// well conditioned at 259 bits; otherwise the Gauss rule in u with n+1 nodes,
// which integrates R_n^2 exactly and sums positive terms.
double invariant_norm_sq(const GLParams &params, const CoeigTable &table,
                         int n) {
  const Ext256 a(params.laguerre_exponent());
  const Ext256 g0 = tgamma(a + 1);
  std::vector<Ext256> mom(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k) {
    mom[k] = tgamma(a + k + 1) / g0;
  }
  Ext256 acc = 0;
  Ext256 abs_acc = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const Ext256 t = table.coeff_ext(n, i) * table.coeff_ext(n, j) * mom[i + j];
      acc += t;
      abs_acc += abs(t);
    }
  }
  if (acc > 0 && abs_acc / acc <= detail::condition_ceiling(Precision::ext256)) {
    return to_double(acc);
  }
  const NodesWeights gl = gauss_laguerre(n + 1, params.laguerre_exponent());
  NeumaierSum<double> sum;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double x = std::pow(gl.nodes[i], params.alpha());
    const double r = r_eval_bell(table, n, x).value;
    sum.add(gl.weights[i] * r * r);
  }
  return sum.value();
}

} // namespace

NormPair r_norm(const GLParams &params, int n) {
  return r_norm(params, n, default_auxiliary(params));
}

NormPair r_norm(const GLParams &params, int n, const Weight &auxiliary) {
  if (n < 0) {
    throw DomainError("r_norm: n must be nonnegative");
  }
  if (auxiliary.kind() != WeightKind::auxiliary) {
    throw DomainError("r_norm: second weight must be auxiliary");
  }
  check_same_params(auxiliary.params(), params, "r_norm");
  const CoeigTable table(params, n);
  NormPair out;
  out.invariant = std::sqrt(invariant_norm_sq(params, table, n));

  // ||R_n e / e_aux||^2 in L^2(e_aux) written in u = x^{1/alpha}:
  // integral R_n^2 u^{ab} e^{-2u - eta u^{alpha/gamma}} du / (alpha Gamma(ab+1)^2).
  const double a = params.laguerre_exponent();
  const double alpha = params.alpha();
  const double power = alpha / auxiliary.gamma();
  const double eta = auxiliary.eta();
  const double log_norm = std::log(alpha) + 2.0 * std::lgamma(a + 1.0);
  auto integrand = [&](double u) {
    if (!(u > 0.0)) {
      return 0.0;
    }
    const double log_w = a * std::log(u) - 2.0 * u - eta * std::pow(u, power) - log_norm;
    if (log_w < -745.0) {
      return 0.0;
    }
    const double r = r_eval_bell(table, n, std::pow(u, alpha)).value;
    return r * r * std::exp(log_w);
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0.0;
  const double value = integrator.integrate(integrand, 1e-10, &err);
  if (!std::isfinite(value) || err > 1e-6 * std::abs(value)) {
    throw QuadratureError("r_norm: auxiliary norm did not converge");
  }
  out.auxiliary = std::sqrt(value);
  return out;
}

double inner_polynomial_r(const CoeigTable &table, std::span<const double> coeffs,
                          int n) {
  if (n < 0 || n > table.degree()) {
    throw IndexError("inner_polynomial_r: n exceeds the table degree");
  }
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 0) {
    return 0.0;
  }
  const auto mom = mixed_moments(table.params(), deg, n);
  Ext256 acc = 0;
  for (int k = 0; k <= deg; ++k) {
    if (coeffs[k] == 0.0) {
      continue;
    }
    Ext256 row = 0;
    for (int j = 0; j <= n; ++j) {
      row += table.coeff_ext(n, j) * mom[k][j];
    }
    acc += Ext256(coeffs[k]) * row;
  }
  return to_double(acc);
}

double r_norm_quadrature(const QuadRule &rule, int n) {
  if (n < 0) {
    throw DomainError("r_norm_quadrature: n must be nonnegative");
  }
  const CoeigEvaluator ev(rule.weight().params(), n);
  return std::sqrt(
      inner(rule, [&](double x) {
        const double r = ev.r(n, x).value;
        return r * r;
      }).value);
}

} // namespace glspec
