#include "glspec/cli.hpp"

#include "glspec/asymptotics.hpp"
#include "glspec/coeigen.hpp"
#include "glspec/density.hpp"
#include "glspec/eigen.hpp"
#include "glspec/quad.hpp"
#include "glspec/semigroup.hpp"
#include "glspec/specfun.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <thread>

namespace glspec::cli {

std::vector<double> parse_grid(const std::string &spec) {
  auto number = [&](std::string_view text) {
    double v = 0.0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      throw DomainError("grid: cannot read '" + std::string(text) + "'");
    }
    return v;
  };
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos) {
      throw DomainError("grid: expected start:stop:step");
    }
    const std::string_view view(spec);
    const double lo = number(view.substr(0, c1));
    const double hi = number(view.substr(c1 + 1, c2 - c1 - 1));
    const double step = number(view.substr(c2 + 1));
    if (!(step > 0.0) || !(hi >= lo)) {
      throw DomainError("grid: need step > 0 and stop >= start");
    }
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 1000000) {
      throw DomainError("grid: more than 10^6 points");
    }
    for (long i = 0; i < count; ++i) {
      out.push_back(lo + static_cast<double>(i) * step);
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const auto stop = comma == std::string::npos ? spec.size() : comma;
    out.push_back(number(std::string_view(spec).substr(start, stop - start)));
    start = stop + 1;
  }
  return out;
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc()) {
    return "nan";
  }
  return std::string(buf, ptr);
}

unsigned thread_budget() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("GLSPEC_THREADS")) {
    unsigned cap = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc() && ptr == text.data() + text.size() && cap > 0) {
      n = std::min(cap, 256u);
    }
  }
  return n;
}

namespace {

// Evaluates fn(i) for i < count on up to thread_budget() workers. Results
// keep grid order; the lowest-index exception is rethrown.
std::vector<double> parallel_map(std::size_t count,
                                 const std::function<double(std::size_t)> &fn) {
  std::vector<double> out(count);
  std::vector<std::exception_ptr> errors(count);
  const std::size_t workers = std::min<std::size_t>(thread_budget(), std::max<std::size_t>(count, 1));
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < count; i += workers) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(work, w);
    }
  }
  for (auto &e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

struct RunConfig {
  double alpha = 0.5;
  double beta = 1.0;
  std::string precision = "double";
  int quad_order = 200;
  double tol = 1e-10;
  std::string format = "csv";
  std::string out_path;

  GLParams params() const {
    Precision p = Precision::binary64;
    if (precision == "ext128") {
      p = Precision::ext128;
    } else if (precision == "ext256") {
      p = Precision::ext256;
    }
    return make_params(alpha, beta, p);
  }
};

struct EvalArgs {
  std::string subject;
  int n = 3;
  std::string x = "0:5:0.5";
  std::string y = "0:6:0.1";
  std::string z = "0:10:0.1";
  double t = 1.0;
  std::string f = "x";
  std::string rule = "de";
  bool small_space = false;
};

struct VerifyArgs {
  std::string suite = "all";
  int N = 12;
  bool seed_check = false;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> summary;
};

double trapezoid(const std::vector<double> &xs, const std::vector<double> &ys) {
  double acc = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    acc += 0.5 * (xs[i] - xs[i - 1]) * (ys[i] + ys[i - 1]);
  }
  return acc;
}

// x^{beta_alpha} e^{-x^{1/alpha}} / (alpha Gamma(alpha beta + 1)) at x = 0.
double density_at_zero(const GLParams &p) {
  const double power = p.density_exponent();
  if (power > 0.0) {
    return 0.0;
  }
  if (power < 0.0) {
    throw DomainError("eval: the density is unbounded at x = 0");
  }
  return 1.0 / (p.alpha() * std::tgamma(p.laguerre_exponent() + 1.0));
}

RealFn parse_function(const std::string &spec) {
  if (spec == "1") {
    return RealFn::constant(1.0);
  }
  if (spec == "x") {
    return RealFn::monomial(1);
  }
  if (spec == "exp(-x)") {
    return RealFn("exp(-x)", [](double x, int k) { return (k % 2 ? -1.0 : 1.0) * std::exp(-x); }, 8);
  }
  auto integer_after = [&](std::size_t pos) {
    int k = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + pos, spec.data() + spec.size(), k);
    if (ec != std::errc() || ptr != spec.data() + spec.size() || k < 0) {
      throw DomainError("unknown function '" + spec + "'");
    }
    return k;
  };
  if (spec.rfind("x^", 0) == 0) {
    return RealFn::monomial(integer_after(2));
  }
  if (spec.rfind("L", 0) == 0) {
    return RealFn::laguerre(integer_after(1), 0.0);
  }
  throw DomainError("unknown function '" + spec + "' (use 1, x, x^k, Lk or exp(-x))");
}

QuadRule make_rule(const GLParams &p, const std::string &kind, int order) {
  const Weight w = Weight::invariant(p);
  if (kind == "gauss_u") {
    return build_rule(w, order, RuleKind::gauss_u);
  }
  if (kind == "gauss_x") {
    return build_rule(w, order, RuleKind::gauss_x);
  }
  return build_de_rule(w);
}

Table eval_table(const RunConfig &cfg, const EvalArgs &args) {
  const GLParams p = cfg.params();
  const std::string n_label = std::to_string(args.n);
  Table t;
  const std::string &s = args.subject;
  if (s == "P") {
    const auto xs = parse_grid(args.x);
    const PolySeq seq(p, args.n);
    const auto v = parallel_map(xs.size(), [&](std::size_t i) { return p_eval(seq, args.n, xs[i]); });
    t.columns = {"x", "P_" + n_label};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      t.rows.push_back({xs[i], v[i]});
    }
  } else if (s == "R" || s == "W") {
    const auto xs = parse_grid(args.x);
    const CoeigEvaluator ev(p, args.n);
    const auto v = parallel_map(xs.size(), [&](std::size_t i) {
      // R_n is a polynomial in x^{1/alpha}: its value at 0 is the constant term.
      const double r = xs[i] == 0.0 ? ev.table().coeff(args.n, 0) : ev.r(args.n, xs[i]).value;
      if (s == "R") {
        return r;
      }
      return xs[i] == 0.0 ? r * density_at_zero(p) : ev.w(args.n, xs[i]).value;
    });
    t.columns = {"x", s + "_" + n_label};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      t.rows.push_back({xs[i], v[i]});
    }
  } else if (s == "lambda") {
    const auto zs = parse_grid(args.z);
    const LambdaKernel kernel(p, zs.empty() ? 0.0 : zs.back());
    const auto v = parallel_map(zs.size(), [&](std::size_t i) { return kernel(zs[i]); });
    t.columns = {"z", "lambda"};
    for (std::size_t i = 0; i < zs.size(); ++i) {
      t.rows.push_back({zs[i], v[i]});
    }
    t.summary.emplace_back("mass_trapezoid", trapezoid(zs, v));
  } else if (s == "e_ab") {
    const auto xs = parse_grid(args.x);
    const Weight e = Weight::invariant(p);
    t.columns = {"x", "e_ab"};
    for (double x : xs) {
      t.rows.push_back({x, x == 0.0 ? density_at_zero(p) : weight_eval(e, x)});
    }
  } else if (s == "heat" || s == "K") {
    const double x = parse_grid(args.x).front();
    const auto ys = parse_grid(args.y);
    std::vector<double> v(ys.size(), 0.0);
    std::vector<double> positive;
    for (double y : ys) {
      if (y > 0.0) {
        positive.push_back(y);
      } else if (!(y == 0.0 && p.density_exponent() > 0.0)) {
        // The kernel vanishes at y = 0 only when the density does.
        throw DomainError("eval: y must be positive");
      }
    }
    std::vector<double> kernel;
    if (s == "heat") {
      HeatKernelOptions opts;
      opts.tol = std::min(cfg.tol, 1e-12);
      kernel = heat_kernel_row(p, args.t, x, positive, opts);
    } else {
      kernel = parallel_map(positive.size(), [&](std::size_t i) {
        return selfsimilar_kernel(p, args.t, x, positive[i], std::min(cfg.tol, 1e-12));
      });
    }
    std::size_t j = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (ys[i] > 0.0) {
        v[i] = kernel[j++];
      }
    }
    t.columns = {"y", s == "heat" ? "P_t" : "K_t"};
    for (std::size_t i = 0; i < ys.size(); ++i) {
      t.rows.push_back({ys[i], v[i]});
    }
    t.summary.emplace_back("mass_trapezoid", trapezoid(ys, v));
  } else if (s == "expand") {
    const auto xs = parse_grid(args.x);
    const RealFn f = parse_function(args.f);
    const QuadRule rule = make_rule(p, args.rule, cfg.quad_order);
    ExpandOptions opts;
    opts.tol = cfg.tol;
    opts.regime = args.small_space ? ExpansionRegime::small_space : ExpansionRegime::full_space;
    const SpectralExpansion e = expand(p, f, args.t, rule, opts);
    const auto v = parallel_map(xs.size(), [&](std::size_t i) { return evaluate_expansion(e, xs[i]); });
    t.columns = {"x", "P_t_f"};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      t.rows.push_back({xs[i], v[i]});
    }
    t.summary.emplace_back("terms", e.N + 1);
    t.summary.emplace_back("tail_estimate", e.tail_estimate);
    t.summary.emplace_back("regime_violation", e.regime_violation ? 1.0 : 0.0);
  } else {
    throw DomainError("eval: unknown subject '" + s + "'");
  }
  return t;
}

void write_table(const Table &t, const RunConfig &cfg, const EvalArgs &args, std::ostream &out,
                 std::ostream &err) {
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["subject"] = args.subject;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["precision"] = cfg.precision;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    for (const auto &[k, v] : t.summary) {
      j["summary"][k] = v;
    }
    out << j.dump(1) << '\n';
    return;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << t.columns[i];
  }
  out << '\n';
  for (const auto &row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_number(row[i]);
    }
    out << '\n';
  }
  for (const auto &[k, v] : t.summary) {
    err << k << " = " << format_number(v) << '\n';
  }
}

//------------------------------------------------------------------------------
// Verification suites.

CheckResult check(std::string name, double measured, double limit) {
  return {std::move(name), measured, limit, measured <= limit};
}

std::vector<CheckResult> suite_biorth(const GLParams &p, int N, bool quick) {
  const int n = quick ? std::min(N, 6) : N;
  std::vector<CheckResult> out;
  out.push_back(check("biorth.extended N=" + std::to_string(n),
                      gram_biorth_exact(p, n).max_deviation, 1e-8));
  const int nd = std::min(n, 8);
  out.push_back(check("biorth.double N=" + std::to_string(nd),
                      gram_biorth(p, nd, build_de_rule(Weight::invariant(p))).max_deviation, 1e-6));
  return out;
}

std::vector<CheckResult> suite_eigen(const GLParams &p, bool quick) {
  const int top = quick ? 3 : 8;
  const PolySeq seq(p, top);
  std::vector<CheckResult> out;
  for (int n = 1; n <= top; ++n) {
    const RealFn pn = eigen_function(seq, n);
    double worst = 0.0;
    double size = 0.0;
    for (int i = 0; i <= 50; ++i) {
      const double x = 0.2 * i;
      worst = std::max(worst, std::abs(generator_apply(p, pn, x) + n * pn(x)));
      size = std::max(size, std::abs(pn(x)));
    }
    out.push_back(check("eigen.n=" + std::to_string(n), worst / size, 1e-7));
  }
  return out;
}

std::vector<CheckResult> suite_intertwine(const GLParams &p, bool quick) {
  const QuadRule de = build_de_rule(Weight::invariant(p));
  const std::vector<double> xs = {0.5, 1.0, 2.0, 4.0};
  std::vector<std::pair<std::string, RealFn>> fs = {
      {"1", RealFn::constant(1.0)}, {"p1", RealFn::monomial(1)}};
  if (!quick) {
    fs.emplace_back("p2", RealFn::monomial(2));
    fs.emplace_back("L3", RealFn::laguerre(3, 0.0));
  }
  std::vector<CheckResult> out;
  for (double t : {0.5, 1.5}) {
    for (const auto &[name, f] : fs) {
      out.push_back(check("intertwine.f=" + name + " t=" + format_number(t),
                          intertwine_check(p, f, t, xs, de).max_discrepancy, 1e-6));
    }
  }
  return out;
}

std::vector<CheckResult> suite_mellin(const GLParams &p) {
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const std::complex<double> s(-0.4 + 3.3 * k / 19.0, 0.7 * (k % 5 - 2));
    const auto lhs = mellin_lambda(p, s) * mellin_density(p, s);
    const auto rhs = std::exp(log_gamma(s + 1.0));
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return {check("mellin.factorization", worst, 1e-10)};
}

std::vector<CheckResult> suite_representations(const GLParams &p, bool quick) {
  const int top = quick ? 3 : 8;
  const CoeigTable table(p, top);
  const Weight e = Weight::invariant(p);
  double worst = 0.0;
  for (int n = 0; n <= top; ++n) {
    // Generic points: at alpha = 1, x = 1 and 2 +- sqrt 2 are exact zeros
    // where no relative comparison is possible.
    for (double x : {0.13, 0.55, 1.37, 2.21, 4.93}) {
      const double bell = r_eval_bell(table, n, x).value * weight_eval(e, x);
      const double wright = w_eval_wright(p, n, 0, x).value;
      const double mb = w_eval_mellin(p, n, x).value;
      const double scale = std::max({std::abs(bell), std::abs(wright), 1e-300});
      worst = std::max({worst, std::abs(bell - wright) / scale, std::abs(bell - mb) / scale,
                        std::abs(wright - mb) / scale});
    }
  }
  return {check("representations.bell/wright/mellin", worst, 1e-7)};
}

std::vector<CheckResult> suite_bounds(const GLParams &p, bool quick) {
  const AsympConstants k = asymp_constants(p.alpha(), p.epsilon());
  const double eps = (k.B_bar - k.C_bar) / 2;
  const double lower = p.alpha() >= 0.3 ? k.C_bar + eps : k.B_bar;
  const std::vector<int> ns = quick ? std::vector<int>{10, 20} : std::vector<int>{20, 30, 40};
  const std::pair<BoundRegion, RegionSamples> regions[] = {
      {BoundRegion::fixed_x, {{1.0, 3.0}, 0.9, {}}},
      {BoundRegion::middle, {{0.5, 1.0}, 0.9, {}}},
      {BoundRegion::suboptimal, {{0.5 * (lower + k.A_bar)}, 0.9, {}}},
      {BoundRegion::large, {{1.1 * k.A_bar, 2 * k.A_bar}, 0.9, {}}},
  };
  std::vector<CheckResult> out;
  for (const auto &[region, samples] : regions) {
    const RegionSequence seq = bound_region_sequence(p, region, samples, ns);
    // measured: growth of the worst ratio across n; limit 10.
    const double growth = seq.max_ratios.back() / seq.max_ratios.front();
    CheckResult c = check(std::string("bounds.") + to_string(region),
                          std::isfinite(growth) ? growth : INFINITY, 10.0);
    c.pass = seq.bounded;
    out.push_back(c);
  }
  return out;
}

std::vector<CheckResult> suite_norms(const GLParams &p, bool quick) {
  const NormEnvelopeReport r = norm_envelope_check(p, quick ? 12 : 25);
  std::vector<CheckResult> out;
  out.push_back(check("norms.invariant_rate", r.invariant_limsup, r.invariant_limit));
  out.push_back(check("norms.auxiliary_rate", r.auxiliary_limsup, r.auxiliary_limit));
  if (p.classical()) {
    double worst = 0.0;
    for (int n = 0; n <= 25; ++n) {
      const double b = p.beta();
      const double want =
          std::exp(0.5 * (std::lgamma(n + b + 1) - std::lgamma(n + 1.0) - std::lgamma(b + 1)));
      worst = std::max(worst, std::abs(r_norm(p, n).invariant - want) / want);
    }
    out.push_back(check("norms.classical", worst, 1e-10));
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::string &suite, const GLParams &p,
                                   const VerifyArgs &args) {
  const bool quick = args.seed_check;
  std::vector<CheckResult> out;
  auto add = [&](std::vector<CheckResult> more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  const bool all = suite == "all";
  if (all || suite == "biorth") add(suite_biorth(p, args.N, quick));
  if (all || suite == "eigen") add(suite_eigen(p, quick));
  if (all || suite == "mellin") add(suite_mellin(p));
  if (all || suite == "representations") add(suite_representations(p, quick));
  if ((all && !quick) || suite == "intertwine") add(suite_intertwine(p, quick));
  if ((all && !quick) || suite == "bounds") add(suite_bounds(p, quick));
  if (all || suite == "norms") add(suite_norms(p, quick));
  return out;
}

void write_checks(const std::vector<CheckResult> &checks, const RunConfig &cfg,
                  std::ostream &out) {
  if (cfg.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto &c : checks) {
      j.push_back({{"name", c.name}, {"measured", c.measured}, {"limit", c.limit}, {"pass", c.pass}});
    }
    out << j.dump(1) << '\n';
    return;
  }
  for (const auto &c : checks) {
    char buf[32];
    const auto end = std::to_chars(buf, buf + sizeof buf, c.limit).ptr;
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " measured=" << format_number(c.measured)
        << " limit=" << std::string_view(buf, end - buf) << '\n';
  }
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Gauss-Laguerre semigroup: tabulation and verification"};
  app.name("glspec");
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&cfg](CLI::App *sub) {
    sub->add_option("--alpha", cfg.alpha, "alpha in (0,1]")->capture_default_str();
    sub->add_option("--beta", cfg.beta, "beta >= 1 - 1/alpha")->capture_default_str();
    sub->add_option("--precision", cfg.precision, "working precision")
        ->check(CLI::IsMember({"double", "ext128", "ext256"}))
        ->capture_default_str();
    sub->add_option("--quad-order", cfg.quad_order, "Gauss rule order")
        ->check(CLI::Range(1, 500))
        ->capture_default_str();
    sub->add_option("--tol", cfg.tol, "truncation tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write to PATH instead of stdout");
  };

  EvalArgs ea;
  CLI::App *eval = app.add_subcommand("eval", "tabulate a function over a grid");
  add_common(eval);
  eval->add_option("subject", ea.subject, "P, R, W, lambda, e_ab, heat, expand or K")
      ->required()
      ->check(CLI::IsMember({"P", "R", "W", "lambda", "e_ab", "heat", "expand", "K"}));
  eval->add_option("--n", ea.n, "index n")->check(CLI::Range(0, 200))->capture_default_str();
  eval->add_option("--x", ea.x, "x grid (start:stop:step, list or value)")->capture_default_str();
  eval->add_option("--y", ea.y, "y grid for kernels")->capture_default_str();
  eval->add_option("--z", ea.z, "z grid for lambda")->capture_default_str();
  eval->add_option("--t", ea.t, "time")->check(CLI::PositiveNumber)->capture_default_str();
  eval->add_option("--f", ea.f, "function for expand: 1, x, x^k, Lk, exp(-x)")
      ->capture_default_str();
  eval->add_option("--rule", ea.rule, "expansion rule")
      ->check(CLI::IsMember({"de", "gauss_u", "gauss_x"}))
      ->capture_default_str();
  eval->add_flag("--small-space", ea.small_space, "f lies in the smaller space (any t > 0)");

  VerifyArgs va;
  CLI::App *verify = app.add_subcommand("verify", "run an invariant suite");
  add_common(verify);
  verify->add_option("suite", va.suite, "suite name")
      ->check(CLI::IsMember({"biorth", "eigen", "intertwine", "mellin", "representations",
                             "bounds", "norms", "all"}))
      ->capture_default_str();
  verify->add_option("--N", va.N, "Gram matrix size")->check(CLI::Range(1, 40))->capture_default_str();
  verify->add_flag("--seed-check", va.seed_check, "fast smoke subset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  std::ofstream file;
  std::ostream *sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "glspec: cannot open " << cfg.out_path << '\n';
      return static_cast<int>(ExitCode::usage);
    }
    sink = &file;
  }
  sink->imbue(std::locale::classic());

  try {
    if (eval->parsed()) {
      const Table t = eval_table(cfg, ea);
      write_table(t, cfg, ea, *sink, err);
      return static_cast<int>(ExitCode::success);
    }
    const auto checks = run_suite(va.suite, cfg.params(), va);
    write_checks(checks, cfg, *sink);
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.pass; });
    return static_cast<int>(ok ? ExitCode::success : ExitCode::verification_failed);
  } catch (const DomainError &e) {
    err << "glspec: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const IndexError &e) {
    err << "glspec: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const NumericalError &e) {
    err << "glspec: " << e.what() << '\n';
    return static_cast<int>(ExitCode::numerical);
  }
}

} // namespace glspec::cli
