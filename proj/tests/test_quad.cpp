#include "doctest.h"

#include "glspec/coeigen.hpp"
#include "glspec/eigen.hpp"
#include "glspec/quad.hpp"

#include <cmath>
#include <random>

using namespace glspec;

namespace {

RealFn random_polynomial(std::mt19937 &gen, int degree) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> c(degree + 1);
  for (double &v : c) {
    v = d(gen);
  }
  return RealFn::polynomial(c, "random");
}

} // namespace

TEST_SUITE("quad") {

TEST_CASE("trivial rules and mass") {
  const QuadRule one = build_rule(Weight::invariant(make_params(1.0, 0.0)), 1);
  REQUIRE(one.order() == 1);
  CHECK(one.nodes()[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.weights()[0] == doctest::Approx(1.0).epsilon(1e-15));
  for (auto kind : {RuleKind::gauss_u, RuleKind::gauss_x, RuleKind::double_exponential}) {
    const QuadRule r = build_rule(Weight::invariant(make_params(0.5, 1.0)), 50, kind);
    double mass = 0.0;
    for (double w : r.weights()) {
      CHECK(w > 0.0);
      mass += w;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    for (double x : r.nodes()) {
      CHECK(x > 0.0);
    }
  }
  CHECK_THROWS_AS(build_rule(Weight::invariant(make_params(0.5, 1.0)), 0), DomainError);
  CHECK_THROWS_AS(build_rule(Weight::invariant(make_params(0.5, 1.0)), 501), DomainError);
  CHECK_THROWS_AS(build_rule(default_auxiliary(make_params(0.5, 1.0)), 10), DomainError);
}

TEST_CASE("moments reproduced") {
  const GLParams p = make_params(0.5, 1.0);
  const QuadRule rx = build_rule(Weight::invariant(p), 50, RuleKind::gauss_x);
  const QuadRule de = build_de_rule(Weight::invariant(p));
  for (int k = 0; k <= 20; ++k) {
    CAPTURE(k);
    const double want = moment(p, k);
    CHECK(inner(rx, RealFn::monomial(k), RealFn::constant(1.0)).value ==
          doctest::Approx(want).epsilon(1e-10));
    CHECK(inner(de, RealFn::monomial(k), RealFn::constant(1.0)).value ==
          doctest::Approx(want).epsilon(1e-10));
  }
  // Exactness in u up to degree 2m-1: E[u^j] = Gamma(j+ab+1)/Gamma(ab+1).
  for (auto [a, b] : {std::pair{0.5, 1.0}, {0.3, 2.0}, {0.75, 0.5}}) {
    const GLParams q = make_params(a, b);
    const QuadRule ru = build_rule(Weight::invariant(q), 20, RuleKind::gauss_u);
    for (int j = 0; j <= 39; ++j) {
      CAPTURE(j);
      double acc = 0.0;
      for (int i = 0; i < ru.order(); ++i) {
        acc += ru.weights()[i] * std::pow(ru.nodes()[i], j / a);
      }
      CHECK(acc == doctest::Approx(moment(q, j / a)).epsilon(1e-11));
    }
  }
}

TEST_CASE("x-rule at the default order") {
  for (double a : {0.3, 0.5, 1.0}) {
    const GLParams p = make_params(a, 1.0);
    const QuadRule r = build_rule(Weight::invariant(p), 200, RuleKind::gauss_x);
    CHECK(r.order() == 200);
    CHECK(inner(r, RealFn::monomial(30), RealFn::constant(1.0)).value ==
          doctest::Approx(moment(p, 30)).epsilon(1e-9));
  }
}

TEST_CASE("inner product examples") {
  const GLParams p = make_params(0.5, 1.0);
  const QuadRule de = build_de_rule(Weight::invariant(p));
  const RealFn one = RealFn::constant(1.0);
  CHECK(inner(de, one, one).value == doctest::Approx(1.0).epsilon(1e-13));
  const RealFn x = RealFn::monomial(1);
  // moment(2) = Gamma(2.5)/Gamma(1.5) at (0.5, 1).
  CHECK(inner(de, x, x).value == doctest::Approx(1.5).epsilon(1e-12));
  const PolySeq seq(p, 3);
  const auto ev = std::make_shared<const CoeigEvaluator>(p, 3);
  CHECK(inner(de, eigen_function(seq, 1), coeig_function(ev, 1)).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner(de, eigen_function(seq, 2), coeig_function(ev, 1)).value) <= 1e-12);
}

TEST_CASE("inner is symmetric and bilinear; Cauchy-Schwarz") {
  std::mt19937 gen(20260915);
  const GLParams p = make_params(0.75, 0.5);
  const QuadRule r = build_rule(Weight::invariant(p), 60, RuleKind::gauss_x);
  const auto ev = std::make_shared<const CoeigEvaluator>(p, 6);
  const QuadRule de = build_de_rule(Weight::invariant(p));
  for (int trial = 0; trial < 20; ++trial) {
    const RealFn f = random_polynomial(gen, 5);
    const RealFn g = random_polynomial(gen, 5);
    const RealFn h = random_polynomial(gen, 5);
    const double fg = inner(r, f, g).value;
    CHECK(fg == doctest::Approx(inner(r, g, f).value).epsilon(1e-12));
    const double a = 0.7;
    const double b = -1.3;
    const RealFn comb("a f + b g", [&](double x, int) { return a * f(x) + b * g(x); });
    const double lhs = inner(r, comb, h).value;
    const double rhs = a * inner(r, f, h).value + b * inner(r, g, h).value;
    CHECK(std::abs(lhs - rhs) <=
          1e-12 * (std::abs(a * inner(r, f, h).value) + std::abs(b * inner(r, g, h).value)));
    const double norm_f = std::sqrt(inner(de, f, f).value);
    for (int n = 0; n <= 6; ++n) {
      const double fr = inner(de, f, coeig_function(ev, n)).value;
      CHECK(std::abs(fr) <= norm_f * r_norm(p, n).invariant * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("biorthogonality") {
  const GLParams p = make_params(0.5, 1.0);
  CHECK(gram_biorth_exact(p, 0).gram(0, 0) == doctest::Approx(1.0));
  const GramReport exact = gram_biorth_exact(p, 12);
  CHECK(exact.max_deviation <= 1e-8);
  const GramReport de = gram_biorth(p, 12, build_de_rule(Weight::invariant(p)));
  CHECK(de.max_deviation <= 1e-8);
  // At alpha = 1/2 the integrand is a polynomial in x: the x-rule is exact.
  const GramReport gx =
      gram_biorth(p, 12, build_rule(Weight::invariant(p), 200, RuleKind::gauss_x));
  CHECK(gx.max_deviation <= 1e-8);
  for (auto [a, b] : {std::pair{0.75, 0.5}, {0.3, 2.0}, {0.9, 0.1}}) {
    CAPTURE(a);
    const GLParams q = make_params(a, b);
    CHECK(gram_biorth_exact(q, 12).max_deviation <= 1e-8);
    CHECK(gram_biorth(q, 12, build_de_rule(Weight::invariant(q))).max_deviation <= 1e-8);
  }
  // Classical orthonormality at alpha = 1.
  const GLParams c = make_params(1.0, 0.0);
  CHECK(gram_biorth(c, 12, build_rule(Weight::invariant(c), 200)).max_deviation <= 1e-10);
  CHECK_THROWS_AS(gram_biorth(c, 3, build_de_rule(Weight::invariant(p))), DomainError);
}

TEST_CASE("Bessel inequality") {
  const GLParams p = make_params(0.5, 1.0);
  const QuadRule de = build_de_rule(Weight::invariant(p));
  const BesselReport one = bessel_check(p, RealFn::constant(1.0), 0, de);
  CHECK(one.partial_sums[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(one.holds);
  const RealFn decay("exp(-x)", [](double x, int) { return std::exp(-x); });
  for (const RealFn &f : {decay, RealFn::monomial(2)}) {
    const BesselReport rep = bessel_check(p, f, 15, de);
    CHECK(rep.holds);
    for (std::size_t i = 1; i < rep.partial_sums.size(); ++i) {
      CHECK(rep.partial_sums[i] >= rep.partial_sums[i - 1]);
    }
    CHECK(rep.partial_sums.back() <= rep.norm_sq * (1.0 + 1e-8));
  }
}

TEST_CASE("co-eigenfunction norms") {
  for (double b : {0.0, 0.5, 2.0}) {
    const GLParams c = make_params(1.0, b);
    for (int n : {0, 3, 10}) {
      const double want = std::exp(0.5 * (std::lgamma(n + b + 1) - std::lgamma(n + 1.0) -
                                          std::lgamma(b + 1)));
      CHECK(r_norm(c, n).invariant == doctest::Approx(want).epsilon(1e-12));
    }
  }
  const GLParams p = make_params(0.5, 1.0);
  CHECK(r_norm(p, 0).invariant == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::isfinite(r_norm(p, 0).auxiliary));
  struct Case {
    double a, b;
    int n;
    double invariant, auxiliary;
  };
  const Case cases[] = {
      {0.5, 1.0, 1, 2.4494897427831780982, 1.5399484376702066372},
      {0.5, 1.0, 5, 73.285401001836648202, 5.5654167122439709849},
      {0.5, 1.0, 10, 5856.8806120584573514, 18.45854103947902678},
      {0.75, 0.5, 8, 20.975370243524556002, 1.3755699615574999759},
  };
  for (const auto &c : cases) {
    CAPTURE(c.n);
    const GLParams q = make_params(c.a, c.b);
    const NormPair np = r_norm(q, c.n);
    CHECK(np.invariant == doctest::Approx(c.invariant).epsilon(1e-12));
    CHECK(np.auxiliary == doctest::Approx(c.auxiliary).epsilon(1e-9));
    const QuadRule ru = build_rule(Weight::invariant(q), 40, RuleKind::gauss_u);
    CHECK(r_norm_quadrature(ru, c.n) == doctest::Approx(c.invariant).epsilon(1e-10));
  }
  // Large n goes through the positive-sum Gauss route and agrees with a rule.
  const double big = r_norm(p, 60).invariant;
  // The coarse half of the rule must integrate R_60^2 exactly as well.
  const QuadRule ru = build_rule(Weight::invariant(p), 130, RuleKind::gauss_u);
  CHECK(big == doctest::Approx(r_norm_quadrature(ru, 60)).epsilon(1e-8));
}

} // TEST_SUITE
