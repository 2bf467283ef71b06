#include "doctest.h"

#include "glspec/asymptotics.hpp"

#include <cmath>
#include <numbers>

using namespace glspec;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> alpha_grid(int count) {
  std::vector<double> out;
  for (int i = 1; i <= count; ++i) {
    out.push_back(static_cast<double>(i) / count * 0.98 + 0.01);
  }
  return out;
}

} // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("g function") {
  for (double s : {0.0, 0.7, 1.0, 3.0}) {
    CHECK(g_func(0.5, s, 0.0) == 0.0);
  }
  // g'(0) = 0 by finite differences when varsigma < 1; pi beyond.
  const double h = 1e-6;
  for (double s : {0.2, 0.7}) {
    CHECK(std::abs((g_func(0.5, s, h) - g_func(0.5, s, 0.0)) / h) <= 1e-5);
  }
  CHECK((g_func(0.5, 3.0, h) - g_func(0.5, 3.0, 0.0)) / h == doctest::Approx(kPi).epsilon(1e-5));
  // Frozen from the 80-digit oracle.
  CHECK(g_func(0.5, 2.0, 1.0) == doctest::Approx(2.0445312207961041012).epsilon(1e-14));
  CHECK(g_func(0.5, 0.7, 0.4) == doctest::Approx(0.10068157764213371471).epsilon(1e-13));
  // The derivative formula against central differences, across varsigma = 1.
  for (double s : {0.3, 0.9, 1.0, 1.5, 4.0}) {
    for (double tau : {0.3, 1.0, 5.0}) {
      const double h = 1e-5;
      const double fd = (g_func(0.75, s, tau + h) - g_func(0.75, s, tau - h)) / (2 * h);
      CHECK(g_func_derivative(0.75, s, tau) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
  // Continuity at varsigma = 1 (the limit arctan(tau/0+) = pi/2).
  CHECK(g_func(0.5, 1.0, 2.0) == doctest::Approx(g_func(0.5, 1.0 - 1e-12, 2.0)).epsilon(1e-9));
  CHECK(g_func(0.5, 1.0, 2.0) == doctest::Approx(g_func(0.5, 1.0 + 1e-12, 2.0)).epsilon(1e-9));
  CHECK_THROWS_AS(g_func(0.5, 1.0, -1.0), DomainError);
}

TEST_CASE("tau star") {
  CHECK(tau_star(0.5, 0.5 / 1.5) == 0.0);
  CHECK(tau_star(0.5, 0.1) == 0.0);
  CHECK(tau_star(0.5, 1.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  for (double a : {0.2, 0.75, 1.0}) {
    CHECK(tau_star(a, 1.0) == doctest::Approx(std::tan(kPi / (2 * (1 + a)))).epsilon(1e-12));
  }
  CHECK(tau_star(0.5, 5.0) == doctest::Approx(6.4541184038369155202).epsilon(1e-12));
  CHECK(tau_star(0.5, 0.6) == doctest::Approx(1.0302761772922990542).epsilon(1e-12));
  CHECK(tau_star(0.75, 2.5) == doctest::Approx(2.5690176891800741586).epsilon(1e-12));
  // Root of g' and global maximum of g on a grid.
  for (double s : {0.45, 0.8, 1.0, 2.0, 10.0}) {
    const double ts = tau_star(0.5, s);
    CHECK(std::abs(g_func_derivative(0.5, s, ts)) <= 1e-11);
    const double top = g_func(0.5, s, ts);
    for (int i = 0; i <= 400; ++i) {
      CHECK(g_func(0.5, s, 0.05 * i) <= top + 1e-12);
    }
  }
  // Non-decreasing in varsigma.
  double prev = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double t = tau_star(0.4, 0.05 * i);
    CHECK(t >= prev);
    prev = t;
  }
  CHECK_THROWS_AS(tau_star(0.5, 0.0), DomainError);
}

TEST_CASE("varsigma of theta and h") {
  for (double a : {0.2, 0.5, 0.9}) {
    CAPTURE(a);
    double prev = a / (1 + a);
    for (int i = 1; i < 100; ++i) {
      const double th = kPi / 2 * i / 100.0;
      const double s = varsigma_of_theta(a, th);
      CHECK(s > prev);
      prev = s;
      // Both forms of the root relation.
      CHECK(s == doctest::Approx(1 - std::tan(th) / std::tan((1 + a) * th)).epsilon(1e-10));
      CHECK(tau_star(a, s) == doctest::Approx(std::tan(th)).epsilon(1e-10));
    }
    CHECK(varsigma_of_theta(a, 1e-6) == doctest::Approx(a / (1 + a)).epsilon(1e-9));
    // h = tau*/|1 - varsigma| rises on (a/(1+a), 1), falls beyond 1.
    auto h = [&](double s) { return tau_star(a, s) / std::abs(1 - s); };
    double last = 0.0;
    for (int i = 1; i < 100; ++i) {
      const double s = a / (1 + a) + (1 - a / (1 + a)) * i / 100.0;
      CHECK(h(s) > last);
      last = h(s);
    }
    last = INFINITY;
    for (int i = 1; i <= 100; ++i) {
      const double s = 1.0 + 0.1 * i * i;
      CHECK(h(s) < last);
      last = h(s);
    }
    CHECK(h(1e7) == doctest::Approx(std::tan(kPi * (1 - a) / 2)).epsilon(1e-5));
  }
}

TEST_CASE("kappa bar and region constants") {
  for (double a : alpha_grid(50)) {
    CAPTURE(a);
    const AsympConstants k = asymp_constants(a);
    CHECK(k.C_bar <= k.B_bar);
    CHECK(k.B_bar <= k.A_bar);
    CHECK(k.B_cal > k.C_bar);
    CHECK(kappa_bar(a, 1e-7) == doctest::Approx(k.A_bar).epsilon(1e-8));
    CHECK(kappa_bar(a, kPi / (2 * (1 + a))) == doctest::Approx(k.B_bar).epsilon(1e-12));
    CHECK(kappa_bar(a, kPi / 2 - 1e-9) == doctest::Approx(k.C_bar).epsilon(1e-6).scale(1e-9));
    double prev = INFINITY;
    for (int i = 1; i < 100; ++i) {
      const double v = kappa_bar(a, kPi / 2 * i / 100.0);
      CHECK(v < prev);
      prev = v;
    }
  }
  const AsympConstants one = asymp_constants(1.0);
  CHECK(one.A_bar == doctest::Approx(4.0));
  CHECK(std::abs(one.C_bar) <= 1e-15);
  CHECK_THROWS_AS(kappa_bar(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(kappa_bar(0.5, kPi / 2), DomainError);
}

TEST_CASE("H star at the stationary pair") {
  for (double a : {0.3, 0.5, 0.8}) {
    for (double th : {0.2, 0.6, 1.0, 1.4}) {
      CAPTURE(a);
      CAPTURE(th);
      const SaddleState st = saddle_state(a, th);
      // kappa from the tau form of the stationarity condition.
      const double sb = 1 - st.varsigma;
      const double t2 = st.tau_star * st.tau_star;
      const double kappa_tau = std::sqrt(1 + t2) *
                               std::pow((1 + t2) / (sb * sb + t2), 1 / (2 * a)) /
                               st.varsigma;
      CHECK(st.kappa == doctest::Approx(kappa_tau).epsilon(1e-11));
      CHECK(H_star(a, st.kappa, st.varsigma) ==
            doctest::Approx(H_star_stationary(st, a)).epsilon(1e-10));
      // ln(sin th / sin(a th)) identity and its upper bound.
      const double lhs = -std::log(st.varsigma) + std::log(std::abs(sb)) +
                         0.5 * std::log1p(t2 / (sb * sb));
      const double mid = std::log(std::sin(th) / std::sin(a * th));
      CHECK(lhs == doctest::Approx(mid).epsilon(1e-11));
      CHECK(mid <= -std::log(a) + 1e-14);
    }
  }
  // Stationary in varsigma.
  const SaddleState st = saddle_state(0.5, 0.6);
  const double h = 1e-5;
  const double d = (H_star(0.5, st.kappa, st.varsigma + h) -
                    H_star(0.5, st.kappa, st.varsigma - h)) / (2 * h);
  CHECK(std::abs(d) <= 1e-8);
  CHECK_THROWS_AS(H_star(0.5, 0.0, 1.0), DomainError);
}

TEST_CASE("large-x exponent") {
  CHECK(std::abs(H_alpha_eta(1.0, 0.5)) <= 1e-15);
  CHECK(std::abs(H_alpha_eta(1.0 - 1e-9, 0.5 + 1e-9)) <= 1e-7);
  // Below E_a the first branch alone.
  const double a = 0.5;
  const double eta = 0.2;
  CHECK(H_alpha_eta(a, eta) ==
        doctest::Approx(eta * std::pow(1.5, 3.0) - 1.5 - std::log(a)));
  // Inside E_a the proof's candidate -ln(eta^{-a} - 1) competes.
  CHECK(H_alpha_eta(a, 0.9) >= -std::log(std::pow(0.9, -a) - 1));
  CHECK(H_alpha_eta(a, 0.9) >= 0.9 * std::pow(1.5, 3.0) - 1.5 - std::log(a));
  CHECK_THROWS_AS(H_alpha_eta(a, 1.0), DomainError);
}

TEST_CASE("bound regions") {
  const GLParams p = make_params(0.5, 1.0);
  const AsympConstants k = asymp_constants(0.5);
  RegionSamples large{{1.1 * k.A_bar, 2 * k.A_bar}, 0.9, {}};
  const RegionReport one = bound_region_check(p, 20, BoundRegion::large, large);
  CHECK(one.xs[0] == doctest::Approx(1.1 * k.A_bar * std::sqrt(20.0)));
  CHECK(std::isfinite(one.max_ratio));
  CHECK(one.max_ratio > 0.0);
  const RegionSamples middle{{0.5}, 0.9, {}};
  const RegionReport mid = bound_region_check(p, 30, BoundRegion::middle, middle);
  CHECK(mid.xs[0] == doctest::Approx(kappa_bar(0.5, 0.5) * std::sqrt(30.0)));
  CHECK(std::isfinite(mid.max_ratio));
  for (auto [a, b] : {std::pair{0.5, 1.0}, {0.75, 0.5}, {0.3, 2.0}, {1.0, 0.5}}) {
    CAPTURE(a);
    const GLParams q = make_params(a, b);
    const AsympConstants c = asymp_constants(a);
    const double eps = (c.B_bar - c.C_bar) / 2;
    const RegionSamples fixed{{1.0, 3.0}, 0.9, {}};
    const RegionSamples mids{{0.5, 1.0}, 0.9, {}};
    const RegionSamples sub{{0.5 * (c.C_bar + eps + c.A_bar)}, 0.9, {}};
    const RegionSamples big{{1.1 * c.A_bar, 2 * c.A_bar}, 0.9, {}};
    CHECK(bound_region_sequence(q, BoundRegion::fixed_x, fixed).bounded);
    CHECK(bound_region_sequence(q, BoundRegion::middle, mids).bounded);
    CHECK(bound_region_sequence(q, BoundRegion::suboptimal, sub).bounded);
    CHECK(bound_region_sequence(q, BoundRegion::large, big).bounded);
  }
  CHECK_THROWS_AS(bound_region_check(p, 20, BoundRegion::large, RegionSamples{{0.5 * k.A_bar}}),
                  DomainError);
  CHECK_THROWS_AS(bound_region_check(p, 20, BoundRegion::suboptimal, RegionSamples{{k.C_bar}}),
                  DomainError);
  CHECK_THROWS_AS(bound_region_check(p, 20, BoundRegion::middle, RegionSamples{{2.0}}),
                  DomainError);
}

TEST_CASE("norm envelopes") {
  // Classical norms grow polynomially: the rate tends to T_1 = 0.
  const NormEnvelopeReport c = norm_envelope_check(make_params(1.0, 0.0), 25);
  for (double r : c.invariant_rates) {
    CHECK(std::abs(r) <= 1e-12);
  }
  CHECK(c.holds);
  for (auto [a, b] : {std::pair{0.5, 1.0}, {0.75, 0.5}}) {
    CAPTURE(a);
    const GLParams p = make_params(a, b);
    const QuadRule ru = build_rule(Weight::invariant(p), 60, RuleKind::gauss_u);
    const NormEnvelopeReport r = norm_envelope_check(p, 25, &ru);
    CHECK(r.holds);
    CHECK(r.invariant_limsup <= p.expansion_time() + 0.1);
    CHECK(r.auxiliary_limsup <= p.coeig_growth_rate() + 0.2);
    REQUIRE(r.rule_deviation.has_value());
    CHECK(*r.rule_deviation <= 1e-9);
  }
  CHECK_THROWS_AS(norm_envelope_check(make_params(0.5, 1.0), 31), DomainError);
}

} // TEST_SUITE
