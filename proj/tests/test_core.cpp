#include "doctest.h"

#include "glspec/core.hpp"

#include <cmath>
#include <random>

using namespace glspec;

TEST_SUITE("core") {

TEST_CASE("classical parameters reduce to the Laguerre identities") {
  const auto p = make_params(1.0, 0.0);
  CHECK(p.expansion_time() == 0.0);
  CHECK(p.drift() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.density_exponent() == 0.0);
  CHECK(p.classical());
}

TEST_CASE("drift at (0.5, 1) is 2/sqrt(pi)") {
  const auto p = make_params(0.5, 1.0);
  CHECK(p.drift() == doctest::Approx(2.0 / std::sqrt(M_PI)).epsilon(1e-15));
  CHECK(p.density_exponent() == doctest::Approx(2.0));
  CHECK(p.scaled_density_exponent() == doctest::Approx(1.0));
  CHECK(p.expansion_time() ==
        doctest::Approx(0.88137358701954302523).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_params(0.5, -1.5), DomainError);
  CHECK_THROWS_AS(make_params(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_params(1.5, 1.0), DomainError);
  CHECK_NOTHROW(make_params(0.5, -1.0));
}

TEST_CASE("phi examples") {
  CHECK(phi(make_params(1.0, 0.0), 4.0) == doctest::Approx(4.0));
  CHECK(phi(make_params(1.0, 2.0), 3.0) == doctest::Approx(5.0));
  CHECK(phi(make_params(0.5, 1.0), 2.0) ==
        doctest::Approx(1.3293403881791370205).epsilon(1e-14));
  CHECK_THROWS_AS(phi(make_params(0.5, 1.0), -3.5), DomainError);
}

TEST_CASE("phi(1) equals the drift for random parameters") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ua(0.05, 1.0);
  std::uniform_real_distribution<double> ub(0.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double a = ua(rng);
    const double b = 1.0 - 1.0 / a + ub(rng);
    const auto p = make_params(a, b);
    CHECK(phi(p, 1.0) == doctest::Approx(p.drift()).epsilon(1e-12));
    const auto c = phi(p, std::complex<double>(1.0, 0.0));
    CHECK(c.real() == doctest::Approx(p.drift()).epsilon(1e-12));
  }
}

TEST_CASE("phi is s + beta at alpha = 1, complex argument") {
  const auto p = make_params(1.0, 1.5);
  for (double re : {-1.0, 0.3, 2.0, 7.5}) {
    for (double im : {-3.0, 0.0, 0.4, 10.0}) {
      const std::complex<double> s(re, im);
      const auto v = phi(p, s);
      CHECK(std::abs(v - (s + 1.5)) <= 1e-11 * std::abs(s + 1.5));
    }
  }
}

TEST_CASE("derived constants recomputed from scratch") {
  for (auto [a, b] : {std::pair{0.5, 1.0}, {0.75, 0.5}, {0.3, -1.2}}) {
    const auto p = make_params(a, b);
    const double tt = (a + 1) * std::pow(a, -a / (a + 1));
    CHECK(p.poly_growth_rate() == doctest::Approx(tt).epsilon(1e-15));
    CHECK(p.coeig_growth_rate() ==
          doctest::Approx(tt * std::pow((a + 1) / a + 0.01, 1 / (a + 1)))
              .epsilon(1e-15));
    CHECK(p.expansion_time() ==
          doctest::Approx(-std::log(std::pow(2.0, a) - 1)).epsilon(1e-15));
    CHECK(p.drift() == doctest::Approx(std::tgamma(a * b + a + 1) /
                                       std::tgamma(a * b + 1))
                           .epsilon(1e-14));
  }
}

TEST_CASE("asymptotic constants at alpha = 1 and ordering") {
  const auto c1 = asymp_constants(1.0);
  CHECK(c1.A_bar == doctest::Approx(4.0));
  CHECK(std::abs(c1.C_bar) < 1e-15);
  for (int i = 1; i < 50; ++i) {
    const auto c = asymp_constants(i / 50.0);
    CHECK(c.C_bar <= c.B_bar + 1e-12);
    CHECK(c.B_bar <= c.A_bar + 1e-12);
  }
}

TEST_CASE("polynomial RealFn derivatives and Laguerre polynomials") {
  const auto f = RealFn::polynomial({1.0, -2.0, 3.0}, "1-2x+3x^2");
  CHECK(f(2.0) == doctest::Approx(9.0));
  CHECK(f.derivative(2.0, 1) == doctest::Approx(10.0));
  CHECK(f.derivative(2.0, 2) == doctest::Approx(6.0));
  CHECK(f.derivative(2.0, 3) == 0.0);
  const auto l2 = RealFn::laguerre(2, 0.0);
  CHECK(l2(1.0) == doctest::Approx(-0.5));
  const auto l3 = RealFn::laguerre(3, 1.5);
  // L_3^{(b)}(x) closed form.
  const double x = 0.7, b = 1.5;
  const double ref = (b + 1) * (b + 2) * (b + 3) / 6 -
                     (b + 2) * (b + 3) / 2 * x + (b + 3) / 2 * x * x -
                     x * x * x / 6;
  CHECK(l3(x) == doctest::Approx(ref).epsilon(1e-14));
  CHECK_THROWS_AS(RealFn::constant(1.0).derivative(1.0, 9), DomainError);
}

} // TEST_SUITE
