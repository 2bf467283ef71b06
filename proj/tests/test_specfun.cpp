#include "doctest.h"

#include "glspec/specfun.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <random>

using namespace glspec;
using cd = std::complex<double>;

namespace {

// Frozen from tests/oracles/specfun_oracles.py (mpmath, 50 digits).
struct LogGammaRef {
  double re, im, lg_re, lg_im;
};
constexpr LogGammaRef kLogGamma[] = {
    {3.0, 4.0, -1.7566267846037841105, 4.7426644380346579282},
    {0.5, 100.0, -156.16069414628498918, 360.51743526790643592},
    {10.0, -50.0, -40.400262350482971022, -159.62737280472833495},
    {-2.5, 0.3, -0.43208889261320192052, -9.0933454212897415073},
    {-2.5, 0.0, -0.056243716497674050673, -9.4247779607693797154},
    {100000.0, 100000.0, 1007405.0783746975228, 1164489.3291652665731},
    {0.25, -0.75, -0.16972508567707298578, 1.3396434429923602547},
    {-7.3, -12.1, -38.016772405565762431, -3.4542736193477691036},
};

struct Hyp2F1Ref {
  double a, b, c, z, value;
};
constexpr Hyp2F1Ref kHyp[] = {
    {1, 1, 2, 0.5, 1.3862943611198906188},
    {0.5, 1.5, 2.5, 0.3, 1.1080625510569319884},
    {2, 1.5, 3, 0.9, 7.3012613638776173245},
    {2.0, 1.5, 3.0, 0.999, 118.85518903602486625},
    {1.75, 1.5, 2.75, 0.7, 2.9067476954533450212},
};

bool close(cd a, cd b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// Partial Bell polynomial by explicit enumeration of multiplicities.
double bell_by_partitions(int k, int j, const std::vector<double> &a) {
  double total = 0.0;
  std::vector<int> mult(static_cast<std::size_t>(k) + 1, 0);
  std::function<void(int, int, int)> rec = [&](int i, int left_k, int left_j) {
    if (i > k) {
      if (left_k == 0 && left_j == 0) {
        double term = std::tgamma(k + 1.0);
        for (int r = 1; r <= k; ++r) {
          term /= std::tgamma(mult[r] + 1.0) *
                  std::pow(std::tgamma(r + 1.0), mult[r]);
          term *= std::pow(a[r], mult[r]);
        }
        total += term;
      }
      return;
    }
    for (int m = 0; m * i <= left_k && m <= left_j; ++m) {
      mult[i] = m;
      rec(i + 1, left_k - m * i, left_j - m);
    }
    mult[i] = 0;
  };
  rec(1, k, j);
  return total;
}

} // namespace

TEST_SUITE("specfun") {

TEST_CASE("log_gamma frozen values") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(0.5) - std::log(std::sqrt(M_PI))) < 1e-15);
  for (const auto &r : kLogGamma) {
    const cd v = log_gamma(cd(r.re, r.im));
    INFO("z = " << r.re << " + " << r.im << "i");
    CHECK(close(v, cd(r.lg_re, r.lg_im), 1e-13));
  }
}

TEST_CASE("log_gamma poles") {
  CHECK_THROWS_AS(log_gamma(0.0), PoleError);
  CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
  CHECK_NOTHROW(log_gamma(cd(-3.0, 1e-9)));
}

TEST_CASE("log_gamma recurrence on a complex grid") {
  int checked = 0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const cd z(-9.7 + 2.1 * i, -20.0 + 4.3 * j);
      const cd lhs = std::exp(log_gamma(z + 1.0) - log_gamma(z));
      INFO("z = " << z);
      CHECK(std::abs(lhs - z) <= 1e-13 * std::abs(z));
      ++checked;
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("gauss_2f1 frozen values and trivial cases") {
  CHECK(gauss_2f1(1.3, 2.2, 3.1, 0.0) == 1.0);
  CHECK(gauss_2f1(1, 1, 2, 0.5) ==
        doctest::Approx(-std::log(0.5) / 0.5).epsilon(1e-15));
  for (const auto &r : kHyp) {
    INFO("(a,b,c,z) = " << r.a << "," << r.b << "," << r.c << "," << r.z);
    CHECK(gauss_2f1(r.a, r.b, r.c, r.z) ==
          doctest::Approx(r.value).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_2f1(1, 1, -2, 0.5), DomainError);
  CHECK_THROWS_AS(gauss_2f1(1, 1, 2, 1.0), DomainError);
}

TEST_CASE("gauss_2f1 matches the Euler integral on random parameters") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ub(0.3, 2.5);
  std::uniform_real_distribution<double> ugap(0.2, 2.0);
  std::uniform_real_distribution<double> ua(-1.0, 2.5);
  std::uniform_real_distribution<double> uz(0.0, 0.97);
  boost::math::quadrature::tanh_sinh<double> ts;
  for (int i = 0; i < 20; ++i) {
    const double b = ub(rng), c = b + ugap(rng), a = ua(rng), z = uz(rng);
    // xc is the signed distance to the nearest endpoint; it keeps 1 - t
    // accurate near t = 1.
    auto f = [&](double t, double xc) {
      const double one_minus_t = xc > 0 ? xc : 1 - t;
      return std::pow(t, b - 1) * std::pow(one_minus_t, c - b - 1) *
             std::pow(1 - z * t, -a);
    };
    const double integral = ts.integrate(f, 0.0, 1.0);
    const double ref =
        std::tgamma(c) / (std::tgamma(b) * std::tgamma(c - b)) * integral;
    INFO("a,b,c,z = " << a << "," << b << "," << c << "," << z);
    CHECK(gauss_2f1(a, b, c, z) == doctest::Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("2F1 assembles the generator weight integral") {
  const double a = 0.5, b = 1.0, y = 0.25;
  const double B = b + 1 / a + 1;
  const double via_2f1 = std::pow(y, B) / B *
                         gauss_2f1(a * (b + 1) + 1, a + 1, a * (b + 1) + 2,
                                   std::pow(y, 1 / a));
  boost::math::quadrature::tanh_sinh<double> ts;
  const double direct = ts.integrate(
      [&](double r) {
        return std::pow(r, b + 1 / a) * std::pow(1 - std::pow(r, 1 / a), -a - 1);
      },
      0.0, y);
  CHECK(via_2f1 == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("wright_1psi1") {
  const auto p = make_params(0.5, 1.0);
  SUBCASE("n = 0 is the exponential") {
    for (double x = -10.0; x <= 10.0; x += 0.5) {
      const auto r = wright_1psi1(p, 0, x);
      CHECK(r.real() == doctest::Approx(std::exp(x)).epsilon(1e-12));
    }
    const cd z(1.5, -2.0);
    CHECK(close(wright_1psi1(p, 0, z).value, std::exp(z), 1e-13));
  }
  SUBCASE("classical direct sum") {
    const auto c = make_params(1.0, 0.0);
    long double ref = 0.0L, f = 1.0L;
    for (int k = 0; k < 40; ++k) {
      if (k > 0) {
        f /= k;
      }
      ref += (k + 1.0L) * (k + 2.0L) * ((k % 2) ? -1.0L : 1.0L) * f;
    }
    CHECK(wright_1psi1(c, 2, -1.0).real() ==
          doctest::Approx(static_cast<double>(ref)).epsilon(1e-14));
  }
  SUBCASE("frozen extended values") {
    const auto r = wright_1psi1(p, 1, -2.0);
    CHECK(r.real() == doctest::Approx(-0.13533528323661269189).epsilon(1e-13));
    CHECK(r.abs_term_sum >= std::abs(r.real()));
    // binary64 keeps results whose cancellation estimate is below 1e8, so
    // the error contract is condition * unit roundoff.
    const double ref = -0.88954879907919750831;
    const auto q = make_params(0.75, 0.5);
    const auto d = wright_1psi1(q, 4, -6.0);
    CHECK(std::abs(d.real() - ref) <=
          4 * d.condition() * unit_roundoff<double>() * std::abs(ref));
    const auto e = wright_1psi1(q.with_precision(Precision::ext128), 4, -6.0);
    CHECK(e.precision_used == Precision::ext128);
    CHECK(e.real() == doctest::Approx(ref).epsilon(1e-15));
  }
  SUBCASE("escalates on cancellation") {
    const auto r = wright_1psi1(p, 3, -30.0);
    CHECK(r.precision_used != Precision::binary64);
    CHECK(precision_adequate(r));
  }
}

TEST_CASE("frak_I and cal_I") {
  const auto p = make_params(0.5, 1.0);
  CHECK(frak_I(p, 0.0).real() ==
        doctest::Approx(1.0 / std::tgamma(3.0)).epsilon(1e-15));
  CHECK(frak_I(p, -3.0).real() ==
        doctest::Approx(0.38113931870071679242).epsilon(1e-13));
  CHECK(frak_I(make_params(0.75, 0.5), 2.5).real() ==
        doctest::Approx(2.4282928644782620381).epsilon(1e-13));
  CHECK(cal_I(p, 0.0).real() == doctest::Approx(1.0));
  CHECK(cal_I(p, -3.0).real() ==
        doctest::Approx(0.011726245353340552046).epsilon(1e-12));
  CHECK(cal_I(make_params(0.75, 0.5), 4.0).real() ==
        doctest::Approx(12.103595493723680555).epsilon(1e-13));
  CHECK(close(cal_I(p, cd(1, 2)).value,
              cd(0.058888301807486475061, 2.6514595921621432484), 1e-13));
  const auto c = make_params(1.0, 0.0);
  for (double x : {0.5, 2.0, 7.0}) {
    const double i0 = std::cyl_bessel_i(0.0, 2 * std::sqrt(x));
    CHECK(frak_I(c, x).real() == doctest::Approx(i0).epsilon(1e-13));
    CHECK(cal_I(c, x).real() == doctest::Approx(i0).epsilon(1e-13));
  }
}

TEST_CASE("cal_I maximum-modulus growth envelope") {
  const auto p = make_params(0.5, 1.0);
  const double r = 40.0;
  // Positive coefficients: the maximum modulus on |z| = r sits at z = r.
  const double m = cal_I(p, r).real();
  CHECK(m <= std::exp(p.poly_growth_rate() * std::pow(r, 1 / 1.5)));
  CHECK(std::abs(cal_I(p, cd(0, r)).value) <= m);
}

TEST_CASE("Bell table") {
  const auto p = make_params(0.5, 1.0);
  const auto t = bell_table(p, 10);
  CHECK(t(1, 1) == doctest::Approx(-2.0));
  CHECK(t(0, 0) == 1.0);
  std::vector<double> a(11, 0.0);
  for (int i = 1; i <= 10; ++i) {
    a[i] = to_double(t.argument(i));
  }
  CHECK(a[2] == doctest::Approx(2.0));
  CHECK(a[3] == 0.0);
  CHECK(t(3, 2) == doctest::Approx(3 * a[1] * a[2]));
  for (int k = 1; k <= 10; ++k) {
    CHECK(t(k, k) == doctest::Approx(std::pow(a[1], k)));
    CHECK(t(k, 1) == doctest::Approx(a[k]));
  }
  const auto q = make_params(0.75, 0.5);
  const auto u = bell_table(q, 9);
  std::vector<double> b(10, 0.0);
  for (int i = 1; i <= 9; ++i) {
    b[i] = to_double(u.argument(i));
    CHECK(b[i] == doctest::Approx(std::tgamma(i - 1 / 0.75) /
                                  std::tgamma(-1 / 0.75))
                      .epsilon(1e-12));
  }
  for (int k = 1; k <= 9; ++k) {
    for (int j = 1; j <= k; ++j) {
      CHECK(u(k, j) ==
            doctest::Approx(bell_by_partitions(k, j, b)).epsilon(1e-11));
    }
  }
  CHECK_THROWS_AS(bell_table(make_params(1.0, 0.0), 4), DomainError);
}

} // TEST_SUITE
