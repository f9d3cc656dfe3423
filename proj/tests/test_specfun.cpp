#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fkl/quadrature.hpp"
#include "fkl/specfun.hpp"


using fkl::ln_gamma;

namespace {

// Reference values computed at 40-digit precision, rounded to nearest double.
struct Ref {
  double x;
  double value;
};

constexpr Ref kGammaRefs[] = {
    {0.1, 9.513507698668732},
    {0.25, 3.625609908221908},
    {0.5, 1.772453850905516},
    {1.0, 1.0},
    {1.5, 0.886226925452758},
    {2.0, 1.0},
    {3.0, 2.0},
    {4.0, 6.0},
    {5.0, 24.0},
    {7.5, 1871.2543057977884},
    {10.0, 362880.0},
    {12.0, 39916800.0},
    {20.0, 1.21645100408832e+17},
    {30.0, 8.841761993739702e+30},
    {0.01, 99.4325851191506},
    {33.0, 2.631308369336935e+35},
};

constexpr Ref kLnGammaRefs[] = {
    {0.1, 2.252712651734206},
    {0.5, 0.5723649429247001},
    {1.0, 0.0},
    {2.0, 0.0},
    {3.25, 0.9358019311087253},
    {10.0, 12.801827480081469},
    {30.25, 72.104204742008},
    {50.0, 144.5657439463449},
    {77.7, 259.26043689759797},
    {100.0, 359.1342053695754},
};

}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("gamma matches reference values to 1e-13 relative on (0, 30]") {
  for (const Ref& r : kGammaRefs) {
    if (r.x > 30.0) continue;
    CAPTURE(r.x);
    CHECK(std::abs(fkl::gamma(r.x) - r.value) <= 1e-13 * r.value);
  }
}

TEST_CASE("gamma at factorial points") {
  double fact = 1.0;
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(std::abs(fkl::gamma(n) - fact) <= 1e-12 * fact);
    fact *= n;
  }
}

TEST_CASE("gamma recurrence") {
  for (double x = 0.1; x <= 20.0; x += 0.37) {
    CAPTURE(x);
    const double lhs = fkl::gamma(x + 1.0);
    CHECK(std::abs(lhs - x * fkl::gamma(x)) <= 1e-12 * lhs);
  }
}

TEST_CASE("gamma overflow and near-overflow behavior") {
  CHECK(std::abs(fkl::gamma(171.0) - 7.257415615307999e+306) <=
        1e-10 * 7.257415615307999e+306);
  CHECK(std::isinf(fkl::gamma(172.0)));
  CHECK(std::isinf(fkl::gamma(1000.0)));
}

TEST_CASE("gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(fkl::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(fkl::gamma(-1.0), std::domain_error);
  CHECK_THROWS_AS(fkl::gamma(-0.5), std::domain_error);
  CHECK_THROWS_AS(fkl::gamma(std::nan("")), std::domain_error);
}

TEST_CASE("ln_gamma matches reference values to 1e-12 absolute on (0, 100]") {
  for (const Ref& r : kLnGammaRefs) {
    CAPTURE(r.x);
    CHECK(std::abs(ln_gamma(r.x) - r.value) <= 1e-12);
  }
}

TEST_CASE("ln_gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(ln_gamma(-3.0), std::domain_error);
}

TEST_CASE("exp(ln_gamma) agrees with gamma") {
  for (double x : {0.2, 0.5, 1.0, 2.5, 7.0, 20.0, 55.0, 100.0}) {
    CAPTURE(x);
    const double g = fkl::gamma(x);
    CHECK(std::abs(std::exp(ln_gamma(x)) - g) <= 1e-12 * g);
  }
}

TEST_CASE("euler_mascheroni constant") {
  CHECK(fkl::euler_mascheroni == 0.5772156649015329);
}

TEST_CASE("euler_mascheroni equals -integral of ln t exp(-t)") {
  // In x = 1/t coordinates the integrand of int ln(t) e^(-t) dt becomes
  // -ln(x) e^(-1/x) / x^2; the engine maps it back with its own transform.
  auto f = [](double x) {
    return -std::log(x) * std::exp(-1.0 / x) / (x * x);
  };
  const fkl::QuadratureResult r = fkl::integrate_adaptive(
      f, fkl::IntegrandDomain::half_line_exponential(1.0), 1e-10);
  CHECK(std::abs(r.value - (-fkl::euler_mascheroni)) <= 1e-8);
}

}  // TEST_SUITE
