#include "fkl/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fkl {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kSqrt2Pi = 2.5066282746310002;
constexpr double kLnSqrt2Pi = 0.91893853320467274;

double series(double z) {
  // z = x - 1
  double a = kCoef[0];
  for (int i = 1; i < 9; ++i) a += kCoef[i] / (z + i);
  return a;
}

void require_positive(double x, const char* who) {
  if (!(x > 0.0)) throw std::domain_error(std::string(who) + ": argument must be > 0");
}

}  // namespace

double gamma(double x) {
  require_positive(x, "gamma");
  if (x < 0.5) return gamma(x + 1.0) / x;  // recurrence keeps the series in range
  if (x > 140.0) return std::exp(ln_gamma(x));  // pow(t, z+0.5) would overflow first
  const double z = x - 1.0;
  const double t = z + kG + 0.5;
  return kSqrt2Pi * std::pow(t, z + 0.5) * std::exp(-t) * series(z);
}

double ln_gamma(double x) {
  require_positive(x, "ln_gamma");
  if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);
  const double z = x - 1.0;
  const double t = z + kG + 0.5;
  return kLnSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(series(z));
}

}  // namespace fkl
