#pragma once

#include <cstddef>
#include <random>
#include <vector>

namespace fkl {

// One-parameter Frechet law on (0, +inf):
//   f(x; alpha) = alpha * x^(-alpha-1) * e^(-x^(-alpha))
// alpha must be > 0 (constructor throws std::domain_error otherwise).
struct FrechetShape {
  double alpha;
  explicit FrechetShape(double a);
};

// Location-scale extension with support (m, +inf); s must be > 0.
struct GeneralizedFrechet {
  double alpha;
  double s;  // scale
  double m;  // location
  GeneralizedFrechet(double alpha, double s, double m);
};

// Moment order; k must be >= 1.
struct MomentOrder {
  int k;
  explicit MomentOrder(int order);
};

double pdf(FrechetShape d, double x);  // 0 for x <= 0
double cdf(FrechetShape d, double x);  // 0 for x <= 0

// Inverse cdf (-ln u)^(-1/alpha); requires 0 < u < 1.
double quantile(FrechetShape d, double u);

// Uniform draw in the open interval (0, 1) with 53-bit resolution.
double next_unit_uniform(std::mt19937_64& rng);

// n inverse-transform samples; deterministic given the engine state.
std::vector<double> sample(FrechetShape d, std::mt19937_64& rng, std::size_t n);

// Raw moment E[X^k] = Gamma(1 - k/alpha) for k < alpha, +inf otherwise
// (the moment does not exist; the infinity is the in-band signal for that).
double raw_moment(FrechetShape d, MomentOrder k);

// Central moment E[(X - mu)^k] by binomial expansion over raw moments;
// requires k >= 2, +inf when k >= alpha.
double central_moment(FrechetShape d, MomentOrder k);

// central_moment(k) / central_moment(2)^(k/2); requires k >= 2.
double reduced_central_moment(FrechetShape d, MomentOrder k);

double skewness(FrechetShape d);         // +inf for alpha <= 3
double excess_kurtosis(FrechetShape d);  // +inf for alpha <= 4

double gen_pdf(const GeneralizedFrechet& d, double x);  // 0 for x <= m
double gen_cdf(const GeneralizedFrechet& d, double x);  // 0 for x <= m

}  // namespace fkl
