#pragma once

#include <cstddef>
#include <optional>
#include <random>

#include "fkl/frechet.hpp"

namespace fkl {

enum class KlMethod { closed_form, quadrature, monte_carlo };

const char* to_string(KlMethod m);

// A Kullback-Leibler divergence estimate. error_estimate is 0 for the closed
// form, the engine's absolute error bound for quadrature, and the standard
// error for Monte Carlo. detail carries the evaluation count (quadrature) or
// the sample size (Monte Carlo).
struct KlResult {
  double value = 0.0;
  KlMethod method = KlMethod::closed_form;
  double error_estimate = 0.0;
  std::optional<std::size_t> detail;
};

// D(p || q) = ln(a1/a2) + ((a2 - a1)/a1) * euler_mascheroni - 1
//             + gamma(1 + a2/a1)
// with a1 = p.alpha, a2 = q.alpha. Exact zero structure on the diagonal:
// every term vanishes or cancels when a1 == a2.
KlResult kl_closed_form(FrechetShape p, FrechetShape q);

// Same divergence as an expectation integral: after u = F_p(x) it is
// int_0^1 ln(p/q)(x(u)) du on the unit interval. Extreme shape ratios push
// the mass of that integrand into a sliver the subdivision budget cannot
// resolve; on non-convergence the routine falls back to the exponential
// substitution, which stays accurate there, before giving up.
KlResult kl_quadrature(FrechetShape p, FrechetShape q, double tol);

// Sample mean of the log density ratio under n draws from p; standard error
// from the sample variance. n must be >= 2.
KlResult kl_monte_carlo(FrechetShape p, FrechetShape q, std::size_t n,
                        std::mt19937_64& rng);

// Divergence between location-scale laws by quadrature. When p.m < q.m, p
// has mass where q has none and the divergence is +inf (returned as a value,
// error 0, no evaluations).
KlResult kl_generalized_quadrature(const GeneralizedFrechet& p,
                                   const GeneralizedFrechet& q, double tol);

// Closed-form variant with gamma((a1 + a2)/2) in place of gamma(1 + a2/a1).
// Not a valid divergence: on the diagonal it reduces to gamma(alpha) - 1,
// which vanishes only at alpha = 1 and alpha = 2, and it goes negative for
// some off-diagonal pairs. Kept so the verification sweep can display it
// next to the consistent form.
double boxed_formula_as_printed(FrechetShape p, FrechetShape q);

}  // namespace fkl
