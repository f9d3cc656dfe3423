#pragma once

namespace fkl {

// Euler-Mascheroni constant, nearest double.
inline constexpr double euler_mascheroni = 0.5772156649015329;

// Gamma function on (0, +inf), Lanczos approximation with g = 7 and 9
// coefficients. Relative error stays below 1e-13 on (0, 30]. Arguments past
// the double overflow threshold (~171.62) return +inf; x <= 0 throws
// std::domain_error.
double gamma(double x);

// Natural log of Gamma on (0, +inf). Absolute error below 1e-12 on (0, 100].
// x <= 0 throws std::domain_error.
double ln_gamma(double x);

}  // namespace fkl
