#include "fkl/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <new>
#include <sstream>

#include "fkl/specfun.hpp"

namespace fkl {

namespace {

constexpr std::size_t kWorkspaceSize = 4096;

// Relative floor in the convergence test err <= max(tol, kRelFloor * |value|).
constexpr double kRelFloor = 1e-13;

// e^(-t) underflows to zero past this, so Gamma-type integrands carry no
// representable mass beyond it.
constexpr double kHalfLineCut = 745.0;

// The integrator's C frames must not see C++ exceptions; failures are
// recorded here and rethrown after control returns.
struct CallState {
  const std::function<double(double)>* f = nullptr;
  std::size_t evaluations = 0;
  bool bad_value = false;
  double bad_x = 0.0;
};

double call_thunk(double x, void* raw) {
  auto* st = static_cast<CallState*>(raw);
  ++st->evaluations;
  const double y = (*st->f)(x);
  if (std::isfinite(y)) return y;
  if (!st->bad_value) {
    st->bad_value = true;
    st->bad_x = x;
  }
  return 0.0;
}

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const {
    gsl_integration_workspace_free(w);
  }
};

using WorkspacePtr = std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

[[maybe_unused]] const auto kSilencedHandler = gsl_set_error_handler_off();

QuadratureResult run_qags(const std::function<double(double)>& f, double a,
                          double b, double tol) {
  CallState st;
  st.f = &f;
  gsl_function g;
  g.function = &call_thunk;
  g.params = &st;

  WorkspacePtr ws(gsl_integration_workspace_alloc(kWorkspaceSize));
  if (!ws) throw std::bad_alloc();

  double value = 0.0;
  double abserr = 0.0;
  const int status = gsl_integration_qags(&g, a, b, tol, kRelFloor,
                                          kWorkspaceSize, ws.get(), &value,
                                          &abserr);

  if (st.bad_value) {
    std::ostringstream msg;
    msg << "integrand returned a non-finite value at x = " << st.bad_x;
    throw std::invalid_argument(msg.str());
  }

  QuadratureResult r{value, abserr, st.evaluations};
  if (status != GSL_SUCCESS &&
      !(abserr <= std::max(tol, kRelFloor * std::abs(value)))) {
    throw QuadratureError(
        std::string("quadrature did not converge: ") + gsl_strerror(status), r);
  }
  return r;
}

// int_0^inf f(x) dx = int_0^1 f(x(u)) x'(u) du, x(u) = (-ln u)^(-1/a).
double cdf_weighted(const std::function<double(double)>& f, double a,
                    double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;  // node collision with an endpoint
  const double L = -std::log(u);
  const double x = std::pow(L, -1.0 / a);
  const double fx = f(x);
  if (fx == 0.0) return 0.0;  // keep decayed tails from meeting an inf Jacobian
  return fx * std::pow(L, -1.0 / a - 1.0) / (a * u);
}

// int_0^inf f(x) dx = (1/a) int_0^inf f(t^(-1/a)) t^(-1/a-1) dt, t = x^(-a).
double exp_weighted(const std::function<double(double)>& f, double a,
                    double t) {
  if (t <= 0.0) return 0.0;
  const double x = std::pow(t, -1.0 / a);
  const double fx = f(x);
  if (fx == 0.0) return 0.0;
  return fx * std::pow(t, -1.0 / a - 1.0) / a;
}

// Gamma-type integral over the truncated half line, used by the derivation
// oracle where the substitution has already been done exactly.
QuadratureResult run_gamma_type(const std::function<double(double)>& h,
                                double tol) {
  return run_qags(h, 0.0, kHalfLineCut, tol);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    const IntegrandDomain& domain,
                                    double tol) {
  if (!(tol > 0.0))
    throw std::domain_error("integrate_adaptive: tol must be > 0");

  if (domain.kind() == IntegrandDomain::Kind::unit_interval)
    return run_qags(f, 0.0, 1.0, tol);

  const double a = domain.alpha_ref();
  switch (domain.transform()) {
    case IntegrandDomain::Transform::cdf_substitution:
      return run_qags([&](double u) { return cdf_weighted(f, a, u); }, 0.0,
                      1.0, tol);
    case IntegrandDomain::Transform::exponential_substitution:
      return run_qags([&](double t) { return exp_weighted(f, a, t); }, 0.0,
                      kHalfLineCut, tol);
    default:
      throw std::domain_error(
          "integrate_adaptive: half-line integrals need a substitution");
  }
}

std::array<QuadratureResult, 4> verify_derivation_integrals(FrechetShape a1,
                                                            FrechetShape a2,
                                                            double tol) {
  if (!(tol > 0.0))
    throw std::domain_error("verify_derivation_integrals: tol must be > 0");
  const double a = a1.alpha;
  const double r = a2.alpha / a;

  // After t = x^(-a1) the four integrands become Gamma-type:
  //   1. (1/a) e^(-t)
  //   2. -(1/a^2) ln(t) e^(-t)
  //   3. (1/a) t e^(-t)
  //   4. (1/a) t^(a2/a1) e^(-t)
  std::array<QuadratureResult, 4> out;
  out[0] = run_gamma_type([a](double t) { return std::exp(-t) / a; }, tol);
  out[1] = run_gamma_type(
      [a](double t) { return -std::log(t) * std::exp(-t) / (a * a); }, tol);
  out[2] = run_gamma_type([a](double t) { return t * std::exp(-t) / a; }, tol);
  out[3] = run_gamma_type(
      [a, r](double t) { return std::pow(t, r) * std::exp(-t) / a; }, tol);
  return out;
}

}  // namespace fkl
