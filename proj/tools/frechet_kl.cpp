#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fkl/divergence.hpp"
#include "fkl/frechet.hpp"
#include "fkl/quadrature.hpp"
#include "fkl/specfun.hpp"

namespace {

using nlohmann::ordered_json;

// 15 significant digits for human-facing lines, 17 for machine files so a
// strtod round trip is bit exact. %g prints non-finite values as inf/nan.
std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}
std::string human(double v) { return fmt(v, 15); }
std::string machine(double v) { return fmt(v, 17); }

int usage_error(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return 2;
}

// ---------------------------------------------------------------- eval ----

struct EvalArgs {
  std::string subject;
  double alpha = 0.0;
  double x = 0.0, u = 0.0, s = 1.0, m = 0.0;
  int k = 1;
  bool has_x = false, has_u = false, has_k = false, has_s = false,
       has_m = false;
};

int run_eval(const EvalArgs& a) {
  if (a.subject == "pdf" || a.subject == "cdf") {
    if (!a.has_x) return usage_error("eval " + a.subject + " requires --x");
    if (a.has_u || a.has_k)
      return usage_error("eval " + a.subject + " accepts only --x, --s, --m");
    const fkl::GeneralizedFrechet d(a.alpha, a.s, a.m);
    const double v = a.subject == "pdf" ? fkl::gen_pdf(d, a.x)
                                        : fkl::gen_cdf(d, a.x);
    std::printf("%s\n", human(v).c_str());
    return 0;
  }

  if (a.has_s || a.has_m)
    return usage_error("--s and --m apply only to pdf and cdf");
  const fkl::FrechetShape d(a.alpha);

  if (a.subject == "quantile") {
    if (!a.has_u) return usage_error("eval quantile requires --u");
    if (a.has_x || a.has_k)
      return usage_error("eval quantile accepts only --u");
    std::printf("%s\n", human(fkl::quantile(d, a.u)).c_str());
    return 0;
  }
  if (a.subject == "moment") {
    if (!a.has_k) return usage_error("eval moment requires --k");
    if (a.has_x || a.has_u) return usage_error("eval moment accepts only --k");
    std::printf("%s\n",
                human(fkl::raw_moment(d, fkl::MomentOrder(a.k))).c_str());
    return 0;
  }
  if (a.has_x || a.has_u || a.has_k)
    return usage_error("eval " + a.subject + " takes no value options");
  const double v =
      a.subject == "skewness" ? fkl::skewness(d) : fkl::excess_kurtosis(d);
  std::printf("%s\n", human(v).c_str());
  return 0;
}

// ------------------------------------------------------------------ kl ----

int run_kl(double a1, double a2, const std::string& method, double tol,
           std::size_t n, std::uint64_t seed) {
  const fkl::FrechetShape p(a1), q(a2);
  double value = 0.0, err = 0.0;
  if (method == "closed-form") {
    value = fkl::kl_closed_form(p, q).value;
  } else if (method == "quadrature") {
    const fkl::KlResult r = fkl::kl_quadrature(p, q, tol);
    value = r.value;
    err = r.error_estimate;
  } else if (method == "monte-carlo") {
    std::mt19937_64 rng(seed);
    const fkl::KlResult r = fkl::kl_monte_carlo(p, q, n, rng);
    value = r.value;
    err = r.error_estimate;
  } else {  // boxed-as-printed, enforced by the option check
    value = fkl::boxed_formula_as_printed(p, q);
  }
  std::printf("%s %s %s\n", human(value).c_str(), method.c_str(),
              human(err).c_str());
  return 0;
}

// -------------------------------------------------------------- verify ----

constexpr double kAgreeTol = 1e-6;

struct SweepSpec {
  std::vector<double> alpha1_grid{0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  std::vector<double> alpha2_grid{0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  std::vector<std::string> methods{"closed-form", "quadrature"};
  double tol = 1e-8;
  std::size_t mc_samples = 100000;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "csv";
};

struct SweepRow {
  double alpha1 = 0.0, alpha2 = 0.0;
  std::optional<double> closed, quad, quad_err, mc, mc_se, boxed;
  std::optional<bool> agree;
};

void write_csv(const std::vector<SweepRow>& rows, bool closed, bool quad,
               bool mc, bool boxed, bool agree, std::ofstream& os) {
  os << "alpha1,alpha2";
  if (closed) os << ",kl_closed";
  if (quad) os << ",kl_quad,kl_quad_err";
  if (mc) os << ",kl_mc,kl_mc_se";
  if (boxed) os << ",kl_boxed";
  if (agree) os << ",agree";
  os << "\n";
  for (const SweepRow& r : rows) {
    os << machine(r.alpha1) << "," << machine(r.alpha2);
    if (closed) os << "," << machine(*r.closed);
    if (quad) os << "," << machine(*r.quad) << "," << machine(*r.quad_err);
    if (mc) os << "," << machine(*r.mc) << "," << machine(*r.mc_se);
    if (boxed) os << "," << machine(*r.boxed);
    if (agree) os << "," << (*r.agree ? "true" : "false");
    os << "\n";
  }
}

void json_value(ordered_json& obj, const char* name, double v) {
  if (std::isfinite(v)) {
    obj[name] = v;
  } else {
    obj[name] = nullptr;
    obj[std::string(name) + "_defined"] = false;
  }
}

void write_json(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                std::size_t disagreements, std::ofstream& os) {
  ordered_json doc;
  doc["spec"] = {{"alpha1_grid", spec.alpha1_grid},
                 {"alpha2_grid", spec.alpha2_grid},
                 {"methods", spec.methods},
                 {"tol", spec.tol},
                 {"mc_samples", spec.mc_samples},
                 {"seed", spec.seed}};
  doc["rows"] = ordered_json::array();
  for (const SweepRow& r : rows) {
    ordered_json o;
    o["alpha1"] = r.alpha1;
    o["alpha2"] = r.alpha2;
    if (r.closed) json_value(o, "kl_closed", *r.closed);
    if (r.quad) json_value(o, "kl_quad", *r.quad);
    if (r.quad_err) json_value(o, "kl_quad_err", *r.quad_err);
    if (r.mc) json_value(o, "kl_mc", *r.mc);
    if (r.mc_se) json_value(o, "kl_mc_se", *r.mc_se);
    if (r.boxed) json_value(o, "kl_boxed", *r.boxed);
    if (r.agree) o["agree"] = *r.agree;
    doc["rows"].push_back(std::move(o));
  }
  doc["summary"] = {{"pairs", rows.size()},
                    {"disagreements", disagreements}};
  os << doc.dump(2) << "\n";
}

int run_verify(const SweepSpec& spec) {
  bool closed = false, quad = false, mc = false, boxed = false;
  for (const std::string& m : spec.methods) {
    if (m == "closed-form") closed = true;
    else if (m == "quadrature") quad = true;
    else if (m == "monte-carlo") mc = true;
    else if (m == "boxed-as-printed") boxed = true;
    else return usage_error("unknown method '" + m + "'");
  }
  if (spec.methods.empty()) return usage_error("--methods must not be empty");
  if (spec.alpha1_grid.empty() || spec.alpha2_grid.empty())
    return usage_error("grids must not be empty");
  for (double a : spec.alpha1_grid)
    if (!(a > 0.0)) return usage_error("--alpha1-grid entries must be > 0");
  for (double a : spec.alpha2_grid)
    if (!(a > 0.0)) return usage_error("--alpha2-grid entries must be > 0");
  if (!(spec.tol > 0.0)) return usage_error("--tol must be > 0");
  if (mc && spec.mc_samples < 2)
    return usage_error("--mc-samples must be >= 2");

  const bool agree = closed && quad;
  std::mt19937_64 rng(spec.seed);  // one stream, consumed in row order
  std::vector<SweepRow> rows;
  rows.reserve(spec.alpha1_grid.size() * spec.alpha2_grid.size());
  std::size_t disagreements = 0;

  for (double a1 : spec.alpha1_grid) {
    for (double a2 : spec.alpha2_grid) {
      const fkl::FrechetShape p(a1), q(a2);
      SweepRow row;
      row.alpha1 = a1;
      row.alpha2 = a2;
      if (closed) row.closed = fkl::kl_closed_form(p, q).value;
      if (quad) {
        const fkl::KlResult r = fkl::kl_quadrature(p, q, spec.tol);
        row.quad = r.value;
        row.quad_err = r.error_estimate;
      }
      if (mc) {
        const fkl::KlResult r =
            fkl::kl_monte_carlo(p, q, spec.mc_samples, rng);
        row.mc = r.value;
        row.mc_se = r.error_estimate;
      }
      if (boxed) row.boxed = fkl::boxed_formula_as_printed(p, q);
      if (agree) {
        const double scale = std::max(1.0, std::abs(*row.closed));
        row.agree = std::abs(*row.closed - *row.quad) <= kAgreeTol * scale;
        if (!*row.agree) ++disagreements;
      }
      rows.push_back(row);
    }
  }

  std::ofstream os(spec.out);
  if (!os) return usage_error("cannot open '" + spec.out + "' for writing");
  if (spec.format == "csv")
    write_csv(rows, closed, quad, mc, boxed, agree, os);
  else
    write_json(spec, rows, disagreements, os);
  os.close();
  if (!os) return usage_error("failed writing '" + spec.out + "'");

  std::printf("%zu pairs, %zu disagreements\n", rows.size(), disagreements);
  return disagreements == 0 ? 0 : 1;
}

// ---------------------------------------------------------- derivation ----

int run_derivation(double a1, double a2, double tol) {
  const auto rows = fkl::verify_derivation_integrals(fkl::FrechetShape(a1),
                                                     fkl::FrechetShape(a2),
                                                     tol);
  const double closed[4] = {
      1.0 / a1,
      fkl::euler_mascheroni / (a1 * a1),
      1.0 / a1,
      fkl::gamma((a1 + a2) / a1) / a1,
  };
  static const char* const names[4] = {"first", "second", "third", "fourth"};
  std::printf("%-8s %-22s %-22s %s\n", "integral", "closed", "quadrature",
              "abs_diff");
  for (int i = 0; i < 4; ++i) {
    std::printf("%-8s %-22s %-22s %s\n", names[i], human(closed[i]).c_str(),
                human(rows[i].value).c_str(),
                human(std::abs(closed[i] - rows[i].value)).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frechet shape family: densities, moments, sampling, and "
               "Kullback-Leibler divergences cross-checked three ways"};
  app.require_subcommand(1);

  EvalArgs ev;
  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate a distribution quantity at a point");
  eval->add_option("subject", ev.subject, "What to evaluate")
      ->required()
      ->check(CLI::IsMember(
          {"pdf", "cdf", "quantile", "moment", "skewness", "kurtosis"}));
  eval->add_option("--alpha", ev.alpha, "Shape parameter")->required();
  CLI::Option* opt_x = eval->add_option("--x", ev.x, "Evaluation point");
  CLI::Option* opt_u = eval->add_option("--u", ev.u, "Probability in (0,1)");
  CLI::Option* opt_k = eval->add_option("--k", ev.k, "Moment order");
  CLI::Option* opt_s = eval->add_option("--s", ev.s, "Scale (pdf/cdf only)");
  CLI::Option* opt_m =
      eval->add_option("--m", ev.m, "Location (pdf/cdf only)");

  double kl_a1 = 0.0, kl_a2 = 0.0, kl_tol = 1e-8;
  std::size_t kl_n = 100000;
  std::uint64_t kl_seed = 42;
  std::string kl_method = "closed-form";
  CLI::App* kl = app.add_subcommand(
      "kl", "Kullback-Leibler divergence between two shape laws");
  kl->add_option("--alpha1", kl_a1, "Shape of p")->required();
  kl->add_option("--alpha2", kl_a2, "Shape of q")->required();
  kl->add_option("--method", kl_method, "How to compute it")
      ->check(CLI::IsMember(
          {"closed-form", "quadrature", "monte-carlo", "boxed-as-printed"}));
  kl->add_option("--tol", kl_tol, "Quadrature tolerance");
  kl->add_option("--n", kl_n, "Monte Carlo sample count");
  kl->add_option("--seed", kl_seed, "Monte Carlo seed");

  SweepSpec sw;
  CLI::App* verify = app.add_subcommand(
      "verify", "Sweep a grid of shape pairs and cross-check methods");
  verify->add_option("--alpha1-grid", sw.alpha1_grid, "Grid for p")
      ->delimiter(',');
  verify->add_option("--alpha2-grid", sw.alpha2_grid, "Grid for q")
      ->delimiter(',');
  verify->add_option("--methods", sw.methods, "Methods to run")
      ->delimiter(',');
  verify->add_option("--tol", sw.tol, "Quadrature tolerance");
  verify->add_option("--mc-samples", sw.mc_samples, "Monte Carlo sample count");
  verify->add_option("--seed", sw.seed, "Monte Carlo seed");
  verify->add_option("--out", sw.out, "Output file")->required();
  verify->add_option("--format", sw.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  double dv_a1 = 0.0, dv_a2 = 0.0, dv_tol = 1e-8;
  CLI::App* derivation = app.add_subcommand(
      "derivation",
      "Check the four integrals behind the closed form by quadrature");
  derivation->add_option("--alpha1", dv_a1, "Shape of p")->required();
  derivation->add_option("--alpha2", dv_a2, "Shape of q")->required();
  derivation->add_option("--tol", dv_tol, "Quadrature tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) {
      ev.has_x = opt_x->count() > 0;
      ev.has_u = opt_u->count() > 0;
      ev.has_k = opt_k->count() > 0;
      ev.has_s = opt_s->count() > 0;
      ev.has_m = opt_m->count() > 0;
      return run_eval(ev);
    }
    if (*kl) return run_kl(kl_a1, kl_a2, kl_method, kl_tol, kl_n, kl_seed);
    if (*verify) return run_verify(sw);
    if (*derivation) return run_derivation(dv_a1, dv_a2, dv_tol);
  } catch (const fkl::QuadratureError& e) {
    std::fprintf(stderr, "error: %s (best estimate %s, error bound %s)\n",
                 e.what(), machine(e.best_estimate().value).c_str(),
                 machine(e.best_estimate().abs_error_estimate).c_str());
    return 3;
  } catch (const std::invalid_argument& e) {
    // the quadrature engine's signal for integrand overflow or nan
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
