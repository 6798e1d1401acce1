#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "negbin/algebra.hpp"
#include "negbin/cli.hpp"
#include "negbin/generation.hpp"
#include "negbin/states.hpp"
#include "negbin/statistics.hpp"
#include "negbin/sweep.hpp"

namespace negbin::cli {

namespace {

using std::numbers::pi;

const double kPhis[] = {0.0, pi / 4.0, pi / 2.0, 3.0 * pi / 4.0, pi};
const int kOrders[] = {1, 5, 30};

std::vector<double> grid_etas() {
  std::vector<double> etas;
  for (int i = 1; i <= 18; ++i) etas.push_back(0.05 * i);
  return etas;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double oracle_equivalence() {
  const TruncationPolicy fine{1e-20, 20000};
  double worst = 0.0;
  for (double phi : kPhis) {
    for (double eta : grid_etas()) {
      for (int M : kOrders) {
        const NBSParams p{M, eta, 0.0, phi};
        const auto closed = closed_stats(p);
        const auto oracle = oracle_stats(superposition(p, fine));
        worst = std::max({worst, rel(closed.mean_n, oracle.mean_n), rel(closed.second_moment, oracle.second_moment),
                          rel(*closed.mandel_q, *oracle.mandel_q), rel(closed.var_x1, oracle.var_x1),
                          rel(closed.var_x2, oracle.var_x2)});
      }
    }
  }
  return worst;
}

double recursion_grid() {
  double worst = 0.0;
  for (double phi : kPhis) {
    for (double eta : grid_etas()) {
      for (int M : kOrders) worst = std::max(worst, q_recursion_check(phi, eta, M));
    }
  }
  return worst;
}

double q_limits() {
  double worst = 0.0;
  for (int M : {1, 30}) {
    worst = std::max({worst, std::abs(q_closed(0.0, 1e-3, M) - 1.0), std::abs(q_closed(pi, 1e-3, M) + 1.0)});
  }
  return worst;
}

double q_symmetry() {
  double worst = 0.0;
  for (double phi : {0.3, 1.0, pi / 2.0, 2.5}) {
    for (double eta : {0.1, 0.5, 0.9}) worst = std::max(worst, std::abs(q_closed(2.0 * pi - phi, eta, 7) - q_closed(phi, eta, 7)));
  }
  return worst;
}

double pn_normalization() {
  double worst = 0.0;
  for (double phi : kPhis) {
    for (double eta : {0.2, 0.6, 0.9}) {
      double total = 0.0;
      for (const auto& row : distribution_rows({5, eta, 0.0, phi})) total += row.probability;
      worst = std::max(worst, std::abs(total - 1.0));
    }
  }
  return worst;
}

double generating_function_series() {
  long double series = 0.0L;
  long double power = 1.0L;
  for (std::size_t n = 0; n < 400; ++n, power *= 0.5L) series += pn_closed(n, pi / 4.0, 0.6, 5) * power;
  return std::abs(generating_function(0.5, pi / 4.0, 0.6, 5) - static_cast<double>(series));
}

struct LadderCase {
  int M;
  double eta;
  double theta;
};

const LadderCase kLadder[] = {{1, 0.3, 0.0}, {5, 0.6, 1.0}, {30, 0.2, pi}};
constexpr std::size_t kLadderNMax = 200;

template <typename F>
double over_ladder_cases(F f) {
  double worst = 0.0;
  for (const auto& c : kLadder) {
    const NBSParams p{c.M, c.eta, c.theta, 0.0};
    worst = std::max(worst, f(p, even_nbs_sequence(p), odd_nbs_sequence(p)));
  }
  return worst;
}

double ladder_annihilation() {
  return over_ladder_cases([](const NBSParams&, const ParitySequence& e, const ParitySequence& o) {
    return std::max(annihilation_residual(derive_f_even(e), e, kLadderNMax),
                    annihilation_residual(derive_f_odd(o), o, kLadderNMax));
  });
}

double gdo_relations() {
  return over_ladder_cases([](const NBSParams&, const ParitySequence& e, const ParitySequence& o) {
    return std::max(gdo_relations_check(derive_f_even(e), e, kLadderNMax).max(),
                    gdo_relations_check(derive_f_odd(o), o, kLadderNMax).max());
  });
}

double lowering_ratio() {
  return over_ladder_cases([](const NBSParams&, const ParitySequence& e, const ParitySequence& o) {
    return std::max(lowering_ratio_residual(e, kLadderNMax), lowering_ratio_residual(o, kLadderNMax));
  });
}

double eigenvalue_equations() {
  return over_ladder_cases([](const NBSParams& p, const ParitySequence&, const ParitySequence&) {
    const auto even = eigen_residual_even(p, kLadderNMax);
    const auto odd = eigen_residual_odd(p, kLadderNMax);
    return std::max({even.plain, even.normalized, odd.plain, odd.normalized});
  });
}

double nonlinear_coherent() {
  return over_ladder_cases([](const NBSParams& p, const ParitySequence&, const ParitySequence&) {
    return nonlinear_coherent_check(p, kLadderNMax);
  });
}

double coherent_two_photon() {
  double worst = 0.0;
  for (const Complex alpha : {Complex{1.0, 0.0}, Complex{0.7, -1.1}}) {
    worst = std::max({worst, two_photon_eigen_residual(even_coherent(alpha, kLadderNMax), alpha * alpha),
                      two_photon_eigen_residual(odd_coherent(alpha, kLadderNMax), alpha * alpha)});
  }
  return worst;
}

double structure_function() {
  double worst = 0.0;
  for (int M : {1, 5, 30}) {
    const NBSParams p{M, 0.55, 0.0, 0.0};
    const auto sf = derive_f_even(even_nbs_sequence(p));
    const double eta4 = std::pow(p.eta, 4);
    for (std::size_t N = 2; N <= 40; N += 2) {
      const double n = static_cast<double>(N);
      const double expected = n * (M + n - 1.0) * (M + n - 2.0) * eta4 / (n - 1.0);
      worst = std::max(worst, rel(sf.S(N), expected));
    }
  }
  return worst;
}

std::vector<double> cat_fidelities() {
  std::vector<double> out;
  for (int M : {100, 1000, 10000}) {
    const NBSParams p{M, std::sqrt(1.0 / M), 0.0, pi};
    const auto sup = superposition(p);
    out.push_back(fidelity(sup, cat_state(Complex{1.0, 0.0}, pi, sup.n_max())));
  }
  return out;
}

double kerr_infidelity() {
  double worst = 0.0;
  for (const NBSParams p : {NBSParams{5, 0.4, 0.0, 0.0}, NBSParams{1, 0.8, 1.2, 0.0}}) {
    const auto out = kerr_generate(p, 1.0);
    NBSParams target = p;
    target.phi = pi / 2.0;
    worst = std::max(worst, 1.0 - fidelity(out, superposition(target, out.n_max())));
  }
  return worst;
}

double dispersive_infidelity() {
  double worst = 0.0;
  for (double phi : {0.0, pi / 4.0, pi / 2.0, pi}) {
    const NBSParams p{3, 0.5, 0.6, phi};
    const auto out = dispersive_protocol(p, {1.0, pi, phi});
    worst = std::max(worst, 1.0 - fidelity(out.projected_g, superposition(p, out.projected_g.n_max())));
  }
  return worst;
}

double dispersive_probability_sum() {
  double worst = 0.0;
  for (double t : {0.4, 1.3, pi}) {
    const auto out = dispersive_protocol({4, 0.7, 0.2, 0.0}, {1.0, t, 1.0});
    worst = std::max(worst, std::abs(out.success_prob_g + out.success_prob_e - 1.0));
  }
  return worst;
}

double unitarity() {
  const auto v = nbs({6, 0.7, 1.4, 0.0});
  const auto dispersive = dispersive_protocol({6, 0.7, 1.4, 0.0}, {1.0, 0.77, 0.5});
  return std::max(std::abs(kerr_evolve(v, {1.3, 0.91}).norm_squared() - v.norm_squared()),
                  std::abs(dispersive.after.norm_squared() - v.norm_squared()));
}

double fig1_determinism() {
  auto render = [] {
    std::ostringstream s;
    write_sweep_csv(s, sweep_mandel_q(fig1_defaults()));
    return s.str();
  };
  return render() == render() ? 0.0 : 1.0;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

VerifyReport run_verify(std::optional<double> tolerance_override) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  auto add = [&](std::string name, double residual, double tolerance) {
    report.checks.push_back({std::move(name), residual, tolerance_override.value_or(tolerance)});
  };

  add("oracle_equivalence", oracle_equivalence(), 1e-9);
  add("q_recursion", recursion_grid(), 1e-10);
  add("q_small_eta_limits", q_limits(), 1e-2);
  add("q_symmetry", q_symmetry(), 1e-12);
  add("pn_normalization", pn_normalization(), 1e-12);
  add("generating_function", generating_function_series(), 1e-10);
  add("ladder_annihilation", ladder_annihilation(), 1e-9);
  add("gdo_relations", gdo_relations(), 1e-9);
  add("lowering_ratio", lowering_ratio(), 1e-9);
  add("eigenvalue_equations", eigenvalue_equations(), 1e-9);
  add("nonlinear_coherent", nonlinear_coherent(), 1e-9);
  add("coherent_two_photon", coherent_two_photon(), 1e-10);
  add("structure_function", structure_function(), 1e-13);

  const auto cats = cat_fidelities();
  add("cat_limit", 1.0 - cats.back(), 1e-3);
  add("cat_limit_monotone", std::max(0.0, std::max(cats[0] - cats[1], cats[1] - cats[2])), 0.0);

  add("kerr_fidelity", kerr_infidelity(), 1e-10);
  add("dispersive_fidelity", dispersive_infidelity(), 1e-10);
  add("dispersive_probabilities", dispersive_probability_sum(), 1e-12);
  add("unitarity", unitarity(), 1e-12);
  add("fig1_determinism", fig1_determinism(), 0.0);

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_verify_text(std::ostream& out, const VerifyReport& report) {
  char line[160];
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof line, "%-4s %-26s residual %.3e  tolerance %.1e\n", c.passed() ? "ok" : "FAIL",
                  c.name.c_str(), c.residual, c.tolerance);
    out << line;
  }
  std::snprintf(line, sizeof line, "%s: %zu checks in %.2f s\n", report.passed() ? "passed" : "FAILED",
                report.checks.size(), report.seconds);
  out << line;
}

std::string verify_json(const VerifyReport& report) {
  nlohmann::json j;
  j["passed"] = report.passed();
  j["seconds"] = report.seconds;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed()}});
  }
  return j.dump(2);
}

}  // namespace negbin::cli
