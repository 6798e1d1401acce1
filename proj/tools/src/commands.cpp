#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "negbin/cli.hpp"
#include "negbin/errors.hpp"
#include "negbin/generation.hpp"
#include "negbin/states.hpp"
#include "negbin/sweep.hpp"

namespace negbin::cli {

namespace {

using nlohmann::json;

constexpr double kFidelityContract = 1e-10;
constexpr std::size_t kReportedAmplitudes = 20;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContractFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepOptions {
  int M = 30;
  std::vector<std::string> phis;
  std::string theta = "0";
  double eta_start = 0.02;
  double eta_stop = 0.95;
  double grid_step = 0.01;
  std::string out;
};

struct StateOptions {
  int M = 5;
  double eta = 0.6;
  std::string theta = "0";
  std::string phi = "0";
  double tolerance = kTruncationTolerance;
  std::string out;
};

struct GenerateOptions {
  StateOptions state;
  std::string protocol = "kerr";
  double g1 = 1.0;
  std::string g2t = "pi";
};

struct VerifyOptions {
  std::optional<double> tolerance;
  bool json = false;
  std::string out;
};

// Writes to the named file, or to out when the name is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

SweepConfig sweep_config(SweepConfig base, const SweepOptions& o) {
  base.M = o.M;
  if (!o.phis.empty()) {
    base.phis.clear();
    for (const auto& p : o.phis) base.phis.push_back(parse_angle(p));
  }
  base.theta = parse_angle(o.theta);
  base.grid = {o.eta_start, o.eta_stop, o.grid_step};
  return base;
}

NBSParams state_params(const StateOptions& o) {
  NBSParams p{o.M, o.eta, parse_angle(o.theta), parse_angle(o.phi)};
  p.validate();
  return p;
}

TruncationPolicy policy_of(const StateOptions& o) {
  TruncationPolicy policy;
  policy.tail_tolerance = o.tolerance;
  policy.validate();
  return policy;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream s;
  write_sweep_csv(s, records);
  return s.str();
}

json amplitudes_json(const FockVector& v) {
  json a = json::array();
  for (std::size_t n = 0; n < std::min(v.dim(), kReportedAmplitudes); ++n) a.push_back({v[n].real(), v[n].imag()});
  return a;
}

json params_json(const NBSParams& p) {
  return {{"M", p.M}, {"eta", p.eta}, {"theta", p.theta}, {"phi", p.phi}};
}

json generate_report(const GenerateOptions& o) {
  const auto params = state_params(o.state);
  const auto policy = policy_of(o.state);
  json report;
  report["protocol"] = o.protocol;
  if (o.protocol == "kerr") {
    if (!(o.g1 > 0.0)) throw DomainError("--g1 must be positive");
    const auto out = kerr_generate(params, o.g1, policy);
    NBSParams target = params;
    target.phi = std::numbers::pi / 2.0;
    const double f = fidelity(out, superposition(target, out.n_max()));
    report["params"] = {{"M", params.M}, {"eta", params.eta}, {"theta", params.theta}};
    report["g1"] = o.g1;
    report["t"] = std::numbers::pi / (2.0 * o.g1);
    report["target_phi"] = target.phi;
    report["fidelity"] = f;
    report["infidelity"] = 1.0 - f;
    report["n_max"] = out.n_max();
    report["amplitudes"] = amplitudes_json(out);
    report["contract"] = {{"tolerance", kFidelityContract}, {"met", 1.0 - f <= kFidelityContract}};
    return report;
  }
  if (o.protocol == "dispersive") {
    const double g2t = parse_angle(o.g2t);
    if (!(g2t >= 0.0)) throw DomainError("--g2t must be non-negative");
    const auto out = dispersive_protocol(params, {1.0, g2t, params.phi}, policy);
    const double f = fidelity(out.projected_g, superposition(params, out.projected_g.n_max()));
    report["params"] = params_json(params);
    report["g2t"] = g2t;
    report["target_phi"] = params.phi;
    report["success_prob_g"] = out.success_prob_g;
    report["success_prob_e"] = out.success_prob_e;
    report["fidelity"] = f;
    report["infidelity"] = 1.0 - f;
    report["n_max"] = out.projected_g.n_max();
    report["amplitudes"] = amplitudes_json(out.projected_g);
    // Only the half-turn interaction is expected to reach the target.
    if (std::abs(g2t - std::numbers::pi) <= 1e-12) {
      report["contract"] = {{"tolerance", kFidelityContract}, {"met", 1.0 - f <= kFidelityContract}};
    }
    return report;
  }
  throw DomainError("unknown protocol '" + o.protocol + "' (expected kerr or dispersive)");
}

void add_state_options(CLI::App* cmd, StateOptions& o) {
  cmd->add_option("--M", o.M, "NBS order M >= 1")->capture_default_str();
  cmd->add_option("--eta", o.eta, "|eta_c| in (0, 1)")->capture_default_str();
  cmd->add_option("--theta", o.theta, "arg(eta_c), e.g. 0.3 or pi/4")->capture_default_str();
  cmd->add_option("--phi", o.phi, "relative phase in [0, 2pi]")->capture_default_str();
  cmd->add_option("--tolerance", o.tolerance, "Fock-space tail tolerance")->capture_default_str();
  cmd->add_option("--out", o.out, "output file (default: standard output)");
}

void add_sweep_options(CLI::App* cmd, SweepOptions& o) {
  cmd->add_option("--M", o.M, "NBS order M >= 1")->capture_default_str();
  cmd->add_option("--phi", o.phis, "relative phases (default: 0 pi/2 3pi/4 pi)");
  cmd->add_option("--eta-start", o.eta_start, "first eta of the grid")->capture_default_str();
  cmd->add_option("--eta-stop", o.eta_stop, "last eta of the grid")->capture_default_str();
  cmd->add_option("--grid-step", o.grid_step, "eta grid spacing")->capture_default_str();
  cmd->add_option("--out", o.out, "output file (default: standard output)");
}

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

int fail(std::ostream& err, Exit code, const std::string& message) {
  err << "negbin: " << one_line(message) << '\n';
  return static_cast<int>(code);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superpositions of negative binomial states: photon statistics, ladder algebra, generation",
               "negbin"};
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "TOML/INI file; keys of a subcommand go in its [section]");
  app.require_subcommand(1, 1);

  SweepOptions fig1_opts;
  fig1_opts.M = 30;
  SweepOptions fig2_opts;
  fig2_opts.M = 50;
  StateOptions pn_opts;
  GenerateOptions gen_opts;
  VerifyOptions verify_opts;

  auto* fig1 = app.add_subcommand("fig1", "Mandel Q against eta (CSV)");
  add_sweep_options(fig1, fig1_opts);

  auto* fig2 = app.add_subcommand("fig2", "quadrature variance <(Delta X2)^2> against eta (CSV)");
  add_sweep_options(fig2, fig2_opts);
  fig2->add_option("--theta", fig2_opts.theta, "arg(eta_c)")->capture_default_str();

  auto* pn = app.add_subcommand("pn", "photon-number distribution (CSV)");
  add_state_options(pn, pn_opts);

  auto* gen = app.add_subcommand("generate", "simulate a generation protocol (JSON)");
  add_state_options(gen, gen_opts.state);
  gen->add_option("--protocol", gen_opts.protocol, "kerr or dispersive")
      ->check(CLI::IsMember({"kerr", "dispersive"}))
      ->capture_default_str();
  gen->add_option("--g1", gen_opts.g1, "Kerr coupling (rad/s)")->capture_default_str();
  gen->add_option("--g2t", gen_opts.g2t, "dispersive phase g2 t")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--tolerance", verify_opts.tolerance, "override every check tolerance");
  verify->add_flag("--json", verify_opts.json, "JSON report instead of text");
  verify->add_option("--out", verify_opts.out, "output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    return fail(err, Exit::kDomain, e.what());
  }

  try {
    if (*fig1) {
      emit(fig1_opts.out, sweep_csv(sweep_mandel_q(sweep_config(fig1_defaults(), fig1_opts))), out);
    } else if (*fig2) {
      emit(fig2_opts.out, sweep_csv(sweep_var_x2(sweep_config(fig2_defaults(), fig2_opts))), out);
    } else if (*pn) {
      std::ostringstream s;
      const auto rows = distribution_rows(state_params(pn_opts), policy_of(pn_opts));
      write_distribution_csv(s, rows);
      emit(pn_opts.out, s.str(), out);
    } else if (*gen) {
      const auto report = generate_report(gen_opts);
      emit(gen_opts.state.out, report.dump(2) + "\n", out);
      if (report.contains("contract") && !report["contract"]["met"].get<bool>()) {
        throw ContractFailure("fidelity " + std::to_string(report["fidelity"].get<double>()) +
                              " misses the target");
      }
    } else if (*verify) {
      if (verify_opts.tolerance && !(*verify_opts.tolerance >= 0.0)) {
        throw DomainError("--tolerance must be non-negative");
      }
      const auto report = run_verify(verify_opts.tolerance);
      std::ostringstream s;
      if (verify_opts.json) {
        s << verify_json(report) << '\n';
      } else {
        write_verify_text(s, report);
      }
      emit(verify_opts.out, s.str(), out);
      if (!report.passed()) throw ContractFailure("verification failed");
    }
  } catch (const IoError& e) {
    return fail(err, Exit::kIo, e.what());
  } catch (const ContractFailure& e) {
    return fail(err, Exit::kContract, e.what());
  } catch (const DomainError& e) {
    return fail(err, Exit::kDomain, e.what());
  } catch (const ZeroNormBranch& e) {
    return fail(err, Exit::kDomain, e.what());
  } catch (const std::exception& e) {
    // Convergence, truncation and pole errors: the numerics could not honour
    // their contract.
    return fail(err, Exit::kContract, e.what());
  }
  return 0;
}

}  // namespace negbin::cli
