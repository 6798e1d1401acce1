#include "negbin/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <thread>

#include "negbin/errors.hpp"
#include "negbin/statistics.hpp"

namespace negbin {

void EtaGrid::validate() const {
  if (!(start > 0.0 && stop < 1.0 && start <= stop)) {
    throw DomainError("eta grid must satisfy 0 < start <= stop < 1");
  }
  if (!(step > 0.0)) throw DomainError("eta grid step must be positive");
}

std::vector<double> EtaGrid::points() const {
  validate();
  // A little slack so that e.g. 0.02 + 93 * 0.01 still counts as reaching 0.95.
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(std::min(start + static_cast<double>(i) * step, stop));
  }
  return out;
}

void SweepConfig::validate() const {
  if (M < 1) throw DomainError("M must be a positive integer");
  if (phis.empty()) throw DomainError("sweep needs at least one phi");
  for (double phi : phis) {
    if (!(phi >= 0.0 && phi <= 2.0 * std::numbers::pi)) throw DomainError("phi must lie in [0, 2 pi]");
  }
  grid.validate();
}

SweepConfig fig1_defaults() {
  using std::numbers::pi;
  return {30, {0.0, pi / 2.0, 3.0 * pi / 4.0, pi}, {}, 0.0};
}

SweepConfig fig2_defaults() {
  using std::numbers::pi;
  return {50, {0.0, pi / 2.0, 3.0 * pi / 4.0, pi}, {}, 0.0};
}

std::vector<std::optional<double>> parallel_evaluate(
    std::size_t count, const std::function<std::optional<double>(std::size_t)>& fn) {
  std::vector<std::optional<double>> results(count);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) results[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

namespace {

std::vector<SweepRecord> run_sweep(const SweepConfig& config, const std::string& quantity,
                                   const std::function<double(double phi, double eta)>& eval) {
  config.validate();
  const auto etas = config.grid.points();
  const std::size_t per_phi = etas.size();
  const auto values = parallel_evaluate(config.phis.size() * per_phi, [&](std::size_t i) {
    return std::optional<double>{eval(config.phis[i / per_phi], etas[i % per_phi])};
  });
  std::vector<SweepRecord> records;
  records.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    records.push_back({etas[i % per_phi], config.phis[i / per_phi], config.M, quantity, values[i]});
  }
  return records;
}

}  // namespace

std::vector<SweepRecord> sweep_mandel_q(const SweepConfig& config) {
  return run_sweep(config, "mandel_q",
                   [&](double phi, double eta) { return q_closed(phi, eta, config.M); });
}

std::vector<SweepRecord> sweep_var_x2(const SweepConfig& config) {
  return run_sweep(config, "var_x2", [&](double phi, double eta) {
    return quadrature_variances_closed(phi, eta, config.theta, config.M).x2;
  });
}

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << "eta,phi,M,quantity,value\n";
  for (const auto& r : records) {
    out << format_real(r.eta) << ',' << format_real(r.phi) << ',' << r.M << ',' << r.quantity << ','
        << (r.value ? format_real(*r.value) : std::string("undefined")) << '\n';
  }
}

std::vector<DistributionRow> distribution_rows(const NBSParams& params, const TruncationPolicy& policy) {
  const std::size_t n_max = superposition_cutoff(params, policy);
  std::vector<DistributionRow> rows;
  rows.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows.push_back({n, pn_closed(n, params.phi, params.eta, params.M)});
  }
  return rows;
}

void write_distribution_csv(std::ostream& out, std::span<const DistributionRow> rows) {
  out << "n,probability\n";
  for (const auto& r : rows) out << r.n << ',' << format_real(r.probability) << '\n';
}

}  // namespace negbin
