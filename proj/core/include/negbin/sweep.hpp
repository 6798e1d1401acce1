#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "negbin/fock.hpp"
#include "negbin/states.hpp"

namespace negbin {

/// One row of a parameter sweep; an empty value is written as `undefined`.
struct SweepRecord {
  double eta = 0.0;
  double phi = 0.0;
  int M = 1;
  std::string quantity;
  std::optional<double> value;
};

/// Equally spaced eta values start, start + step, ... up to stop inclusive.
struct EtaGrid {
  double start = 0.02;
  double stop = 0.95;
  double step = 0.01;

  void validate() const;
  [[nodiscard]] std::vector<double> points() const;
};

struct SweepConfig {
  int M = 30;
  std::vector<double> phis;
  EtaGrid grid;
  double theta = 0.0;

  void validate() const;
};

/// Mandel Q against eta for phi in {0, pi/2, 3pi/4, pi}, M = 30.
[[nodiscard]] SweepConfig fig1_defaults();
/// <(Delta X2)^2> against eta for phi in {0, pi/2, 3pi/4, pi}, M = 50, theta = 0.
[[nodiscard]] SweepConfig fig2_defaults();

/// Records ordered by phi (as given), then by increasing eta. Grid points are
/// evaluated in parallel; the order never depends on scheduling.
[[nodiscard]] std::vector<SweepRecord> sweep_mandel_q(const SweepConfig& config);
[[nodiscard]] std::vector<SweepRecord> sweep_var_x2(const SweepConfig& config);

/// Evaluates fn(0..count-1) on worker threads and returns results in index order.
[[nodiscard]] std::vector<std::optional<double>> parallel_evaluate(
    std::size_t count, const std::function<std::optional<double>(std::size_t)>& fn);

/// printf %.17g: enough significant digits to round-trip a double.
[[nodiscard]] std::string format_real(double value);

/// Header `eta,phi,M,quantity,value` followed by one line per record.
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

struct DistributionRow {
  std::size_t n = 0;
  double probability = 0.0;
};

/// Closed-form P(n) of superposition(params) for n up to its truncation bound.
[[nodiscard]] std::vector<DistributionRow> distribution_rows(const NBSParams& params,
                                                             const TruncationPolicy& policy = {});

/// Header `n,probability` followed by one line per row.
void write_distribution_csv(std::ostream& out, std::span<const DistributionRow> rows);

}  // namespace negbin
