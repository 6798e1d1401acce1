#include "negbin/generation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "negbin/errors.hpp"
#include "negbin/special.hpp"

namespace negbin {

namespace {

// Outcome probabilities below this are treated as an impossible branch.
constexpr double kZeroBranch = 1e-30;

}  // namespace

FockVector kerr_evolve(const FockVector& v, const KerrParams& p) {
  auto out = v;
  for (std::size_t n = 0; n < v.dim(); ++n) {
    const auto nn = static_cast<double>(n);
    out[n] *= unit_phase(-p.g1 * nn * nn * p.t);
  }
  return out;
}

FockVector kerr_generate(const NBSParams& params, double g1, const TruncationPolicy& policy) {
  if (!(g1 > 0.0)) throw DomainError("Kerr coupling g1 must be positive");
  return kerr_evolve(nbs(params, policy), {g1, std::numbers::pi / (2.0 * g1)});
}

DispersiveOutcome dispersive_protocol(const NBSParams& params, const DispersiveParams& d,
                                      const TruncationPolicy& policy) {
  if (!(d.g2 > 0.0)) throw DomainError("dispersive coupling g2 must be positive");
  if (!(d.t >= 0.0)) throw DomainError("interaction time must be non-negative");
  const auto field = nbs(params, policy);

  const double amp = 1.0 / std::numbers::sqrt2;
  DispersiveOutcome out;
  out.evolved.g_branch = field;
  out.evolved.g_branch *= amp;
  // exp(-i g2 t n) as successive powers of a single unit phase.
  const Complex step = unit_phase(-d.g2 * d.t);
  out.evolved.e_branch = field;
  Complex rotation{1.0, 0.0};
  for (std::size_t n = 0; n < field.dim(); ++n) {
    out.evolved.e_branch[n] *= rotation;
    rotation *= step;
  }
  out.evolved.e_branch *= amp * unit_phase(d.phi);

  // pi pulse: |g> -> (|g> - |e>)/sqrt(2), |e> -> (|g> + |e>)/sqrt(2).
  out.after.g_branch = amp * (out.evolved.g_branch + out.evolved.e_branch);
  out.after.e_branch = amp * (out.evolved.e_branch - out.evolved.g_branch);

  out.success_prob_g = out.after.g_branch.norm_squared();
  out.success_prob_e = out.after.e_branch.norm_squared();
  if (out.success_prob_g < kZeroBranch || out.success_prob_e < kZeroBranch) {
    throw ZeroNormBranch("conditional outcome with zero probability (P(g)=" +
                         std::to_string(out.success_prob_g) + ", P(e)=" +
                         std::to_string(out.success_prob_e) + ")");
  }
  out.projected_g = out.after.g_branch.normalized();
  out.projected_e = out.after.e_branch.normalized();
  return out;
}

double fidelity(const FockVector& u, const FockVector& v) {
  return std::clamp(std::abs(inner(u, v)), 0.0, 1.0);
}

}  // namespace negbin
