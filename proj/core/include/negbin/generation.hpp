#pragma once

#include "negbin/fock.hpp"
#include "negbin/states.hpp"

namespace negbin {

/// Kerr medium H = hbar g1 (a^dag a)^2 acting for time t.
struct KerrParams {
  double g1 = 1.0;  // rad/s
  double t = 0.0;   // s
};

/// Dispersive atom-field coupling H = hbar g2 a^dag a sigma_3 acting for time t
/// on the atom prepared in (|g> + exp(i phi) |e>)/sqrt(2).
struct DispersiveParams {
  double g2 = 1.0;  // rad/s
  double t = 0.0;   // s
  double phi = 0.0;
};

/// Joint atom-field state as the field components paired with |g> and |e>.
struct AtomFieldState {
  FockVector g_branch;
  FockVector e_branch;

  [[nodiscard]] double norm_squared() const { return g_branch.norm_squared() + e_branch.norm_squared(); }
};

/// c_n -> exp(-i g1 n^2 t) c_n.
[[nodiscard]] FockVector kerr_evolve(const FockVector& v, const KerrParams& p);

/// Kerr evolution of nbs(params) for t = pi / (2 g1).
[[nodiscard]] FockVector kerr_generate(const NBSParams& params, double g1,
                                       const TruncationPolicy& policy = {});

struct DispersiveOutcome {
  AtomFieldState evolved;    // after the dispersive interaction
  AtomFieldState after;      // after the pi pulse
  FockVector projected_g;    // normalized field given the atom is found in |g>
  FockVector projected_e;    // normalized field given the atom is found in |e>
  double success_prob_g = 0.0;
  double success_prob_e = 0.0;
};

/// Conditional preparation of NBS superpositions in a cavity.
///
/// The cavity starts in nbs(params) (params.phi is not used; the relative
/// phase is d.phi). The interaction leaves the |g> field unchanged and maps
/// the |e> field to |eta_c exp(-i g2 t), M>, i.e. c_n -> exp(-i g2 t n) c_n
/// after removing the common rotating-frame factor. The pi pulse maps
/// |g> -> (|g> - |e>)/sqrt(2) and |e> -> (|g> + |e>)/sqrt(2). At g2 t = pi
/// the |g> outcome carries superposition(params with phi = d.phi).
///
/// Throws ZeroNormBranch if either outcome has vanishing probability.
[[nodiscard]] DispersiveOutcome dispersive_protocol(const NBSParams& params, const DispersiveParams& d,
                                                    const TruncationPolicy& policy = {});

/// |<u|v>|, clamped to [0, 1]. Throws DimensionMismatch when the bounds differ.
[[nodiscard]] double fidelity(const FockVector& u, const FockVector& v);

}  // namespace negbin
