#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "negbin/fock.hpp"

namespace negbin {

/// Parameters of a negative binomial state and of its two-component superposition.
///
/// The complex NBS parameter is eta_c = eta * exp(i theta); phi is the
/// relative phase of |eta_c, M> + exp(i phi) |-eta_c, M>.
struct NBSParams {
  int M = 1;
  double eta = 0.5;
  double theta = 0.0;
  double phi = 0.0;

  /// Throws DomainError unless M >= 1, 0 < eta < 1, and phi in [0, 2 pi].
  void validate() const;

  [[nodiscard]] Complex eta_c() const { return std::polar(eta, theta); }
};

/// Overlap ratio ((1 - x)/(1 + x))^k with x = eta^2, evaluated in log space.
[[nodiscard]] double overlap_ratio(double eta, double k);

/// 1 + sign * cos(phi) * overlap_ratio(eta, k), accurate when it nearly cancels.
[[nodiscard]] double parity_bracket(double cos_phi, int sign, double eta, double k);

/// |eta_c, M> with amplitudes (1-eta^2)^{M/2} C(M+n-1, n)^{1/2} eta_c^n.
///
/// The policy overload sizes the space from the analytic tail; the explicit
/// overload evaluates exactly n_max + 1 amplitudes.
[[nodiscard]] FockVector nbs(const NBSParams& params, const TruncationPolicy& policy = {});
[[nodiscard]] FockVector nbs(const NBSParams& params, std::size_t n_max);

/// NBS for an arbitrary complex parameter with |alpha| < 1.
[[nodiscard]] FockVector nbs_at(Complex alpha, int M, std::size_t n_max);

/// Truncation bound nbs(params, policy) would pick.
[[nodiscard]] std::size_t nbs_cutoff(const NBSParams& params, const TruncationPolicy& policy = {});

/// N [ |eta_c, M> + exp(i phi) |-eta_c, M> ] built term by term from the
/// parity-filtered expansion, with N from normalization_constant.
[[nodiscard]] FockVector superposition(const NBSParams& params, const TruncationPolicy& policy = {});
[[nodiscard]] FockVector superposition(const NBSParams& params, std::size_t n_max);

/// Truncation bound used by superposition(params, policy).
[[nodiscard]] std::size_t superposition_cutoff(const NBSParams& params,
                                               const TruncationPolicy& policy = {});

/// {2 [1 + cos(phi) (1-eta^2)^M / (1+eta^2)^M]}^{-1/2}.
[[nodiscard]] double normalization_constant(double phi, double eta, int M);

/// Closed-form <alpha, M | beta, M>. Throws DomainError if |alpha| or |beta| >= 1.
[[nodiscard]] Complex nbs_inner_closed(Complex alpha, Complex beta, int M);

/// Even and odd NBS from their own closed-form expansions on |2n> and |2n+1>.
[[nodiscard]] FockVector even_nbs(const NBSParams& params, const TruncationPolicy& policy = {});
[[nodiscard]] FockVector even_nbs(const NBSParams& params, std::size_t n_max);
[[nodiscard]] FockVector odd_nbs(const NBSParams& params, const TruncationPolicy& policy = {});
[[nodiscard]] FockVector odd_nbs(const NBSParams& params, std::size_t n_max);

/// Glauber coherent state exp(-|alpha|^2/2) sum alpha^n / sqrt(n!) |n>.
[[nodiscard]] FockVector coherent(Complex alpha, const TruncationPolicy& policy = {});
[[nodiscard]] FockVector coherent(Complex alpha, std::size_t n_max);

[[nodiscard]] FockVector even_coherent(Complex alpha, const TruncationPolicy& policy = {});
[[nodiscard]] FockVector even_coherent(Complex alpha, std::size_t n_max);
[[nodiscard]] FockVector odd_coherent(Complex alpha, const TruncationPolicy& policy = {});
[[nodiscard]] FockVector odd_coherent(Complex alpha, std::size_t n_max);

/// Schroedinger cat N0 [ |alpha> + exp(i phi) |-alpha> ].
[[nodiscard]] FockVector cat_state(Complex alpha, double phi, const TruncationPolicy& policy = {});
[[nodiscard]] FockVector cat_state(Complex alpha, double phi, std::size_t n_max);

/// P(n) = |c_n|^2.
[[nodiscard]] std::vector<double> photon_distribution(const FockVector& v);

}  // namespace negbin
