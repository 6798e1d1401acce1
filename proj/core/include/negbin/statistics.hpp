#pragma once

#include <cstddef>

#include "negbin/fock.hpp"
#include "negbin/states.hpp"

namespace negbin {

/// Below this eta, Q at phi in {0, pi} is taken from its small-eta series.
inline constexpr double kQSeriesThreshold = 1e-4;

/// Photon-number distribution of the superposition state,
/// P(n) = C(M+n-1, n) eta^{2n} [1 + cos(phi) (-1)^n] / [(1-eta^2)^{-M} + cos(phi) (1+eta^2)^{-M}].
[[nodiscard]] double pn_closed(std::size_t n, double phi, double eta, int M);

/// G(lambda) = sum_n P(n) lambda^n in closed form.
///
/// Requires |lambda| eta^2 < 1, the radius of convergence of the series;
/// throws DomainError otherwise.
[[nodiscard]] double generating_function(double lambda, double phi, double eta, int M);

/// <a^dag a> of the superposition state.
[[nodiscard]] double mean_closed(double phi, double eta, int M);

/// <(a^dag a)^2> of the superposition state.
[[nodiscard]] double second_moment_closed(double phi, double eta, int M);

/// Mandel Q of the superposition state.
///
/// At phi in {0, pi} both the numerator and one denominator vanish as
/// eta -> 0. Below kQSeriesThreshold the value comes from the series
///   Q(0)  = 1 - (2/3)(M^2 - M - 3) eta^4 + O(eta^6),
///   Q(pi) = -1 + (2/3)(M + 1)(M + 2) eta^4 + O(eta^6).
[[nodiscard]] double q_closed(double phi, double eta, int M);

/// lim_{eta -> 0} Q(phi, eta, M): +1 at phi = 0, -1 at phi = pi, 0 otherwise.
[[nodiscard]] double q_limit(double phi);

/// |Q(phi, eta, M) - [<N>(pi - phi, eta, M + 1) - <N>(phi, eta, M)]|.
[[nodiscard]] double q_recursion_check(double phi, double eta, int M);

/// Which of the two A_k series: sign +1 sums powers of +eta^2, -1 of -eta^2.
enum class SeriesSign { kPlus = +1, kMinus = -1 };

/// A_{k,+-} = (1-eta^2)^{M+k/2} sum_n C(M+n-1, n)^{1/2} C(M+n+k-1, n)^{1/2} (+-eta^2)^n.
///
/// Summed until past the peak and the current term drops below 1e-16 of the
/// accumulated absolute sum. Throws ConvergenceError after max_terms terms.
[[nodiscard]] double a_series(std::size_t k, SeriesSign sign, double eta, int M,
                              std::size_t max_terms = 20000);

/// <a^k> of the superposition state.
///
/// The A_{k+} and A_{k-} contributions are accumulated term by term with
/// their parity weights, so cancellations between them (e.g. k even, phi = pi)
/// happen exactly instead of between two large partial sums.
[[nodiscard]] Complex a_pow_expectation(std::size_t k, double phi, double eta, double theta, int M,
                                        std::size_t max_terms = 20000);

struct QuadratureVariances {
  double x1 = 0.25;
  double x2 = 0.25;
};

/// <(Delta X1)^2>, <(Delta X2)^2> from <a^dag a>, <a>, <a^2>.
[[nodiscard]] QuadratureVariances quadrature_variances_closed(double phi, double eta, double theta,
                                                              int M);

/// All closed-form statistics of superposition(params) in one record.
[[nodiscard]] PhotonStats closed_stats(const NBSParams& params);

}  // namespace negbin
