#pragma once

#include <cstddef>

#include "negbin/fock.hpp"

namespace negbin {

/// exp(i angle), exact when angle is a multiple of pi/2 up to a few ulps.
///
/// Keeps parity selection rules exact: exp(i pi) is returned as -1 rather
/// than (-1, 1.2e-16).
[[nodiscard]] Complex unit_phase(double angle);

/// ln C(n, k) via extended-precision log-gamma, for 0 <= k <= n.
[[nodiscard]] long double log_binomial(long double n, long double k);

/// ln C(M + n - 1, n): the negative-binomial weight of n photons at order M.
[[nodiscard]] long double log_nb_weight(int M, std::size_t n);

/// P(N >= k) for the negative-binomial law P(n) = C(M+n-1, n) x^n (1-x)^M.
[[nodiscard]] double nb_upper_tail(std::size_t k, int M, double x);

/// P(N >= k) for a Poisson law of mean lambda.
[[nodiscard]] double poisson_upper_tail(std::size_t k, double lambda);

/// Truncation bound for a negative-binomial distribution whose weights may be
/// enhanced by up to `weight_bound` (e.g. by a superposition's normalization).
///
/// Smallest n with weight_bound * P(N > n) < tail_tolerance, plus two levels
/// of ladder headroom. Throws HardCapExceeded past policy.hard_cap.
[[nodiscard]] std::size_t nb_cutoff(int M, double x, const TruncationPolicy& policy,
                                    double weight_bound = 1.0);

/// Same rule for a Poisson distribution of mean lambda.
[[nodiscard]] std::size_t poisson_cutoff(double lambda, const TruncationPolicy& policy,
                                         double weight_bound = 1.0);

}  // namespace negbin
