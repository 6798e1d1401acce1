#include "negbin/special.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <algorithm>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "negbin/errors.hpp"

namespace negbin {

Complex unit_phase(double angle) {
  const double quarter_turns = angle / (std::numbers::pi / 2.0);
  const double k = std::nearbyint(quarter_turns);
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(k));
  if (std::abs(quarter_turns - k) <= slack) {
    switch (static_cast<long long>(std::fmod(std::fmod(k, 4.0) + 4.0, 4.0))) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, angle);
}

long double log_binomial(long double n, long double k) {
  if (k < 0 || k > n) throw DomainError("log_binomial: need 0 <= k <= n");
  if (k == 0 || k == n) return 0.0L;
  return std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L);
}

long double log_nb_weight(int M, std::size_t n) {
  const auto nn = static_cast<long double>(n);
  return log_binomial(static_cast<long double>(M) + nn - 1.0L, nn);
}

double nb_upper_tail(std::size_t k, int M, double x) {
  if (k == 0) return 1.0;
  // P(N >= k) = I_x(k, M) for the failure-count parametrization.
  return boost::math::ibeta(static_cast<double>(k), static_cast<double>(M), x);
}

double poisson_upper_tail(std::size_t k, double lambda) {
  if (k == 0) return 1.0;
  if (lambda == 0.0) return 0.0;
  return boost::math::gamma_p(static_cast<double>(k), lambda);
}

namespace {

// Smallest n in [0, cap] with tail(n + 1) * weight < tol, by bisection on the
// monotone tail.
std::size_t smallest_cutoff(const std::function<double(std::size_t)>& upper_tail, double weight,
                            const TruncationPolicy& policy) {
  policy.validate();
  const double target = policy.tail_tolerance / weight;
  const std::size_t cap = policy.hard_cap;
  auto ok = [&](std::size_t n) { return upper_tail(n + 1) < target; };
  if (cap < 2 || !ok(cap - 2)) {
    throw HardCapExceeded("truncation tail stays above " + std::to_string(policy.tail_tolerance) +
                          " up to hard_cap=" + std::to_string(cap));
  }
  std::size_t lo = 0;
  std::size_t hi = cap - 2;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo + 2;
}

}  // namespace

std::size_t nb_cutoff(int M, double x, const TruncationPolicy& policy, double weight_bound) {
  if (M < 1 || !(x > 0.0 && x < 1.0)) throw DomainError("nb_cutoff: need M >= 1, 0 < x < 1");
  return smallest_cutoff([&](std::size_t k) { return nb_upper_tail(k, M, x); }, weight_bound,
                         policy);
}

std::size_t poisson_cutoff(double lambda, const TruncationPolicy& policy, double weight_bound) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("poisson_cutoff: need a finite mean >= 0");
  }
  return smallest_cutoff([&](std::size_t k) { return poisson_upper_tail(k, lambda); },
                         weight_bound, policy);
}

}  // namespace negbin
