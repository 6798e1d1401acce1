#include "negbin/statistics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "negbin/errors.hpp"
#include "negbin/special.hpp"

namespace negbin {

namespace {

void check_domain(double eta, int M) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw DomainError("eta must lie strictly inside (0, 1), got " + std::to_string(eta));
  }
  if (M < 1) throw DomainError("M must be a positive integer, got " + std::to_string(M));
}

double cos_of(double phi) { return unit_phase(phi).real(); }

// Mass of the n-th term of the A_k series before the parity weight.
long double series_log_term(std::size_t k, std::size_t n, long double log_x, long double log_prefactor,
                            int M) {
  const auto nn = static_cast<long double>(n);
  const auto mk = static_cast<long double>(M) + static_cast<long double>(k);
  return log_prefactor + 0.5L * (log_nb_weight(M, n) + log_binomial(mk + nn - 1.0L, nn)) + nn * log_x;
}

// sum_n m_n w(n) where m_n is the A_k term magnitude (including the
// (1-x)^{M+k/2} prefactor) and w a bounded parity weight.
template <typename Weight>
auto sum_series(std::size_t k, double eta, int M, std::size_t max_terms, Weight weight) {
  using Acc = decltype(weight(std::size_t{0}));
  const long double x = static_cast<long double>(eta) * eta;
  const long double log_x = std::log(x);
  const long double log_prefactor =
      (static_cast<long double>(M) + 0.5L * static_cast<long double>(k)) * std::log1p(-x);
  Acc sum{};
  long double mass = 0.0L;
  long double previous = 0.0L;
  for (std::size_t n = 0; n < max_terms; ++n) {
    const long double m = std::exp(series_log_term(k, n, log_x, log_prefactor, M));
    sum += weight(n) * m;
    mass += m;
    if (n > 0 && m < previous && m < 1e-16L * mass) return sum;
    previous = m;
  }
  throw ConvergenceError("A_k series for k=" + std::to_string(k) + " did not converge in " +
                         std::to_string(max_terms) + " terms");
}

}  // namespace

double pn_closed(std::size_t n, double phi, double eta, int M) {
  check_domain(eta, M);
  const double c = cos_of(phi);
  const double parity = (n % 2 == 0) ? 1.0 + c : 1.0 - c;
  if (parity == 0.0) return 0.0;
  const long double x = static_cast<long double>(eta) * eta;
  const long double log_nb = log_nb_weight(M, n) + static_cast<long double>(n) * std::log(x) +
                             static_cast<long double>(M) * std::log1p(-x);
  return static_cast<double>(std::exp(log_nb)) * parity / parity_bracket(c, +1, eta, M);
}

double generating_function(double lambda, double phi, double eta, int M) {
  check_domain(eta, M);
  const double x = eta * eta;
  if (!(std::abs(lambda) * x < 1.0)) {
    throw DomainError("generating function needs |lambda| eta^2 < 1");
  }
  const double c = cos_of(phi);
  const double lx = lambda * x;
  // [(1-lx)^{-M} + c (1+lx)^{-M}] / [(1-x)^{-M} + c (1+x)^{-M}]
  const double scale = std::exp(M * (std::log1p(-x) - std::log1p(-lx)));
  const double numerator = (1.0 + c) + c * std::expm1(M * (std::log1p(-lx) - std::log1p(lx)));
  return scale * numerator / parity_bracket(c, +1, eta, M);
}

double mean_closed(double phi, double eta, int M) {
  check_domain(eta, M);
  const double c = cos_of(phi);
  const double x = eta * eta;
  return M * x / (1.0 - x) * parity_bracket(c, -1, eta, M + 1) / parity_bracket(c, +1, eta, M);
}

double second_moment_closed(double phi, double eta, int M) {
  check_domain(eta, M);
  const double c = cos_of(phi);
  const double x = eta * eta;
  const double g = x / (1.0 - x);
  const double mm = static_cast<double>(M);
  return mean_closed(phi, eta, M) +
         mm * (mm + 1.0) * g * g * parity_bracket(c, +1, eta, M + 2) / parity_bracket(c, +1, eta, M);
}

double q_limit(double phi) {
  const double c = cos_of(phi);
  if (c == 1.0) return 1.0;
  if (c == -1.0) return -1.0;
  return 0.0;
}

double q_closed(double phi, double eta, int M) {
  check_domain(eta, M);
  const double c = cos_of(phi);
  const double mm = static_cast<double>(M);
  if (eta < kQSeriesThreshold && (c == 1.0 || c == -1.0)) {
    const double eta4 = eta * eta * eta * eta;
    return c == 1.0 ? 1.0 - (2.0 / 3.0) * (mm * mm - mm - 3.0) * eta4
                    : -1.0 + (2.0 / 3.0) * (mm + 1.0) * (mm + 2.0) * eta4;
  }
  const double x = eta * eta;
  const double first =
      (mm + 1.0) * x / (1.0 - x) * parity_bracket(c, +1, eta, M + 2) / parity_bracket(c, -1, eta, M + 1);
  return first - mean_closed(phi, eta, M);
}

double q_recursion_check(double phi, double eta, int M) {
  const double rhs = mean_closed(std::numbers::pi - phi, eta, M + 1) - mean_closed(phi, eta, M);
  return std::abs(q_closed(phi, eta, M) - rhs);
}

double a_series(std::size_t k, SeriesSign sign, double eta, int M, std::size_t max_terms) {
  check_domain(eta, M);
  const bool alternating = sign == SeriesSign::kMinus;
  const long double s = sum_series(k, eta, M, max_terms, [&](std::size_t n) {
    return (alternating && n % 2 == 1) ? -1.0L : 1.0L;
  });
  return static_cast<double>(s);
}

Complex a_pow_expectation(std::size_t k, double phi, double eta, double theta, int M,
                          std::size_t max_terms) {
  check_domain(eta, M);
  if (k == 0) return {1.0, 0.0};
  const Complex phase = unit_phase(phi);
  const double c = phase.real();
  const double s = phase.imag();
  const bool k_even = k % 2 == 0;
  // Bracket of <a^k>: A_{k+}[1 + (-1)^k] + A_{k-}[cos(phi)(1 + (-1)^k) - i sin(phi)(1 - (-1)^k)],
  // distributed over the series so that each term carries 1 + (-1)^k + (-1)^n (...).
  const std::complex<long double> plus_weight{k_even ? 2.0L : 0.0L, 0.0L};
  const std::complex<long double> minus_weight =
      k_even ? std::complex<long double>{2.0L * c, 0.0L} : std::complex<long double>{0.0L, -2.0L * s};
  const auto bracket = sum_series(k, eta, M, max_terms, [&](std::size_t n) {
    return n % 2 == 0 ? plus_weight + minus_weight : plus_weight - minus_weight;
  });

  const long double x = static_cast<long double>(eta) * eta;
  const auto kk = static_cast<long double>(k);
  const long double log_pref =
      0.5L * (std::lgamma(static_cast<long double>(M) + kk) - std::lgamma(static_cast<long double>(M)) +
              kk * std::log(x) - kk * std::log1p(-x));
  const double norm2 = 1.0 / (2.0 * parity_bracket(c, +1, eta, M));
  const Complex value{static_cast<double>(bracket.real()), static_cast<double>(bracket.imag())};
  return norm2 * static_cast<double>(std::exp(log_pref)) * value * unit_phase(static_cast<double>(k) * theta);
}

QuadratureVariances quadrature_variances_closed(double phi, double eta, double theta, int M) {
  const double mean = mean_closed(phi, eta, M);
  const Complex a1 = a_pow_expectation(1, phi, eta, theta, M);
  const Complex a2 = a_pow_expectation(2, phi, eta, theta, M);
  return {0.25 + 0.5 * (mean + a2.real() - 2.0 * a1.real() * a1.real()),
          0.25 + 0.5 * (mean - a2.real() - 2.0 * a1.imag() * a1.imag())};
}

PhotonStats closed_stats(const NBSParams& params) {
  params.validate();
  PhotonStats s;
  s.mean_n = mean_closed(params.phi, params.eta, params.M);
  s.second_moment = second_moment_closed(params.phi, params.eta, params.M);
  s.mandel_q = q_closed(params.phi, params.eta, params.M);
  s.exp_a = a_pow_expectation(1, params.phi, params.eta, params.theta, params.M);
  s.exp_a2 = a_pow_expectation(2, params.phi, params.eta, params.theta, params.M);
  const auto var = quadrature_variances_closed(params.phi, params.eta, params.theta, params.M);
  s.var_x1 = var.x1;
  s.var_x2 = var.x2;
  return s;
}

}  // namespace negbin
