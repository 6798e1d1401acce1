#include "negbin/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "negbin/errors.hpp"
#include "negbin/special.hpp"

namespace negbin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// log((1 - x)/(1 + x)) for x = eta^2.
double log_ratio(double eta) {
  const double x = eta * eta;
  return std::log1p(-x) - std::log1p(x);
}

// Amplitude magnitude exp(log_mag) with phase n * theta.
Complex amplitude(long double log_mag, std::size_t n, double theta) {
  return std::polar(static_cast<double>(std::exp(log_mag)), static_cast<double>(n) * theta);
}

// 1 + (-1)^n exp(i phi), exact on parity-forbidden levels at phi in {0, pi}.
Complex parity_factor(Complex phase, std::size_t n) {
  return (n % 2 == 0) ? Complex{1.0, 0.0} + phase : Complex{1.0, 0.0} - phase;
}

// ln cosh(y) and ln sinh(y) for y >= 0 without overflow.
double log_cosh(double y) { return y + std::log1p(std::exp(-2.0 * y)) - std::numbers::ln2; }
double log_sinh(double y) { return y + std::log1p(-std::exp(-2.0 * y)) - std::numbers::ln2; }

void validate_alpha(Complex alpha) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("coherent amplitude must be finite");
  }
}

}  // namespace

void NBSParams::validate() const {
  if (M < 1) throw DomainError("M must be a positive integer, got " + std::to_string(M));
  if (!(eta > 0.0 && eta < 1.0)) {
    throw DomainError("eta must lie strictly inside (0, 1), got " + std::to_string(eta));
  }
  if (!std::isfinite(theta)) throw DomainError("theta must be finite");
  if (!(phi >= 0.0 && phi <= kTwoPi)) {
    throw DomainError("phi must lie in [0, 2 pi], got " + std::to_string(phi));
  }
}

double overlap_ratio(double eta, double k) { return std::exp(k * log_ratio(eta)); }

double parity_bracket(double cos_phi, int sign, double eta, double k) {
  const double c = sign * cos_phi;
  return (1.0 + c) + c * std::expm1(k * log_ratio(eta));
}

std::size_t nbs_cutoff(const NBSParams& params, const TruncationPolicy& policy) {
  params.validate();
  return nb_cutoff(params.M, params.eta * params.eta, policy);
}

FockVector nbs(const NBSParams& params, const TruncationPolicy& policy) {
  return nbs(params, nbs_cutoff(params, policy));
}

FockVector nbs(const NBSParams& params, std::size_t n_max) {
  params.validate();
  return nbs_at(params.eta_c(), params.M, n_max);
}

FockVector nbs_at(Complex alpha, int M, std::size_t n_max) {
  if (M < 1) throw DomainError("M must be a positive integer");
  const double r = std::abs(alpha);
  if (!(r < 1.0)) throw DomainError("NBS parameter must satisfy |alpha| < 1");
  auto v = FockVector::zeros(n_max);
  if (r == 0.0) {
    v[0] = 1.0;
    return v;
  }
  const long double prefactor = 0.5L * M * std::log1p(-static_cast<long double>(r) * r);
  const long double log_r = std::log(static_cast<long double>(r));
  const double arg = std::arg(alpha);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const long double log_mag = prefactor + 0.5L * log_nb_weight(M, n) + n * log_r;
    v[n] = amplitude(log_mag, n, arg);
  }
  return v;
}

double normalization_constant(double phi, double eta, int M) {
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("eta must lie strictly inside (0, 1)");
  if (M < 1) throw DomainError("M must be a positive integer");
  const double bracket = parity_bracket(unit_phase(phi).real(), +1, eta, M);
  return 1.0 / std::sqrt(2.0 * bracket);
}

std::size_t superposition_cutoff(const NBSParams& params, const TruncationPolicy& policy) {
  params.validate();
  const double c = unit_phase(params.phi).real();
  const double weight = (1.0 + std::abs(c)) / parity_bracket(c, +1, params.eta, params.M);
  return nb_cutoff(params.M, params.eta * params.eta, policy, weight);
}

FockVector superposition(const NBSParams& params, const TruncationPolicy& policy) {
  return superposition(params, superposition_cutoff(params, policy));
}

FockVector superposition(const NBSParams& params, std::size_t n_max) {
  params.validate();
  const double norm = normalization_constant(params.phi, params.eta, params.M);
  const Complex phase = unit_phase(params.phi);
  const double x = params.eta * params.eta;
  const long double prefactor =
      std::log(static_cast<long double>(norm)) + 0.5L * params.M * std::log1p(-static_cast<long double>(x));
  const long double log_eta = std::log(static_cast<long double>(params.eta));
  auto v = FockVector::zeros(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Complex pf = parity_factor(phase, n);
    if (pf == Complex{}) continue;
    const long double log_mag = prefactor + 0.5L * log_nb_weight(params.M, n) + n * log_eta;
    v[n] = pf * amplitude(log_mag, n, params.theta);
  }
  return v;
}

Complex nbs_inner_closed(Complex alpha, Complex beta, int M) {
  if (M < 1) throw DomainError("M must be a positive integer");
  const double ra = std::norm(alpha);
  const double rb = std::norm(beta);
  if (!(ra < 1.0 && rb < 1.0)) throw DomainError("NBS overlap needs |alpha|, |beta| < 1");
  const Complex log_value = 0.5 * M * (std::log1p(-ra) + std::log1p(-rb)) -
                            static_cast<double>(M) * std::log(Complex{1.0, 0.0} - std::conj(alpha) * beta);
  return std::exp(log_value);
}

namespace {

// Shared body of the even/odd NBS (parity 0 or 1): amplitudes on |2n + parity>.
FockVector parity_nbs(const NBSParams& params, std::size_t n_max, int parity) {
  params.validate();
  const int sign = parity == 0 ? +1 : -1;
  const double bracket = parity_bracket(1.0, sign, params.eta, params.M);
  // sqrt(2 / ((1-x)^{-M} +- (1+x)^{-M})) = sqrt(2 / bracket) (1-x)^{M/2}
  const long double prefactor =
      0.5L * (std::numbers::ln2_v<long double> - std::log(static_cast<long double>(bracket))) +
      0.5L * params.M * std::log1p(-static_cast<long double>(params.eta) * params.eta);
  const long double log_eta = std::log(static_cast<long double>(params.eta));
  auto v = FockVector::zeros(n_max);
  for (std::size_t level = static_cast<std::size_t>(parity); level <= n_max; level += 2) {
    const auto k = static_cast<long double>(level);
    const long double log_mag =
        prefactor + 0.5L * log_binomial(params.M + k - 1.0L, k) + k * log_eta;
    v[level] = amplitude(log_mag, level, params.theta);
  }
  return v;
}

std::size_t parity_nbs_cutoff(const NBSParams& params, const TruncationPolicy& policy, int sign) {
  params.validate();
  const double weight = 2.0 / parity_bracket(1.0, sign, params.eta, params.M);
  return nb_cutoff(params.M, params.eta * params.eta, policy, weight);
}

}  // namespace

FockVector even_nbs(const NBSParams& params, const TruncationPolicy& policy) {
  return even_nbs(params, parity_nbs_cutoff(params, policy, +1));
}

FockVector even_nbs(const NBSParams& params, std::size_t n_max) { return parity_nbs(params, n_max, 0); }

FockVector odd_nbs(const NBSParams& params, const TruncationPolicy& policy) {
  return odd_nbs(params, parity_nbs_cutoff(params, policy, -1));
}

FockVector odd_nbs(const NBSParams& params, std::size_t n_max) { return parity_nbs(params, n_max, 1); }

FockVector coherent(Complex alpha, const TruncationPolicy& policy) {
  validate_alpha(alpha);
  return coherent(alpha, poisson_cutoff(std::norm(alpha), policy));
}

FockVector coherent(Complex alpha, std::size_t n_max) {
  validate_alpha(alpha);
  auto v = FockVector::zeros(n_max);
  const double r = std::abs(alpha);
  if (r == 0.0) {
    v[0] = 1.0;
    return v;
  }
  const long double log_r = std::log(static_cast<long double>(r));
  const double arg = std::arg(alpha);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto k = static_cast<long double>(n);
    const long double log_mag = -0.5L * r * r + k * log_r - 0.5L * std::lgamma(k + 1.0L);
    v[n] = amplitude(log_mag, n, arg);
  }
  return v;
}

namespace {

FockVector parity_coherent(Complex alpha, std::size_t n_max, int parity) {
  validate_alpha(alpha);
  const double y = std::norm(alpha);
  if (parity == 1 && y == 0.0) throw DomainError("odd coherent state needs alpha != 0");
  auto v = FockVector::zeros(n_max);
  if (y == 0.0) {
    v[0] = 1.0;
    return v;
  }
  const long double log_norm = -0.5L * (parity == 0 ? log_cosh(y) : log_sinh(y));
  const long double log_r = std::log(static_cast<long double>(std::abs(alpha)));
  const double arg = std::arg(alpha);
  for (std::size_t level = static_cast<std::size_t>(parity); level <= n_max; level += 2) {
    const auto k = static_cast<long double>(level);
    v[level] = amplitude(log_norm + k * log_r - 0.5L * std::lgamma(k + 1.0L), level, arg);
  }
  return v;
}

std::size_t parity_coherent_cutoff(Complex alpha, const TruncationPolicy& policy, int sign) {
  validate_alpha(alpha);
  const double y = std::norm(alpha);
  // P(2n + parity) <= Poisson(2n + parity) * 2 / (1 + sign exp(-2y)).
  const double bracket = (1.0 + sign) + sign * std::expm1(-2.0 * y);
  if (bracket <= 0.0) throw DomainError("odd coherent state needs alpha != 0");
  return poisson_cutoff(y, policy, 2.0 / bracket);
}

}  // namespace

FockVector even_coherent(Complex alpha, const TruncationPolicy& policy) {
  return even_coherent(alpha, parity_coherent_cutoff(alpha, policy, +1));
}

FockVector even_coherent(Complex alpha, std::size_t n_max) { return parity_coherent(alpha, n_max, 0); }

FockVector odd_coherent(Complex alpha, const TruncationPolicy& policy) {
  return odd_coherent(alpha, parity_coherent_cutoff(alpha, policy, -1));
}

FockVector odd_coherent(Complex alpha, std::size_t n_max) { return parity_coherent(alpha, n_max, 1); }

namespace {

double cat_bracket(Complex alpha, double cos_phi) {
  // 1 + cos(phi) exp(-2 |alpha|^2)
  return (1.0 + cos_phi) + cos_phi * std::expm1(-2.0 * std::norm(alpha));
}

}  // namespace

FockVector cat_state(Complex alpha, double phi, const TruncationPolicy& policy) {
  validate_alpha(alpha);
  const double c = unit_phase(phi).real();
  const double bracket = cat_bracket(alpha, c);
  if (bracket <= 0.0) throw DomainError("cat state with zero norm (alpha = 0, phi = pi)");
  return cat_state(alpha, phi, poisson_cutoff(std::norm(alpha), policy, (1.0 + std::abs(c)) / bracket));
}

FockVector cat_state(Complex alpha, double phi, std::size_t n_max) {
  validate_alpha(alpha);
  const Complex phase = unit_phase(phi);
  const double bracket = cat_bracket(alpha, phase.real());
  if (bracket <= 0.0) throw DomainError("cat state with zero norm (alpha = 0, phi = pi)");
  const double norm = 1.0 / std::sqrt(2.0 * bracket);
  auto v = coherent(alpha, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) v[n] *= norm * parity_factor(phase, n);
  return v;
}

std::vector<double> photon_distribution(const FockVector& v) {
  std::vector<double> p(v.dim());
  for (std::size_t n = 0; n < v.dim(); ++n) p[n] = std::norm(v[n]);
  return p;
}

}  // namespace negbin
