#pragma once

// Test-only brute-force references. Amplitudes come from the ratio recurrence
// c_n / c_{n-1} = sqrt((M + n - 1) / n) alpha in long double, independent of
// the log-gamma evaluation used by the library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "negbin/fock.hpp"

namespace negbin::reference {

using LComplex = std::complex<long double>;

inline std::vector<LComplex> nbs_amplitudes(LComplex alpha, int M, std::size_t n_max) {
  std::vector<LComplex> c(n_max + 1);
  c[0] = std::pow(1.0L - std::norm(alpha), 0.5L * M);
  for (std::size_t n = 1; n <= n_max; ++n) {
    c[n] = c[n - 1] * std::sqrt((M + static_cast<long double>(n) - 1.0L) / static_cast<long double>(n)) * alpha;
  }
  return c;
}

inline std::vector<LComplex> coherent_amplitudes(LComplex alpha, std::size_t n_max) {
  std::vector<LComplex> c(n_max + 1);
  c[0] = std::exp(-0.5L * std::norm(alpha));
  for (std::size_t n = 1; n <= n_max; ++n) c[n] = c[n - 1] * alpha / std::sqrt(static_cast<long double>(n));
  return c;
}

/// |eta_c> + exp(i phi) |-eta_c>, normalized by direct summation.
inline FockVector superposition(int M, long double eta, long double theta, long double phi, std::size_t n_max) {
  const LComplex alpha = std::polar(eta, theta);
  const auto plus = nbs_amplitudes(alpha, M, n_max);
  const auto minus = nbs_amplitudes(-alpha, M, n_max);
  const LComplex phase = std::polar(1.0L, phi);
  std::vector<LComplex> c(n_max + 1);
  long double norm2 = 0.0L;
  for (std::size_t n = 0; n <= n_max; ++n) {
    c[n] = plus[n] + phase * minus[n];
    norm2 += std::norm(c[n]);
  }
  std::vector<Complex> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const LComplex v = c[n] / std::sqrt(norm2);
    out[n] = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
  }
  return FockVector(std::move(out));
}

inline FockVector to_fock(const std::vector<LComplex>& c) {
  std::vector<Complex> out(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    out[n] = {static_cast<double>(c[n].real()), static_cast<double>(c[n].imag())};
  }
  return FockVector(std::move(out));
}

/// Negative-binomial probabilities P(n) = C(M+n-1, n) x^n (1-x)^M by recurrence.
inline std::vector<long double> nb_pmf(int M, long double x, std::size_t n_max) {
  std::vector<long double> p(n_max + 1);
  p[0] = std::pow(1.0L - x, static_cast<long double>(M));
  for (std::size_t n = 1; n <= n_max; ++n) {
    p[n] = p[n - 1] * (M + static_cast<long double>(n) - 1.0L) / static_cast<long double>(n) * x;
  }
  return p;
}

/// sum_{k >= from} P(k), summed from the far end of a long table.
inline long double nb_tail(int M, long double x, std::size_t from, std::size_t table = 20000) {
  const auto p = nb_pmf(M, x, table);
  long double s = 0.0L;
  for (std::size_t k = table; k + 1 > from; --k) s += p[k];
  return s;
}

/// Superposition distribution from the NB probabilities with parity weights,
/// renormalized by direct summation.
inline std::vector<long double> superposition_pmf(int M, long double eta, long double phi, std::size_t n_max) {
  auto p = nb_pmf(M, eta * eta, n_max);
  long double total = 0.0L;
  const long double c = std::cos(phi);
  for (std::size_t n = 0; n <= n_max; ++n) {
    p[n] *= 1.0L + c * ((n % 2 == 0) ? 1.0L : -1.0L);
    total += p[n];
  }
  for (auto& v : p) v /= total;
  return p;
}

/// Central finite difference with step h.
template <typename F>
long double central_difference(F f, long double at, long double h) {
  return (f(at + h) - f(at - h)) / (2.0L * h);
}

}  // namespace negbin::reference
