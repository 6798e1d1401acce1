#include "negbin/fock.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "negbin/errors.hpp"

namespace negbin {

void TruncationPolicy::validate() const {
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
    throw DomainError("tail_tolerance must lie in (0, 1), got " + std::to_string(tail_tolerance));
  }
  if (hard_cap == 0) {
    throw DomainError("hard_cap must be positive");
  }
}

FockVector FockVector::zeros(std::size_t n_max) {
  return FockVector(std::vector<Complex>(n_max + 1, Complex{}));
}

FockVector FockVector::number_state(std::size_t n, std::size_t n_max) {
  if (n > n_max) {
    throw DomainError("number state |" + std::to_string(n) + "> does not fit below n_max=" +
                      std::to_string(n_max));
  }
  auto v = zeros(n_max);
  v[n] = 1.0;
  return v;
}

FockVector::FockVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) {
    throw DomainError("a Fock vector needs at least one component");
  }
}

double FockVector::norm_squared() const {
  double s = 0.0;
  for (const auto& c : amplitudes_) s += std::norm(c);
  return s;
}

double FockVector::norm() const { return std::sqrt(norm_squared()); }

FockVector FockVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw DomainError("cannot normalize the zero vector");
  FockVector out = *this;
  out *= Complex{1.0 / nrm, 0.0};
  return out;
}

FockVector FockVector::resized(std::size_t n_max) const {
  std::vector<Complex> amps(n_max + 1, Complex{});
  const std::size_t keep = std::min(amps.size(), amplitudes_.size());
  std::copy_n(amplitudes_.begin(), keep, amps.begin());
  return FockVector(std::move(amps));
}

FockVector& FockVector::operator*=(Complex s) {
  for (auto& c : amplitudes_) c *= s;
  return *this;
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
  if (dim() != rhs.dim()) throw DimensionMismatch(dim(), rhs.dim());
  for (std::size_t n = 0; n < dim(); ++n) amplitudes_[n] += rhs.amplitudes_[n];
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& rhs) {
  if (dim() != rhs.dim()) throw DimensionMismatch(dim(), rhs.dim());
  for (std::size_t n = 0; n < dim(); ++n) amplitudes_[n] -= rhs.amplitudes_[n];
  return *this;
}

Complex inner(const FockVector& u, const FockVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch(u.dim(), v.dim());
  Complex s{};
  for (std::size_t n = 0; n < u.dim(); ++n) s += std::conj(u[n]) * v[n];
  return s;
}

FockVector apply_annihilate(const FockVector& v) {
  auto out = FockVector::zeros(v.n_max());
  for (std::size_t n = 0; n < v.n_max(); ++n) {
    out[n] = std::sqrt(static_cast<double>(n + 1)) * v[n + 1];
  }
  return out;
}

FockVector apply_create(const FockVector& v, double tail_tolerance) {
  if (std::norm(v[v.n_max()]) >= tail_tolerance) {
    throw TruncationOverflow("a^dag would push weight " + std::to_string(std::norm(v[v.n_max()])) +
                             " past n_max=" + std::to_string(v.n_max()));
  }
  auto out = FockVector::zeros(v.n_max());
  for (std::size_t n = 1; n <= v.n_max(); ++n) {
    out[n] = std::sqrt(static_cast<double>(n)) * v[n - 1];
  }
  return out;
}

FockVector apply_number(const FockVector& v) {
  auto out = v;
  for (std::size_t n = 0; n < v.dim(); ++n) out[n] *= static_cast<double>(n);
  return out;
}

double tail_mass(const FockVector& v, std::size_t from_n) {
  if (from_n > v.n_max()) {
    throw DomainError("tail_mass: from_n=" + std::to_string(from_n) + " exceeds n_max=" +
                      std::to_string(v.n_max()));
  }
  double s = 0.0;
  for (std::size_t n = from_n; n < v.dim(); ++n) s += std::norm(v[n]);
  return s;
}

namespace {

// Variance of a Hermitian quadrature X = (e^{-i chi} a + e^{i chi} a^dag)/2
// computed as |X v|^2 - <X>^2 on a space extended by one level.
double quadrature_variance(const FockVector& v, double norm2, Complex phase) {
  const auto padded = v.resized(v.n_max() + 1);
  const auto lowered = apply_annihilate(padded);
  const auto raised = apply_create(padded);
  auto xv = std::conj(phase) * lowered + phase * raised;
  xv *= Complex{0.5, 0.0};
  const double mean = inner(padded, xv).real() / norm2;
  return xv.norm_squared() / norm2 - mean * mean;
}

}  // namespace

PhotonStats oracle_stats(const FockVector& v) {
  const double norm2 = v.norm_squared();
  constexpr double slack = kTruncationTolerance + 64 * std::numeric_limits<double>::epsilon();
  if (std::abs(norm2 - 1.0) > slack) {
    throw DomainError("oracle_stats expects a normalized state, |v|^2 = " + std::to_string(norm2));
  }

  PhotonStats s;
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t n = 0; n < v.dim(); ++n) {
    const double p = std::norm(v[n]);
    const auto nn = static_cast<double>(n);
    mean += nn * p;
    second += nn * nn * p;
  }
  mean /= norm2;
  second /= norm2;
  s.mean_n = mean;
  s.second_moment = second;

  if (mean > 0.0) {
    double var = 0.0;
    for (std::size_t n = 0; n < v.dim(); ++n) {
      const double d = static_cast<double>(n) - mean;
      var += d * d * std::norm(v[n]);
    }
    var /= norm2;
    s.mandel_q = (var - mean) / mean;
  }

  Complex a1{};
  Complex a2{};
  for (std::size_t n = 0; n + 1 < v.dim(); ++n) {
    a1 += std::conj(v[n]) * std::sqrt(static_cast<double>(n + 1)) * v[n + 1];
  }
  for (std::size_t n = 0; n + 2 < v.dim(); ++n) {
    const auto k = static_cast<double>(n);
    a2 += std::conj(v[n]) * std::sqrt((k + 1.0) * (k + 2.0)) * v[n + 2];
  }
  s.exp_a = a1 / norm2;
  s.exp_a2 = a2 / norm2;

  // X1 = (a + a^dag)/2, X2 = (a - a^dag)/(2i) = (-i a + i a^dag)/2.
  s.var_x1 = quadrature_variance(v, norm2, Complex{1.0, 0.0});
  s.var_x2 = quadrature_variance(v, norm2, Complex{0.0, 1.0});
  return s;
}

}  // namespace negbin
