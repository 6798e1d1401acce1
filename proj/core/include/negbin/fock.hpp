#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace negbin {

using Complex = std::complex<double>;

/// Tolerance on the norm of a truncated, normalized state.
inline constexpr double kTruncationTolerance = 1e-12;

/// Controls how far an infinite Fock expansion is carried.
struct TruncationPolicy {
  double tail_tolerance = kTruncationTolerance;
  std::size_t hard_cap = 20000;

  /// Throws DomainError unless 0 < tail_tolerance < 1 and hard_cap > 0.
  void validate() const;
};

/// State vector over the number basis |0>, ..., |n_max>.
///
/// Index n carries the amplitude of |n>. The vector always has at least one
/// component, so n_max() is well defined.
class FockVector {
 public:
  /// Vacuum |0> in a one-dimensional space.
  FockVector() : amplitudes_(1, Complex{1.0, 0.0}) {}

  /// Zero vector with components 0..n_max.
  static FockVector zeros(std::size_t n_max);
  /// Number state |n> truncated at n_max (n <= n_max).
  static FockVector number_state(std::size_t n, std::size_t n_max);

  explicit FockVector(std::vector<Complex> amplitudes);

  [[nodiscard]] std::size_t n_max() const noexcept { return amplitudes_.size() - 1; }
  [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }

  [[nodiscard]] const Complex& operator[](std::size_t n) const { return amplitudes_[n]; }
  Complex& operator[](std::size_t n) { return amplitudes_[n]; }

  [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

  [[nodiscard]] double norm_squared() const;
  [[nodiscard]] double norm() const;

  /// Copy scaled to unit norm. Throws DomainError on the zero vector.
  [[nodiscard]] FockVector normalized() const;
  /// Copy truncated or zero-padded to the given bound.
  [[nodiscard]] FockVector resized(std::size_t n_max) const;

  FockVector& operator*=(Complex s);
  FockVector& operator+=(const FockVector& rhs);
  FockVector& operator-=(const FockVector& rhs);

  friend FockVector operator*(Complex s, FockVector v) { return v *= s; }
  friend FockVector operator+(FockVector lhs, const FockVector& rhs) { return lhs += rhs; }
  friend FockVector operator-(FockVector lhs, const FockVector& rhs) { return lhs -= rhs; }

 private:
  std::vector<Complex> amplitudes_;
};

/// Mandel Q; empty for the vacuum, where <N> = 0 leaves it undefined.
using MandelQ = std::optional<double>;

/// Photon-number and quadrature statistics of a single-mode state.
///
/// Quadratures follow X1 = (a + a^dag)/2, X2 = (a - a^dag)/(2i), so the
/// vacuum has var_x1 = var_x2 = 1/4.
struct PhotonStats {
  double mean_n = 0.0;
  double second_moment = 0.0;
  MandelQ mandel_q;
  Complex exp_a;
  Complex exp_a2;
  double var_x1 = 0.25;
  double var_x2 = 0.25;
};

/// sum_n conj(u_n) v_n. Throws DimensionMismatch when the bounds differ.
[[nodiscard]] Complex inner(const FockVector& u, const FockVector& v);

/// a v with the top component set to zero.
[[nodiscard]] FockVector apply_annihilate(const FockVector& v);

/// a^dag v in the same truncated space.
///
/// The amplitude at n_max is pushed out of the space, so its weight must be
/// below tail_tolerance; otherwise TruncationOverflow is thrown.
[[nodiscard]] FockVector apply_create(const FockVector& v,
                                      double tail_tolerance = kTruncationTolerance);

[[nodiscard]] FockVector apply_number(const FockVector& v);

/// sum_{n >= from_n} |v_n|^2. Throws DomainError if from_n > n_max.
[[nodiscard]] double tail_mass(const FockVector& v, std::size_t from_n);

/// Brute-force statistics by direct summation over the amplitudes.
///
/// Expectation values are divided by |v|^2; the input must be normalized to
/// within kTruncationTolerance (DomainError otherwise). Quadrature variances
/// are obtained by applying X1, X2 to the state in a space one level larger,
/// not by assembling them from <N>, <a> and <a^2>.
[[nodiscard]] PhotonStats oracle_stats(const FockVector& v);

}  // namespace negbin
