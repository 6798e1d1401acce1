#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>

#include "negbin/fock.hpp"
#include "negbin/states.hpp"

namespace negbin {

enum class Parity { kEven, kOdd };

/// A state supported on one parity sector: sum_n C(n) |2n> or sum_n C(n) |2n+1>.
struct ParitySequence {
  Parity parity = Parity::kEven;
  std::function<Complex(std::size_t)> coeffs;

  /// Photon number carried by the n-th coefficient.
  [[nodiscard]] std::size_t level(std::size_t n) const {
    return 2 * n + (parity == Parity::kOdd ? 1 : 0);
  }

  /// The sequence as a FockVector truncated at n_max.
  [[nodiscard]] FockVector realize(std::size_t n_max) const;
};

/// Ladder function f(N) and structure function S(N) of a parity sequence.
///
/// With A+ = f(N) a^dag^2 and A- = (A+)^dag, the sequence is annihilated by
/// N - f(N) a^dag^2 (even) or (N - 1) - f(N) a^dag^2 (odd), and
/// A+ A- = S(N). Both functions are defined only on photon numbers of the
/// sequence's parity: N >= 2 even, N >= 3 odd for f, and additionally the
/// lowest level (S = 0) for S. Other arguments throw DomainError; a vanishing
/// denominator coefficient throws PoleError.
class StructureFunction {
 public:
  StructureFunction(Parity parity, std::function<Complex(std::size_t)> coeffs);

  [[nodiscard]] Parity parity() const noexcept { return parity_; }

  [[nodiscard]] Complex f(std::size_t N) const;

  /// N^2 |C_e(N/2) / C_e(N/2 - 1)|^2, or (N-1)^2 |C_o((N-1)/2) / C_o((N-3)/2)|^2.
  [[nodiscard]] double S(std::size_t N) const;

  /// The same expressions with the ratio squared instead of its modulus
  /// squared. Equal to S(N) only when the coefficient ratio is real.
  [[nodiscard]] Complex S_unconjugated(std::size_t N) const;

  /// True when N lies in the sector where S is defined.
  [[nodiscard]] bool in_sector(std::size_t N) const;

 private:
  // C(upper) / C(upper - 1) for the coefficient index upper >= 1.
  [[nodiscard]] Complex ratio(std::size_t upper) const;
  void require_raised_level(std::size_t N) const;

  Parity parity_;
  std::function<Complex(std::size_t)> coeffs_;
};

/// f(N) = sqrt(N/(N-1)) C_e(N/2)/C_e(N/2-1), S(N) = N^2 |C_e(N/2)/C_e(N/2-1)|^2.
[[nodiscard]] StructureFunction derive_f_even(const ParitySequence& seq);

/// f(N) = sqrt((N-1)/N) C_o((N-1)/2)/C_o((N-3)/2), S(N) = (N-1)^2 |...|^2.
[[nodiscard]] StructureFunction derive_f_odd(const ParitySequence& seq);

/// Max-norm residuals of the deformed oscillator relations on a truncated space.
///
/// A+ raises the photon number by two, so the relations close with the pair
/// counter K = floor(N/2): [K, A+] = A+, [K, A-] = -A-, A+ A- = S(N),
/// A- A+ = S(N + 2) (S(K + 1) in pair units). Rows and columns of the top two
/// levels are excluded.
struct GdoResiduals {
  double raise_commutator = 0.0;
  double lower_commutator = 0.0;
  double raise_lower = 0.0;
  double lower_raise = 0.0;

  [[nodiscard]] double max() const {
    return std::max({raise_commutator, lower_commutator, raise_lower, lower_raise});
  }
};

[[nodiscard]] GdoResiduals gdo_relations_check(const StructureFunction& sf, const ParitySequence& seq,
                                               std::size_t n_max);

/// |(N - p - f(N) a^dag^2) v| with p = 0 (even) or 1 (odd), v = seq.realize(n_max).
[[nodiscard]] double annihilation_residual(const StructureFunction& sf, const ParitySequence& seq,
                                           std::size_t n_max);

/// |a^2 v - sqrt((N+1)(N+2)) C(next)/C(current) v| over levels 0..n_max-2.
[[nodiscard]] double lowering_ratio_residual(const ParitySequence& seq, std::size_t n_max);

/// |a^2 v - lambda v| over levels 0..n_max-2.
[[nodiscard]] double two_photon_eigen_residual(const FockVector& v, Complex lambda);

/// Residuals of a^2 v = sqrt((M+N)(M+N+1)) eta_c^2 v ("plain") and of
/// ((M+N)(M+N+1))^{-1/2} a^2 v = eta_c^2 v ("normalized"), over levels 0..n_max-2.
struct EigenResiduals {
  double plain = 0.0;
  double normalized = 0.0;
};

[[nodiscard]] EigenResiduals eigen_residual(const FockVector& v, const NBSParams& params);
[[nodiscard]] EigenResiduals eigen_residual_even(const NBSParams& params, std::size_t n_max);
[[nodiscard]] EigenResiduals eigen_residual_odd(const NBSParams& params, std::size_t n_max);

/// max over the even and odd NBS of |F(N) a^2 v - eta_c^2 v| with
/// F(N) = ((M+N)(M+N+1))^{-1/2}.
[[nodiscard]] double nonlinear_coherent_check(const NBSParams& params, std::size_t n_max);

/// Coefficient sequences of the named states.
[[nodiscard]] ParitySequence even_nbs_sequence(const NBSParams& params);
[[nodiscard]] ParitySequence odd_nbs_sequence(const NBSParams& params);
[[nodiscard]] ParitySequence even_coherent_sequence(Complex alpha);
[[nodiscard]] ParitySequence odd_coherent_sequence(Complex alpha);

}  // namespace negbin
