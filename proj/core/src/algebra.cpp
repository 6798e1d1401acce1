#include "negbin/algebra.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

#include "negbin/errors.hpp"
#include "negbin/special.hpp"

namespace negbin {

namespace {

double sector_offset(Parity p) { return p == Parity::kOdd ? 1.0 : 0.0; }

bool same_parity(std::size_t N, Parity p) { return (N % 2 == 1) == (p == Parity::kOdd); }

}  // namespace

FockVector ParitySequence::realize(std::size_t n_max) const {
  auto v = FockVector::zeros(n_max);
  for (std::size_t n = 0; level(n) <= n_max; ++n) v[level(n)] = coeffs(n);
  return v;
}

StructureFunction::StructureFunction(Parity parity, std::function<Complex(std::size_t)> coeffs)
    : parity_(parity), coeffs_(std::move(coeffs)) {
  if (!coeffs_) throw DomainError("structure function needs a coefficient sequence");
}

bool StructureFunction::in_sector(std::size_t N) const { return same_parity(N, parity_); }

void StructureFunction::require_raised_level(std::size_t N) const {
  const std::size_t lowest_raised = parity_ == Parity::kEven ? 2 : 3;
  if (!in_sector(N) || N < lowest_raised) {
    throw DomainError("f(N) is defined on " +
                      std::string(parity_ == Parity::kEven ? "even N >= 2" : "odd N >= 3") +
                      ", got N=" + std::to_string(N));
  }
}

Complex StructureFunction::ratio(std::size_t upper) const {
  const Complex below = coeffs_(upper - 1);
  if (below == Complex{}) throw PoleError(upper - 1, "coefficient ratio C(n+1)/C(n)");
  return coeffs_(upper) / below;
}

Complex StructureFunction::f(std::size_t N) const {
  require_raised_level(N);
  const auto n = static_cast<double>(N);
  if (parity_ == Parity::kEven) return std::sqrt(n / (n - 1.0)) * ratio(N / 2);
  return std::sqrt((n - 1.0) / n) * ratio((N - 1) / 2);
}

double StructureFunction::S(std::size_t N) const {
  if (in_sector(N) && N == (parity_ == Parity::kEven ? 0u : 1u)) return 0.0;
  require_raised_level(N);
  const double lead = static_cast<double>(parity_ == Parity::kEven ? N : N - 1);
  const std::size_t upper = parity_ == Parity::kEven ? N / 2 : (N - 1) / 2;
  return lead * lead * std::norm(ratio(upper));
}

Complex StructureFunction::S_unconjugated(std::size_t N) const {
  if (in_sector(N) && N == (parity_ == Parity::kEven ? 0u : 1u)) return {};
  require_raised_level(N);
  const double lead = static_cast<double>(parity_ == Parity::kEven ? N : N - 1);
  const std::size_t upper = parity_ == Parity::kEven ? N / 2 : (N - 1) / 2;
  const Complex r = ratio(upper);
  return lead * lead * r * r;
}

StructureFunction derive_f_even(const ParitySequence& seq) {
  if (seq.parity != Parity::kEven) throw DomainError("derive_f_even needs an even sequence");
  return {Parity::kEven, seq.coeffs};
}

StructureFunction derive_f_odd(const ParitySequence& seq) {
  if (seq.parity != Parity::kOdd) throw DomainError("derive_f_odd needs an odd sequence");
  return {Parity::kOdd, seq.coeffs};
}

GdoResiduals gdo_relations_check(const StructureFunction& sf, const ParitySequence& seq,
                                 std::size_t n_max) {
  if (sf.parity() != seq.parity) throw DomainError("structure function and sequence parity differ");
  if (n_max < 4) throw DomainError("gdo_relations_check needs n_max >= 4");
  using Matrix = Eigen::MatrixXcd;
  const auto dim = static_cast<Eigen::Index>(n_max + 1);

  Matrix pairs = Matrix::Zero(dim, dim);
  Matrix raise = Matrix::Zero(dim, dim);
  Eigen::VectorXcd s_diag = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    const auto level = static_cast<std::size_t>(n);
    pairs(n, n) = static_cast<double>(level / 2);
    if (sf.in_sector(level)) s_diag(n) = sf.S(level);
    if (n + 2 < dim && sf.in_sector(level + 2)) {
      const double ladder = std::sqrt(static_cast<double>((level + 1) * (level + 2)));
      raise(n + 2, n) = sf.f(level + 2) * ladder;
    }
  }
  const Matrix lower = raise.adjoint();

  // Top two levels are cut off by the truncation.
  const Eigen::Index kept = dim - 2;
  auto residual = [kept](const Matrix& m) { return m.topLeftCorner(kept, kept).cwiseAbs().maxCoeff(); };

  Matrix shifted_s = Matrix::Zero(dim, dim);
  for (Eigen::Index n = 0; n + 2 < dim; ++n) shifted_s(n, n) = s_diag(n + 2);

  GdoResiduals r;
  r.raise_commutator = residual(pairs * raise - raise * pairs - raise);
  r.lower_commutator = residual(pairs * lower - lower * pairs + lower);
  r.raise_lower = residual(raise * lower - Matrix(s_diag.asDiagonal()));
  r.lower_raise = residual(lower * raise - shifted_s);
  return r;
}

double annihilation_residual(const StructureFunction& sf, const ParitySequence& seq, std::size_t n_max) {
  if (sf.parity() != seq.parity) throw DomainError("structure function and sequence parity differ");
  const auto v = seq.realize(n_max);
  const double offset = sector_offset(seq.parity);
  double worst = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Complex value = (static_cast<double>(n) - offset) * v[n];
    if (n >= 2 && sf.in_sector(n) && n >= (seq.parity == Parity::kEven ? 2u : 3u)) {
      value -= sf.f(n) * std::sqrt(static_cast<double>(n * (n - 1))) * v[n - 2];
    }
    worst = std::max(worst, std::abs(value));
  }
  return worst;
}

double lowering_ratio_residual(const ParitySequence& seq, std::size_t n_max) {
  if (n_max < 2) throw DomainError("lowering_ratio_residual needs n_max >= 2");
  const auto v = seq.realize(n_max);
  const auto lowered = apply_annihilate(apply_annihilate(v));
  double worst = 0.0;
  for (std::size_t k = 0; seq.level(k) + 2 <= n_max; ++k) {
    const std::size_t n = seq.level(k);
    const Complex current = seq.coeffs(k);
    if (current == Complex{}) throw PoleError(k, "a^2 ratio C(n+1)/C(n)");
    const double ladder = std::sqrt(static_cast<double>((n + 1) * (n + 2)));
    const Complex rhs = ladder * seq.coeffs(k + 1) / current * v[n];
    worst = std::max(worst, std::abs(lowered[n] - rhs));
  }
  // Levels outside the sector must stay empty.
  for (std::size_t n = 0; n + 2 <= n_max; ++n) {
    if ((n % 2 == 1) != (seq.parity == Parity::kOdd)) worst = std::max(worst, std::abs(lowered[n]));
  }
  return worst;
}

double two_photon_eigen_residual(const FockVector& v, Complex lambda) {
  if (v.n_max() < 2) throw DomainError("two_photon_eigen_residual needs n_max >= 2");
  const auto lowered = apply_annihilate(apply_annihilate(v));
  double worst = 0.0;
  for (std::size_t n = 0; n + 2 <= v.n_max(); ++n) {
    worst = std::max(worst, std::abs(lowered[n] - lambda * v[n]));
  }
  return worst;
}

EigenResiduals eigen_residual(const FockVector& v, const NBSParams& params) {
  params.validate();
  if (v.n_max() < 2) throw DomainError("eigen_residual needs n_max >= 2");
  const Complex eta_c2 = params.eta_c() * params.eta_c();
  const auto lowered = apply_annihilate(apply_annihilate(v));
  EigenResiduals r;
  for (std::size_t n = 0; n + 2 <= v.n_max(); ++n) {
    const double m = static_cast<double>(params.M) + static_cast<double>(n);
    const double weight = std::sqrt(m * (m + 1.0));
    r.plain = std::max(r.plain, std::abs(lowered[n] - weight * eta_c2 * v[n]));
    r.normalized = std::max(r.normalized, std::abs(lowered[n] / weight - eta_c2 * v[n]));
  }
  return r;
}

EigenResiduals eigen_residual_even(const NBSParams& params, std::size_t n_max) {
  return eigen_residual(even_nbs(params, n_max), params);
}

EigenResiduals eigen_residual_odd(const NBSParams& params, std::size_t n_max) {
  return eigen_residual(odd_nbs(params, n_max), params);
}

double nonlinear_coherent_check(const NBSParams& params, std::size_t n_max) {
  return std::max(eigen_residual_even(params, n_max).normalized,
                  eigen_residual_odd(params, n_max).normalized);
}

namespace {

ParitySequence nbs_sequence(const NBSParams& params, Parity parity) {
  params.validate();
  const int sign = parity == Parity::kEven ? +1 : -1;
  const double bracket = parity_bracket(1.0, sign, params.eta, params.M);
  const long double prefactor =
      0.5L * (std::numbers::ln2_v<long double> - std::log(static_cast<long double>(bracket))) +
      0.5L * params.M * std::log1p(-static_cast<long double>(params.eta) * params.eta);
  const long double log_eta = std::log(static_cast<long double>(params.eta));
  const int M = params.M;
  const double theta = params.theta;
  const std::size_t offset = parity == Parity::kOdd ? 1 : 0;
  return {parity, [=](std::size_t n) {
            const std::size_t level = 2 * n + offset;
            const auto k = static_cast<long double>(level);
            const long double log_mag = prefactor + 0.5L * log_binomial(M + k - 1.0L, k) + k * log_eta;
            return std::polar(static_cast<double>(std::exp(log_mag)), static_cast<double>(level) * theta);
          }};
}

ParitySequence coherent_sequence(Complex alpha, Parity parity) {
  const double y = std::norm(alpha);
  if (parity == Parity::kOdd && y == 0.0) throw DomainError("odd coherent state needs alpha != 0");
  if (y == 0.0) return {parity, [](std::size_t n) { return n == 0 ? Complex{1.0, 0.0} : Complex{}; }};
  // 1/sqrt(cosh y) or 1/sqrt(sinh y), in log form.
  const double log_c = parity == Parity::kEven ? y + std::log1p(std::exp(-2.0 * y)) - std::numbers::ln2
                                               : y + std::log1p(-std::exp(-2.0 * y)) - std::numbers::ln2;
  const long double log_norm = -0.5L * log_c;
  const long double log_r = std::log(static_cast<long double>(std::abs(alpha)));
  const double arg = std::arg(alpha);
  const std::size_t offset = parity == Parity::kOdd ? 1 : 0;
  return {parity, [=](std::size_t n) {
            const std::size_t level = 2 * n + offset;
            const auto k = static_cast<long double>(level);
            const long double log_mag = log_norm + k * log_r - 0.5L * std::lgamma(k + 1.0L);
            return std::polar(static_cast<double>(std::exp(log_mag)), static_cast<double>(level) * arg);
          }};
}

}  // namespace

ParitySequence even_nbs_sequence(const NBSParams& params) { return nbs_sequence(params, Parity::kEven); }
ParitySequence odd_nbs_sequence(const NBSParams& params) { return nbs_sequence(params, Parity::kOdd); }
ParitySequence even_coherent_sequence(Complex alpha) { return coherent_sequence(alpha, Parity::kEven); }
ParitySequence odd_coherent_sequence(Complex alpha) { return coherent_sequence(alpha, Parity::kOdd); }

}  // namespace negbin
