#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "negbin/errors.hpp"
#include "negbin/fock.hpp"
#include "negbin/states.hpp"
#include "negbin/statistics.hpp"
#include "reference.hpp"

namespace negbin {
namespace {

TEST(FockVector, ConstructionAndResize) {
  EXPECT_EQ(FockVector().n_max(), 0u);
  EXPECT_THROW(FockVector(std::vector<Complex>{}), DomainError);
  const auto v = FockVector::number_state(3, 5);
  EXPECT_EQ(v.dim(), 6u);
  EXPECT_EQ(v[3], Complex(1.0, 0.0));
  EXPECT_EQ(v.resized(8).n_max(), 8u);
  EXPECT_EQ(v.resized(2).norm_squared(), 0.0);
  EXPECT_THROW((void)FockVector::number_state(6, 5), DomainError);
  EXPECT_THROW((void)FockVector::zeros(3).normalized(), DomainError);
}

TEST(TruncationPolicy, Validation) {
  EXPECT_NO_THROW(TruncationPolicy{}.validate());
  EXPECT_THROW((TruncationPolicy{0.0, 10}.validate()), DomainError);
  EXPECT_THROW((TruncationPolicy{1.0, 10}.validate()), DomainError);
  EXPECT_THROW((TruncationPolicy{1e-12, 0}.validate()), DomainError);
}

TEST(Inner, NormalizationOrthogonalityAndMismatch) {
  const auto v = nbs({3, 0.6, 0.4, 0.0});
  EXPECT_NEAR(std::abs(inner(v, v) - 1.0), 0.0, 1e-12);
  EXPECT_EQ(inner(FockVector::number_state(0, 4), FockVector::number_state(1, 4)), Complex{});
  EXPECT_THROW((void)inner(FockVector::zeros(3), FockVector::zeros(4)), DimensionMismatch);
}

TEST(Inner, OppositeNbsOverlap) {
  const double eta = std::sqrt(0.5);
  const std::size_t n_max = 200;
  const auto plus = nbs({1, eta, 0.0, 0.0}, n_max);
  const auto minus = nbs_at(Complex{-eta, 0.0}, 1, n_max);
  const Complex overlap = inner(minus, plus);
  EXPECT_NEAR(overlap.real(), 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(overlap.imag(), 0.0, 1e-10);
}

TEST(Annihilate, BasicActions) {
  const auto a0 = apply_annihilate(FockVector::number_state(0, 4));
  EXPECT_EQ(a0.norm_squared(), 0.0);
  const auto a1 = apply_annihilate(FockVector::number_state(1, 4));
  EXPECT_EQ(a1[0], Complex(1.0, 0.0));
  EXPECT_EQ(a1.norm_squared(), 1.0);
}

TEST(Annihilate, CoherentEigenstate) {
  // Reference amplitudes from the recurrence c_n = c_{n-1} alpha / sqrt(n).
  const auto coh = reference::to_fock(reference::coherent_amplitudes(0.5L, 63));
  const auto lowered = apply_annihilate(coh);
  for (std::size_t n = 0; n < coh.n_max(); ++n) {
    EXPECT_NEAR(std::abs(lowered[n] - 0.5 * coh[n]), 0.0, 1e-10) << "n=" << n;
  }
}

TEST(Create, BasicActionsAndOverflow) {
  const auto up = apply_create(FockVector::number_state(0, 4));
  EXPECT_EQ(up[1], Complex(1.0, 0.0));
  const auto up5 = apply_create(FockVector::number_state(5, 8));
  EXPECT_NEAR(up5[6].real(), std::sqrt(6.0), 1e-15);
  EXPECT_THROW((void)apply_create(FockVector::number_state(4, 4)), TruncationOverflow);
}

TEST(Number, Actions) {
  EXPECT_EQ(apply_number(FockVector::number_state(0, 3)).norm_squared(), 0.0);
  EXPECT_EQ(apply_number(FockVector::number_state(3, 3))[3], Complex(3.0, 0.0));
  const auto coh = coherent(Complex{1.0, 0.0}, std::size_t{63});
  EXPECT_NEAR(inner(coh, apply_number(coh)).real(), 1.0, 1e-10);
}

TEST(TailMass, Basics) {
  EXPECT_EQ(tail_mass(FockVector::number_state(0, 3), 1), 0.0);
  const auto v = nbs({2, 0.5, 0.0, 0.0});
  EXPECT_NEAR(tail_mass(v, 0), 1.0, 1e-12);
  EXPECT_THROW((void)tail_mass(v, v.n_max() + 1), DomainError);
}

TEST(TailMass, NbsCutoffLeavesNegligibleTail) {
  const NBSParams p{30, 0.6, 0.0, 0.0};
  const auto v = nbs(p);
  // Reference: brute-force summation of the negative-binomial tail.
  EXPECT_LT(static_cast<double>(reference::nb_tail(30, 0.36L, v.n_max())), 1e-12);
  EXPECT_LT(tail_mass(v, v.n_max()), 1e-12);
  EXPECT_LT(static_cast<double>(reference::nb_tail(30, 0.36L, v.n_max() - 1)), 1e-12);
  // Cutoff before padding is the smallest n with P(N > n) < 1e-12: 71 for these
  // parameters (high-precision enumeration), so n_max = 73.
  EXPECT_EQ(v.n_max(), 73u);
}

TEST(OracleStats, NumberStateIsMaximallySubPoissonian) {
  const auto s = oracle_stats(FockVector::number_state(3, 10));
  EXPECT_DOUBLE_EQ(s.mean_n, 3.0);
  ASSERT_TRUE(s.mandel_q.has_value());
  EXPECT_DOUBLE_EQ(*s.mandel_q, -1.0);
}

TEST(OracleStats, CoherentIsPoissonian) {
  const auto s = oracle_stats(coherent(Complex{1.0, 0.0}, std::size_t{63}));
  ASSERT_TRUE(s.mandel_q.has_value());
  EXPECT_NEAR(*s.mandel_q, 0.0, 1e-10);
  EXPECT_NEAR(s.var_x1, 0.25, 1e-12);
  EXPECT_NEAR(s.var_x2, 0.25, 1e-12);
}

TEST(OracleStats, VacuumHasUndefinedQ) {
  const auto s = oracle_stats(FockVector::number_state(0, 5));
  EXPECT_FALSE(s.mandel_q.has_value());
  EXPECT_DOUBLE_EQ(s.var_x1, 0.25);
  EXPECT_DOUBLE_EQ(s.var_x2, 0.25);
}

TEST(OracleStats, RejectsUnnormalizedInput) {
  auto v = FockVector::number_state(2, 4);
  v *= Complex{2.0, 0.0};
  EXPECT_THROW((void)oracle_stats(v), DomainError);
}

TEST(OracleStats, OddSuperpositionAgainstFrozenValues) {
  // 40-digit Fock expansion of the phi = pi, eta = 0.3, M = 30 superposition.
  const auto s = oracle_stats(superposition({30, 0.3, 0.0, std::numbers::pi}, TruncationPolicy{1e-20, 20000}));
  EXPECT_NEAR(s.mean_n, 2.9913723751217530442, 1e-12);
  EXPECT_NEAR(s.second_moment, 12.100422891087217687, 1e-11);
  EXPECT_NEAR(*s.mandel_q, 0.053735145333540834788, 1e-12);
  EXPECT_NEAR(s.exp_a2.real(), 3.013886673128892005, 1e-12);
  EXPECT_NEAR(s.var_x1, 3.2526295241253225246, 1e-12);
  EXPECT_NEAR(s.var_x2, 0.23874285099643051956, 1e-12);
  const auto closed = closed_stats({30, 0.3, 0.0, std::numbers::pi});
  EXPECT_NEAR(*closed.mandel_q, *s.mandel_q, 1e-10);
}

TEST(Operators, CommutatorBelowTruncationRow) {
  const auto v = coherent(Complex{0.7, -0.2}, std::size_t{40});
  const auto commutator = apply_annihilate(apply_create(v)) - apply_create(apply_annihilate(v));
  for (std::size_t n = 0; n < v.n_max(); ++n) {
    EXPECT_NEAR(std::abs(commutator[n] - v[n]), 0.0, 1e-13) << "n=" << n;
  }
}

TEST(Operators, InputsAreNotMutated) {
  const auto v = nbs({4, 0.3, 0.2, 0.0});
  const auto copy = v;
  (void)apply_annihilate(v);
  (void)apply_create(v);
  (void)apply_number(v);
  (void)oracle_stats(v);
  for (std::size_t n = 0; n < v.dim(); ++n) EXPECT_EQ(v[n], copy[n]);
}

}  // namespace
}  // namespace negbin
