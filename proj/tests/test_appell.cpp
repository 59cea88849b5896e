#include <gtest/gtest.h>

#include "support.hpp"

using namespace axial;

namespace {

bool same(const Rational& r, const oracle::Frac& f) { return r.numerator() == f.p && r.denominator() == f.q; }

/// Q_m(x) straight from the defining sum with quaternion powers.
Quaternion q_direct(unsigned m, const Quaternion& x) {
  Quaternion s{};
  for (unsigned j = 0; j <= m; ++j) {
    const oracle::Frac t = oracle::t_coeff(m, j);
    s += pow(x, static_cast<int>(m - j)) * pow(x.conj(), static_cast<int>(j)) * (double(t.p) / double(t.q));
  }
  return s;
}

}  // namespace

TEST(Coefficients, MatchRationalOracle) {
  for (unsigned m = 0; m <= 50; ++m) {
    const AppellCoefficients a = appell_coefficients(m);
    ASSERT_EQ(a.T.size(), m + 1);
    Rational sum = 0;
    for (unsigned j = 0; j <= m; ++j) {
      EXPECT_TRUE(same(a.T[j], oracle::t_coeff(m, j))) << m << "," << j;
      sum += a.T[j];
    }
    EXPECT_EQ(sum, Rational(1));
    EXPECT_TRUE(same(a.c, oracle::c_coeff(m))) << m;
    EXPECT_TRUE(same(c_coeff(m), oracle::c_coeff(m)));
  }
}

TEST(Coefficients, FrozenValues) {
  // c_0..c_10 from the oracle above, frozen.
  const std::int64_t den[] = {1, 3, 3, 5, 5, 7, 7, 9, 9, 11, 11};
  for (unsigned m = 0; m <= 10; ++m) EXPECT_EQ(c_coeff(m), Rational(1, den[m])) << m;
  for (unsigned k = 1; k <= 25; ++k) EXPECT_EQ(c_coeff(2 * k), c_coeff(2 * k - 1));
}

TEST(EvalQ, Examples) {
  EXPECT_EQ(eval_Q(0, Quaternion(0.3, 1, 2, 3)).x0, 1.0);
  for (unsigned m = 0; m <= 8; ++m) EXPECT_NEAR(eval_Q(m, Quaternion(0.7)).x0, std::pow(0.7, m), 1e-15);
  EXPECT_LE((eval_Q(1, e1) - e1 / 3.0).abs(), 1e-16);
}

TEST(EvalQ, MatchesDirectSum) {
  gen::Rng rng(1);
  for (int k = 0; k < 30; ++k) {
    const Quaternion x = rng.ball(1.2);
    for (unsigned m = 0; m <= 10; ++m) EXPECT_LE((eval_Q(m, x) - q_direct(m, x)).abs(), 1e-13);
  }
}

TEST(EvalP, Examples) {
  EXPECT_NEAR(eval_P(1, Quaternion(0.1)).x0, 0.3, 1e-15);
  EXPECT_EQ(eval_P(0, Quaternion(0.2, 0.1, 0, 0)).x0, 1.0);
  for (unsigned m = 1; m <= 6; ++m) EXPECT_EQ(eval_P(m, Quaternion()).abs(), 0.0);
  EXPECT_LE((eval_P(2, e1) - Quaternion(-1.0)).abs(), 1e-15);
  const Quaternion x(0.2, -0.4, 0.1, 0.3);
  EXPECT_LE((eval_P(1, x) - (Quaternion(3 * x.x0) + x.vec())).abs(), 1e-15);
  const Quaternion zeta = fueter_variable(1, x) * e1 + fueter_variable(2, x) * e2 + fueter_variable(3, x) * e3;
  EXPECT_LE((eval_P(1, x) - zeta).abs(), 1e-15);
}

TEST(EvalP, RealAxisIsPointwiseScaledPower) {
  // Pointwise on the real line P_m(x0) = x0^m / c_m; this equals (3 x0)^m only for m <= 1.
  for (unsigned m = 0; m <= 8; ++m) {
    const double x0 = 0.4;
    EXPECT_NEAR(eval_P(m, Quaternion(x0)).x0, std::pow(x0, m) / to_double(c_coeff(m)), 1e-14);
  }
  EXPECT_GT(std::abs(eval_P(2, Quaternion(0.4)).x0 - std::pow(1.2, 2)), 0.5);
}

TEST(EvalP, IntrinsicAndBounded) {
  gen::Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const Quaternion x = rng.ball(0.95);
    const auto p = appell_P_values(x, 12);
    const auto pc = appell_P_values(x.conj(), 12);
    for (unsigned m = 0; m <= 12; ++m) {
      EXPECT_LE((p[m] - eval_P(m, x)).abs(), 1e-13);
      EXPECT_LE((pc[m] - p[m].conj()).abs(), 1e-13);
      EXPECT_LE(p[m].abs(), std::pow(x.abs(), m) / to_double(c_coeff(m)) * (1 + 1e-12));
    }
  }
}

TEST(ProductIdentity, ImpulsesAndRestriction) {
  EXPECT_LT(check_product_identity(1, 1, Quaternion(0, 0.3, 0.1, 0.2), true), 1e-15);
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned m = 0; m <= 6; ++m) EXPECT_EQ(check_product_identity(n, m, Quaternion(), false), 0.0);
  gen::Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    const Quaternion x = rng.ball(1.0);
    EXPECT_LT(check_product_identity(2, 3, x, true), 1e-12);
  }
}

TEST(SymmetricExpansion, MatchesP) {
  EXPECT_EQ(check_symmetric_expansion(0, Quaternion(0.2, 0.1, 0, 0)), 0.0);
  gen::Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    const Quaternion x = rng.ball(0.4);
    EXPECT_LT(check_symmetric_expansion(1, x), 1e-15);
    for (unsigned m = 2; m <= 3; ++m) EXPECT_LT(check_symmetric_expansion(m, x), 1e-10) << m;
  }
  EXPECT_THROW(check_symmetric_expansion(6, Quaternion()), Error);
}

TEST(SymmetricExpansion, FixedOrderMonomialFails) {
  // e1 e2 ordered monomials leave an e3 cross term at m = 2.
  const Quaternion x(0.1, 0.2, 0.3, -0.1);
  Quaternion sum{};
  for (const auto& nu : multi_indices(2)) sum += zeta_power(nu, x) * unit_power_ordered(nu) * (2.0 / nu.factorial());
  EXPECT_GT((eval_P(2, x) - sum).abs(), 1e-3);
}
