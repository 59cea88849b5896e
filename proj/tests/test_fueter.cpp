#include <gtest/gtest.h>

#include "support.hpp"

using namespace axial;

namespace {

PointFunction scalar_fn(std::function<Quaternion(const Quaternion&)> f) {
  return [f = std::move(f)](const Quaternion& x) { return QuatMatrix::scalar(f(x)); };
}

}  // namespace

TEST(FueterVariable, Examples) {
  EXPECT_EQ(fueter_variable(1, Quaternion(0, 1, 0, 0)).x0, 1.0);
  const Quaternion z = fueter_variable(1, Quaternion(1.0));
  EXPECT_LE((z + e1).abs(), 0.0);
  const Quaternion z2 = fueter_variable(2, Quaternion(0.5, 0, 0.3, 0));
  EXPECT_LE((z2 - (Quaternion(0.3) - e2 * 0.5)).abs(), 1e-16);
}

TEST(SymmetricProduct, Examples) {
  const Quaternion q(0.2, -0.7, 1.1, 0.4);
  EXPECT_LE((symmetric_product({q}) - q).abs(), 0.0);
  EXPECT_LE(symmetric_product({e1, e2}).abs(), 1e-16);
  EXPECT_LE((symmetric_product({q, q, q}) - q * q * q).abs(), 1e-14);
  const std::vector<Quaternion> nine(9, q);
  try {
    symmetric_product(std::span<const Quaternion>(nine));
    FAIL() << "expected TooManyFactors";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::too_many_factors);
  }
}

TEST(SymmetricProduct, IsOrderIndependent) {
  gen::Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    std::vector<Quaternion> f;
    for (std::size_t i = 0, n = rng.index(2, 5); i < n; ++i) f.push_back(rng.quaternion());
    const Quaternion a = symmetric_product(std::span<const Quaternion>(f));
    std::reverse(f.begin(), f.end());
    std::swap(f.front(), f[f.size() / 2]);
    EXPECT_LE((a - symmetric_product(std::span<const Quaternion>(f))).abs(), 1e-12 * (1 + a.abs()));
  }
}

TEST(ZetaPower, RestrictionToZeroRealPart) {
  EXPECT_EQ(zeta_power({0, 0, 0}, Quaternion(0.3, 0.1, 0.2, 0.4)).x0, 1.0);
  const Quaternion x(0.3, 0.1, 0.2, 0.4);
  EXPECT_LE((zeta_power({1, 0, 0}, x) - fueter_variable(1, x)).abs(), 0.0);
  gen::Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    Quaternion y = rng.ball(1.0);
    y.x0 = 0.0;
    for (const MultiIndex nu : {MultiIndex{2, 1, 0}, MultiIndex{1, 1, 1}, MultiIndex{0, 3, 2}}) {
      const double expected = std::pow(y.x1, nu.nu1) * std::pow(y.x2, nu.nu2) * std::pow(y.x3, nu.nu3);
      const Quaternion got = zeta_power(nu, y);
      EXPECT_NEAR(got.x0, expected, 1e-15);
      EXPECT_LE(got.vec_abs(), 1e-15);
    }
  }
}

TEST(CauchyFueter, Examples) {
  const QuatMatrix d = apply_D_fd(scalar_fn([](const Quaternion& x) { return x; }), Quaternion(0.1, 0.2, -0.3, 0.05));
  EXPECT_LE((d(0, 0) - Quaternion(-2.0)).abs(), 1e-9);
  const auto constant = scalar_fn([](const Quaternion&) { return Quaternion(0.4, 1, 2, 3); });
  EXPECT_LE(apply_D_fd(constant, Quaternion(0.2)).max_abs(), 0.0);
  EXPECT_LE(apply_Dbar_fd(constant, Quaternion(0.2)).max_abs(), 0.0);
}

TEST(CauchyFueter, AppellPolynomialsAreRegular) {
  gen::Rng rng(6);
  for (int k = 0; k < 10; ++k) {
    const Quaternion x = rng.ball(0.5);
    for (unsigned m = 0; m <= 6; ++m) {
      EXPECT_LT(apply_D_fd(scalar_fn([m](const Quaternion& y) { return eval_P(m, y); }), x).max_abs(), 1e-8) << m;
    }
  }
}

TEST(CauchyFueter, AppellProperty) {
  gen::Rng rng(8);
  for (int k = 0; k < 10; ++k) {
    const Quaternion x = rng.ball(0.5);
    for (unsigned m = 2; m <= 5; ++m) {
      const Quaternion dq = apply_Dbar_fd(scalar_fn([m](const Quaternion& y) { return eval_Q(m, y); }), x)(0, 0) * 0.5;
      EXPECT_LT((dq - eval_Q(m - 1, x) * static_cast<double>(m)).abs(), 1e-7);
      const Quaternion dp = apply_Dbar_fd(scalar_fn([m](const Quaternion& y) { return eval_P(m, y); }), x)(0, 0) * 0.5;
      const double ratio = to_double(c_coeff(m - 1)) / to_double(c_coeff(m));
      EXPECT_LT((dp - eval_P(m - 1, x) * (m * ratio)).abs(), 1e-7);
    }
  }
}

TEST(CauchyFueter, ConjugatesAreRightAntiRegular) {
  gen::Rng rng(10);
  for (int k = 0; k < 10; ++k) {
    const Quaternion x = rng.ball(0.5);
    for (unsigned m = 1; m <= 5; ++m) {
      const auto f = scalar_fn([m](const Quaternion& y) { return eval_P(m, y).conj(); });
      EXPECT_LT(apply_Dbar_right_fd(f, x).max_abs(), 1e-7);
    }
  }
}

TEST(CauchyFueter, SeriesEvaluationIsRegular) {
  gen::Rng rng(12);
  std::vector<Quaternion> c;
  for (int n = 0; n < 12; ++n) c.push_back(rng.quaternion() * 0.3);
  const AxialSeries f = AxialSeries::scalar(c);
  for (int k = 0; k < 10; ++k) {
    const Quaternion x = rng.ellipsoid(0.6);
    const auto fn = [&f](const Quaternion& y) { return evaluate(f, y).value; };
    EXPECT_LT(apply_D_fd(fn, x).max_abs(), 1e-7);
  }
}
