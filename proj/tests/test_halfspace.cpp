#include <gtest/gtest.h>

#include "support.hpp"

using namespace axial;

namespace {

/// Series of (1 - t)^n / (1 + t)^{n+1}, from the Cayley-power oracle and one more division by (1 + t).
std::vector<double> basis_oracle(std::size_t n, std::size_t degree) {
  std::vector<double> c = oracle::cayley_power(n, degree);
  for (std::size_t i = 1; i <= degree; ++i) c[i] -= c[i - 1];
  return c;
}

double scalar(const QuatMatrix& m) { return m(0, 0).x0; }

std::vector<std::pair<double, double>> positive_pairs(std::uint64_t seed, int count) {
  gen::Rng rng(seed);
  std::vector<std::pair<double, double>> out;
  while (static_cast<int>(out.size()) < count) {
    const double x0 = rng.uniform(0.0, 1.0), y0 = rng.uniform(0.0, 1.0);
    if (x0 > 0.0 && y0 > 0.0 && x0 + y0 >= 0.05) out.emplace_back(x0, y0);
  }
  return out;
}

}  // namespace

TEST(WCoefficients, Examples) {
  const auto w0 = w_coefficients(0, 10);
  EXPECT_EQ(w0[0], 1.0);
  for (std::size_t k = 1; k <= 10; ++k) EXPECT_EQ(w0[k], 0.0);
  const auto w1 = w_coefficients(1, 40);
  EXPECT_EQ(w1[0], 1.0);
  for (std::size_t k = 1; k <= 40; ++k) EXPECT_EQ(w1[k], k % 2 ? -2.0 : 2.0);
  const auto w2 = w_coefficients(2, 40);
  EXPECT_EQ(w2[0], 1.0);
  for (std::size_t k = 1; k <= 40; ++k) EXPECT_EQ(w2[k], (k % 2 ? -4.0 : 4.0) * static_cast<double>(k)) << k;
}

TEST(WCoefficients, MatchCayleyPowerOracle) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto w = w_coefficients(n, 30);
    const auto o = oracle::cayley_power(n, 30);
    for (std::size_t k = 0; k <= 30; ++k) EXPECT_EQ(w[k], o[k]) << n << " " << k;
  }
}

TEST(WCoefficients, ConvolutionPowersAdd) {
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n) {
      const AxialSeries p = intrinsic_product(w_series(m, 30).with_tail(TailModel::finite()),
                                              w_series(n, 30).with_tail(TailModel::finite()));
      const auto want = w_coefficients(m + n, 30);
      for (std::size_t k = 0; k <= 30; ++k) EXPECT_LE(std::abs(scalar(p.coeff(k)) - want[k]), 1e-12) << m << n << k;
    }
}

TEST(EvalW, Examples) {
  EXPECT_LE(std::abs(eval_W_real(1, 1.0 / 3.0)), 1e-12);
  EXPECT_NEAR(eval_W_real(1, 0.1), 0.7 / 1.3, 1e-15);
  EXPECT_NEAR(eval_W_real(3, 0.1), std::pow(0.7 / 1.3, 3), 1e-15);
  for (std::size_t n = 0; n <= 4; ++n) {
    EXPECT_EQ(eval_W_real(n, 0.0), 1.0);
    const Evaluation e = eval_W(n, Quaternion());
    EXPECT_EQ(scalar(e.value), 1.0);
  }
  EXPECT_THROW(eval_W_real(1, -0.5), Error);
}

TEST(EvalW, PointwiseRealValueDiffersFromSymbol) {
  // Pointwise, W_1(x0) = 1 + sum 2 (-1)^k x0^k / c_k; at 1/3 the pairs sum to 1 - 4 sum (2j+1) 9^{-j} = -5/8.
  const Evaluation e = eval_W(1, Quaternion(1.0 / 3.0), 200);
  EXPECT_NEAR(scalar(e.value), -0.625, 1e-12 + e.tail_bound);
}

TEST(EvalW, IntrinsicSymmetry) {
  gen::Rng rng(2);
  for (int k = 0; k < 10; ++k) {
    const Quaternion x = rng.ball(0.5);
    const Evaluation a = eval_W(1, x), b = eval_W(1, x.conj());
    EXPECT_LE((b.value(0, 0) - a.value(0, 0).conj()).abs(), 1e-12 + a.tail_bound + b.tail_bound);
  }
}

TEST(HardyBasis, Examples) {
  const AxialSeries e0 = hardy_basis_element(0, 20);
  for (std::size_t k = 0; k <= 20; ++k) EXPECT_EQ(scalar(e0.coeff(k)), k % 2 ? -1.0 : 1.0);
  const AxialSeries e1s = hardy_basis_element(1, 20);
  const std::vector<double> lead = {1, -3, 5, -7};
  for (std::size_t k = 0; k < lead.size(); ++k) EXPECT_EQ(scalar(e1s.coeff(k)), lead[k]);
  for (std::size_t n = 0; n <= 5; ++n) {
    const AxialSeries e = hardy_basis_element(n, 30);
    const auto o = basis_oracle(n, 30);
    for (std::size_t k = 0; k <= 30; ++k) EXPECT_EQ(scalar(e.coeff(k)), o[k]) << n << " " << k;
    EXPECT_TRUE(is_intrinsic(e));
  }
}

TEST(HardyBasis, SymbolMatchesRationalEvaluation) {
  // (1 - t)^n / (1 + t)^{n+1} = W_1(t)^n (1 + t)^{-1}, evaluated through realizations.
  const RationalRealForm inv1p = rational_inverse(RationalRealForm(QuatMatrix::scalar(1.0), QuatMatrix::scalar(1.0),
                                                                   QuatMatrix::scalar(0.0), QuatMatrix::scalar(1.0)));
  gen::Rng rng(3);
  std::vector<double> ts;
  for (int i = 0; i < 10; ++i) ts.push_back(rng.uniform(-0.2, 0.2));
  for (std::size_t n = 0; n <= 4; ++n) {
    RationalRealForm r = inv1p;
    for (std::size_t k = 0; k < n; ++k) r = rational_product(w1_realization(), r);
    const AxialSeries e = hardy_basis_element(n, 300);
    for (double t : ts) {
      EXPECT_NEAR(scalar(real_symbol(e, t).value), scalar(rational_value(r, t)), 1e-11) << n << " " << t;
      EXPECT_NEAR(hardy_basis_real(n, t), scalar(rational_value(r, t)), 1e-13);
    }
  }
}

TEST(KernelKP, RealAxis) {
  const KernelValue k = kernel_K_P_real(1.0, 1.0);
  EXPECT_NEAR(scalar(k.value), 0.25, 1e-10);
  for (const auto& [x0, y0] : positive_pairs(4, 10)) {
    const KernelValue kv = kernel_K_P_real(3 * x0, 3 * y0);
    EXPECT_NEAR(scalar(kv.value), 1.0 / (6 * (x0 + y0)), 1e-8 / (6 * (x0 + y0)) + kv.bound);
    EXPECT_GT(scalar(kernel_K_P_real(3 * x0, 3 * x0).value), 0.0);
  }
  EXPECT_THROW(kernel_K_P_real(-1.5, 0.5), Error);
}

TEST(KernelKP, Lyapunov) {
  EXPECT_LE(lyapunov_residual(1.0 / 3.0, 1.0 / 3.0), 1e-15);
  for (const auto& [x0, y0] : positive_pairs(5, 10)) EXPECT_LT(lyapunov_residual(x0, y0, 80), 1e-8) << x0 << " " << y0;
  EXPECT_LT(lyapunov_residual(0.025, 0.025, 80), 1e-8);
  EXPECT_LT(lyapunov_residual(0.001, 0.049, 80), 1e-8);
  EXPECT_THROW(lyapunov_residual(0.0, 0.2), Error);
}

TEST(KernelKP, RealGramPositive) {
  const std::vector<double> x0 = {0.05, 0.2, 0.5, 1.0};
  std::vector<double> ts;
  for (double x : x0) ts.push_back(3 * x);
  const GramResult g = gram_matrix_symbol([](double t, double s) { return kernel_K_P_real(t, s); }, ts);
  EXPECT_GE(psd_report(g.gram, 0).min_eigenvalue, -1e-12 - g.bound);
}

TEST(KernelKP, OffAxisIsHermitianAndUncertified) {
  const Quaternion x(0.1, 0.1, 0.05, 0), y(0.15, 0, -0.1, 0.05);
  const KernelValue a = kernel_K_P(x, y, 8, 40), b = kernel_K_P(y, x, 8, 40);
  EXPECT_LE((a.value(0, 0) - b.value(0, 0).conj()).abs(), 1e-14);
  EXPECT_TRUE(std::isinf(a.bound));
}

TEST(HalfspaceSchur, Examples) {
  const Colligation v = gen::unitary_colligation(2, 3);
  EXPECT_LE((halfspace_schur_value(v, 1.0 / 3.0) - v.D).max_abs(), 1e-15);
  const Colligation a0(QuatMatrix(1, 1), QuatMatrix::scalar(e1), QuatMatrix::scalar(Quaternion(0.5, 0, 0, 0.5)), QuatMatrix::scalar(0.2));
  const double w = cayley_w(3 * 0.1);
  EXPECT_LE((halfspace_schur_value(a0, 0.1)(0, 0) - (Quaternion(0.2) + Quaternion(0.5, 0, 0, 0.5) * e1 * w)).abs(), 1e-15);
  const Colligation shift(QuatMatrix::scalar(0.0), QuatMatrix::scalar(1.0), QuatMatrix::scalar(1.0), QuatMatrix::scalar(0.0));
  for (double x0 : {0.05, 0.1, 1.0 / 3.0, 0.8, 2.0}) EXPECT_NEAR(scalar(halfspace_schur_value(shift, x0)), eval_W_real(1, x0), 1e-15);
}

TEST(HalfspaceSchur, SeriesSymbolMatchesValue) {
  // A scaled down so that 30 state terms are exhaustive; the identity does not need unitarity.
  Colligation v = gen::unitary_colligation(2, 11);
  v.A = v.A * 0.3;
  const AxialSeries s = halfspace_schur_series(v, 30, 120).with_tail(TailModel::finite());
  for (double t : {0.05, 0.1, 0.2}) {
    EXPECT_LE((real_symbol(s, t).value - halfspace_schur_value(v, t / 3)).max_abs(), 1e-10) << t;
  }
}

TEST(HalfspaceSchur, ContractiveOnPositiveAxis) {
  gen::Rng rng(12);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Colligation v = gen::unitary_colligation(1 + seed % 3, 200 + seed);
    for (int k = 0; k < 8; ++k) {
      const double x0 = rng.uniform(0.001, 5.0);
      EXPECT_LE(oracle::operator_norm(halfspace_schur_value(v, x0)), 1.0 + 1e-12);
    }
  }
}

TEST(HalfspaceSchur, ChiConsistency) {
  const Colligation v = gen::unitary_colligation(3, 13);
  for (double x0 : {0.02, 0.3, 1.7}) {
    const double w = cayley_w(3 * x0);
    const oracle::CMat a = oracle::complexify(v.A), b = oracle::complexify(v.B), c = oracle::complexify(v.C),
                       d = oracle::complexify(v.D);
    const oracle::CMat id = oracle::CMat::Identity(a.rows(), a.cols());
    const oracle::CMat classical = d + w * c * (id - w * a).partialPivLu().solve(b);
    EXPECT_LE((oracle::complexify(halfspace_schur_value(v, x0)) - classical).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Caratheodory, ZeroAndShift) {
  const Colligation zero(QuatMatrix(0, 0), QuatMatrix(0, 1), QuatMatrix(1, 0), QuatMatrix::scalar(0.0));
  const std::vector<double> x0s = {0.05, 0.2, 1.0 / 3.0, 0.9};
  const GramResult g = caratheodory_gram(zero, x0s);
  for (std::size_t i = 0; i < x0s.size(); ++i) {
    EXPECT_EQ(scalar(caratheodory_value(zero, x0s[i])), 1.0);
    for (std::size_t j = 0; j < x0s.size(); ++j) {
      EXPECT_NEAR(g.gram(i, j).x0, 2 * scalar(kernel_K_P_real(3 * x0s[i], 3 * x0s[j]).value), 1e-10);
    }
  }
  EXPECT_NEAR(g.gram(2, 2).x0, 0.5, 1e-15);
  EXPECT_GE(psd_report(g.gram, 0).min_eigenvalue, -1e-12);

  const Colligation shift(QuatMatrix::scalar(0.0), QuatMatrix::scalar(1.0), QuatMatrix::scalar(1.0), QuatMatrix::scalar(0.0));
  const GramResult gs = caratheodory_gram(shift, x0s);
  for (std::size_t i = 0; i < x0s.size(); ++i) {
    EXPECT_NEAR(scalar(caratheodory_value(shift, x0s[i])), 3 * x0s[i], 1e-14);
    for (std::size_t j = 0; j < x0s.size(); ++j) EXPECT_NEAR(gs.gram(i, j).x0, 0.5, 1e-14);
  }
}

TEST(Caratheodory, SingularCayley) {
  const Colligation minus(QuatMatrix(0, 0), QuatMatrix(0, 1), QuatMatrix(1, 0), QuatMatrix::scalar(-1.0));
  try {
    caratheodory_value(minus, 0.2);
    FAIL() << "expected SingularCayley";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::singular_cayley);
  }
}

TEST(Caratheodory, UnitaryColligationGramsPositive) {
  const std::vector<double> x0s = {0.03, 0.1, 0.25, 0.6, 1.4, 3.0};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const GramResult g = caratheodory_gram(gen::unitary_colligation(2, 400 + seed), x0s);
    EXPECT_LE(hermitian_residual(g.gram), 1e-14);
    EXPECT_GE(psd_report(g.gram, 0).min_eigenvalue, -1e-10) << seed;
  }
}

TEST(Caratheodory, PoleSumFamilyPositive) {
  // Phi(t) = a0 t + sum b_n / (a_n + t) with positive parameters.
  gen::Rng rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    const double a0 = rng.uniform(0.0, 2.0);
    std::vector<std::pair<double, double>> poles;
    for (int n = 0; n < 3; ++n) poles.emplace_back(rng.uniform(0.1, 3.0), rng.uniform(0.1, 2.0));
    auto phi = [&](double t) {
      double v = a0 * t;
      for (const auto& [a, b] : poles) v += b / (a + t);
      return QuatMatrix::scalar(v);
    };
    std::vector<double> ts;
    for (int i = 0; i < 6; ++i) ts.push_back(rng.uniform(0.05, 4.0));
    QuatMatrix g(ts.size(), ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = 0; j < ts.size(); ++j) g(i, j) = caratheodory_kernel_real(phi(ts[i]), phi(ts[j]), ts[i], ts[j])(0, 0);
    EXPECT_GE(psd_report(g, 0).min_eigenvalue, -1e-12) << trial;
  }
}
