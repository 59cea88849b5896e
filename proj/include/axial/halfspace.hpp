#ifndef AXIAL_HALFSPACE_HPP
#define AXIAL_HALFSPACE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "axial/axial_series.hpp"
#include "axial/error.hpp"
#include "axial/linalg.hpp"
#include "axial/matrix.hpp"
#include "axial/realize.hpp"
#include "axial/schur.hpp"

namespace axial {

/// Coefficients of W_1 = (1 - P_1) (.) (1 + P_1)^{-(.)}, degree <= N.
inline AxialSeries w1_series(std::size_t degree) {
  const AxialSeries num = AxialSeries::real({1.0, -1.0});
  const AxialSeries inv = intrinsic_inverse(AxialSeries::real({1.0, 1.0}), degree);
  const AxialSeries w = intrinsic_product(num, inv);
  return AxialSeries(1, 1, {w.coeffs().begin(), w.coeffs().begin() + static_cast<std::ptrdiff_t>(degree + 1)},
                     TailModel::bounded(2.0));
}

/// W_n = W_1^{(.) n} through degree N as an intrinsic series. Tail envelope
/// 2^n (k+1)^{n-1}; W_0 = 1 is a polynomial.
inline AxialSeries w_series(std::size_t n, std::size_t degree) {
  if (n == 0) return AxialSeries::unit(1);
  AxialSeries w = AxialSeries::unit(1);
  const AxialSeries w1 = w1_series(degree);
  for (std::size_t k = 0; k < n; ++k) {
    const AxialSeries next = intrinsic_product(w1, w);
    w = AxialSeries(1, 1, {next.coeffs().begin(), next.coeffs().begin() + static_cast<std::ptrdiff_t>(degree + 1)},
                    TailModel::finite());
  }
  return w.with_tail(TailModel::envelope(std::pow(2.0, static_cast<double>(n)), static_cast<int>(n) - 1, 1.0));
}

/// Real coefficient list of W_n through degree N.
inline std::vector<double> w_coefficients(std::size_t n, std::size_t degree) {
  const AxialSeries w = w_series(n, degree);
  std::vector<double> out(degree + 1, 0.0);
  for (std::size_t k = 0; k < w.size() && k <= degree; ++k) out[k] = w.coeffs()[k](0, 0).x0;
  return out;
}

/// W_1 as a rational function of t = 3 x0: (1 - t)/(1 + t) = 1 - 2t (1 + t)^{-1}.
inline RationalRealForm w1_realization() {
  return {QuatMatrix::scalar(1.0), QuatMatrix::scalar(-2.0), QuatMatrix::scalar(-1.0), QuatMatrix::scalar(1.0)};
}

/// w(t) = (1 - t)/(1 + t).
inline double cayley_w(double t) { return (1.0 - t) / (1.0 + t); }

/// Pointwise W_n(x) with the coefficient-envelope tail bound (needs |x| < 1).
inline Evaluation eval_W(std::size_t n, const Quaternion& x, std::size_t degree = 64) {
  return evaluate(w_series(n, degree), x);
}

/// W_n on the real axis, ((1 - 3x0)/(1 + 3x0))^n, from the realization of W_1.
inline double eval_W_real(std::size_t n, double x0) {
  if (!(x0 > -1.0 / 3.0)) raise(ErrorCode::divergent_point, "x0 <= -1/3");
  const double w = rational_value(w1_realization(), 3.0 * x0)(0, 0).x0;
  return std::pow(w, static_cast<double>(n));
}

/// e_n = (1 + P_1)^{-(.)} (.) W_n through degree N.
inline AxialSeries hardy_basis_element(std::size_t n, std::size_t degree) {
  const AxialSeries inv = intrinsic_inverse(AxialSeries::real({1.0, 1.0}), degree);
  const AxialSeries w = w_series(n, degree).with_tail(TailModel::finite());
  const AxialSeries e = intrinsic_product(inv.with_tail(TailModel::finite()), w);
  return AxialSeries(1, 1, {e.coeffs().begin(), e.coeffs().begin() + static_cast<std::ptrdiff_t>(degree + 1)},
                     TailModel::envelope(std::pow(2.0, static_cast<double>(n)), static_cast<int>(n), 1.0));
}

/// e_n(t) = (1 - t)^n / (1 + t)^{n+1}.
inline double hardy_basis_real(std::size_t n, double t) {
  return std::pow(1.0 - t, static_cast<double>(n)) / std::pow(1.0 + t, static_cast<double>(n + 1));
}

/// Half-space kernel sum_{n<N} e_n(x) conj(e_n(y)) at arbitrary points. The sum over n
/// has no certified tail off the real axis, so the bound is reported as infinite.
inline KernelValue kernel_K_P(const Quaternion& x, const Quaternion& y, std::size_t n = 32, std::size_t degree = 64) {
  detail::require_domain(x);
  detail::require_domain(y);
  Quaternion k{};
  for (std::size_t j = 0; j < n; ++j) {
    const AxialSeries e = hardy_basis_element(j, degree);
    k += evaluate(e, x).value(0, 0) * evaluate(e, y).value(0, 0).conj();
  }
  return {QuatMatrix::scalar(k), kInfinity};
}

/// K_P on the real axis, t = 3x0, s = 3y0: sum_{n<N} e_n(t) e_n(s) with the geometric
/// tail e_0(t) e_0(s) |r|^N / (1 - |r|), r = w(t) w(s).
inline KernelValue kernel_K_P_real(double t, double s, std::size_t n = 80) {
  if (!(t > -1.0) || !(s > -1.0)) raise(ErrorCode::divergent_point, "symbol <= -1");
  const double r = cayley_w(t) * cayley_w(s);
  if (!(std::abs(r) < 1.0)) raise(ErrorCode::divergent_point, "|w(t) w(s)| >= 1");
  double k = 0.0;
  for (std::size_t j = 0; j < n; ++j) k += hardy_basis_real(j, t) * hardy_basis_real(j, s);
  const double tail = hardy_basis_real(0, t) * hardy_basis_real(0, s) * std::pow(std::abs(r), static_cast<double>(n)) /
                      (1.0 - std::abs(r));
  return {QuatMatrix::scalar(k), tail};
}

/// |6 (x0 + y0) K_P(3x0, 3y0) - 1|.
inline double lyapunov_residual(double x0, double y0, std::size_t n = 80) {
  if (!(x0 > 0.0) || !(y0 > 0.0)) raise(ErrorCode::invalid_argument, "Lyapunov check needs x0, y0 > 0");
  const KernelValue k = kernel_K_P_real(3.0 * x0, 3.0 * y0, n);
  return std::abs(6.0 * (x0 + y0) * k.value(0, 0).x0 - 1.0);
}

/// S(3x0) = D + w C (I - w A)^{-1} B with w = (1 - 3x0)/(1 + 3x0).
inline QuatMatrix halfspace_schur_value(const Colligation& v, double x0) {
  if (!(x0 > -1.0 / 3.0)) raise(ErrorCode::divergent_point, "x0 <= -1/3");
  return rational_value(RationalRealForm::from_colligation(v), cayley_w(3.0 * x0));
}

/// S = D + sum_{n<terms} W_n C A^n B as an axial series through degree N.
inline AxialSeries halfspace_schur_series(const Colligation& v, std::size_t terms, std::size_t degree) {
  std::vector<QuatMatrix> c(degree + 1, QuatMatrix(v.out_dim(), v.in_dim()));
  c[0] = v.D;
  const auto ab = state_powers(v, terms);
  for (std::size_t n = 0; n < terms; ++n) {
    const QuatMatrix m = v.C * ab[n];
    const auto w = w_coefficients(n + 1, degree);
    for (std::size_t k = 0; k <= degree; ++k) c[k] += m * w[k];
  }
  return {v.out_dim(), v.in_dim(), std::move(c), TailModel::uncertified()};
}

/// Cayley transform Phi = (I - S)(I + S)^{-1}.
inline QuatMatrix caratheodory_from_schur(const QuatMatrix& s) {
  if (s.rows() != s.cols()) raise(ErrorCode::shape_mismatch, "Cayley transform needs a square value");
  const QuatMatrix id = QuatMatrix::identity(s.rows());
  return (id - s) * inverse(id + s, ErrorCode::singular_cayley);
}

/// Phi(3x0) for the half-space Schur multiplier realized by V.
inline QuatMatrix caratheodory_value(const Colligation& v, double x0) {
  return caratheodory_from_schur(halfspace_schur_value(v, x0));
}

/// K_Phi(t, s) = (Phi(t) + Phi(s)*) / (2 (t + s)).
inline QuatMatrix caratheodory_kernel_real(const QuatMatrix& phi_t, const QuatMatrix& phi_s, double t, double s) {
  if (!(t + s > 0.0)) raise(ErrorCode::divergent_point, "t + s <= 0");
  return (phi_t + phi_s.adjoint()) * (1.0 / (2.0 * (t + s)));
}

/// Gram of K_Phi at positive real points x0_i for the multiplier realized by V.
inline GramResult caratheodory_gram(const Colligation& v, const std::vector<double>& x0s) {
  std::vector<QuatMatrix> phi;
  for (double x : x0s) phi.push_back(caratheodory_value(v, x));
  const std::size_t r = v.out_dim();
  GramResult out{QuatMatrix(r * x0s.size(), r * x0s.size()), 0.0};
  for (std::size_t i = 0; i < x0s.size(); ++i)
    for (std::size_t j = 0; j < x0s.size(); ++j)
      out.gram.set_block(i * r, j * r, caratheodory_kernel_real(phi[i], phi[j], 3.0 * x0s[i], 3.0 * x0s[j]));
  return out;
}

}  // namespace axial

#endif  // AXIAL_HALFSPACE_HPP
