#ifndef AXIAL_HERGLOTZ_HPP
#define AXIAL_HERGLOTZ_HPP

#include <cstddef>
#include <vector>

#include "axial/axial_series.hpp"
#include "axial/error.hpp"
#include "axial/linalg.hpp"
#include "axial/matrix.hpp"
#include "axial/schur.hpp"
#include "axial/toeplitz.hpp"

namespace axial {

/// Isometry pair (V, C) with optional skew term a (a* = -a).
struct HerglotzGenerator {
  QuatMatrix V;
  QuatMatrix C;
  QuatMatrix a;  // r x r, may be empty (treated as zero)

  std::size_t dim() const { return C.rows(); }
};

/// Phi_0 = a + C C*, Phi_n = 2 C V*^n C*. The coefficients do not decay; the tail is
/// bounded by 2 ||C||^2.
inline AxialSeries herglotz_coefficients(const HerglotzGenerator& g, std::size_t n_terms) {
  const std::size_t n = g.V.rows();
  if (g.V.cols() != n || g.C.cols() != n) raise(ErrorCode::shape_mismatch, "V " + g.V.shape() + " C " + g.C.shape());
  const std::size_t r = g.C.rows();
  if (!g.a.empty() && (g.a.rows() != r || g.a.cols() != r)) raise(ErrorCode::shape_mismatch, "skew term " + g.a.shape());
  if (!g.a.empty() && (g.a + g.a.adjoint()).max_abs() > 1e-10) raise(ErrorCode::invalid_argument, "a must be skew");
  const QuatMatrix id = QuatMatrix::identity(n);
  if ((g.V.adjoint() * g.V - id).max_abs() > 1e-10 || (g.V * g.V.adjoint() - id).max_abs() > 1e-10) {
    raise(ErrorCode::not_unitary, "V is not unitary");
  }
  std::vector<QuatMatrix> c;
  c.reserve(n_terms);
  const QuatMatrix va = g.V.adjoint();
  QuatMatrix right = g.C.adjoint();  // V*^n C*
  for (std::size_t k = 0; k < n_terms; ++k) {
    if (k == 0) {
      QuatMatrix phi0 = g.C * right;
      if (!g.a.empty()) phi0 += g.a;
      c.push_back(phi0);
    } else {
      right = va * right;
      c.push_back(g.C * right * 2.0);
    }
  }
  const double cn = g.C.frobenius();
  return {r, r, std::move(c), TailModel::bounded(2.0 * cn * cn)};
}

/// Positivity of the Hermitian Toeplitz section with entries Phi_{j-k}/2 and diagonal
/// (Phi_0 + Phi_0*)/2.
inline PsdReport verify_herglotz(const AxialSeries& phi, std::size_t n, double tol = 1e-9) {
  if (phi.rows() != phi.cols()) raise(ErrorCode::shape_mismatch, "Herglotz coefficients must be square");
  std::vector<QuatMatrix> symbols = phi.coeffs();
  if (symbols.empty()) symbols.push_back(QuatMatrix(phi.rows(), phi.cols()));
  return hermitian_psd(ToeplitzSection(symbols, n, ToeplitzSection::Kind::hermitian), tol);
}

/// L(x,y) = 1/2 sum_n (P_n (.) Phi)(x) conj(P_n(y)) + P_n(x) ((P_n (.) Phi)(y))*, truncated at N.
inline KernelValue kernel_L_Phi(const AxialSeries& phi, const Quaternion& x, const Quaternion& y, std::size_t n = 64) {
  detail::require_domain(x);
  detail::require_domain(y);
  const unsigned deg = static_cast<unsigned>(std::max<std::size_t>(n, 1) - 1);
  const auto px = appell_P_values(x, deg);
  const auto py = appell_P_values(y, deg);
  const auto gx = detail::shifted_values(px, phi, n);
  const auto gy = detail::shifted_values(py, phi, n);
  QuatMatrix l(phi.rows(), phi.cols());
  for (std::size_t j = 0; j < n; ++j) l += gx[j] * py[j].conj() + px[j] * gy[j].adjoint();
  l *= 0.5;
  const detail::FactorBound d{true, 1.0};
  const detail::FactorBound g{false, coefficient_sup(phi)};
  return {l, 0.5 * (detail::pair_tail_bound(g, d, n, x.abs(), y.abs()) +
                    detail::pair_tail_bound(d, g, n, x.abs(), y.abs()))};
}

/// (Phi(t) + Phi(s)*) / (2 (1 - t s)) from the symbol of Phi.
inline KernelValue kernel_L_Phi_symbol(const AxialSeries& phi, double t, double s) {
  require_symbol_domain(t);
  require_symbol_domain(s);
  const auto a = real_symbol(phi, t);
  const auto b = real_symbol(phi, s);
  const double d = 2.0 * (1.0 - t * s);
  return {(a.value + b.value.adjoint()) * (1.0 / d), (a.tail_bound + b.tail_bound) / d};
}

}  // namespace axial

#endif  // AXIAL_HERGLOTZ_HPP
