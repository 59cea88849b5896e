#ifndef AXIAL_REALIZE_HPP
#define AXIAL_REALIZE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "axial/axial_series.hpp"
#include "axial/error.hpp"
#include "axial/linalg.hpp"
#include "axial/matrix.hpp"

namespace axial {

/// Block operator matrix [[A, B], [C, D]] with A: N x N, B: N x s, C: r x N, D: r x s.
struct Colligation {
  enum class Flag { none, coisometric, unitary };

  QuatMatrix A, B, C, D;
  Flag flag = Flag::none;

  Colligation() = default;
  Colligation(QuatMatrix a, QuatMatrix b, QuatMatrix c, QuatMatrix d, Flag f = Flag::none)
      : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)), flag(f) {
    const std::size_t n = A.rows();
    if (A.cols() != n || B.rows() != n || C.cols() != n || C.rows() != D.rows() || B.cols() != D.cols()) {
      raise(ErrorCode::shape_mismatch, "colligation blocks A " + A.shape() + " B " + B.shape() + " C " + C.shape() +
                                           " D " + D.shape());
    }
  }

  std::size_t state_dim() const { return A.rows(); }
  std::size_t out_dim() const { return D.rows(); }
  std::size_t in_dim() const { return D.cols(); }
  QuatMatrix matrix() const { return block2x2(A, B, C, D); }
};

inline const char* to_string(Colligation::Flag f) {
  switch (f) {
    case Colligation::Flag::none: return "none";
    case Colligation::Flag::coisometric: return "coisometric";
    case Colligation::Flag::unitary: return "unitary";
  }
  return "none";
}

/// A^k B for k = 0..count-1.
inline std::vector<QuatMatrix> state_powers(const Colligation& v, std::size_t count) {
  std::vector<QuatMatrix> out;
  out.reserve(count);
  QuatMatrix p = v.B;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(p);
    p = v.A * p;
  }
  return out;
}

/// Coefficients D, CB, CAB, CA^2B, ... (n_terms of them). The tail envelope uses
/// ||A^m|| <= M rho^m with rho = ||A^16||^{1/16}.
inline AxialSeries coefficients_from_colligation(const Colligation& v, std::size_t n_terms) {
  std::vector<QuatMatrix> c;
  if (n_terms > 0) c.push_back(v.D);
  if (n_terms > 1) {
    const auto ab = state_powers(v, n_terms - 1);
    for (const auto& m : ab) c.push_back(v.C * m);
  }
  const std::size_t n = v.state_dim();
  if (n == 0) return {v.out_dim(), v.in_dim(), std::move(c), TailModel::finite()};

  constexpr int k = 16;
  std::vector<double> pw{1.0};
  QuatMatrix ak = QuatMatrix::identity(n);
  for (int j = 1; j <= k; ++j) {
    ak = ak * v.A;
    pw.push_back(operator_norm(ak));
  }
  if (pw[std::min<std::size_t>(n, k)] == 0.0 && n_terms >= n + 1) {
    return {v.out_dim(), v.in_dim(), std::move(c), TailModel::finite()};  // nilpotent A
  }
  const double rho = std::max(std::pow(pw[k], 1.0 / k), 1e-300);
  double m = 0.0;
  for (int j = 0; j < k; ++j) m = std::max(m, pw[j] / std::pow(rho, j));
  const double cb = v.C.frobenius() * v.B.frobenius();
  // ||C A^{n-1} B|| <= cb M rho^{n-1}.
  return {v.out_dim(), v.in_dim(), std::move(c), TailModel::envelope(cb * m / rho, 0, rho)};
}

struct ColligationVerdict {
  bool passed = false;
  std::map<std::string, double> residuals;
};

/// Coisometric: M M* = I. Unitary: additionally A*A + C*C = I, B*B + D*D = I, D*C + B*A = 0.
inline ColligationVerdict verify_colligation(Colligation& v, Colligation::Flag mode, double tol = 1e-10) {
  ColligationVerdict out;
  const QuatMatrix m = v.matrix();
  out.residuals["MM*-I"] = (m * m.adjoint() - QuatMatrix::identity(m.rows())).max_abs();
  if (mode == Colligation::Flag::unitary) {
    if (m.cols() != m.rows()) {
      out.residuals["square"] = 1.0;
      return out;
    }
    out.residuals["A*A+C*C-I"] =
        (v.A.adjoint() * v.A + v.C.adjoint() * v.C - QuatMatrix::identity(v.state_dim())).max_abs();
    out.residuals["B*B+D*D-I"] =
        (v.B.adjoint() * v.B + v.D.adjoint() * v.D - QuatMatrix::identity(v.in_dim())).max_abs();
    out.residuals["D*C+B*A"] = (v.D.adjoint() * v.C + v.B.adjoint() * v.A).max_abs();
  }
  out.passed = true;
  for (const auto& [name, r] : out.residuals) out.passed = out.passed && r <= tol;
  if (out.passed) v.flag = mode;
  return out;
}

inline ColligationVerdict verify_colligation(const Colligation& v, Colligation::Flag mode, double tol = 1e-10) {
  Colligation copy = v;
  return verify_colligation(copy, mode, tol);
}

struct BlaschkeReport {
  ColligationVerdict unitary;
  double gram_residual = 0.0;   // ||sum_{n<=N} b_n* b_n - I||
  double lag_residual = 0.0;    // max_d ||sum_{n<=N} b_n* b_{n+d}||
  double tail_bound = 0.0;      // ||A^{N+1} B||^2
  double exact_tail = 0.0;      // ||A^N B||^2, the exact size of the Gram defect
  bool passed = false;
};

/// Isometry of M_B on sections: with unitary V the Gram sum telescopes to
/// I - (A^N B)*(A^N B) and the lag-d sums to -(A^N B)*(A^{N+d} B).
inline bool is_observable(const QuatMatrix& a, const QuatMatrix& c, double tol);

inline BlaschkeReport blaschke_isometry_check(const Colligation& v, std::size_t n_terms, double tol = 1e-8) {
  BlaschkeReport rep;
  const auto ab = state_powers(v, 2 * n_terms + 2);
  const double decay = operator_norm(ab[n_terms + 1]);
  rep.tail_bound = decay * decay;
  if (rep.tail_bound > 0.1) {
    raise(ErrorCode::non_decaying_state,
          "||A^{N+1}B||^2 = " + std::to_string(rep.tail_bound) + " at N = " + std::to_string(n_terms));
  }
  if (v.state_dim() > 0) {
    // The precondition also needs the state itself to die out or be seen by C.
    QuatMatrix an = QuatMatrix::identity(v.state_dim());
    for (std::size_t k = 0; k <= n_terms; ++k) an = v.A * an;
    const double state = std::pow(operator_norm(an), 2);
    if (state > 0.1 && !is_observable(v.A, v.C, 1e-10)) {
      raise(ErrorCode::non_decaying_state, "||A^{N+1}||^2 = " + std::to_string(state) + " with (C, A) unobservable");
    }
  }
  rep.exact_tail = std::pow(operator_norm(ab[n_terms]), 2);
  rep.unitary = verify_colligation(v, Colligation::Flag::unitary, 1e-10);

  std::vector<QuatMatrix> b;  // b_0 .. b_{2N}
  b.reserve(2 * n_terms + 1);
  b.push_back(v.D);
  for (std::size_t k = 0; k < 2 * n_terms; ++k) b.push_back(v.C * ab[k]);

  QuatMatrix g(v.in_dim(), v.in_dim());
  for (std::size_t n = 0; n <= n_terms; ++n) g += b[n].adjoint() * b[n];
  rep.gram_residual = (g - QuatMatrix::identity(v.in_dim())).max_abs();
  for (std::size_t d = 1; d <= n_terms; ++d) {
    QuatMatrix lag(v.in_dim(), v.in_dim());
    for (std::size_t n = 0; n <= n_terms; ++n) lag += b[n].adjoint() * b[n + d];
    rep.lag_residual = std::max(rep.lag_residual, lag.max_abs());
  }
  // The telescoped defect is exactly ||A^N B||^2, which can exceed ||A^{N+1}B||^2 by more than tol.
  const double bound = std::max(rep.tail_bound, rep.exact_tail);
  rep.passed = rep.unitary.passed && rep.gram_residual <= bound + tol && rep.lag_residual <= bound + tol;
  return rep;
}

/// Backward shift: sum P_n f_n -> sum P_n f_{n+1}.
inline AxialSeries backward_shift(const AxialSeries& f) {
  std::vector<QuatMatrix> c;
  if (f.size() > 1) c.assign(f.coeffs().begin() + 1, f.coeffs().end());
  TailModel t = f.tail();
  if (t.kind == TailModel::Kind::envelope) {
    // w_{n+1} = B (n+2)^p rho^{n+1} <= B 2^p rho (n+1)^p rho^n.
    t.bound *= std::pow(2.0, t.power) * t.ratio;
  }
  return {f.rows(), f.cols(), std::move(c), t};
}

/// Shift: sum P_n f_n -> sum P_{n+1} f_n.
inline AxialSeries forward_shift(const AxialSeries& f) { return shift_product(1, f); }

/// f_n = C A^n xi, n = 0..count-1.
inline std::vector<QuatMatrix> canonical_coefficients(const Colligation& v, const QuatMatrix& xi, std::size_t count) {
  if (xi.rows() != v.state_dim()) raise(ErrorCode::shape_mismatch, "state vector " + xi.shape());
  std::vector<QuatMatrix> out;
  QuatMatrix s = xi;
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(v.C * s);
    s = v.A * s;
  }
  return out;
}

/// Rank test on (C; CA; ...; CA^{N-1}): smallest singular value above `tol`.
inline bool is_observable(const QuatMatrix& a, const QuatMatrix& c, double tol = 1e-10) {
  const std::size_t n = a.rows();
  if (n == 0) return true;
  QuatMatrix stack(0, n);
  QuatMatrix ca = c;
  for (std::size_t k = 0; k < n; ++k) {
    stack = vstack(stack, ca);
    ca = ca * a;
  }
  if (stack.rows() < n) return false;
  return singular_values(stack).back() > tol;
}

inline bool is_observable(const Colligation& v, double tol = 1e-10) { return is_observable(v.A, v.C, tol); }

// ---------------------------------------------------------------------------
// Rational functions of the real variable t

/// M(t) = H + t G (I - t T)^{-1} F.
struct RationalRealForm {
  QuatMatrix H, G, T, F;

  RationalRealForm() = default;
  RationalRealForm(QuatMatrix h, QuatMatrix g, QuatMatrix t, QuatMatrix f)
      : H(std::move(h)), G(std::move(g)), T(std::move(t)), F(std::move(f)) {
    const std::size_t n = T.rows();
    if (T.cols() != n || G.cols() != n || F.rows() != n || G.rows() != H.rows() || F.cols() != H.cols()) {
      raise(ErrorCode::shape_mismatch, "realization blocks H " + H.shape() + " G " + G.shape() + " T " + T.shape() +
                                           " F " + F.shape());
    }
  }
  static RationalRealForm constant(const QuatMatrix& h) {
    return {h, QuatMatrix(h.rows(), 0), QuatMatrix(0, 0), QuatMatrix(0, h.cols())};
  }
  static RationalRealForm from_colligation(const Colligation& v) { return {v.D, v.C, v.A, v.B}; }
};

inline QuatMatrix rational_value(const RationalRealForm& m, double t) {
  if (m.T.rows() == 0) return m.H;
  const QuatMatrix resolvent = QuatMatrix::identity(m.T.rows()) - m.T * t;
  return m.H + m.G * solve(resolvent, m.F, ErrorCode::singular_resolvent) * t;
}

/// Pointwise inverse: H' = H^{-1}, G' = -H^{-1} G, T' = T - F H^{-1} G, F' = F H^{-1}.
inline RationalRealForm rational_inverse(const RationalRealForm& m) {
  if (m.H.rows() != m.H.cols()) raise(ErrorCode::singular_h, "H is not square");
  const QuatMatrix hi = inverse(m.H, ErrorCode::singular_h);
  return {hi, -(hi * m.G), m.T - m.F * hi * m.G, m.F * hi};
}

/// Cascade M1 M2: T = [[T1, F1 G2], [0, T2]], G = [G1, H1 G2], F = [F1 H2; F2], H = H1 H2.
inline RationalRealForm rational_product(const RationalRealForm& m1, const RationalRealForm& m2) {
  if (m1.H.cols() != m2.H.rows()) raise(ErrorCode::shape_mismatch, "product " + m1.H.shape() + " * " + m2.H.shape());
  const std::size_t n1 = m1.T.rows(), n2 = m2.T.rows();
  QuatMatrix t = block2x2(m1.T, m1.F * m2.G, QuatMatrix(n2, n1), m2.T);
  return {m1.H * m2.H, hstack(m1.G, m1.H * m2.G), t, vstack(m1.F * m2.H, m2.F)};
}

/// M1 + M2 as the product [M1 I] [I; M2].
inline RationalRealForm rational_sum(const RationalRealForm& m1, const RationalRealForm& m2) {
  const std::size_t r = m1.H.rows(), c = m1.H.cols();
  if (m2.H.rows() != r || m2.H.cols() != c) raise(ErrorCode::shape_mismatch, "sum " + m1.H.shape() + " + " + m2.H.shape());
  const RationalRealForm row(hstack(m1.H, QuatMatrix::identity(r)), m1.G, m1.T,
                             hstack(m1.F, QuatMatrix(m1.T.rows(), r)));
  const RationalRealForm col(vstack(QuatMatrix::identity(c), m2.H), vstack(QuatMatrix(c, m2.T.rows()), m2.G), m2.T,
                             m2.F);
  return rational_product(row, col);
}

// ---------------------------------------------------------------------------
// de Branges-Rovnyak checks for realized multipliers

struct DbrSample {
  std::vector<double> points;         // symbols s_j = 3 y_j, |s_j| < 1
  std::vector<QuatMatrix> directions; // u_j in H^r
};

struct DbrReport {
  bool vacuous = false;
  std::vector<double> slack;     // ||f||^2 - ||f(0)||^2 - ||R_0 f||^2 per sample
  double min_slack = 0.0;
  double norm_consistency = 0.0; // max | Gram norm - ||xi||^2 |
};

/// K_S(t,s) = C (I - tA)^{-1} (I - sA)^{-*} C* for a realized multiplier.
inline QuatMatrix realized_kernel(const Colligation& v, double t, double s) {
  const std::size_t n = v.state_dim();
  const QuatMatrix i = QuatMatrix::identity(n);
  const QuatMatrix xt = solve(i - v.A * t, i, ErrorCode::singular_resolvent);
  const QuatMatrix xs = solve(i - v.A * s, i, ErrorCode::singular_resolvent);
  return v.C * xt * xs.adjoint() * v.C.adjoint();
}

/// For each sample f = sum_j K_S(., s_j) u_j: ||f||^2 from the kernel Gram, f = C(I - tA)^{-1} xi
/// with xi = sum_j (I - s_j A)^{-*} C* u_j, f(0) = C xi and R_0 f = C (I - tA)^{-1} A xi, whose
/// norm is ||A xi|| on an observable realization.
inline DbrReport dbr_inequality_check(const Colligation& v, const std::vector<DbrSample>& samples) {
  DbrReport rep;
  const std::size_t n = v.state_dim();
  if (n == 0 || v.C.max_abs() == 0.0) {
    rep.vacuous = true;
    rep.slack.assign(samples.size(), 0.0);
    return rep;
  }
  if (!is_observable(v)) raise(ErrorCode::invalid_argument, "H(S) norms need an observable realization");
  rep.min_slack = kInfinity;
  const QuatMatrix id = QuatMatrix::identity(n);
  for (const auto& smp : samples) {
    const std::size_t m = smp.points.size();
    if (smp.directions.size() != m) raise(ErrorCode::shape_mismatch, "one direction per point");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (std::abs(smp.points[a] - smp.points[b]) < 1e-8) raise(ErrorCode::gram_singular, "coincident sample points");

    double norm2 = 0.0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        norm2 += (smp.directions[a].adjoint() * realized_kernel(v, smp.points[a], smp.points[b]) * smp.directions[b])(0, 0).x0;

    QuatMatrix xi(n, 1);
    for (std::size_t a = 0; a < m; ++a) {
      const QuatMatrix inv = solve(id - v.A * smp.points[a], id, ErrorCode::singular_resolvent);
      xi += inv.adjoint() * v.C.adjoint() * smp.directions[a];
    }
    const double xi2 = std::pow(xi.frobenius(), 2);
    const double f0 = std::pow((v.C * xi).frobenius(), 2);
    const double r0 = std::pow((v.A * xi).frobenius(), 2);
    const double slack = norm2 - f0 - r0;
    rep.slack.push_back(slack);
    rep.min_slack = std::min(rep.min_slack, slack);
    rep.norm_consistency = std::max(rep.norm_consistency, std::abs(norm2 - xi2));
  }
  if (samples.empty()) rep.min_slack = 0.0;
  return rep;
}

}  // namespace axial

#endif  // AXIAL_REALIZE_HPP
