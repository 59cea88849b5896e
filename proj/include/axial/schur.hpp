#ifndef AXIAL_SCHUR_HPP
#define AXIAL_SCHUR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/axial_series.hpp"
#include "axial/error.hpp"
#include "axial/linalg.hpp"
#include "axial/matrix.hpp"
#include "axial/toeplitz.hpp"

namespace axial {

// ---------------------------------------------------------------------------
// Real power series in t = 3 x0 over H^{r x s}

/// sum_n t^n A_n. t is real, hence central: products are coefficient convolutions
/// that keep the quaternion order of the factors.
struct RealPowerSeries {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<QuatMatrix> coeffs;

  RealPowerSeries() = default;
  RealPowerSeries(std::size_t r, std::size_t c, std::vector<QuatMatrix> a = {})
      : rows(r), cols(c), coeffs(std::move(a)) {
    for (const auto& m : coeffs)
      if (m.rows() != rows || m.cols() != cols) raise(ErrorCode::shape_mismatch, "coefficient " + m.shape());
  }
  static RealPowerSeries scalar(const std::vector<Quaternion>& a) {
    std::vector<QuatMatrix> c;
    for (const auto& q : a) c.push_back(QuatMatrix::scalar(q));
    return {1, 1, std::move(c)};
  }
  static RealPowerSeries from_axial(const AxialSeries& f) { return {f.rows(), f.cols(), f.coeffs()}; }

  std::size_t size() const { return coeffs.size(); }
  QuatMatrix coeff(std::size_t n) const { return n < coeffs.size() ? coeffs[n] : QuatMatrix(rows, cols); }

  QuatMatrix value(double t) const {
    QuatMatrix v(rows, cols);
    for (std::size_t n = coeffs.size(); n-- > 0;) v = v * t + coeffs[n];
    return v;
  }

  /// Product truncated to `len` coefficients.
  friend RealPowerSeries multiply(const RealPowerSeries& a, const RealPowerSeries& b, std::size_t len) {
    if (a.cols != b.rows) raise(ErrorCode::shape_mismatch, "series product " + std::to_string(a.cols) + " vs " + std::to_string(b.rows));
    RealPowerSeries out(a.rows, b.cols, std::vector<QuatMatrix>(len, QuatMatrix(a.rows, b.cols)));
    for (std::size_t n = 0; n < len; ++n)
      for (std::size_t k = 0; k <= n && k < a.size(); ++k)
        if (n - k < b.size()) out.coeffs[n] += a.coeffs[k] * b.coeffs[n - k];
    return out;
  }
};

/// Two-sided inverse of a square series, first `len` coefficients:
/// g_0 = a_0^{-1}, g_n = -a_0^{-1} sum_{k=1}^n a_k g_{n-k}.
inline RealPowerSeries series_inverse(const RealPowerSeries& a, std::size_t len) {
  if (a.rows != a.cols) raise(ErrorCode::shape_mismatch, "series inverse needs square coefficients");
  const QuatMatrix a0_inv = inverse(a.coeff(0), ErrorCode::singular_constant_term);
  RealPowerSeries g(a.rows, a.cols, std::vector<QuatMatrix>(len, QuatMatrix(a.rows, a.cols)));
  for (std::size_t n = 0; n < len; ++n) {
    if (n == 0) {
      g.coeffs[0] = a0_inv;
      continue;
    }
    QuatMatrix s(a.rows, a.cols);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) s += a.coeffs[k] * g.coeffs[n - k];
    g.coeffs[n] = -(a0_inv * s);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Membership test

struct SchurMultiplier {
  AxialSeries series;
  std::size_t verified_to = 0;
  double norm = 0.0;
  double slack = 1.0;  // 1 - section norm
};

struct SchurVerdict {
  bool accepted = false;
  ContractionVerdict contraction;
  std::optional<SchurMultiplier> multiplier;
};

/// Accepts f when its lower-triangular Toeplitz sections are contractions up to N.
/// Sections never look past the stored coefficients of a non-polynomial series.
inline SchurVerdict verify_schur(const AxialSeries& f, std::size_t n = 64, double tol = 1e-9) {
  SchurVerdict v;
  std::vector<QuatMatrix> symbols = f.coeffs();
  if (symbols.empty()) symbols.push_back(QuatMatrix(f.rows(), f.cols()));
  const std::size_t depth = f.tail().is_finite() ? n : std::min(n, f.size());
  v.contraction = is_contraction(symbols, std::max<std::size_t>(depth, 1), tol);
  v.accepted = v.contraction.contraction;
  if (v.accepted) v.multiplier = SchurMultiplier{f, v.contraction.n, v.contraction.norm, 1.0 - v.contraction.norm};
  return v;
}

// ---------------------------------------------------------------------------
// Kernels

struct KernelValue {
  QuatMatrix value;
  double bound = 0.0;  // bound on the operator norm of the truncation error
};

using Kernel = std::function<KernelValue(const Quaternion&, const Quaternion&)>;

namespace detail {

/// sum_{n >= from} term(n) for positive terms whose successive ratio is nonincreasing
/// (polynomial times geometric); the remainder past the stopping index is geometric.
inline double positive_tail_sum(const std::function<double(std::size_t)>& term, std::size_t from) {
  double sum = 0.0;
  double t = term(from);
  for (std::size_t n = from; n < from + 10'000'000; ++n) {
    if (t == 0.0) return sum;
    const double next = term(n + 1);
    sum += t;
    const double rho = next / t;
    if (rho < 1.0) {
      const double rest = next / (1.0 - rho);
      if (rest <= 1e-17 * sum) return sum + rest;
    }
    t = next;
  }
  return kInfinity;
}

/// A_n(r) = sum_{k >= n} (k+2) r^k = r^n ((n+2)/(1-r) + r/(1-r)^2).
inline double appell_tail_closed(std::size_t n, double r) {
  if (r >= 1.0) return kInfinity;
  return std::pow(r, static_cast<double>(n)) * ((n + 2.0) / (1.0 - r) + r / ((1.0 - r) * (1.0 - r)));
}

/// Shifted values G_n(x) = sum_{n <= k < N} P_k(x) X_{k-n}, n < N.
inline std::vector<QuatMatrix> shifted_values(const std::vector<Quaternion>& p, const AxialSeries& x, std::size_t n) {
  std::vector<QuatMatrix> g(n, QuatMatrix(x.rows(), x.cols()));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n && k - j < x.size(); ++k) g[j] += p[k] * x.coeffs()[k - j];
  return g;
}

/// Descriptor of one factor sequence in a kernel sum_n G_n(x) H_n(y)*.
///   delta: G_n = P_n (exact below N); otherwise G_n = sum_{k>=n} P_k X_{k-n} with
///   ||X_m|| <= sup.
struct FactorBound {
  bool delta = false;
  double sup = 0.0;

  double value(std::size_t n, double r) const {
    return delta ? (n + 2.0) * std::pow(r, static_cast<double>(n)) : sup * appell_tail_closed(n, r);
  }
  double error(std::size_t n_trunc, double r) const { return delta ? 0.0 : sup * appell_tail_closed(n_trunc, r); }
};

/// Bound on |sum_{n<N} G^N_n(x) H^N_n(y)* - sum_n G_n(x) H_n(y)*|.
inline double pair_tail_bound(const FactorBound& g, const FactorBound& h, std::size_t n_trunc, double rx, double ry) {
  if (std::isinf(g.sup) || std::isinf(h.sup)) return kInfinity;
  const double eg = g.error(n_trunc, rx);
  const double eh = h.error(n_trunc, ry);
  double head = 0.0;
  if (eg > 0.0 || eh > 0.0) {
    for (std::size_t n = 0; n < n_trunc; ++n) head += eg * h.value(n, ry) + g.value(n, rx) * eh;
  }
  const double tail =
      positive_tail_sum([&](std::size_t n) { return g.value(n, rx) * h.value(n, ry); }, n_trunc);
  return head + tail;
}

inline void require_domain(const Quaternion& x) {
  if (x.abs() >= 1.0) raise(ErrorCode::divergent_point, "|x| >= 1");
}

}  // namespace detail

/// sup_n ||F_n|| over stored coefficients and the declared tail.
inline double coefficient_sup(const AxialSeries& f) {
  double s = f.coeff_bound();
  const TailModel& t = f.tail();
  switch (t.kind) {
    case TailModel::Kind::finite: return s;
    case TailModel::Kind::uncertified: return kInfinity;
    case TailModel::Kind::envelope:
      if (t.ratio > 1.0 || (t.ratio == 1.0 && t.power > 0)) return kInfinity;
      if (t.ratio == 1.0) return std::max(s, t.bound);
      for (std::size_t n = f.size(); n < f.size() + 1'000'000; ++n) {
        s = std::max(s, t.at(n));
        if (t.at(n + 1) <= t.at(n)) break;
      }
      return s;
  }
  return kInfinity;
}

/// Hardy kernel k(x,y) = sum_n P_n(x) conj(P_n(y)), truncated at N.
inline KernelValue hardy_kernel(const Quaternion& x, const Quaternion& y, std::size_t n = 64) {
  detail::require_domain(x);
  detail::require_domain(y);
  const auto px = appell_P_values(x, static_cast<unsigned>(std::max<std::size_t>(n, 1) - 1));
  const auto py = appell_P_values(y, static_cast<unsigned>(std::max<std::size_t>(n, 1) - 1));
  Quaternion k{};
  for (std::size_t j = 0; j < n; ++j) k += px[j] * py[j].conj();
  const detail::FactorBound d{true, 1.0};
  return {QuatMatrix::scalar(k), detail::pair_tail_bound(d, d, n, x.abs(), y.abs())};
}

/// K_S(x,y) = sum_n P_n(x) conj(P_n(y)) I - (P_n (.) S)(x) ((P_n (.) S)(y))*, truncated at N.
inline KernelValue kernel_K_S(const AxialSeries& s, const Quaternion& x, const Quaternion& y, std::size_t n = 64) {
  detail::require_domain(x);
  detail::require_domain(y);
  const unsigned deg = static_cast<unsigned>(std::max<std::size_t>(n, 1) - 1);
  const auto px = appell_P_values(x, deg);
  const auto py = appell_P_values(y, deg);
  const auto gx = detail::shifted_values(px, s, n);
  const auto gy = detail::shifted_values(py, s, n);
  Quaternion h{};
  for (std::size_t j = 0; j < n; ++j) h += px[j] * py[j].conj();
  QuatMatrix k = QuatMatrix::identity(s.rows()) * h;
  for (std::size_t j = 0; j < n; ++j) k -= gx[j] * gy[j].adjoint();
  const detail::FactorBound d{true, 1.0};
  const detail::FactorBound g{false, coefficient_sup(s)};
  const double bound = detail::pair_tail_bound(d, d, n, x.abs(), y.abs()) +
                       detail::pair_tail_bound(g, g, n, x.abs(), y.abs());
  return {k, bound};
}

inline KernelValue kernel_K_S(const SchurMultiplier& s, const Quaternion& x, const Quaternion& y, std::size_t n = 64) {
  return kernel_K_S(s.series, x, y, n);
}

// Symbol kernels: the same kernels written in t = 3 x0, where P_n acts as t^n.

inline void require_symbol_domain(double t) {
  if (!(std::abs(t) < 1.0)) raise(ErrorCode::divergent_point, "|3 x0| >= 1");
}

/// 1 / (1 - t s).
inline KernelValue hardy_kernel_symbol(double t, double s) {
  require_symbol_domain(t);
  require_symbol_domain(s);
  return {QuatMatrix::scalar(1.0 / (1.0 - t * s)), 0.0};
}

/// (I - S(t) S(s)*) / (1 - t s) from the symbol of S.
inline KernelValue kernel_K_S_symbol(const AxialSeries& s, double t, double u) {
  require_symbol_domain(t);
  require_symbol_domain(u);
  const auto st = real_symbol(s, t);
  const auto su = real_symbol(s, u);
  const double at = operator_norm(st.value), au = operator_norm(su.value);
  const double d = 1.0 - t * u;
  const QuatMatrix k = (QuatMatrix::identity(s.rows()) - st.value * su.value.adjoint()) * (1.0 / d);
  const double b = (st.tail_bound * au + at * su.tail_bound + st.tail_bound * su.tail_bound) / d;
  return {k, b};
}

struct GramResult {
  QuatMatrix gram;
  double bound = 0.0;  // largest truncation bound over the entries
};

/// Block Gram matrix (K(x_i, x_j)). The lower triangle is the adjoint of the upper one,
/// so the result is Hermitian by construction.
inline GramResult gram_matrix(const Kernel& k, const std::vector<Quaternion>& points) {
  GramResult out;
  if (points.empty()) return out;
  std::size_t b = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) {
      const KernelValue v = k(points[i], points[j]);
      if (b == 0) {
        b = v.value.rows();
        out.gram = QuatMatrix(b * points.size(), b * points.size());
      }
      out.bound = std::max(out.bound, v.bound);
      if (i == j) {
        out.gram.set_block(i * b, i * b, (v.value + v.value.adjoint()) * 0.5);
      } else {
        out.gram.set_block(i * b, j * b, v.value);
        out.gram.set_block(j * b, i * b, v.value.adjoint());
      }
    }
  }
  return out;
}

/// Scalar Gram (u_i* K(x_i, x_j) u_j) along directions u_i.
inline GramResult gram_matrix(const Kernel& k, const std::vector<Quaternion>& points,
                              const std::vector<QuatMatrix>& directions) {
  if (directions.size() != points.size()) raise(ErrorCode::shape_mismatch, "one direction per point");
  GramResult out;
  out.gram = QuatMatrix(points.size(), points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) {
      const KernelValue v = k(points[i], points[j]);
      const QuatMatrix e = directions[i].adjoint() * v.value * directions[j];
      const double scale = directions[i].frobenius() * directions[j].frobenius();
      out.bound = std::max(out.bound, v.bound * scale);
      if (i == j) {
        out.gram(i, i) = Quaternion(e(0, 0).x0);
      } else {
        out.gram(i, j) = e(0, 0);
        out.gram(j, i) = e(0, 0).conj();
      }
    }
  }
  return out;
}

/// Gram matrix for a kernel given on real symbols t_i.
inline GramResult gram_matrix_symbol(const std::function<KernelValue(double, double)>& k,
                                     const std::vector<double>& ts) {
  std::vector<Quaternion> pts(ts.begin(), ts.end());
  return gram_matrix([&](const Quaternion& a, const Quaternion& b) { return k(a.x0, b.x0); }, pts);
}

// ---------------------------------------------------------------------------
// Schur algorithm

enum class SchurStop { steps, exhausted, unimodular };

inline const char* to_string(SchurStop s) {
  switch (s) {
    case SchurStop::steps: return "steps";
    case SchurStop::exhausted: return "exhausted";
    case SchurStop::unimodular: return "unimodular";
  }
  return "unknown";
}

struct SchurAlgorithmResult {
  std::vector<QuatMatrix> parameters;  // S^{(n)}(0)
  SchurStop stop = SchurStop::steps;
  std::vector<double> iterate_norms;   // section norm of each verified iterate
};

struct SchurAlgorithmOptions {
  double unimodular_tol = 1e-12;
  double contraction_tol = 1e-9;
  std::size_t verify_depth = 32;
  bool pad_finite = true;  // zero-pad polynomial inputs so every step has data
};

namespace detail {

/// One step S -> S^{(1)} = L (S - S_0)/t (I - S_0* S)^{-1} R with L = (I - S_0 S_0*)^{-1/2},
/// R = (I - S_0* S_0)^{1/2}. For 1x1 inputs L R = 1 and both are omitted.
inline RealPowerSeries schur_step(const RealPowerSeries& s) {
  const QuatMatrix s0 = s.coeff(0);
  const std::size_t len = s.size() - 1;
  // S - S_0 is formed by dropping the constant coefficient, so the division by t is exact.
  RealPowerSeries num(s.rows, s.cols, {s.coeffs.begin() + 1, s.coeffs.end()});
  RealPowerSeries den(s.cols, s.cols, std::vector<QuatMatrix>(len, QuatMatrix(s.cols, s.cols)));
  const QuatMatrix s0a = s0.adjoint();
  for (std::size_t k = 0; k < len; ++k) {
    den.coeffs[k] = (k == 0 ? QuatMatrix::identity(s.cols) : QuatMatrix(s.cols, s.cols)) - s0a * s.coeffs[k];
  }
  RealPowerSeries next = multiply(num, series_inverse(den, len), len);
  if (s.rows == 1 && s.cols == 1) return next;

  const QuatMatrix left = hermitian_function(QuatMatrix::identity(s.rows) - s0 * s0a,
                                             [](double v) { return 1.0 / std::sqrt(std::max(v, 0.0)); });
  const QuatMatrix right = hermitian_function(QuatMatrix::identity(s.cols) - s0a * s0,
                                              [](double v) { return std::sqrt(std::max(v, 0.0)); });
  for (auto& c : next.coeffs) c = left * c * right;
  return next;
}

}  // namespace detail

/// Matricial Schur algorithm over H[[t]]. Parameters are S^{(n)}(0); the run stops
/// after `steps` parameters, when the data runs out, or when a parameter reaches
/// norm 1 - unimodular_tol (that parameter is still reported).
inline SchurAlgorithmResult schur_algorithm_matrix(const RealPowerSeries& input, std::size_t steps,
                                                   bool finite_tail = true, const SchurAlgorithmOptions& opt = {}) {
  SchurAlgorithmResult out;
  RealPowerSeries s = input;
  if (finite_tail && opt.pad_finite && s.size() < steps + 1) {
    s.coeffs.resize(steps + 1, QuatMatrix(s.rows, s.cols));
  }
  for (std::size_t k = 0; k < steps; ++k) {
    if (s.size() == 0) {
      out.stop = SchurStop::exhausted;
      return out;
    }
    const std::size_t depth = std::min(opt.verify_depth, s.size());
    const ContractionVerdict v = is_contraction(s.coeffs, depth, opt.contraction_tol);
    if (!v.contraction) {
      raise(ErrorCode::non_contractive_iterate,
            "iterate " + std::to_string(k) + " has section norm " + std::to_string(v.norm));
    }
    out.iterate_norms.push_back(v.norm);
    const QuatMatrix rho = s.coeff(0);
    out.parameters.push_back(rho);
    if (operator_norm(rho) >= 1.0 - opt.unimodular_tol) {
      out.stop = SchurStop::unimodular;
      return out;
    }
    if (k + 1 == steps) break;
    if (s.size() == 1) {
      out.stop = SchurStop::exhausted;
      return out;
    }
    s = detail::schur_step(s);
  }
  out.stop = SchurStop::steps;
  return out;
}

struct ScalarSchurResult {
  std::vector<Quaternion> parameters;
  SchurStop stop = SchurStop::steps;
};

/// Scalar quaternionic Schur algorithm; runs the matricial recursion on 1x1 data.
inline ScalarSchurResult schur_algorithm_scalar(const RealPowerSeries& s, std::size_t steps, bool finite_tail = true,
                                                const SchurAlgorithmOptions& opt = {}) {
  if (s.rows != 1 || s.cols != 1) raise(ErrorCode::shape_mismatch, "scalar Schur algorithm on " + std::to_string(s.rows) + "x" + std::to_string(s.cols));
  const auto r = schur_algorithm_matrix(s, steps, finite_tail, opt);
  ScalarSchurResult out;
  out.stop = r.stop;
  for (const auto& p : r.parameters) out.parameters.push_back(p(0, 0));
  return out;
}

}  // namespace axial

#endif  // AXIAL_SCHUR_HPP
