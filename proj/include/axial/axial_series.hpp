#ifndef AXIAL_AXIAL_SERIES_HPP
#define AXIAL_AXIAL_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "axial/appell.hpp"
#include "axial/error.hpp"
#include "axial/linalg.hpp"
#include "axial/matrix.hpp"

namespace axial {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// The ellipsoid E = {9 x0^2 + x1^2 + x2^2 + x3^2 < 1}, domain of the Hardy space.
struct Ellipsoid {
  static double gauge(const Quaternion& x) {
    return 9.0 * x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
  }
  static bool contains(const Quaternion& x) { return gauge(x) < 1.0; }
};

/// What is known about the coefficients beyond the stored ones.
///   finite:      F_n = 0 for every n past the stored list.
///   envelope:    ||F_n|| <= bound * (n+1)^power * ratio^n past the stored list.
///   uncertified: nothing is known; evaluations report an infinite tail.
struct TailModel {
  enum class Kind { finite, envelope, uncertified };

  Kind kind = Kind::finite;
  double bound = 0.0;
  int power = 0;
  double ratio = 1.0;

  static TailModel finite() { return {}; }
  static TailModel bounded(double b) { return {Kind::envelope, b, 0, 1.0}; }
  static TailModel envelope(double b, int p, double rho) { return {Kind::envelope, b, p, rho}; }
  static TailModel uncertified() { return {Kind::uncertified, kInfinity, 0, 1.0}; }

  bool is_finite() const { return kind == Kind::finite; }

  double at(std::size_t n) const {
    switch (kind) {
      case Kind::finite: return 0.0;
      case Kind::uncertified: return kInfinity;
      case Kind::envelope:
        if (bound == 0.0) return 0.0;
        return bound * std::pow(static_cast<double>(n + 1), power) * std::pow(ratio, static_cast<double>(n));
    }
    return kInfinity;
  }

  friend bool operator==(const TailModel&, const TailModel&) = default;
};

/// Truncated series f(x) = sum_n P_n(x) F_n with F_n in H^{r x s}: a function
/// hyperholomorphic of axial type.
class AxialSeries {
 public:
  AxialSeries() = default;
  AxialSeries(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  AxialSeries(std::size_t rows, std::size_t cols, std::vector<QuatMatrix> coeffs,
              TailModel tail = TailModel::finite())
      : rows_(rows), cols_(cols), coeffs_(std::move(coeffs)), tail_(tail) {
    for (const auto& c : coeffs_) {
      if (c.rows() != rows_ || c.cols() != cols_) {
        raise(ErrorCode::shape_mismatch, "coefficient " + c.shape() + " in a " + shape() + " series");
      }
    }
  }

  /// Scalar series with real coefficients.
  static AxialSeries real(const std::vector<double>& a, TailModel tail = TailModel::finite()) {
    std::vector<QuatMatrix> c;
    c.reserve(a.size());
    for (double v : a) c.push_back(QuatMatrix::scalar(v));
    return {1, 1, std::move(c), tail};
  }
  static AxialSeries scalar(const std::vector<Quaternion>& a, TailModel tail = TailModel::finite()) {
    std::vector<QuatMatrix> c;
    c.reserve(a.size());
    for (const auto& v : a) c.push_back(QuatMatrix::scalar(v));
    return {1, 1, std::move(c), tail};
  }
  /// P_n I_r.
  static AxialSeries basis(std::size_t n, std::size_t r = 1) {
    std::vector<QuatMatrix> c(n + 1, QuatMatrix(r, r));
    c[n] = QuatMatrix::identity(r);
    return {r, r, std::move(c), TailModel::finite()};
  }
  /// The constant I_r.
  static AxialSeries unit(std::size_t r = 1) { return basis(0, r); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<QuatMatrix>& coeffs() const { return coeffs_; }
  const TailModel& tail() const { return tail_; }
  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// F_n, zero past the stored list.
  QuatMatrix coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : QuatMatrix(rows_, cols_); }

  AxialSeries with_tail(TailModel tail) const {
    AxialSeries s = *this;
    s.tail_ = tail;
    return s;
  }
  /// Keep the first n coefficients; the dropped ones are folded into a bounded tail.
  AxialSeries truncated(std::size_t n) const {
    if (n >= coeffs_.size()) return *this;
    AxialSeries s(rows_, cols_, {coeffs_.begin(), coeffs_.begin() + n}, tail_);
    if (tail_.kind != TailModel::Kind::uncertified) {
      double b = 0.0;
      for (std::size_t k = n; k < coeffs_.size(); ++k) b = std::max(b, coeffs_[k].frobenius());
      if (tail_.kind == TailModel::Kind::finite) {
        s.tail_ = b == 0.0 ? TailModel::finite() : TailModel::bounded(b);
      } else {
        double scaled = tail_.bound;
        for (std::size_t k = n; k < coeffs_.size(); ++k) {
          const double w = std::pow(k + 1.0, tail_.power) * std::pow(tail_.ratio, static_cast<double>(k));
          scaled = std::max(scaled, coeffs_[k].frobenius() / w);
        }
        s.tail_ = TailModel::envelope(scaled, tail_.power, tail_.ratio);
      }
    }
    return s;
  }

  /// Largest Frobenius norm among the stored coefficients (a bound on operator norms).
  double coeff_bound() const {
    double b = 0.0;
    for (const auto& c : coeffs_) b = std::max(b, c.frobenius());
    return b;
  }

  /// Upper bound on ||F_n|| for every n, stored or not.
  double envelope_at(std::size_t n) const {
    if (n < coeffs_.size()) return coeffs_[n].frobenius();
    return tail_.at(n);
  }

  /// Hardy norm squared of the stored part, sum ||F_n||_F^2.
  double hardy_norm2() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += c.frobenius() * c.frobenius();
    return s;
  }

 private:
  std::size_t rows_ = 1;
  std::size_t cols_ = 1;
  std::vector<QuatMatrix> coeffs_;
  TailModel tail_;
};

// ---------------------------------------------------------------------------
// Tail sums

/// sum_{n >= from} w_n (n+2) r^n where w_n = bound (n+1)^power ratio^n. The term ratio
/// decreases monotonically in n, so once it drops below one the remainder is bounded
/// by a geometric series.
inline double envelope_tail_sum(const TailModel& tail, std::size_t from, double r) {
  if (tail.kind == TailModel::Kind::finite || tail.bound == 0.0 || r == 0.0) {
    return (tail.kind == TailModel::Kind::uncertified) ? kInfinity : 0.0;
  }
  if (tail.kind == TailModel::Kind::uncertified) return kInfinity;
  const double q = tail.ratio * r;
  if (q >= 1.0) return kInfinity;
  const double log_b = std::log(tail.bound);
  const double log_q = std::log(q);
  auto term = [&](std::size_t n) {
    return std::exp(log_b + tail.power * std::log(n + 1.0) + n * log_q + std::log(n + 2.0));
  };
  auto step = [&](std::size_t n) {
    return std::pow((n + 2.0) / (n + 1.0), tail.power) * ((n + 3.0) / (n + 2.0)) * q;
  };
  double sum = 0.0;
  for (std::size_t n = from; n < from + 10'000'000; ++n) {
    const double t = term(n);
    sum += t;
    const double rho = step(n);
    if (rho < 1.0) {
      const double rest = t * rho / (1.0 - rho);
      if (rest <= 1e-17 * sum || t == 0.0) return sum + rest;
    }
  }
  return kInfinity;
}

/// sum_{n >= from} (n+2) r^n, the bound on sum |P_n(x)| for |x| = r.
inline double appell_tail_sum(std::size_t from, double r) {
  return envelope_tail_sum(TailModel::bounded(1.0), from, r);
}

/// Bound on |P_n(x)|: |x|^n / c_n <= (n+2) |x|^n.
inline double appell_bound(std::size_t n, double r) { return (n + 2.0) * std::pow(r, static_cast<double>(n)); }

// ---------------------------------------------------------------------------
// Evaluation

struct Evaluation {
  QuatMatrix value;
  double tail_bound = 0.0;
};

/// Partial sum sum_{n < N} P_n(x) F_n plus a rigorous bound on the omitted terms.
/// Series with a non-finite tail require |x| < 1 (and ratio * |x| < 1 for
/// geometric envelopes); polynomials evaluate anywhere.
inline Evaluation evaluate(const AxialSeries& f, const Quaternion& x) {
  const double r = x.abs();
  Evaluation out{QuatMatrix(f.rows(), f.cols()), 0.0};
  if (!f.tail().is_finite()) {
    if (r >= 1.0) raise(ErrorCode::divergent_point, "|x| >= 1 cannot be certified");
    if (f.tail().kind == TailModel::Kind::envelope && f.tail().ratio * r >= 1.0) {
      raise(ErrorCode::divergent_point, "tail envelope diverges at this point");
    }
  }
  if (f.size() > 0) {
    const auto p = appell_P_values(x, static_cast<unsigned>(f.size() - 1));
    for (std::size_t n = 0; n < f.size(); ++n) out.value += p[n] * f.coeffs()[n];
  }
  out.tail_bound = envelope_tail_sum(f.tail(), f.size(), r);
  return out;
}

/// The real-variable symbol sum_n t^n F_n (t = 3 x0) that Toeplitz, realization and
/// Schur-algorithm calculus act on. For degrees >= 2 it differs from the pointwise value
/// at the real point x0, where P_n(x0) = x0^n / c_n.
inline Evaluation real_symbol(const AxialSeries& f, double t) {
  Evaluation out{QuatMatrix(f.rows(), f.cols()), 0.0};
  double tn = 1.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    out.value += f.coeffs()[n] * tn;
    tn *= t;
  }
  if (f.tail().is_finite()) return out;
  if (f.tail().kind == TailModel::Kind::uncertified) {
    out.tail_bound = kInfinity;
    return out;
  }
  // sum_{n >= N} w_n |t|^n <= envelope_tail_sum (which carries an extra (n+2) >= 1 weight).
  out.tail_bound = envelope_tail_sum(f.tail(), f.size(), std::abs(t));
  return out;
}

// ---------------------------------------------------------------------------
// Algebra

/// Coefficients of P_n (.) f: n leading zeros, then F_0, F_1, ...
inline AxialSeries shift_product(std::size_t n, const AxialSeries& f) {
  std::vector<QuatMatrix> c(n, QuatMatrix(f.rows(), f.cols()));
  c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
  TailModel tail = f.tail();
  if (tail.kind == TailModel::Kind::envelope && (tail.ratio != 1.0 || tail.power != 0)) {
    // index shift: w_{m-n} <= w_m * ratio^{-n} when ratio < 1 and power >= 0.
    tail.bound *= std::pow(std::min(1.0, tail.ratio), -static_cast<double>(n));
  }
  return {f.rows(), f.cols(), std::move(c), tail};
}

inline bool is_intrinsic(const AxialSeries& f, double tol = 1e-12) {
  for (const auto& c : f.coeffs())
    if (imaginary_norm(c) > tol) return false;
  return true;
}

/// ||f(conj x) - conj(f(x))|| (entrywise conjugation); zero for intrinsic series.
inline double intrinsic_symmetry_residual(const AxialSeries& f, const Quaternion& x) {
  const auto a = evaluate(f, x.conj());
  const auto b = evaluate(f, x);
  return (a.value - b.value.conjugate()).max_abs();
}

namespace detail {

/// Real scalars a_n with F_n = a_n I; raises NotIntrinsic otherwise.
inline std::vector<double> intrinsic_scalars(const AxialSeries& f, double tol = 1e-12) {
  if (f.rows() != f.cols()) raise(ErrorCode::not_intrinsic, "intrinsic factor must be square");
  std::vector<double> a(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const QuatMatrix& c = f.coeffs()[n];
    if (imaginary_norm(c) > tol) raise(ErrorCode::not_intrinsic, "coefficient " + std::to_string(n) + " is not real");
    a[n] = c(0, 0).x0;
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) {
        const double expected = i == j ? a[n] : 0.0;
        if (std::abs(c(i, j).x0 - expected) > tol) {
          raise(ErrorCode::not_intrinsic, "coefficient " + std::to_string(n) + " is not a multiple of I");
        }
      }
  }
  return a;
}

/// Smallest B with ||F_n|| <= B (n+1)^p rho^n for every n, stored coefficients included.
inline double envelope_constant(const AxialSeries& f, int p, double rho) {
  double b = f.tail().kind == TailModel::Kind::envelope ? f.tail().bound : 0.0;
  if (f.tail().kind == TailModel::Kind::envelope) {
    // Re-express the tail in the (p, rho) scale: valid when p >= tail.p and rho >= tail.ratio.
    b = f.tail().bound;
  }
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double w = std::pow(n + 1.0, p) * std::pow(rho, static_cast<double>(n));
    b = std::max(b, f.coeffs()[n].frobenius() / w);
  }
  return b;
}

inline double l1_weighted(const AxialSeries& f, double rho) {
  double s = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k)
    s += f.coeffs()[k].frobenius() * std::max(1.0, std::pow(rho, -static_cast<double>(k)));
  return s;
}

}  // namespace detail

/// Convolution h_n = sum_k a_k g_{n-k} for intrinsic f = sum P_n a_n (a_n real). This is
/// the CK-product f (.) g, and the only CK-product that stays in the span of the P_n.
inline AxialSeries intrinsic_product(const AxialSeries& f, const AxialSeries& g) {
  const auto a = detail::intrinsic_scalars(f);
  if (f.rows() != 1 && f.rows() != g.rows()) {
    raise(ErrorCode::shape_mismatch, "intrinsic factor " + f.shape() + " vs " + g.shape());
  }
  const bool f_fin = f.tail().is_finite();
  const bool g_fin = g.tail().is_finite();
  std::size_t len = 0;
  if (f.size() == 0 || g.size() == 0) {
    len = 0;
  } else if (f_fin && g_fin) {
    len = f.size() + g.size() - 1;
  } else if (f_fin) {
    len = g.size();
  } else if (g_fin) {
    len = f.size();
  } else {
    len = std::min(f.size(), g.size());
  }

  std::vector<QuatMatrix> h(len, QuatMatrix(g.rows(), g.cols()));
  for (std::size_t n = 0; n < len; ++n) {
    for (std::size_t k = 0; k <= n && k < a.size(); ++k) {
      if (n - k < g.size() && a[k] != 0.0) h[n] += g.coeffs()[n - k] * a[k];
    }
  }

  TailModel tail = TailModel::finite();
  if (f.tail().kind == TailModel::Kind::uncertified || g.tail().kind == TailModel::Kind::uncertified) {
    tail = TailModel::uncertified();
  } else if (f_fin && g_fin) {
    tail = TailModel::finite();
  } else if (f_fin || g_fin) {
    const AxialSeries& poly = f_fin ? f : g;
    const AxialSeries& inf = f_fin ? g : f;
    const int p = inf.tail().power;
    const double rho = inf.tail().ratio;
    tail = TailModel::envelope(detail::envelope_constant(inf, p, rho) * detail::l1_weighted(poly, rho), p, rho);
  } else {
    const double rho = std::max(f.tail().ratio, g.tail().ratio);
    const int pf = f.tail().power;
    const int pg = g.tail().power;
    tail = TailModel::envelope(detail::envelope_constant(f, pf, rho) * detail::envelope_constant(g, pg, rho),
                               pf + pg + 1, rho);
  }
  return {g.rows(), g.cols(), std::move(h), tail};
}

/// g with f (.) g = 1 through degree N, for intrinsic f with a_0 != 0.
inline AxialSeries intrinsic_inverse(const AxialSeries& f, std::size_t degree) {
  const auto a = detail::intrinsic_scalars(f);
  if (a.empty() || std::abs(a[0]) < 1e-10) raise(ErrorCode::singular_constant_term, "|a_0| < 1e-10");
  std::vector<double> g(degree + 1, 0.0);
  g[0] = 1.0 / a[0];
  for (std::size_t n = 1; n <= degree; ++n) {
    double s = 0.0;
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) s += a[k] * g[n - k];
    g[n] = -s / a[0];
  }
  const std::size_t r = f.rows();
  std::vector<QuatMatrix> c;
  c.reserve(g.size());
  for (double v : g) c.push_back(QuatMatrix::identity(r) * v);
  const bool exact = f.tail().is_finite() && a.size() == 1;
  return {r, r, std::move(c), exact ? TailModel::finite() : TailModel::uncertified()};
}

/// Coefficient action of M_S: h_k = sum_{j <= k} S_{k-j} u_j with S on the left. The
/// accumulation order matches a dense lower-triangular block Toeplitz mat-vec, so the
/// two agree bit for bit. Output length is u.size() (+ deg S when S is a polynomial).
inline std::vector<QuatMatrix> multiplier_action(const AxialSeries& s, std::span<const QuatMatrix> u) {
  for (const auto& v : u) {
    if (v.rows() != s.cols() || v.cols() != 1) {
      raise(ErrorCode::shape_mismatch, "vector " + v.shape() + " against multiplier " + s.shape());
    }
  }
  const std::size_t len = u.empty() ? 0 : (s.tail().is_finite() && s.size() > 0 ? u.size() + s.size() - 1 : u.size());
  std::vector<QuatMatrix> h(len, QuatMatrix(s.rows(), 1));
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t i = 0; i < s.rows(); ++i) {
      Quaternion acc{};
      for (std::size_t j = 0; j <= k && j < u.size(); ++j) {
        if (k - j >= s.size()) continue;
        const QuatMatrix& sk = s.coeffs()[k - j];
        for (std::size_t c = 0; c < s.cols(); ++c) acc += sk(i, c) * u[j](c, 0);
      }
      h[k](i, 0) = acc;
    }
  }
  return h;
}

struct RepresentationCheck {
  double residual = 0.0;
  double tail_bound = 0.0;
};

/// Representation formula for axial functions: with x = u + I v,
/// f(x) = 1/2 [f(u+Jv) + f(u-Jv)] + (I J / 2)[f(u-Jv) - f(u+Jv)].
inline RepresentationCheck check_representation_formula(const AxialSeries& f, double u, double v,
                                                        const Quaternion& unit_i, const Quaternion& unit_j) {
  if (!is_unit_imaginary(unit_i, 1e-9) || !is_unit_imaginary(unit_j, 1e-9)) {
    raise(ErrorCode::invalid_argument, "I and J must be unit imaginary quaternions");
  }
  const auto lhs = evaluate(f, Quaternion(u) + unit_i * v);
  const auto plus = evaluate(f, Quaternion(u) + unit_j * v);
  const auto minus = evaluate(f, Quaternion(u) - unit_j * v);
  const QuatMatrix rhs = (plus.value + minus.value) * 0.5 + (unit_i * unit_j * 0.5) * (minus.value - plus.value);
  return {(lhs.value - rhs).max_abs(), lhs.tail_bound + plus.tail_bound + minus.tail_bound};
}

/// Series sum_n P_n a_n / 3^n whose real symbol is sum_n x0^n a_n.
inline AxialSeries extend_axial(const std::vector<QuatMatrix>& real_coeffs) {
  if (real_coeffs.empty()) return {};
  std::vector<QuatMatrix> c;
  c.reserve(real_coeffs.size());
  double scale = 1.0;
  for (const auto& a : real_coeffs) {
    c.push_back(a * scale);
    scale /= 3.0;
  }
  return {real_coeffs.front().rows(), real_coeffs.front().cols(), std::move(c), TailModel::finite()};
}

/// Series sum_n P_n c_n a_n whose pointwise values at real points x0 equal
/// sum_n x0^n a_n (since P_n(x0) = x0^n / c_n).
inline AxialSeries axial_extension_pointwise(const std::vector<QuatMatrix>& real_coeffs) {
  if (real_coeffs.empty()) return {};
  std::vector<QuatMatrix> c;
  c.reserve(real_coeffs.size());
  for (std::size_t n = 0; n < real_coeffs.size(); ++n) {
    c.push_back(real_coeffs[n] * to_double(c_coeff(static_cast<unsigned>(n))));
  }
  return {real_coeffs.front().rows(), real_coeffs.front().cols(), std::move(c), TailModel::finite()};
}

}  // namespace axial

#endif  // AXIAL_AXIAL_SERIES_HPP
