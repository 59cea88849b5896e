#ifndef AXIAL_TESTS_SUPPORT_HPP
#define AXIAL_TESTS_SUPPORT_HPP

// Seeded generators and independent numeric oracles shared by the test binaries.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "axial/axial.hpp"

namespace gen {

using axial::Quaternion;
using axial::QuatMatrix;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng); }
  std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(eng); }

  Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }

  /// Uniform direction, radius uniform in [0, r_max].
  Quaternion ball(double r_max) {
    Quaternion q = quaternion();
    return q * (uniform(0.0, r_max) / q.abs());
  }

  Quaternion unit_imaginary() {
    Quaternion q{0.0, normal(), normal(), normal()};
    return q / q.abs();
  }

  /// Point with 9 x0^2 + |x_vec|^2 <= g^2, so the ellipsoid gauge is at most g^2.
  Quaternion ellipsoid(double g) {
    Quaternion q = quaternion();
    const double scale = g * uniform(0.0, 1.0) / std::sqrt(axial::Ellipsoid::gauge(q));
    return q * scale;
  }

  QuatMatrix matrix(std::size_t r, std::size_t c, double scale = 1.0) {
    QuatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = quaternion() * scale;
    return m;
  }

  QuatMatrix hermitian(std::size_t n) {
    const QuatMatrix m = matrix(n, n);
    return (m + m.adjoint()) * 0.5;
  }
};

/// Unitary colligation with state dimension n and scalar input/output, read off
/// a random (n+1)x(n+1) unitary.
inline axial::Colligation unitary_colligation(std::size_t n, std::uint64_t seed) {
  const QuatMatrix u = axial::random_unitary(n + 1, seed);
  return {u.block(0, 0, n, n), u.block(0, n, n, 1), u.block(n, 0, 1, n), u.block(n, n, 1, 1),
          axial::Colligation::Flag::none};
}

/// Blaschke factor colligation: S(t) = (t - a)/(1 - a t).
inline axial::Colligation blaschke_factor(double a) {
  const double s = std::sqrt(1.0 - a * a);
  return {QuatMatrix::scalar(a), QuatMatrix::scalar(s), QuatMatrix::scalar(s), QuatMatrix::scalar(-a),
          axial::Colligation::Flag::none};
}

}  // namespace gen

namespace oracle {

using CMat = Eigen::MatrixXcd;

/// chi built independently of the library: q = z + w e2, z = x0 + x1 i, w = x2 + x3 i.
inline CMat complexify(const axial::QuatMatrix& m) {
  CMat c(2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m(i, j);
      const std::complex<double> z(q.x0, q.x1), w(q.x2, q.x3);
      const auto r = static_cast<Eigen::Index>(2 * i), k = static_cast<Eigen::Index>(2 * j);
      c(r, k) = z;
      c(r, k + 1) = w;
      c(r + 1, k) = -std::conj(w);
      c(r + 1, k + 1) = std::conj(z);
    }
  return c;
}

inline std::vector<double> eigenvalues(const axial::QuatMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(complexify(m));
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

inline double operator_norm(const axial::QuatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(complexify(m));
  return svd.singularValues()(0);
}

/// sup over |z| = 1 of the largest singular value of sum chi(S_n) z^n, on a uniform angular grid.
inline double sup_norm(const std::vector<axial::QuatMatrix>& symbols, int angles = 4096) {
  double best = 0.0;
  std::vector<CMat> c;
  for (const auto& s : symbols) c.push_back(complexify(s));
  for (int k = 0; k < angles; ++k) {
    const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi * k / angles);
    CMat acc = CMat::Zero(c.front().rows(), c.front().cols());
    std::complex<double> zn = 1.0;
    for (const auto& m : c) {
      acc += m * zn;
      zn *= z;
    }
    Eigen::JacobiSVD<CMat> svd(acc);
    best = std::max(best, svd.singularValues()(0));
  }
  return best;
}

/// Exact fraction with 64-bit parts, independent of the library's rational type.
struct Frac {
  std::int64_t p = 0, q = 1;
  static Frac make(std::int64_t p, std::int64_t q) {
    if (q < 0) p = -p, q = -q;
    const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    return {p / g, q / g};
  }
  friend Frac operator+(Frac a, Frac b) { return make(a.p * b.q + b.p * a.q, a.q * b.q); }
  friend Frac operator-(Frac a) { return {-a.p, a.q}; }
  friend bool operator==(Frac a, Frac b) = default;
};

inline Frac t_coeff(std::int64_t m, std::int64_t j) { return Frac::make(2 * (m - j + 1), (m + 1) * (m + 2)); }

inline Frac c_coeff(std::int64_t m) {
  Frac c;
  for (std::int64_t j = 0; j <= m; ++j) c = c + (j % 2 ? -t_coeff(m, j) : t_coeff(m, j));
  return c;
}

/// Power-series coefficients of ((1 - t)/(1 + t))^n by direct polynomial arithmetic in t.
inline std::vector<double> cayley_power(std::size_t n, std::size_t degree) {
  std::vector<double> out(degree + 1, 0.0);
  out[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    // multiply by (1 - t), then divide by (1 + t)
    for (std::size_t i = degree; i >= 1; --i) out[i] -= out[i - 1];
    for (std::size_t i = 1; i <= degree; ++i) out[i] -= out[i - 1];
  }
  return out;
}

}  // namespace oracle

#endif  // AXIAL_TESTS_SUPPORT_HPP
