#ifndef AXIAL_LINALG_HPP
#define AXIAL_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "axial/error.hpp"
#include "axial/matrix.hpp"

namespace axial {

/// Default tolerances shared by the numeric kernel. Relative to max(1, scale).
struct LinalgTolerances {
  double sym = 1e-10;   // chi-range symmetry
  double herm = 1e-10;  // Hermitian input check
};

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary, columns match values
};

namespace detail {

inline double hermitian_residual(const ComplexMatrix& c) {
  double r = 0.0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = i; j < c.cols(); ++j) r = std::max(r, std::abs(c(i, j) - std::conj(c(j, i))));
  return r;
}

}  // namespace detail

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Each rotation is a phase
/// change making a_pq real followed by a real Givens rotation that annihilates it.
inline HermitianEigen hermitian_eigen(const ComplexMatrix& input, double tol_herm = 1e-10) {
  const std::size_t n = input.rows();
  if (input.cols() != n) raise(ErrorCode::not_hermitian, "non-square " + input.shape());
  const double scale = std::max(1.0, input.max_abs());
  if (detail::hermitian_residual(input) > tol_herm * scale) {
    raise(ErrorCode::not_hermitian, "input deviates from its adjoint");
  }

  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double fro = a.frobenius();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-15 * fro || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Skip rotations that cannot change the diagonal in floating point.
        if (sweep > 3 && std::abs(app) + 100.0 * mag == std::abs(app) &&
            std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const Complex phase = apq / mag;  // e^{i phi}
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J restricted to (p, q): [[c, s], [-s conj(phase), c conj(phase)]].
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& c, double tol_herm = 1e-10) {
  return hermitian_eigen(c, tol_herm).values;
}

/// Singular values of chi(M), descending. Each quaternionic singular value
/// appears twice.
inline std::vector<double> singular_values(const QuatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  const ComplexMatrix x = chi(m);
  const ComplexMatrix xa = x.adjoint();
  const ComplexMatrix gram = m.cols() <= m.rows() ? xa * x : x * xa;
  std::vector<double> lambda = hermitian_eigenvalues(gram, 1e-8);
  std::vector<double> sv;
  sv.reserve(lambda.size());
  for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) sv.push_back(std::sqrt(std::max(0.0, *it)));
  return sv;
}

/// Operator norm of M acting on H^s; equals the spectral norm of chi(M).
inline double operator_norm(const QuatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (m.rows() == 1 && m.cols() == 1) return m(0, 0).abs();
  const auto sv = singular_values(m);
  return sv.empty() ? 0.0 : sv.front();
}

inline double hermitian_residual(const QuatMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) r = std::max(r, (m(i, j) - m(j, i).conj()).abs());
  return r;
}

/// Smallest eigenvalue of a quaternionic Hermitian matrix (via chi).
inline double min_eigenvalue(const QuatMatrix& m, double tol_herm = 1e-10) {
  if (m.rows() == 0) return 0.0;
  if (hermitian_residual(m) > tol_herm * std::max(1.0, m.max_abs())) {
    raise(ErrorCode::not_hermitian, "matrix is not Hermitian");
  }
  return hermitian_eigenvalues(chi(m), INFINITY).front();
}

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double max_abs_eigenvalue = 0.0;
};

inline PsdReport psd_report(const QuatMatrix& m, double tol) {
  PsdReport rep;
  if (m.rows() == 0) {
    rep.psd = true;
    return rep;
  }
  if (hermitian_residual(m) > tol * std::max(1.0, m.max_abs())) {
    raise(ErrorCode::not_hermitian, "matrix is not Hermitian");
  }
  const auto lambda = hermitian_eigenvalues(chi(m), INFINITY);
  rep.min_eigenvalue = lambda.front();
  rep.max_abs_eigenvalue = std::max(std::abs(lambda.front()), std::abs(lambda.back()));
  rep.psd = rep.min_eigenvalue >= -tol * std::max(1.0, rep.max_abs_eigenvalue);
  return rep;
}

/// Positive semidefiniteness of a quaternionic Hermitian matrix; chi preserves order.
inline bool is_psd(const QuatMatrix& m, double tol) { return psd_report(m, tol).psd; }

// ---------------------------------------------------------------------------
// Linear solves: complex LU with partial pivoting; quaternionic solves go through chi.

struct ComplexLU {
  ComplexMatrix lu;
  std::vector<std::size_t> perm;
  double min_pivot_ratio = 0.0;  // smallest |pivot| / max|A|
};

inline ComplexLU lu_factor(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) raise(ErrorCode::shape_mismatch, "LU of non-square " + a.shape());
  ComplexLU f{a, std::vector<std::size_t>(n), INFINITY};
  std::iota(f.perm.begin(), f.perm.end(), 0);
  const double scale = std::max(a.max_abs(), 1e-300);
  auto& m = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
    }
    const double pivot = std::abs(m(k, k));
    f.min_pivot_ratio = std::min(f.min_pivot_ratio, pivot / scale);
    if (pivot == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex factor = m(i, k) / m(k, k);
      m(i, k) = factor;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  if (n == 0) f.min_pivot_ratio = 1.0;
  return f;
}

inline ComplexMatrix lu_solve(const ComplexLU& f, const ComplexMatrix& b) {
  const std::size_t n = f.lu.rows();
  ComplexMatrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = b(f.perm[i], j);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < i; ++k) x(i, j) -= f.lu(i, k) * x(k, j);
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t k = ii + 1; k < n; ++k) x(ii, j) -= f.lu(ii, k) * x(k, j);
      x(ii, j) /= f.lu(ii, ii);
    }
  }
  return x;
}

/// Threshold on |pivot| / max|A| below which a matrix is treated as singular.
inline constexpr double kSingularPivot = 1e-13;

/// Solve A X = B over C; raises `code` when A is numerically singular.
inline ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b,
                           ErrorCode code = ErrorCode::singular_matrix) {
  if (b.rows() != a.rows()) raise(ErrorCode::shape_mismatch, "solve rhs " + b.shape());
  const ComplexLU f = lu_factor(a);
  if (f.min_pivot_ratio < kSingularPivot) raise(code, "pivot ratio " + std::to_string(f.min_pivot_ratio));
  return lu_solve(f, b);
}

/// Solve A X = B over H via chi.
inline QuatMatrix solve(const QuatMatrix& a, const QuatMatrix& b,
                        ErrorCode code = ErrorCode::singular_matrix) {
  if (a.rows() == 0) return QuatMatrix(0, b.cols());
  return chi_inverse(solve(chi(a), chi(b), code), 1e-8);
}

inline QuatMatrix inverse(const QuatMatrix& a, ErrorCode code = ErrorCode::singular_matrix) {
  if (a.rows() == 1 && a.cols() == 1) {
    const Quaternion q = a(0, 0);
    if (q.abs() == 0.0) raise(code, "zero scalar");
    return QuatMatrix::scalar(q.inverse());
  }
  return solve(a, QuatMatrix::identity(a.rows()), code);
}

/// f(M) for a quaternionic Hermitian M, computed as U f(Lambda) U* on chi(M) and
/// pulled back with a symmetry assertion.
inline QuatMatrix hermitian_function(const QuatMatrix& m, const std::function<double(double)>& fn) {
  if (m.rows() == 0) return m;
  const HermitianEigen eig = hermitian_eigen(chi(m), 1e-9 * std::max(1.0, m.max_abs()));
  const std::size_t n = eig.values.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = fn(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex uik = eig.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += uik * std::conj(eig.vectors(j, k));
    }
  }
  return chi_inverse(out, 1e-8);
}

// ---------------------------------------------------------------------------

/// Seeded Haar-like unitary: Gram-Schmidt over H (two passes) on a Gaussian matrix.
inline QuatMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  if (n == 0) raise(ErrorCode::invalid_argument, "random_unitary needs N >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  QuatMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = Quaternion(gauss(rng), gauss(rng), gauss(rng), gauss(rng));

  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Quaternion proj{};  // <u_k, u_j> = sum conj(u_ik) u_ij
        for (std::size_t i = 0; i < n; ++i) proj += u(i, k).conj() * u(i, j);
        for (std::size_t i = 0; i < n; ++i) u(i, j) -= u(i, k) * proj;
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += u(i, j).norm2();
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) u(i, j) /= nrm;
  }
  return u;
}

/// Quaternion with i.i.d. standard normal components.
template <class Rng>
Quaternion gaussian_quaternion(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
  return {a, b, c, d};
}

}  // namespace axial

#endif  // AXIAL_LINALG_HPP
