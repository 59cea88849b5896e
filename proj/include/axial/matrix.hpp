#ifndef AXIAL_MATRIX_HPP
#define AXIAL_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "axial/error.hpp"
#include "axial/quaternion.hpp"

namespace axial {

using Complex = std::complex<double>;

/// Dense row-major matrix over a ring R (Quaternion or Complex). Shapes may be
/// empty (0 rows or 0 cols); realizations with a zero-dimensional state rely on it.
template <class R>
class DenseMatrix {
 public:
  using value_type = R;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, const R& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<R>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) raise(ErrorCode::shape_mismatch, "ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1.0);
    return m;
  }
  static DenseMatrix scalar(const R& value) {
    DenseMatrix m(1, 1);
    m(0, 0) = value;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  const std::vector<R>& data() const { return data_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  DenseMatrix& operator*=(double s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator-(DenseMatrix a) { return a *= -1.0; }
  friend DenseMatrix operator*(DenseMatrix a, double s) { return a *= s; }
  friend DenseMatrix operator*(double s, DenseMatrix a) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) {
      raise(ErrorCode::shape_mismatch, "product of " + a.shape() + " and " + b.shape());
    }
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  /// Left multiplication of every entry by a ring scalar: q * M.
  friend DenseMatrix operator*(const R& q, const DenseMatrix& m) {
    DenseMatrix c(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) c.data_[k] = q * m.data_[k];
    return c;
  }
  /// Right multiplication of every entry by a ring scalar: M * q.
  friend DenseMatrix operator*(const DenseMatrix& m, const R& q) {
    DenseMatrix c(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) c.data_[k] = m.data_[k] * q;
    return c;
  }

  /// Conjugate transpose M*.
  DenseMatrix adjoint() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj(data_[i * cols_ + j]);
    return t;
  }
  /// Entrywise conjugate (no transpose).
  DenseMatrix conjugate() const {
    DenseMatrix t(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = conj(data_[k]);
    return t;
  }

  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    DenseMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  /// Largest entry modulus.
  double max_abs() const {
    using std::abs;
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, static_cast<double>(abs(v)));
    return m;
  }
  double frobenius() const {
    using std::norm;
    double s = 0.0;
    for (const auto& v : data_) s += norm(v);
    return std::sqrt(s);
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
    os << '{';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << '}';
  }

 private:
  void require_same_shape(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      raise(ErrorCode::shape_mismatch, shape() + " vs " + o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

using QuatMatrix = DenseMatrix<Quaternion>;
using ComplexMatrix = DenseMatrix<Complex>;

/// Stack blocks [[a, b], [c, d]].
template <class R>
DenseMatrix<R> block2x2(const DenseMatrix<R>& a, const DenseMatrix<R>& b, const DenseMatrix<R>& c,
                        const DenseMatrix<R>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    raise(ErrorCode::shape_mismatch, "inconsistent 2x2 block layout");
  }
  DenseMatrix<R> m(a.rows() + c.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

template <class R>
DenseMatrix<R> hstack(const DenseMatrix<R>& a, const DenseMatrix<R>& b) {
  if (a.rows() != b.rows()) raise(ErrorCode::shape_mismatch, "hstack rows");
  DenseMatrix<R> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <class R>
DenseMatrix<R> vstack(const DenseMatrix<R>& a, const DenseMatrix<R>& b) {
  if (a.cols() != b.cols()) raise(ErrorCode::shape_mismatch, "vstack cols");
  DenseMatrix<R> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

/// Largest modulus of the imaginary parts of the entries.
inline double imaginary_norm(const QuatMatrix& m) {
  double s = 0.0;
  for (const auto& q : m.data()) s = std::max(s, q.vec_abs());
  return s;
}

// ---------------------------------------------------------------------------
// chi: H^{r x s} -> C^{2r x 2s}. With q = z + w e2, z = x0 + x1 i, w = x2 + x3 i,
// chi(q) = [[z, w], [-conj(w), conj(z)]]. Multiplicative and *-preserving.

inline ComplexMatrix chi(const QuatMatrix& m) {
  ComplexMatrix c(2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Quaternion& q = m(i, j);
      const Complex z(q.x0, q.x1);
      const Complex w(q.x2, q.x3);
      c(2 * i, 2 * j) = z;
      c(2 * i, 2 * j + 1) = w;
      c(2 * i + 1, 2 * j) = -std::conj(w);
      c(2 * i + 1, 2 * j + 1) = std::conj(z);
    }
  }
  return c;
}

inline ComplexMatrix chi(const Quaternion& q) { return chi(QuatMatrix::scalar(q)); }

/// Residual of the blockwise symmetry E^{-1} conj(C) E = C, i.e. for every 2x2
/// block [[a, b], [c, d]]: d = conj(a), c = -conj(b). Max-entry norm.
inline double chi_symmetry_residual(const ComplexMatrix& c) {
  if (c.rows() % 2 != 0 || c.cols() % 2 != 0) return INFINITY;
  double r = 0.0;
  for (std::size_t i = 0; i < c.rows(); i += 2) {
    for (std::size_t j = 0; j < c.cols(); j += 2) {
      r = std::max(r, std::abs(c(i + 1, j + 1) - std::conj(c(i, j))));
      r = std::max(r, std::abs(c(i + 1, j) + std::conj(c(i, j + 1))));
    }
  }
  return r;
}

/// Pull a complexified matrix back to H^{r x s}. The symmetry residual is
/// measured relative to max(1, max-entry of C).
inline QuatMatrix chi_inverse(const ComplexMatrix& c, double tol_sym = 1e-10) {
  const double residual = chi_symmetry_residual(c);
  const double scale = std::max(1.0, c.max_abs());
  if (!(residual <= tol_sym * scale)) {
    raise(ErrorCode::symmetry_violation,
          "matrix is not in the range of chi (residual " + std::to_string(residual) + ")");
  }
  QuatMatrix m(c.rows() / 2, c.cols() / 2);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Complex z = 0.5 * (c(2 * i, 2 * j) + std::conj(c(2 * i + 1, 2 * j + 1)));
      const Complex w = 0.5 * (c(2 * i, 2 * j + 1) - std::conj(c(2 * i + 1, 2 * j)));
      m(i, j) = Quaternion(z.real(), z.imag(), w.real(), w.imag());
    }
  }
  return m;
}

/// Column vector from a list of quaternions.
inline QuatMatrix column(const std::vector<Quaternion>& entries) {
  QuatMatrix v(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) v(i, 0) = entries[i];
  return v;
}

}  // namespace axial

#endif  // AXIAL_MATRIX_HPP
