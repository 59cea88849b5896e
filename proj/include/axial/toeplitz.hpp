#ifndef AXIAL_TOEPLITZ_HPP
#define AXIAL_TOEPLITZ_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "axial/error.hpp"
#include "axial/linalg.hpp"
#include "axial/matrix.hpp"

namespace axial {

/// Finite section (N x N blocks) of a block Toeplitz operator.
///   lower:     block (j,k) = S_{j-k} for j >= k, zero above.
///   hermitian: block (j,k) = Phi_{j-k}/2 below, (Phi_0 + Phi_0*)/2 on the
///              diagonal, Phi_{k-j}*/2 above.
struct ToeplitzSection {
  enum class Kind { lower, hermitian };

  std::vector<QuatMatrix> symbols;
  std::size_t n = 0;
  Kind kind = Kind::lower;

  ToeplitzSection(std::vector<QuatMatrix> s, std::size_t blocks, Kind k = Kind::lower)
      : symbols(std::move(s)), n(blocks), kind(k) {
    if (symbols.empty()) raise(ErrorCode::invalid_argument, "Toeplitz section needs a block shape");
    for (const auto& m : symbols) {
      if (m.rows() != block_rows() || m.cols() != block_cols()) {
        raise(ErrorCode::shape_mismatch, "Toeplitz symbol " + m.shape());
      }
    }
    if (kind == Kind::hermitian && block_rows() != block_cols()) {
      raise(ErrorCode::shape_mismatch, "Hermitian Toeplitz needs square symbols");
    }
  }

  std::size_t block_rows() const { return symbols.front().rows(); }
  std::size_t block_cols() const { return symbols.front().cols(); }

  QuatMatrix symbol(std::size_t k) const {
    return k < symbols.size() ? symbols[k] : QuatMatrix(block_rows(), block_cols());
  }

  QuatMatrix dense() const {
    const std::size_t r = block_rows();
    const std::size_t s = block_cols();
    QuatMatrix t(r * n, s * n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (kind == Kind::lower) {
          if (j >= k && j - k < symbols.size()) t.set_block(j * r, k * s, symbols[j - k]);
        } else if (j == k) {
          t.set_block(j * r, k * s, (symbols[0] + symbols[0].adjoint()) * 0.5);
        } else if (j > k) {
          t.set_block(j * r, k * s, symbol(j - k) * 0.5);
        } else {
          t.set_block(j * r, k * s, symbol(k - j).adjoint() * 0.5);
        }
      }
    }
    return t;
  }
};

/// Operator norm of a lower-triangular section, through chi and singular values.
inline double section_norm(const ToeplitzSection& t) {
  if (t.kind != ToeplitzSection::Kind::lower) raise(ErrorCode::invalid_argument, "section_norm needs a lower section");
  if (t.n == 0) return 0.0;
  return operator_norm(t.dense());
}

struct ContractionVerdict {
  bool contraction = true;
  std::size_t n = 0;      // deciding section: N_max on success, first violation otherwise
  double norm = 0.0;      // section norm at n
  std::vector<std::pair<std::size_t, double>> trace;  // (N, norm) pairs examined
};

/// Section norms are nondecreasing in N, so the largest section decides. Sizes are
/// examined on a doubling ladder up to N_max and a violation is narrowed to the
/// first failing N by bisection.
inline ContractionVerdict is_contraction(const std::vector<QuatMatrix>& symbols, std::size_t n_max = 64,
                                         double tol = 1e-9) {
  ContractionVerdict v;
  if (symbols.empty() || n_max == 0) return v;
  auto norm_at = [&](std::size_t n) {
    const double x = section_norm(ToeplitzSection(symbols, n));
    v.trace.emplace_back(n, x);
    return x;
  };
  std::size_t good = 0;
  std::size_t n = 1;
  while (true) {
    const double x = norm_at(n);
    if (x > 1.0 + tol) {
      std::size_t lo = good, hi = n;
      double hi_norm = x;
      while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const double m = norm_at(mid);
        if (m > 1.0 + tol) {
          hi = mid;
          hi_norm = m;
        } else {
          lo = mid;
        }
      }
      v.contraction = false;
      v.n = hi;
      v.norm = hi_norm;
      return v;
    }
    good = n;
    v.n = n;
    v.norm = x;
    if (n == n_max) break;
    n = std::min(2 * n, n_max);
  }
  return v;
}

/// PSD verdict on a Hermitian section.
inline PsdReport hermitian_psd(const ToeplitzSection& t, double tol = 1e-9) {
  if (t.kind != ToeplitzSection::Kind::hermitian) raise(ErrorCode::invalid_argument, "hermitian_psd needs a Hermitian section");
  return psd_report(t.dense(), tol);
}

}  // namespace axial

#endif  // AXIAL_TOEPLITZ_HPP
