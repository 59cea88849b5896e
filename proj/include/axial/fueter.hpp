#ifndef AXIAL_FUETER_HPP
#define AXIAL_FUETER_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "axial/error.hpp"
#include "axial/matrix.hpp"
#include "axial/quaternion.hpp"

namespace axial {

/// Multi-index nu = (nu1, nu2, nu3).
struct MultiIndex {
  unsigned nu1 = 0;
  unsigned nu2 = 0;
  unsigned nu3 = 0;

  unsigned order() const { return nu1 + nu2 + nu3; }
  double factorial() const {
    auto fact = [](unsigned k) {
      double f = 1.0;
      for (unsigned i = 2; i <= k; ++i) f *= i;
      return f;
    };
    return fact(nu1) * fact(nu2) * fact(nu3);
  }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// All multi-indices with |nu| = m, in lexicographic order of (nu1, nu2).
inline std::vector<MultiIndex> multi_indices(unsigned m) {
  std::vector<MultiIndex> out;
  for (unsigned a = 0; a <= m; ++a)
    for (unsigned b = 0; a + b <= m; ++b) out.push_back({a, b, m - a - b});
  return out;
}

inline constexpr std::size_t kMaxSymmetricFactors = 8;

/// Fueter variable zeta_j(x) = x_j - e_j x0, j = 1..3.
inline Quaternion fueter_variable(int j, const Quaternion& x) {
  if (j < 1 || j > 3) raise(ErrorCode::invalid_argument, "Fueter variable index must be 1..3");
  return Quaternion(x[j]) - Quaternion::unit(j) * x.x0;
}

/// Average of the n! ordered products of the factors.
inline Quaternion symmetric_product(std::span<const Quaternion> factors) {
  const std::size_t n = factors.size();
  if (n > kMaxSymmetricFactors) raise(ErrorCode::too_many_factors, "at most 8 factors");
  if (n == 0) return Quaternion(1.0);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Quaternion sum{};
  double count = 0.0;
  do {
    Quaternion prod = factors[perm[0]];
    for (std::size_t k = 1; k < n; ++k) prod *= factors[perm[k]];
    sum += prod;
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / count;
}

inline Quaternion symmetric_product(std::initializer_list<Quaternion> factors) {
  return symmetric_product(std::span<const Quaternion>(factors.begin(), factors.size()));
}

namespace detail {
inline std::vector<Quaternion> repeat_factors(const MultiIndex& nu, const std::array<Quaternion, 3>& base) {
  std::vector<Quaternion> f;
  f.insert(f.end(), nu.nu1, base[0]);
  f.insert(f.end(), nu.nu2, base[1]);
  f.insert(f.end(), nu.nu3, base[2]);
  return f;
}
}  // namespace detail

/// zeta^nu: symmetric product of nu1 copies of zeta_1, nu2 of zeta_2, nu3 of zeta_3.
inline Quaternion zeta_power(const MultiIndex& nu, const Quaternion& x) {
  if (nu.order() > kMaxSymmetricFactors) raise(ErrorCode::too_many_factors, "|nu| > 8");
  const auto f = detail::repeat_factors(
      nu, {fueter_variable(1, x), fueter_variable(2, x), fueter_variable(3, x)});
  return symmetric_product(f);
}

/// Symmetrized unit monomial: symmetric product of nu1 copies of e1, nu2 of e2, nu3 of e3.
inline Quaternion unit_power_symmetric(const MultiIndex& nu) {
  if (nu.order() > kMaxSymmetricFactors) raise(ErrorCode::too_many_factors, "|nu| > 8");
  return symmetric_product(detail::repeat_factors(nu, {e1, e2, e3}));
}

/// Ordered unit monomial e1^nu1 e2^nu2 e3^nu3.
inline Quaternion unit_power_ordered(const MultiIndex& nu) {
  return pow(e1, static_cast<int>(nu.nu1)) * pow(e2, static_cast<int>(nu.nu2)) *
         pow(e3, static_cast<int>(nu.nu3));
}

using PointFunction = std::function<QuatMatrix(const Quaternion&)>;

namespace detail {

/// Central-difference partial derivatives d_k f(x), k = 0..3.
inline std::array<QuatMatrix, 4> partials(const PointFunction& f, const Quaternion& x, double h) {
  std::array<QuatMatrix, 4> d;
  for (int k = 0; k < 4; ++k) {
    Quaternion xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    d[k] = (f(xp) - f(xm)) * (0.5 / h);
  }
  return d;
}

}  // namespace detail

/// Left Cauchy-Fueter operator D f = d0 f + e1 d1 f + e2 d2 f + e3 d3 f
/// (units multiply on the left), by central differences.
inline QuatMatrix apply_D_fd(const PointFunction& f, const Quaternion& x, double h = 1e-5) {
  const auto d = detail::partials(f, x, h);
  return d[0] + e1 * d[1] + e2 * d[2] + e3 * d[3];
}

/// Conjugate operator Dbar f = d0 f - e1 d1 f - e2 d2 f - e3 d3 f.
inline QuatMatrix apply_Dbar_fd(const PointFunction& f, const Quaternion& x, double h = 1e-5) {
  const auto d = detail::partials(f, x, h);
  return d[0] - e1 * d[1] - e2 * d[2] - e3 * d[3];
}

/// Right conjugate operator f Dbar_R = d0 f - d1 f e1 - d2 f e2 - d3 f e3. Annihilates
/// the conjugates of left-hyperholomorphic functions.
inline QuatMatrix apply_Dbar_right_fd(const PointFunction& f, const Quaternion& x, double h = 1e-5) {
  const auto d = detail::partials(f, x, h);
  return d[0] - d[1] * e1 - d[2] * e2 - d[3] * e3;
}

}  // namespace axial

#endif  // AXIAL_FUETER_HPP
