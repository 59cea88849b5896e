#ifndef AXIAL_APPELL_HPP
#define AXIAL_APPELL_HPP

#include <boost/rational.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <mutex>
#include <vector>

#include "axial/error.hpp"
#include "axial/fueter.hpp"
#include "axial/quaternion.hpp"

namespace axial {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// T^m_j = 2(m - j + 1) / ((m + 1)(m + 2)).
inline Rational t_coeff(unsigned m, unsigned j) {
  if (j > m) raise(ErrorCode::invalid_argument, "t_coeff: j > m");
  const std::int64_t mm = m;
  return Rational(2 * (mm - j + 1), (mm + 1) * (mm + 2));
}

/// c_m = sum_j (-1)^j T^m_j, summed exactly.
inline Rational c_coeff(unsigned m) {
  Rational c(0);
  for (unsigned j = 0; j <= m; ++j) c += (j % 2 == 0 ? 1 : -1) * t_coeff(m, j);
  return c;
}

struct AppellCoefficients {
  unsigned m = 0;
  std::vector<Rational> T;
  Rational c;
};

inline AppellCoefficients appell_coefficients(unsigned m) {
  AppellCoefficients a;
  a.m = m;
  for (unsigned j = 0; j <= m; ++j) a.T.push_back(t_coeff(m, j));
  a.c = c_coeff(m);
  return a;
}

namespace detail {

/// Floating-point copies of T^m_j and c_m, grown on demand. Entries never change
/// once written, so readers only need the lock while growing.
class AppellTable {
 public:
  static AppellTable& instance() {
    static AppellTable table;
    return table;
  }

  void ensure(unsigned max_degree) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (t_.size() <= max_degree) {
      const auto m = static_cast<unsigned>(t_.size());
      std::vector<double> row(m + 1);
      for (unsigned j = 0; j <= m; ++j) row[j] = to_double(t_coeff(m, j));
      t_.push_back(std::move(row));
      inv_c_.push_back(1.0 / to_double(c_coeff(m)));
    }
  }

  // Snapshot copies keep callers independent of later growth.
  std::vector<std::vector<double>> t_rows(unsigned max_degree) {
    ensure(max_degree);
    std::lock_guard<std::mutex> lock(mutex_);
    return {t_.begin(), t_.begin() + max_degree + 1};
  }
  std::vector<double> inverse_c(unsigned max_degree) {
    ensure(max_degree);
    std::lock_guard<std::mutex> lock(mutex_);
    return {inv_c_.begin(), inv_c_.begin() + max_degree + 1};
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<double>> t_;
  std::vector<double> inv_c_;
};

}  // namespace detail

inline double c_value(unsigned m) { return 1.0 / detail::AppellTable::instance().inverse_c(m)[m]; }

/// Q_m(x) = sum_j T^m_j x^{m-j} conj(x)^j.
inline Quaternion eval_Q(unsigned m, const Quaternion& x) {
  const Quaternion xb = x.conj();
  std::vector<Quaternion> px(m + 1, Quaternion(1.0)), pxb(m + 1, Quaternion(1.0));
  for (unsigned k = 1; k <= m; ++k) {
    px[k] = px[k - 1] * x;
    pxb[k] = pxb[k - 1] * xb;
  }
  Quaternion q{};
  for (unsigned j = 0; j <= m; ++j) q += to_double(t_coeff(m, j)) * (px[m - j] * pxb[j]);
  return q;
}

/// P_m(x) = Q_m(x) / c_m.
inline Quaternion eval_P(unsigned m, const Quaternion& x) { return eval_Q(m, x) / to_double(c_coeff(m)); }

/// P_0(x), ..., P_K(x) in one pass. x = a + I b lies in the complex slice C_I, where
/// x and conj(x) act as z and conj(z); the sums are formed in C and mapped back.
inline std::vector<Quaternion> appell_P_values(const Quaternion& x, unsigned max_degree) {
  auto& table = detail::AppellTable::instance();
  const auto t = table.t_rows(max_degree);
  const auto inv_c = table.inverse_c(max_degree);

  const double b = x.vec_abs();
  const Quaternion unit_i = b > 0.0 ? x.vec() / b : e1;
  const std::complex<double> z(x.x0, b);
  std::vector<std::complex<double>> pz(max_degree + 1, 1.0), pzb(max_degree + 1, 1.0);
  for (unsigned k = 1; k <= max_degree; ++k) {
    pz[k] = pz[k - 1] * z;
    pzb[k] = pzb[k - 1] * std::conj(z);
  }
  std::vector<Quaternion> out(max_degree + 1);
  for (unsigned m = 0; m <= max_degree; ++m) {
    std::complex<double> s = 0.0;
    for (unsigned j = 0; j <= m; ++j) s += t[m][j] * (pz[m - j] * pzb[j]);
    s *= inv_c[m];
    out[m] = Quaternion(s.real()) + unit_i * s.imag();
  }
  return out;
}

/// Residual of P_n P_m = P_{n+m}. With via_restriction the pointwise products are
/// compared at x with x0 set to 0, where P_k reduces to the k-th power of the
/// imaginary part. Otherwise the unit impulses delta_n, delta_m are convolved and
/// compared with delta_{n+m}.
inline double check_product_identity(unsigned n, unsigned m, const Quaternion& x, bool via_restriction) {
  if (via_restriction) {
    const Quaternion y = x.vec();
    return (eval_P(n, y) * eval_P(m, y) - eval_P(n + m, y)).abs();
  }
  std::vector<double> dn(n + 1, 0.0), dm(m + 1, 0.0), expected(n + m + 1, 0.0);
  dn[n] = 1.0;
  dm[m] = 1.0;
  expected[n + m] = 1.0;
  std::vector<double> conv(n + m + 1, 0.0);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= m; ++j) conv[i + j] += dn[i] * dm[j];
  double r = 0.0;
  for (unsigned k = 0; k <= n + m; ++k) r = std::max(r, std::abs(conv[k] - expected[k]));
  return r;
}

/// |P_m(x) - sum_{|nu|=m} zeta^nu(x) e^nu m!/nu!| with e^nu the symmetrized unit
/// monomial. The fixed-order monomial e1^nu1 e2^nu2 e3^nu3 fails already at m = 2
/// (cross terms e1 e2 = e3 do not cancel), so the symmetric product is used.
inline double check_symmetric_expansion(unsigned m, const Quaternion& x) {
  if (m > 5) raise(ErrorCode::too_many_factors, "symmetric expansion limited to m <= 5");
  double m_fact = 1.0;
  for (unsigned i = 2; i <= m; ++i) m_fact *= i;
  Quaternion sum{};
  for (const auto& nu : multi_indices(m)) {
    sum += zeta_power(nu, x) * unit_power_symmetric(nu) * (m_fact / nu.factorial());
  }
  return (eval_P(m, x) - sum).abs();
}

}  // namespace axial

#endif  // AXIAL_APPELL_HPP
