#ifndef AXIAL_QUATERNION_HPP
#define AXIAL_QUATERNION_HPP

#include <array>
#include <cmath>
#include <ostream>

namespace axial {

/// Real quaternion x0 + x1 e1 + x2 e2 + x3 e3 with e1 e2 = e3, e2 e3 = e1,
/// e3 e1 = e2 and e_i^2 = -1.
struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a) : x0(a) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double a, double b, double c, double d) : x0(a), x1(b), x2(c), x3(d) {}

  static constexpr Quaternion unit(int j) {
    switch (j) {
      case 0: return {1, 0, 0, 0};
      case 1: return {0, 1, 0, 0};
      case 2: return {0, 0, 1, 0};
      default: return {0, 0, 0, 1};
    }
  }

  constexpr double operator[](int k) const {
    return k == 0 ? x0 : k == 1 ? x1 : k == 2 ? x2 : x3;
  }
  constexpr double& operator[](int k) {
    return k == 0 ? x0 : k == 1 ? x1 : k == 2 ? x2 : x3;
  }

  constexpr double real() const { return x0; }
  /// Imaginary part x1 e1 + x2 e2 + x3 e3.
  constexpr Quaternion vec() const { return {0, x1, x2, x3}; }
  constexpr Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
  constexpr double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  double abs() const { return std::sqrt(norm2()); }
  double vec_abs() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

  Quaternion inverse() const {
    const double n = norm2();
    return {x0 / n, -x1 / n, -x2 / n, -x3 / n};
  }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    x0 *= s; x1 *= s; x2 *= s; x3 *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    x0 /= s; x1 /= s; x2 /= s; x3 /= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
  }
  constexpr Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '[' << q.x0 << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << ']';
  }
};

inline constexpr Quaternion e1{0, 1, 0, 0};
inline constexpr Quaternion e2{0, 0, 1, 0};
inline constexpr Quaternion e3{0, 0, 0, 1};

inline Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double abs(const Quaternion& q) { return q.abs(); }
inline double norm(const Quaternion& q) { return q.norm2(); }

/// True when q lies on the sphere S of unit imaginary quaternions.
inline bool is_unit_imaginary(const Quaternion& q, double tol = 1e-12) {
  return std::abs(q.x0) <= tol && std::abs(q.abs() - 1.0) <= tol;
}

/// Integer power by repeated multiplication (powers of one quaternion commute).
inline Quaternion pow(const Quaternion& q, int n) {
  Quaternion result{1.0};
  Quaternion base = q;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace axial

#endif  // AXIAL_QUATERNION_HPP
