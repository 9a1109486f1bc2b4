#pragma once

#include <ostream>
#include <string>

#include "cfsurd/arith.hpp"

namespace cfsurd {

/// 2x2 matrix of unbounded integers, row-major: [[m11, m12], [m21, m22]].
struct Mat2 {
  Int m11{1}, m12{0}, m21{0}, m22{1};

  Mat2() = default;
  Mat2(Int a, Int b, Int c, Int d)
      : m11(std::move(a)), m12(std::move(b)), m21(std::move(c)), m22(std::move(d)) {}

  static Mat2 identity() { return {}; }

  Int det() const { return m11 * m22 - m12 * m21; }
  Int trace() const { return m11 + m22; }
  bool unimodular() const {
    Int d = det();
    return d == 1 || d == -1;
  }
  bool symmetric() const { return m12 == m21; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  Mat2& operator*=(const Mat2& o) { return *this = *this * o; }

  friend std::ostream& operator<<(std::ostream& os, const Mat2& m);
};

std::string to_string(const Mat2& m);

/// M^n by binary exponentiation; M^0 is the identity. n < 0 is a domain error.
Mat2 mat_pow(const Mat2& m, long n);

/// [[1,2],[1,1]]^k assembled from the sqrt(2) convergents:
/// [[p_k, 2 q_k], [q_k, p_k]].
Mat2 pell_power(long k);

/// [[3,2],[1,1]]^k assembled from the sqrt(3) convergent denominators:
/// [[q_2k, 2 q_(2k-1)], [q_(2k-1), q_(2k-2)]].
Mat2 sqrt3_power(long k);

/// [[2m+1,1],[1,0]]^n assembled from u_(n+1), u_n, u_(n-1) where
/// u_(j+1) = (2m+1) u_j + u_(j-1), u_0 = 0, u_1 = 1.
Mat2 odd_quotient_power(long m, long n);

}  // namespace cfsurd
