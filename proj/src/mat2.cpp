#include "cfsurd/mat2.hpp"

#include <sstream>

#include "cfsurd/sequences.hpp"

namespace cfsurd {

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.m11 << "," << m.m12 << "],[" << m.m21 << "," << m.m22 << "]]";
}

std::string to_string(const Mat2& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

Mat2 mat_pow(const Mat2& m, long n) {
  if (n < 0) throw DomainError("mat_pow: negative exponent " + std::to_string(n));
  Mat2 result = Mat2::identity();
  Mat2 base = m;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Mat2 pell_power(long k) {
  if (k < 1) throw DomainError("pell_power: k must be >= 1");
  auto [p, q] = pell_pair(k);
  return {p, Int(2 * q), q, p};
}

Mat2 sqrt3_power(long k) {
  if (k < 1) throw DomainError("sqrt3_power: k must be >= 1");
  Int q2k = sqrt3_convergent(2 * k).q;
  Int q2k1 = sqrt3_convergent(2 * k - 1).q;
  Int q2k2 = sqrt3_convergent(2 * k - 2).q;
  return {q2k, Int(2 * q2k1), q2k1, q2k2};
}

Mat2 odd_quotient_power(long m, long n) {
  if (m < 0) throw DomainError("odd_quotient_power: m must be >= 0");
  if (n < 1) throw DomainError("odd_quotient_power: n must be >= 1");
  LinRecSpec spec = odd_quotient_recurrence(m);
  return {linrec_nth(spec, n + 1), linrec_nth(spec, n), linrec_nth(spec, n), linrec_nth(spec, n - 1)};
}

}  // namespace cfsurd
