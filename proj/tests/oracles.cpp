#include "oracles.hpp"

#include <cmath>

namespace oracle {

std::vector<Int> float_cf_sqrt(const Int& d, std::size_t count, unsigned long bits) {
  mpf_class x(d, bits);
  x = sqrt(x);
  std::vector<Int> out;
  for (std::size_t i = 0; i < count; ++i) {
    mpf_class fl(0, bits);
    mpf_floor(fl.get_mpf_t(), x.get_mpf_t());
    out.emplace_back(fl);
    x -= fl;
    if (x == 0) break;
    x = 1 / x;
  }
  return out;
}

long brute_congruence(long c1, long c0, long mod) {
  for (long x = 0; x < mod; ++x) {
    long v = ((c1 % mod) * x + c0) % mod;
    if (v < 0) v += mod;
    if (v == 0) return x;
  }
  return -1;
}

cfsurd::Mat2 naive_pow(const cfsurd::Mat2& m, long n) {
  cfsurd::Mat2 r;
  for (long i = 0; i < n; ++i) {
    cfsurd::Mat2 t;
    t.m11 = r.m11 * m.m11 + r.m12 * m.m21;
    t.m12 = r.m11 * m.m12 + r.m12 * m.m22;
    t.m21 = r.m21 * m.m11 + r.m22 * m.m21;
    t.m22 = r.m21 * m.m12 + r.m22 * m.m22;
    r = t;
  }
  return r;
}

cfsurd::Rat eval_word(const std::vector<Int>& word) {
  cfsurd::Rat v(word.back());
  for (std::size_t i = word.size() - 1; i-- > 0;) v = cfsurd::Rat(word[i]) + cfsurd::Rat(1) / v;
  return v;
}

Int binom(long n, long k) {
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::vector<long> small_cf_sqrt(long d) {
  const long a0 = std::lround(std::floor(std::sqrt(static_cast<double>(d))));
  long a = a0;
  long m = 0, den = 1;
  std::vector<long> out;
  do {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    out.push_back(a);
  } while (a != 2 * a0);
  return out;
}

}  // namespace oracle
