#include "cfsurd/sequences.hpp"

#include <vector>

#include "cfsurd/convergents.hpp"
#include "cfsurd/mat2.hpp"

namespace cfsurd {

LinRecSpec fibonacci_recurrence() { return {1, 1, 0, 1}; }

LinRecSpec odd_quotient_recurrence(long m) { return {Int(2 * m + 1), 1, 0, 1}; }

// ---- quadratic ring ---------------------------------------------------------

namespace {

void require_same_ring(const QuadRingElem& x, const QuadRingElem& y) {
  if (x.D != y.D) throw DomainError("QuadRingElem: mismatched radicands");
}

}  // namespace

QuadRingElem operator+(const QuadRingElem& x, const QuadRingElem& y) {
  require_same_ring(x, y);
  return QuadRingElem{x.s * y.den + y.s * x.den, x.t * y.den + y.t * x.den, x.D, x.den * y.den}
      .normalized();
}

QuadRingElem operator-(const QuadRingElem& x, const QuadRingElem& y) {
  require_same_ring(x, y);
  return QuadRingElem{x.s * y.den - y.s * x.den, x.t * y.den - y.t * x.den, x.D, x.den * y.den}
      .normalized();
}

QuadRingElem operator*(const QuadRingElem& x, const QuadRingElem& y) {
  require_same_ring(x, y);
  return QuadRingElem{x.s * y.s + x.t * y.t * x.D, x.s * y.t + x.t * y.s, x.D, x.den * y.den}
      .normalized();
}

QuadRingElem QuadRingElem::normalized() const {
  if (den == 1) return *this;
  Int g = gcd(gcd(s, t), den);
  if (g == 1 || sgn(g) == 0) return *this;
  return {Int(s / g), Int(t / g), D, Int(den / g)};
}

QuadRingElem pow(const QuadRingElem& x, unsigned long n) {
  QuadRingElem result = QuadRingElem::integer(1, x.D);
  QuadRingElem base = x;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

// ---- recurrences ------------------------------------------------------------

Int linrec_nth(const LinRecSpec& spec, long n) {
  if (n < 0) throw DomainError("linrec_nth: negative index");
  if (n == 0) return spec.u0;
  if (n <= 256) {
    Int prev = spec.u0, cur = spec.u1;
    for (long i = 1; i < n; ++i) {
      Int next = spec.a * cur + spec.b * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // [u_(n), u_(n-1)]^T = [[a, b], [1, 0]]^(n-1) [u_1, u_0]^T
  Mat2 step = mat_pow(Mat2(spec.a, spec.b, 1, 0), n - 1);
  return step.m11 * spec.u1 + step.m12 * spec.u0;
}

Int binet_nth(const LinRecSpec& spec, long n) {
  if (n < 0) throw DomainError("binet_nth: negative index");
  const Int disc = spec.a * spec.a + 4 * spec.b;
  if (sgn(disc) == 0) throw DomainError("binet_nth: repeated characteristic root (a^2 + 4b = 0)");
  // alpha, beta = (a +- sqrt(disc)) / 2. With c = 2 u_1 - a u_0:
  //   2 sqrt(disc) lambda = c + u_0 sqrt(disc),  2 sqrt(disc) mu = -c + u_0 sqrt(disc),
  // so 2^(n+1) sqrt(disc) u_n = (c + u_0 r)(a + r)^n + (-c + u_0 r)(a - r)^n, r = sqrt(disc).
  const QuadRingElem root{spec.a, 1, disc, 1};
  const QuadRingElem alpha_n = pow(root, static_cast<unsigned long>(n));
  const Int c = 2 * spec.u1 - spec.a * spec.u0;
  const QuadRingElem lam{c, spec.u0, disc, 1};
  const QuadRingElem mu{Int(-c), spec.u0, disc, 1};
  const QuadRingElem total = lam * alpha_n + mu * alpha_n.conj();
  // total = 0 + T sqrt(disc) with integer T.
  if (sgn(total.s) != 0 || total.den != 1) {
    throw ConsistencyError("binet_nth: closed form has a rational part");
  }
  Int scale = pow(Int(2), static_cast<unsigned long>(n) + 1);
  if (!mpz_divisible_p(total.t.get_mpz_t(), scale.get_mpz_t())) {
    throw ConsistencyError("binet_nth: closed form is not an integer");
  }
  return total.t / scale;
}

// ---- named sequences -------------------------------------------------------

Int fibonacci(long n) { return linrec_nth(fibonacci_recurrence(), n); }

IntPair pell_pair(long k) {
  if (k < 0) throw DomainError("pell_pair: k must be >= 0");
  if (k == 0) return {1, 0};
  Int p_prev = 1, q_prev = 0, p = 1, q = 1;
  for (long i = 1; i < k; ++i) {
    Int p_next = 2 * p + p_prev;
    Int q_next = 2 * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {p, q};
}

IntPair sqrt3_convergent(long j) {
  if (j < 0) throw DomainError("sqrt3_convergent: index must be >= 0");
  // quotients: a_0 = 1, then 1, 2, 1, 2, ...
  Int p_prev = 1, q_prev = 0, p = 1, q = 1;
  for (long i = 1; i <= j; ++i) {
    const int a = (i % 2 == 1) ? 1 : 2;
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {p, q};
}

IntPair sqrt3_pair(long k) {
  if (k < 0) throw DomainError("sqrt3_pair: k must be >= 0");
  return sqrt3_convergent(k + 1);
}

IntPair ab_pair(long k) {
  if (k < 0) throw DomainError("ab_pair: k must be >= 0");
  Int a_prev = 1, b_prev = 0, a = 3, b = 1;
  if (k == 0) return {a_prev, b_prev};
  for (long i = 1; i < k; ++i) {
    Int a_next = 4 * a - a_prev;
    Int b_next = 4 * b - b_prev;
    a_prev = std::move(a);
    b_prev = std::move(b);
    a = std::move(a_next);
    b = std::move(b_next);
  }
  return {a, b};
}

IntPair triple113_pair(long k) {
  if (k < -1) throw DomainError("triple113_pair: k must be >= -1");
  Int p_prev = -1, q_prev = 4, p = 1, q = 0;
  if (k == -1) return {p_prev, q_prev};
  for (long i = 1; i <= k; ++i) {
    Int p_next = 8 * p + p_prev;
    Int q_next = 8 * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {p, q};
}

IntPair interleaved_even_pair(long m, long k) {
  if (m < 1) throw DomainError("interleaved_even_pair: m must be >= 1");
  if (k < 0) throw DomainError("interleaved_even_pair: k must be >= 0");
  // c_0 = 2m/1; quotients m, 4m alternate afterwards.
  Int p_prev = 1, q_prev = 0, p = 2 * m, q = 1;
  for (long i = 1; i <= k; ++i) {
    const long a = (i % 2 == 1) ? m : 4 * m;
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {p, q};
}

Int pair_m2m_denominator(long m, long j) {
  if (m < 1) throw DomainError("pair_m2m_denominator: m must be >= 1");
  if (j < 0) throw DomainError("pair_m2m_denominator: index must be >= 0");
  Int q_prev = 0, q = 1;
  for (long i = 1; i <= j; ++i) {
    const long a = (i % 2 == 1) ? m : 2 * m;
    Int q_next = a * q + q_prev;
    q_prev = std::move(q);
    q = std::move(q_next);
  }
  return q;
}

Int odd_multiplier(long m) {
  if (m < 0) throw DomainError("odd_multiplier: m must be >= 0");
  Int t = 2 * m + 1;
  return t * (t * t + 3);
}

namespace {

IntPair odd_family_convergent(long m, long length) {
  const long period[5] = {m, 1, 1, m, 4 * m + 2};
  std::vector<Int> word;
  word.reserve(static_cast<std::size_t>(length));
  for (long i = 0; i < length; ++i) word.emplace_back(period[i % 5]);
  const auto cs = convergents_of_word(word);
  return {cs.back().p, cs.back().q};
}

}  // namespace

IntPair odd_family_short(long m, long k) {
  if (m < 0 || k < 1) throw DomainError("odd_family_short: need m >= 0, k >= 1");
  if (m == 0) return {fibonacci(3 * k - 1), Int(2 * fibonacci(3 * k - 2))};
  return odd_family_convergent(m, 5 * k - 2);
}

IntPair odd_family_full(long m, long k) {
  if (m < 0 || k < 1) throw DomainError("odd_family_full: need m >= 0, k >= 1");
  if (m == 0) return {fibonacci(3 * k + 1), Int(2 * fibonacci(3 * k))};
  return odd_family_convergent(m, 5 * k);
}

}  // namespace cfsurd
