#include "cfsurd/convergents.hpp"

#include <algorithm>

namespace cfsurd {

namespace {

void check_word(const std::vector<Int>& word, const char* who) {
  if (word.empty()) throw DomainError(std::string(who) + ": empty word");
  if (sgn(word[0]) < 0) throw DomainError(std::string(who) + ": a_0 must be >= 0");
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (sgn(word[i]) <= 0) {
      throw DomainError(std::string(who) + ": partial quotient " + std::to_string(i) + " is not positive");
    }
  }
}

// The primitive quadratic with positive leading coefficient.
void make_primitive(Int& a2, Int& a1, Int& a0) {
  if (sgn(a2) < 0) {
    a2 = -a2;
    a1 = -a1;
    a0 = -a0;
  }
  Int g = gcd(gcd(a2, a1), a0);
  if (g > 1) {
    a2 /= g;
    a1 /= g;
    a0 /= g;
  }
}

// Larger root of a2 y^2 + a1 y + a0 = 0 (a2 > 0) as (P + sqrt(d)) / Q.
void larger_root(const Int& a2, const Int& a1, const Int& a0, Int& P, Int& d, Int& Q) {
  Int disc = a1 * a1 - 4 * a2 * a0;
  if (sgn(disc) < 0) throw DomainError("surd_from_periodic_cf: negative discriminant");
  if (is_square(disc)) throw DomainError("surd_from_periodic_cf: rational value, not a surd");
  if (mpz_even_p(a1.get_mpz_t())) {
    P = -a1 / 2;
    d = disc / 4;
    Q = a2;
  } else {
    P = -a1;
    d = disc;
    Q = 2 * a2;
  }
}

}  // namespace

bool is_palindrome(const std::vector<Int>& word) {
  return std::equal(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(word.size() / 2), word.rbegin());
}

std::vector<Convergent> convergents_of_word(const std::vector<Int>& word) {
  check_word(word, "convergents_of_word");
  std::vector<Convergent> out;
  out.reserve(word.size());
  Int p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    Int p = word[k] * p1 + p2;
    Int q = word[k] * q1 + q2;
    p2 = std::move(p1);
    q2 = std::move(q1);
    p1 = p;
    q1 = q;
    out.push_back({std::move(p), std::move(q), static_cast<long>(k)});
  }
  return out;
}

Mat2 word_matrix(const std::vector<Int>& word) {
  if (word.empty()) throw DomainError("word_matrix: empty word");
  Mat2 m = Mat2::identity();
  for (const Int& a : word) m *= Mat2(a, 1, 1, 0);
  return m;
}

QuadSolution surd_from_periodic_cf(const Int& a0, const std::vector<Int>& period) {
  if (period.empty()) throw DomainError("surd_from_periodic_cf: empty period");
  for (const Int& a : period) {
    if (sgn(a) <= 0) throw DomainError("surd_from_periodic_cf: period quotients must be positive");
  }
  // x = (x p + p') / (x q + q')  =>  q x^2 + (q' - p) x - p' = 0
  const Mat2 m = word_matrix(period);
  const Int& p = m.m11;
  const Int& pp = m.m12;
  const Int& q = m.m21;
  const Int& qq = m.m22;

  QuadSolution out;
  {
    Int t2 = q, t1 = qq - p, t0 = -pp;
    make_primitive(t2, t1, t0);
    larger_root(t2, t1, t0, out.tail_P, out.tail_d, out.tail_Q);
  }
  // Substituting x = 1 / (y - a0):
  //   -p' y^2 + (2 a0 p' + q' - p) y + (q - (q' - p) a0 - p' a0^2) = 0
  Int c2 = -pp;
  Int c1 = 2 * a0 * pp + qq - p;
  Int c0 = q - (qq - p) * a0 - pp * a0 * a0;
  make_primitive(c2, c1, c0);
  out.A2 = c2;
  out.A1 = c1;
  out.A0 = c0;
  larger_root(c2, c1, c0, out.root_num_P, out.d, out.root_den_Q);
  return out;
}

Rat rippon_b(const std::vector<Int>& palindrome, const Int& a0) {
  if (!is_palindrome(palindrome)) throw DomainError("rippon_b: word is not a palindrome");
  for (const Int& a : palindrome) {
    if (sgn(a) <= 0) throw DomainError("rippon_b: quotients must be positive");
  }
  const Mat2 m = palindrome.empty() ? Mat2::identity() : word_matrix(palindrome);
  if (!m.symmetric()) throw ConsistencyError("rippon_b: palindrome matrix is not symmetric");
  return Rat(Int(2 * a0 * m.m12 + m.m22), m.m11);
}

}  // namespace cfsurd
