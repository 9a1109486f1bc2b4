#pragma once

#include <vector>

#include "cfsurd/arith.hpp"
#include "cfsurd/mat2.hpp"

namespace cfsurd {

/// p/q = [a_0; a_1, ..., a_index].
struct Convergent {
  Int p;
  Int q;
  long index = 0;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Convergents c_0 .. c_(n-1) of word = (a_0, ..., a_(n-1)), seeded with
/// p_(-2) = 0, p_(-1) = 1, q_(-2) = 1, q_(-1) = 0. Requires a nonempty word,
/// a_0 >= 0 and a_k >= 1 for k >= 1.
std::vector<Convergent> convergents_of_word(const std::vector<Int>& word);

/// Product of [[a_k, 1], [1, 0]] over the word: [[p_n, p_(n-1)], [q_n, q_(n-1)]].
Mat2 word_matrix(const std::vector<Int>& word);

/// Exact value of [a0; overline(period)].
struct QuadSolution {
  // Primitive quadratic A2 y^2 + A1 y + A0 = 0 (A2 > 0) satisfied by the value y.
  Int A2;
  Int A1;
  Int A0;
  // y = (root_num_P + sqrt(d)) / root_den_Q, the larger root.
  Int d;
  Int root_num_P;
  Int root_den_Q;
  // The purely periodic tail x = [overline(period)] with y = a0 + 1/x,
  // x = (tail_P + sqrt(tail_d)) / tail_Q.
  Int tail_P;
  Int tail_Q;
  Int tail_d;
};

/// Solves for the quadratic surd whose continued fraction is
/// [a0; period, period, ...]. Throws DomainError if the period is empty or
/// holds a nonpositive quotient, or if the value turns out rational.
QuadSolution surd_from_periodic_cf(const Int& a0, const std::vector<Int>& period);

/// b = (2 a0 B + C) / A where [[A, B], [B, C]] is the matrix of the
/// palindromic word (identity for the empty word). An integral result b is
/// exactly the condition that sqrt(a0^2 + b) = [a0; overline(palindrome, 2 a0)].
/// Throws DomainError when the word is not a palindrome.
Rat rippon_b(const std::vector<Int>& palindrome, const Int& a0);

bool is_palindrome(const std::vector<Int>& word);

}  // namespace cfsurd
