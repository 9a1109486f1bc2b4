#pragma once

// Second-order linear recurrences u_(n+1) = a u_n + b u_(n-1), their closed
// forms evaluated exactly in Z[sqrt(D)], and the named convergent sequences
// that feed the formula families.

#include <utility>

#include "cfsurd/arith.hpp"

namespace cfsurd {

struct LinRecSpec {
  Int a;
  Int b;
  Int u0;
  Int u1;
};

LinRecSpec fibonacci_recurrence();
/// u_(n+1) = (2m+1) u_n + u_(n-1), u_0 = 0, u_1 = 1.
LinRecSpec odd_quotient_recurrence(long m);

/// Element (s + t sqrt(D)) / den of the quadratic ring over Z, with den > 0.
/// D is shared by both operands of every binary operation.
struct QuadRingElem {
  Int s;
  Int t;
  Int D;
  Int den{1};

  static QuadRingElem integer(const Int& v, const Int& D) { return {v, 0, D, 1}; }

  QuadRingElem conj() const { return {s, Int(-t), D, den}; }
  friend QuadRingElem operator+(const QuadRingElem& x, const QuadRingElem& y);
  friend QuadRingElem operator-(const QuadRingElem& x, const QuadRingElem& y);
  friend QuadRingElem operator*(const QuadRingElem& x, const QuadRingElem& y);
  friend bool operator==(const QuadRingElem&, const QuadRingElem&) = default;

  /// Removes common factors of (s, t, den).
  QuadRingElem normalized() const;
};

QuadRingElem pow(const QuadRingElem& x, unsigned long n);

/// u_n by iteration (matrix powers for large n).
Int linrec_nth(const LinRecSpec& spec, long n);

/// u_n = lambda alpha^n + mu beta^n evaluated exactly in Z[sqrt(a^2+4b)].
/// Throws DomainError when a^2 + 4b = 0.
Int binet_nth(const LinRecSpec& spec, long n);

struct IntPair {
  Int p;
  Int q;
  friend bool operator==(const IntPair&, const IntPair&) = default;
};

Int fibonacci(long n);

/// Numerator and denominator of the sqrt(2) convergents with
/// p_0 = 1, q_0 = 0, p_1 = q_1 = 1 (so index k gives 1/1, 3/2, 7/5, ... for k >= 1).
IntPair pell_pair(long k);

/// Convergent c_j of sqrt(3) = [1; 1, 2, 1, 2, ...] with c_0 = 1/1.
IntPair sqrt3_convergent(long j);

/// k-th entry of the sqrt(3) convergent list 2/1, 5/3, 7/4, 19/11, ...
/// (equal to sqrt3_convergent(k + 1)).
IntPair sqrt3_pair(long k);

/// (A_k, B_k) with A_(k+1) = 4 A_k - A_(k-1), B likewise; A_0 = 1, A_1 = 3,
/// B_0 = 0, B_1 = 1. Returned as {p = A_k, q = B_k}.
IntPair ab_pair(long k);

/// p_k = 8 p_(k-1) + p_(k-2), q likewise; p_(-1) = -1, p_0 = 1, q_(-1) = 4, q_0 = 0.
/// Defined for k >= -1.
IntPair triple113_pair(long k);

/// Convergent c_k of sqrt((2m)^2 + 4) = [2m; m, 4m, m, 4m, ...], c_0 = 2m/1.
IntPair interleaved_even_pair(long m, long k);

/// Denominator q_j of the convergents of sqrt(m^2 + 2) = [m; m, 2m, ...], q_0 = 1.
Int pair_m2m_denominator(long m, long j);

/// (2m+1) ((2m+1)^2 + 3): the step multiplier between the (P_k, Q_k)
/// pairs of the repeated-odd-quotient families.
Int odd_multiplier(long m);

/// (P_k, Q_k): value of the first 5k-2 terms of the periodic word
/// (m, 1, 1, m, 4m+2) read as [m; 1, 1, m, 4m+2, ...], i.e. the inverted
/// convergent c_(5k-2) of [0; m, 1, 1, m, 4m+2, ...]. For m = 0 the word has
/// interior zeros and the equivalent Fibonacci form (F_(3k-1), 2 F_(3k-2)) is used.
IntPair odd_family_short(long m, long k);

/// (P'_k, Q'_k): the same with the first 5k terms (m = 0 uses
/// (F_(3k+1), 2 F_(3k))).
IntPair odd_family_full(long m, long k);

}  // namespace cfsurd
