#pragma once

// Chebyshev polynomials of the second kind U_n and the all-positive variant
// U'_n (U'_(n+1) = 2x U'_n + U'_(n-1)), stored against powers of (2x) so that
// every coefficient is an integer.

#include <string>
#include <vector>

#include "cfsurd/arith.hpp"
#include "cfsurd/mat2.hpp"

namespace cfsurd {

/// coeffs[i] multiplies (2x)^i.
struct Poly {
  std::vector<Int> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  friend bool operator==(const Poly&, const Poly&) = default;
};

/// e.g. "(2x)^5 - 4(2x)^3 + 3(2x)".
std::string to_string(const Poly& p);

Poly cheb_u(long n);
Poly cheb_u_prime(long n);

Rat eval_poly(const Poly& p, const Rat& x);

/// ((x + sqrt(1+x^2))^(n+1) - (x - sqrt(1+x^2))^(n+1)) / (2 sqrt(1+x^2)),
/// evaluated in Z[sqrt(num^2 + den^2)] without rounding.
Rat cousin_closed_form(long n, const Rat& x);

/// M^n via U_(n-1), U_(n-2) at trace(M)/2. Requires det M = +1 and n >= 1.
Mat2 cheb_mat_pow(const Mat2& m, long n);

/// [[2m+1, 1], [1, 0]]^n = [[U'_n, U'_(n-1)], [U'_(n-1), U'_(n-2)]] at x = (2m+1)/2.
Mat2 cousin_mat_pow(long m, long n);

}  // namespace cfsurd
