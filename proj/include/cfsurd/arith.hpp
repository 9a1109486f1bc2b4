#pragma once

// Exact arithmetic foundation: unbounded integers, integer square roots,
// exact rationals and linear congruences. Nothing in the library uses
// floating point.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cfsurd {

using Int = mpz_class;

/// Raised when an operation receives input outside its mathematical domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when an iteration budget is exhausted before an answer is found.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal identity that must hold exactly does not.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Largest r with r*r <= n. Throws DomainError for n < 0.
Int isqrt(const Int& n);

bool is_square(const Int& n);

/// Floor division toward negative infinity; den != 0.
Int floor_div(const Int& num, const Int& den);

Int gcd(const Int& a, const Int& b);

/// Integer power with a small nonnegative exponent.
Int pow(const Int& base, unsigned long exponent);

std::string to_string(const Int& v);

/// Parses a base-10 integer; throws DomainError on malformed text.
Int parse_int(const std::string& text);

/// True when v fits in a signed 64-bit integer.
bool fits_i64(const Int& v);
std::int64_t to_i64(const Int& v);

/// Exact rational number, always stored in lowest terms with den > 0.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(const Int& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(long n) : num_(n), den_(1) {}        // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(Int(-num_), den_); }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  Int num_;
  Int den_;
};

std::string to_string(const Rat& r);

struct CongruenceSolution {
  bool solvable = false;
  Int residue;   // 0 <= residue < modulus when solvable
  Int modulus;   // > 0
};

/// Solves c1*x + c0 = 0 (mod modulus). When solvable the answer is the
/// residue class x = residue (mod modulus / gcd(c1, modulus)).
CongruenceSolution solve_linear_congruence(const Int& c1, const Int& c0, const Int& modulus);

}  // namespace cfsurd
