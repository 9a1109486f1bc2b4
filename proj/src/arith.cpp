#include "cfsurd/arith.hpp"

#include <limits>

namespace cfsurd {

Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw DomainError("isqrt: negative argument " + n.get_str());
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) {
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int floor_div(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw DomainError("floor_div: division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int pow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

Int parse_int(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw DomainError("empty integer literal");
  std::size_t start = s.front() == '-' ? 1 : 0;
  if (start == s.size()) throw DomainError("malformed integer: " + text);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("malformed integer: " + text);
  }
  return Int(s, 10);
}

bool fits_i64(const Int& v) {
  static const Int lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Int hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v >= lo && v <= hi;
}

std::int64_t to_i64(const Int& v) {
  if (!fits_i64(v)) throw DomainError("integer does not fit in 64 bits: " + v.get_str());
  return std::stoll(v.get_str());
}

// ---- Rat -------------------------------------------------------------------

Rat::Rat(const Int& num, const Int& den) : num_(num), den_(den) {
  if (sgn(den_) == 0) throw DomainError("Rat: zero denominator");
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(Int(a.num_ * b.den_ + b.num_ * a.den_), Int(a.den_ * b.den_));
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat(Int(a.num_ * b.den_ - b.num_ * a.den_), Int(a.den_ * b.den_));
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat(Int(a.num_ * b.num_), Int(a.den_ * b.den_));
}

Rat operator/(const Rat& a, const Rat& b) {
  if (sgn(b.num_) == 0) throw DomainError("Rat: division by zero");
  return Rat(Int(a.num_ * b.den_), Int(a.den_ * b.num_));
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  int c = cmp(Int(a.num_ * b.den_), Int(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << to_string(r); }

std::string to_string(const Rat& r) {
  if (r.is_integer()) return r.num().get_str();
  return r.num().get_str() + "/" + r.den().get_str();
}

// ---- congruences -----------------------------------------------------------

CongruenceSolution solve_linear_congruence(const Int& c1, const Int& c0, const Int& modulus) {
  if (sgn(modulus) <= 0) {
    throw DomainError("solve_linear_congruence: modulus must be positive, got " + modulus.get_str());
  }
  // c1*x = -c0 (mod modulus); g*x0 = s*c1 + t*modulus.
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c1.get_mpz_t(), modulus.get_mpz_t());
  Int rhs = -c0;
  CongruenceSolution out;
  if (sgn(g) == 0) {
    // c1 == 0 and modulus == 0 cannot happen (modulus > 0).
    return out;
  }
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), rhs.get_mpz_t(), g.get_mpz_t());
  if (sgn(r) != 0) {
    out.modulus = modulus;
    return out;
  }
  Int reduced = modulus / g;
  Int x = s * (rhs / g);
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), reduced.get_mpz_t());
  out.solvable = true;
  out.residue = x;
  out.modulus = reduced;
  return out;
}

}  // namespace cfsurd
