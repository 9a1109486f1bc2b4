#include "cfsurd/chebyshev.hpp"

#include <sstream>

#include "cfsurd/sequences.hpp"

namespace cfsurd {

namespace {

// P_(n+1) = t P_n + sign P_(n-1) in t = 2x, P_0 = 1, P_1 = t.
Poly three_term(long n, int sign) {
  if (n < 0) throw DomainError("Chebyshev index must be >= 0");
  std::vector<Int> prev{1};
  if (n == 0) return {prev};
  std::vector<Int> cur{0, 1};
  for (long k = 1; k < n; ++k) {
    std::vector<Int> next(cur.size() + 1, Int(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] += sign * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur};
}

Int require_integer(const Rat& r, const char* what) {
  if (!r.is_integer()) throw ConsistencyError(std::string("cheb_mat_pow: non-integer ") + what);
  return r.num();
}

}  // namespace

std::string to_string(const Poly& p) {
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeffs[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "(2x)";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Poly cheb_u(long n) { return three_term(n, -1); }

Poly cheb_u_prime(long n) { return three_term(n, +1); }

Rat eval_poly(const Poly& p, const Rat& x) {
  const Rat t = Rat(2) * x;
  Rat acc;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * t + Rat(*it);
  return acc;
}

Rat cousin_closed_form(long n, const Rat& x) {
  if (n < 0) throw DomainError("cousin_closed_form: n must be >= 0");
  // x = r/s, sqrt(1 + x^2) = sqrt(r^2 + s^2) / s.
  const Int& r = x.num();
  const Int& s = x.den();
  const Int D = r * r + s * s;
  const QuadRingElem plus{r, 1, D, s};
  const QuadRingElem e = pow(plus, static_cast<unsigned long>(n) + 1);
  const QuadRingElem diff = e - e.conj();
  if (sgn(diff.s) != 0) throw ConsistencyError("cousin_closed_form: rational part did not cancel");
  // diff = t sqrt(D) / den; divide by 2 sqrt(D) / s.
  return Rat(Int(diff.t * s), Int(2 * diff.den));
}

Mat2 cheb_mat_pow(const Mat2& m, long n) {
  if (m.det() != 1) throw DomainError("cheb_mat_pow: determinant must be +1, got " + m.det().get_str());
  if (n < 1) throw DomainError("cheb_mat_pow: n must be >= 1");
  const Rat a(m.trace(), 2);
  const Rat u1 = eval_poly(cheb_u(n - 1), a);
  const Rat u2 = n >= 2 ? eval_poly(cheb_u(n - 2), a) : Rat(0);
  return {require_integer(Rat(m.m11) * u1 - u2, "m11"), require_integer(Rat(m.m12) * u1, "m12"),
          require_integer(Rat(m.m21) * u1, "m21"), require_integer(Rat(m.m22) * u1 - u2, "m22")};
}

Mat2 cousin_mat_pow(long m, long n) {
  if (m < 0) throw DomainError("cousin_mat_pow: m must be >= 0");
  if (n < 1) throw DomainError("cousin_mat_pow: n must be >= 1");
  const Rat x(Int(2 * m + 1), 2);
  auto at = [&](long j) -> Int {
    if (j < 0) return 0;
    Rat v = eval_poly(cheb_u_prime(j), x);
    if (!v.is_integer()) throw ConsistencyError("cousin_mat_pow: non-integer value");
    return v.num();
  };
  Int un = at(n), un1 = at(n - 1), un2 = at(n - 2);
  return {un, un1, un1, un2};
}

}  // namespace cfsurd
