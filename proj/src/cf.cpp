#include "cfsurd/cf.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace cfsurd {

namespace {

void require_nonsquare_positive(const Int& d, const char* who) {
  if (sgn(d) <= 0) throw DomainError(std::string(who) + ": d must be positive, got " + d.get_str());
  if (is_square(d)) throw DomainError(std::string(who) + ": d is a perfect square: " + d.get_str());
}

// Values below this bound keep every P, Q, a and P^2 inside int64.
const Int& fast_path_bound() {
  static const Int bound = pow(Int(2), 60);
  return bound;
}

PeriodicCF expand_sqrt_i64(std::int64_t d, std::int64_t a0) {
  PeriodicCF cf;
  cf.a0 = a0;
  cf.d = d;
  std::int64_t P = 0, Q = 1;
  std::int64_t a = a0;
  do {
    P = a * Q - P;
    Q = (d - P * P) / Q;
    a = (a0 + P) / Q;
    cf.period.emplace_back(static_cast<long>(a));
  } while (Q != 1);
  return cf;
}

}  // namespace

std::string format_word(const std::vector<Int>& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ',';
    os << word[i];
  }
  return os.str();
}

std::string to_string(const PeriodicCF& cf) {
  return "[" + cf.a0.get_str() + "; " + format_word(cf.period) + "]";
}

const char* to_string(CentralRelation r) {
  switch (r) {
    case CentralRelation::NotApplicable: return "none";
    case CentralRelation::LessThanA0Minus1: return "less_than_a0_minus_1";
    case CentralRelation::EqualsA0Minus1: return "equals_a0_minus_1";
    case CentralRelation::EqualsA0: return "equals_a0";
  }
  return "none";
}

PeriodicCF expand_sqrt(const Int& d) {
  require_nonsquare_positive(d, "expand_sqrt");
  const Int a0 = isqrt(d);
  if (d < fast_path_bound()) return expand_sqrt_i64(to_i64(d), to_i64(a0));

  PeriodicCF cf;
  cf.a0 = a0;
  cf.d = d;
  Int P = 0, Q = 1, a = a0;
  do {
    P = a * Q - P;
    Q = (d - P * P) / Q;
    a = (a0 + P) / Q;
    cf.period.push_back(a);
  } while (Q != 1);
  return cf;
}

std::vector<SurdStep> sqrt_expansion_steps(const Int& d) {
  require_nonsquare_positive(d, "sqrt_expansion_steps");
  const Int a0 = isqrt(d);
  std::vector<SurdStep> steps;
  Int P = 0, Q = 1;
  for (;;) {
    Int a = floor_div(a0 + P, Q);
    steps.push_back({P, Q, a});
    if (steps.size() > 1 && Q == 1) break;
    Int next_P = a * Q - P;
    Int next_Q = (d - next_P * next_P) / Q;
    P = std::move(next_P);
    Q = std::move(next_Q);
  }
  return steps;
}

SurdExpansion expand_surd(const SurdState& s, std::int64_t max_steps) {
  if (sgn(s.Q) == 0) throw DomainError("expand_surd: Q must be nonzero");
  if (sgn(s.d) <= 0 || is_square(s.d)) {
    throw DomainError("expand_surd: d must be a positive non-square, got " + s.d.get_str());
  }
  Int P = s.P, Q = s.Q, d = s.d;
  if (!mpz_divisible_p(Int(d - P * P).get_mpz_t(), Q.get_mpz_t())) {
    Int absQ = abs(Q);
    P *= absQ;
    d *= Q * Q;
    Q *= absQ;
  }
  const Int r = isqrt(d);

  std::map<std::pair<Int, Int>, std::size_t> seen;
  std::vector<Int> terms;
  for (std::int64_t step = 0; step < max_steps; ++step) {
    auto [it, inserted] = seen.emplace(std::make_pair(P, Q), terms.size());
    if (!inserted) {
      SurdExpansion out;
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      out.preperiod.assign(terms.begin(), terms.begin() + start);
      out.period.assign(terms.begin() + start, terms.end());
      return out;
    }
    // floor((P + sqrt d)/Q) for irrational sqrt d.
    Int a = floor_div(sgn(Q) > 0 ? Int(P + r) : Int(P + r + 1), Q);
    Int next_P = a * Q - P;
    Int next_Q = (d - next_P * next_P) / Q;
    terms.push_back(std::move(a));
    P = std::move(next_P);
    Q = std::move(next_Q);
  }
  throw ResourceError("expand_surd: no period found within " + std::to_string(max_steps) + " steps");
}

std::size_t period_length(const Int& d) { return expand_sqrt(d).length(); }

CentralClass central_class(const PeriodicCF& cf) {
  CentralClass out;
  const std::size_t len = cf.period.size();
  if (len % 2 == 1) return out;
  out.has_center = true;
  out.value = cf.period[len / 2 - 1];
  if (out.value == cf.a0) {
    out.relation = CentralRelation::EqualsA0;
  } else if (out.value == cf.a0 - 1) {
    out.relation = CentralRelation::EqualsA0Minus1;
  } else if (out.value < cf.a0 - 1) {
    out.relation = CentralRelation::LessThanA0Minus1;
  } else {
    throw ConsistencyError("central term exceeds a0 for d = " + cf.d.get_str());
  }
  return out;
}

CentralClass central_class(const Int& d) { return central_class(expand_sqrt(d)); }

}  // namespace cfsurd
