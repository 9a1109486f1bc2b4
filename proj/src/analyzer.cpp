#include "cfsurd/analyzer.hpp"

#include <numeric>

#include "cfsurd/parallel.hpp"

namespace cfsurd {

namespace {

bool two_squares_small(std::int64_t d) {
  // x only decreases as y grows, so one walk covers every y.
  std::int64_t x = isqrt(Int(static_cast<long>(d))).get_si();
  for (std::int64_t y = 0; y <= x; ++y) {
    const std::int64_t rest = d - y * y;
    while (x * x > rest) --x;
    if (x < y) break;
    if (x * x == rest && std::gcd(x, y) == 1) return true;
  }
  return false;
}

enum Claim : std::size_t {
  kPalindrome,
  kTerminal,
  kBound,
  kOddPeriod,
  kTwoSquaresOdd,
  kCentralBelow,
  kCentralA0Minus1,
  kCentralA0,
  kMod4Central,
  kClaimCount
};

const char* const kIds[kClaimCount] = {
    "palindrome",
    "terminal_2a0",
    "quotient_bound",
    "odd_period_implies_coprime_two_squares",
    "coprime_two_squares_implies_odd_period",
    "central_below_a0_minus_1_parity",
    "central_equals_a0_minus_1_parity",
    "central_equals_a0_implies_b_2_mod_4",
    "b_2_mod_4_implies_central_equals_a0",
};

// Classical theorems come first; everything from here on is an empirical
// statement whose counterexamples are findings.
constexpr std::size_t kFirstProposition = kTwoSquaresOdd;

struct Sample {
  bool square = false;
  std::size_t length = 0;
  bool unclassified = false;
  unsigned tested = 0;  // bit i: claim i applies
  unsigned failed = 0;  // bit i: claim i fails
  static_assert(kClaimCount <= 32);
  std::string detail[kClaimCount];
};

void fail(Sample& s, Claim c, std::string why) {
  s.failed |= 1u << c;
  s.detail[c] = std::move(why);
}

Sample examine(long dv) {
  Sample s;
  const Int d = dv;
  if (is_square(d)) {
    s.square = true;
    return s;
  }
  const PeriodicCF cf = expand_sqrt(d);
  const auto& p = cf.period;
  const std::size_t len = p.size();
  s.length = len;
  s.tested = (1u << kPalindrome) | (1u << kTerminal) | (1u << kBound) | (1u << kOddPeriod) | (1u << kTwoSquaresOdd);

  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (p[i] != p[len - 2 - i]) {
      fail(s, kPalindrome, "interior " + format_word({p.begin(), p.end() - 1}) + " is not symmetric");
      break;
    }
  }
  if (p.back() != 2 * cf.a0) fail(s, kTerminal, "last quotient " + p.back().get_str() + " != 2a0");
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (p[i] > cf.a0) {
      fail(s, kBound, "a_" + std::to_string(i + 1) + " = " + p[i].get_str() + " exceeds sqrt(d)");
      break;
    }
  }
  const bool odd = len % 2 == 1;
  const bool squares = sum_two_coprime_squares(d);
  if (odd && !squares) fail(s, kOddPeriod, "period length " + std::to_string(len) + " is odd");
  if (squares && !odd) fail(s, kTwoSquaresOdd, "period length " + std::to_string(len) + " is even");

  const Int& a = cf.a0;
  const Int b = d - a * a;
  const unsigned long b_mod4 = mpz_fdiv_ui(b.get_mpz_t(), 4);
  s.tested |= 1u << kMod4Central;
  if (odd) {
    if (b_mod4 == 2) fail(s, kMod4Central, "b = " + b.get_str() + ", odd length " + std::to_string(len));
    return s;
  }

  CentralClass cc;
  try {
    cc = central_class(cf);
  } catch (const ConsistencyError&) {
    s.unclassified = true;
    return s;
  }
  const bool a_odd = mpz_odd_p(a.get_mpz_t());
  const bool b_odd = mpz_odd_p(b.get_mpz_t());
  const bool center_odd = mpz_odd_p(cc.value.get_mpz_t());
  const std::string ab = "a = " + a.get_str() + ", b = " + b.get_str() + ", center = " + cc.value.get_str() +
                         ", length = " + std::to_string(len);
  if (b_mod4 == 2 && cc.relation != CentralRelation::EqualsA0) fail(s, kMod4Central, ab);
  switch (cc.relation) {
    case CentralRelation::LessThanA0Minus1:
      s.tested |= 1u << kCentralBelow;
      if (center_odd != (!a_odd && !b_odd) || !center_odd != (a_odd && b_odd)) fail(s, kCentralBelow, ab);
      break;
    case CentralRelation::EqualsA0Minus1:
      // Stated for period length > 4 only.
      if (len <= 4) break;
      s.tested |= 1u << kCentralA0Minus1;
      if (a_odd != (b_mod4 == 1) || !a_odd != (b_mod4 == 3)) fail(s, kCentralA0Minus1, ab);
      break;
    case CentralRelation::EqualsA0:
      s.tested |= 1u << kCentralA0;
      if (b_mod4 != 2) fail(s, kCentralA0, ab);
      break;
    case CentralRelation::NotApplicable:
      s.unclassified = true;
      break;
  }
  return s;
}

}  // namespace

bool sum_two_coprime_squares(const Int& d) {
  if (d < 1) throw DomainError("sum_two_coprime_squares: d must be >= 1");
  if (d < Int(1L << 40)) return two_squares_small(d.get_si());
  for (Int y = 0; 2 * y * y <= d; ++y) {
    const Int rest = d - y * y;
    const Int x = isqrt(rest);
    if (x * x == rest && gcd(x, y) == 1) return true;
  }
  return false;
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::Counterexamples: return "counterexamples";
    case ClaimStatus::Reported: return "reported";
  }
  return "";
}

ClaimStatus ClaimResult::status() const {
  if (kind == ClaimKind::Proposition) return ClaimStatus::Reported;
  return counterexamples.empty() ? ClaimStatus::Holds : ClaimStatus::Counterexamples;
}

std::vector<std::string> claim_ids() { return {std::begin(kIds), std::end(kIds)}; }

StructReport check_claims(long d_min, long d_max, unsigned jobs) {
  if (d_min < 1 || d_min > d_max) throw DomainError("check_claims: need 1 <= d_min <= d_max");
  const std::size_t count = static_cast<std::size_t>(d_max - d_min) + 1;
  std::vector<Sample> samples(count);
  parallel_for(count, jobs, [&](std::size_t i) { samples[i] = examine(d_min + static_cast<long>(i)); });

  StructReport r;
  r.d_min = d_min;
  r.d_max = d_max;
  for (std::size_t c = 0; c < kClaimCount; ++c) {
    ClaimResult cr;
    cr.id = kIds[c];
    cr.kind = c >= kFirstProposition ? ClaimKind::Proposition : ClaimKind::Theorem;
    r.claims.push_back(std::move(cr));
  }
  for (std::size_t i = 0; i < count; ++i) {
    Sample& s = samples[i];
    const Int d = d_min + static_cast<long>(i);
    if (s.square) {
      ++r.skipped;
      continue;
    }
    ++r.tested;
    ++r.histogram[s.length];
    if (s.unclassified) r.unclassified.push_back(d);
    for (std::size_t c = 0; c < kClaimCount; ++c) {
      if (s.tested & (1u << c)) ++r.claims[c].tested;
      if (s.failed & (1u << c)) r.claims[c].counterexamples.push_back({d, std::move(s.detail[c])});
    }
  }
  return r;
}

Histogram period_stats(long d_min, long d_max, unsigned jobs) {
  Histogram h;
  if (d_min > d_max) return h;
  if (d_min < 1) throw DomainError("period_stats: d_min must be >= 1");
  const std::size_t count = static_cast<std::size_t>(d_max - d_min) + 1;
  std::vector<std::size_t> lengths(count, 0);
  parallel_for(count, jobs, [&](std::size_t i) {
    const Int d = d_min + static_cast<long>(i);
    if (!is_square(d)) lengths[i] = period_length(d);
  });
  for (std::size_t len : lengths) {
    if (len > 0) ++h[len];
  }
  return h;
}

}  // namespace cfsurd
