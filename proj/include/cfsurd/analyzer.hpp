#pragma once

// Sweeps a range of radicands and checks the structural facts about
// sqrt(d) expansions, plus the central-term parity propositions.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cfsurd/arith.hpp"
#include "cfsurd/cf.hpp"

namespace cfsurd {

/// True iff d = x^2 + y^2 with x >= y >= 0 and gcd(x, y) = 1. The only
/// representation with y = 0 is d = 1 = 1^2 + 0^2.
bool sum_two_coprime_squares(const Int& d);

enum class ClaimKind {
  Theorem,      // classical result: a counterexample indicates an engine bug
  Proposition,  // empirical statement: counterexamples are reported as findings
};

enum class ClaimStatus { Holds, Counterexamples, Reported };

const char* to_string(ClaimStatus s);

struct Counterexample {
  Int d;
  std::string detail;
};

struct ClaimResult {
  std::string id;
  ClaimKind kind = ClaimKind::Theorem;
  std::size_t tested = 0;
  std::vector<Counterexample> counterexamples;

  /// Theorems: Holds or Counterexamples. Propositions: always Reported.
  ClaimStatus status() const;
};

using Histogram = std::map<std::size_t, std::size_t>;

struct StructReport {
  long d_min = 0;
  long d_max = 0;
  std::size_t tested = 0;   // non-squares in range
  std::size_t skipped = 0;  // perfect squares in range
  std::vector<ClaimResult> claims;
  Histogram histogram;      // period length -> count
  std::vector<Int> unclassified;  // even period with no central class (expected empty)
};

/// Claim ids, in report order.
std::vector<std::string> claim_ids();

/// Requires 1 <= d_min <= d_max. Deterministic for any jobs value.
StructReport check_claims(long d_min, long d_max, unsigned jobs = 1);

/// Period-length distribution over the non-squares in [d_min, d_max]; an
/// empty range (d_min > d_max) gives an empty histogram.
Histogram period_stats(long d_min, long d_max, unsigned jobs = 1);

}  // namespace cfsurd
