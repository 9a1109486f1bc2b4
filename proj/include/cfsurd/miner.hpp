#pragma once

// Recovers one-parameter families sqrt(a^2 + b) = [a; w, 2a] for a fixed
// palindromic word w by solving the integrality condition of rippon_b as a
// linear congruence in a.

#include <optional>
#include <vector>

#include "cfsurd/arith.hpp"

namespace cfsurd {

/// a = a_modulus * c + a_residue, b = b_slope * c + b_intercept for c >= min_c.
struct MinedFamily {
  std::vector<Int> palindrome;
  Int a_residue;
  Int a_modulus;
  Int b_slope;
  Int b_intercept;
  Int min_c;
  long verified_instances = 0;

  Int a_at(const Int& c) const { return a_modulus * c + a_residue; }
  Int b_at(const Int& c) const { return b_slope * c + b_intercept; }
  Int d_at(const Int& c) const;
};

inline constexpr long kMinerCheckedInstances = 5;

/// Throws DomainError when the word is not a palindrome or has an entry < 1.
/// Returns nullopt when no a makes b integral, when no admissible c exists,
/// or when any of the first kMinerCheckedInstances instances fails to expand
/// as [a; w, 2a].
std::optional<MinedFamily> mine(const std::vector<Int>& palindrome);

/// Checks instances c = min_c, ..., min_c + count - 1 against expand_sqrt.
/// Returns the number that match before the first mismatch.
long verify_mined(const MinedFamily& f, long count);

/// Every palindrome of length 0..max_len with entries in [1, max_entry],
/// ordered by length, then lexicographically.
std::vector<std::vector<Int>> palindromes(long max_len, long max_entry);

/// mine() over palindromes(max_len, max_entry), keeping the successes in
/// enumeration order. The cost is O(max_entry^ceil(max_len / 2)) mine calls.
std::vector<MinedFamily> mine_sweep(long max_len, long max_entry, unsigned jobs = 1);

}  // namespace cfsurd
