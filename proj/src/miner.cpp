#include "cfsurd/miner.hpp"

#include <algorithm>

#include "cfsurd/cf.hpp"
#include "cfsurd/convergents.hpp"
#include "cfsurd/parallel.hpp"

namespace cfsurd {

Int MinedFamily::d_at(const Int& c) const {
  Int a = a_at(c);
  return a * a + b_at(c);
}

namespace {

bool instance_ok(const MinedFamily& f, const Int& c) {
  const Int a = f.a_at(c);
  const PeriodicCF cf = expand_sqrt(f.d_at(c));
  if (cf.a0 != a || cf.period.size() != f.palindrome.size() + 1) return false;
  if (!std::equal(f.palindrome.begin(), f.palindrome.end(), cf.period.begin())) return false;
  return cf.period.back() == 2 * a;
}

// Admissible c: a above every word entry and 1 <= b <= 2a, so that a is the
// integer part of sqrt(a^2 + b).
bool admissible(const MinedFamily& f, const Int& c, const Int& max_entry) {
  const Int a = f.a_at(c);
  const Int b = f.b_at(c);
  return a >= 1 && a > max_entry && b >= 1 && b <= 2 * a;
}

}  // namespace

std::optional<MinedFamily> mine(const std::vector<Int>& palindrome) {
  if (!is_palindrome(palindrome)) throw DomainError("mine: " + format_word(palindrome) + " is not a palindrome");
  for (const Int& q : palindrome) {
    if (q < 1) throw DomainError("mine: word entries must be >= 1");
  }

  Int A = 1, B = 0, C = 1;
  if (!palindrome.empty()) {
    const Mat2 m = word_matrix(palindrome);
    A = m.m11;
    B = m.m12;
    C = m.m22;
  }
  const CongruenceSolution sol = solve_linear_congruence(Int(2 * B), C, A);
  if (!sol.solvable) return std::nullopt;

  MinedFamily f;
  f.palindrome = palindrome;
  f.a_modulus = A / gcd(Int(2 * B), A);
  f.a_residue = sol.residue;
  f.b_slope = 2 * B * f.a_modulus / A;
  f.b_intercept = (2 * B * f.a_residue + C) / A;

  const Int max_entry = palindrome.empty() ? Int(0) : *std::max_element(palindrome.begin(), palindrome.end());
  // b grows no faster than 2a in c, so once a passes the entry bound the
  // first admissible c is found within a few steps or never.
  Int c = 0;
  if (f.a_at(c) <= max_entry) c = (max_entry - f.a_residue) / f.a_modulus + 1;
  bool found = false;
  for (int tries = 0; tries < 64; ++tries, ++c) {
    if (admissible(f, c, max_entry)) {
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;
  f.min_c = c;
  for (long i = 0; i < kMinerCheckedInstances; ++i) {
    if (!admissible(f, f.min_c + i, max_entry) || !instance_ok(f, f.min_c + i)) return std::nullopt;
  }
  f.verified_instances = kMinerCheckedInstances;
  return f;
}

long verify_mined(const MinedFamily& f, long count) {
  const Int max_entry =
      f.palindrome.empty() ? Int(0) : *std::max_element(f.palindrome.begin(), f.palindrome.end());
  for (long i = 0; i < count; ++i) {
    const Int c = f.min_c + i;
    if (!admissible(f, c, max_entry) || !instance_ok(f, c)) return i;
  }
  return count;
}

std::vector<std::vector<Int>> palindromes(long max_len, long max_entry) {
  std::vector<std::vector<Int>> out;
  for (long len = 0; len <= max_len; ++len) {
    if (len > 0 && max_entry < 1) break;
    const long half = (len + 1) / 2;
    std::vector<long> digits(static_cast<std::size_t>(half), 1);
    for (;;) {
      std::vector<Int> word(static_cast<std::size_t>(len));
      for (long i = 0; i < half; ++i) {
        word[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i)];
        word[static_cast<std::size_t>(len - 1 - i)] = digits[static_cast<std::size_t>(i)];
      }
      out.push_back(std::move(word));
      long i = half - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == max_entry) --i;
      if (i < 0) break;
      ++digits[static_cast<std::size_t>(i)];
      for (long j = i + 1; j < half; ++j) digits[static_cast<std::size_t>(j)] = 1;
    }
  }
  return out;
}

std::vector<MinedFamily> mine_sweep(long max_len, long max_entry, unsigned jobs) {
  if (max_len < 0 || max_entry < 0) throw DomainError("mine_sweep: bounds must be nonnegative");
  const auto words = palindromes(max_len, max_entry);
  std::vector<std::optional<MinedFamily>> slots(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) { slots[i] = mine(words[i]); });
  std::vector<MinedFamily> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace cfsurd
