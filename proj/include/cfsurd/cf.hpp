#pragma once

// Periodic continued fractions of quadratic surds (P + sqrt(d)) / Q.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cfsurd/arith.hpp"

namespace cfsurd {

/// Complete quotient (P + sqrt(d)) / Q. Q divides d - P^2.
struct SurdState {
  Int P;
  Int Q;
  Int d;
};

/// sqrt(d) = [a0; period...], period ends with 2*a0.
struct PeriodicCF {
  Int a0;
  std::vector<Int> period;
  Int d;

  std::size_t length() const { return period.size(); }
  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;
};

/// "[a0; p1,p2,...]".
std::string to_string(const PeriodicCF& cf);
std::string format_word(const std::vector<Int>& word);

enum class CentralRelation { NotApplicable, LessThanA0Minus1, EqualsA0Minus1, EqualsA0 };

struct CentralClass {
  bool has_center = false;  // false when the period length is odd
  Int value;
  CentralRelation relation = CentralRelation::NotApplicable;
};

const char* to_string(CentralRelation r);

/// One step of the sqrt(d) expansion: the complete quotient (P + sqrt d)/Q
/// and the partial quotient a taken from it.
struct SurdStep {
  Int P;
  Int Q;
  Int a;
};

/// Expansion of sqrt(d), d > 0 non-square. Throws DomainError otherwise.
PeriodicCF expand_sqrt(const Int& d);

/// Complete quotients of one full period of sqrt(d): steps[0] is (0, 1, a0)
/// and steps[l] is the first return to Q = 1.
std::vector<SurdStep> sqrt_expansion_steps(const Int& d);

struct SurdExpansion {
  std::vector<Int> preperiod;
  std::vector<Int> period;
};

inline constexpr std::int64_t kDefaultMaxSteps = 1'000'000;

/// Expansion of (P + sqrt d)/Q with period detection by first repetition of
/// the complete quotient. Inputs with Q not dividing d - P^2 are rescaled by
/// |Q| first. Throws ResourceError when max_steps states are visited without
/// a repetition.
SurdExpansion expand_surd(const SurdState& s, std::int64_t max_steps = kDefaultMaxSteps);

std::size_t period_length(const Int& d);

CentralClass central_class(const Int& d);
CentralClass central_class(const PeriodicCF& cf);

}  // namespace cfsurd
