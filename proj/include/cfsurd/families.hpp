#pragma once

// Registry of parameterized identities sqrt(a^2 + b) = [a0; pattern] and a
// verifier that checks each instance against the expansion engine.

#include <optional>
#include <string>
#include <vector>

#include "cfsurd/arith.hpp"
#include "cfsurd/cf.hpp"
#include "cfsurd/expr.hpp"

namespace cfsurd {

struct ParamSpec {
  std::string name;
  long min = 0;
  std::optional<long> max;  // nullopt: unbounded
};

enum class FamilyStatus { Verified, Erratum };

const char* to_string(FamilyStatus s);

struct FamilyDescriptor {
  std::string id;
  std::string citation;
  std::vector<ParamSpec> params;
  Expr a_expr;     // base of the square in the radicand
  Expr b_expr;     // remainder: d = a^2 + b
  Expr head_expr;  // printed integer part; same as a_expr unless the record says otherwise
  Pattern pattern; // full period, last entry normally 2 * head
  FamilyStatus declared = FamilyStatus::Verified;
  std::string corrects;      // id of the printed record this one corrects
  std::string corrected_by;  // id of the corrected record (erratum records)
  std::vector<std::pair<std::string, long>> budget_caps;  // per-parameter verification caps
  std::string note;
};

/// Raised by instantiate() when parameters are admissible by range but the
/// evaluated identity is not a valid expansion (nonpositive quotient, head or
/// remainder, perfect-square radicand, or an inexact division).
class InvalidAssignment : public DomainError {
public:
  using DomainError::DomainError;
};

struct Instance {
  Int d;
  PeriodicCF expected;
};

Instance instantiate(const FamilyDescriptor& f, const Bindings& assignment);

/// Loads the line-delimited JSON registry. Blank lines and lines starting
/// with '#' are skipped. Throws DomainError with the line number on bad records.
std::vector<FamilyDescriptor> load_registry(const std::string& path);

/// $CFSURD_REGISTRY when set, otherwise the registry shipped with the sources.
std::string default_registry_path();

/// load_registry(default_registry_path()).
std::vector<FamilyDescriptor> registry();

const FamilyDescriptor* find_family(const std::vector<FamilyDescriptor>& reg, const std::string& id);

struct VerifyBudget {
  long n_count = 101;          // n ranges over [n_min, n_min + n_count - 1]
  std::optional<long> n_max;   // when set, n ranges over [n_min, n_max] instead
  long m_max = 5;
  long k_max = 6;
  unsigned jobs = 1;
};

struct VerifyFailure {
  Bindings params;
  std::optional<PeriodicCF> expected;
  std::optional<PeriodicCF> actual;
  std::string reason;
};

struct VerifyReport {
  std::string id;
  FamilyStatus declared = FamilyStatus::Verified;
  std::size_t tested = 0;
  std::size_t reduced = 0;  // instances whose printed period is a repeated shorter word
  std::vector<VerifyFailure> failures;
  FamilyStatus status = FamilyStatus::Verified;

  /// True when the observed status matches the registry's declaration.
  bool as_declared() const { return status == declared; }
};

/// Every parameter assignment the budget selects, in lexicographic order of
/// the family's parameter list.
std::vector<Bindings> assignments(const FamilyDescriptor& f, const VerifyBudget& budget);

/// Compares [head; pattern] with expand_sqrt(d) term by term. A printed
/// period that is a power w^j of a shorter word is compared through w.
VerifyReport verify_family(const FamilyDescriptor& f, const VerifyBudget& budget);

/// Shortest word w with period = w^j.
std::vector<Int> primitive_root(const std::vector<Int>& period);

}  // namespace cfsurd
