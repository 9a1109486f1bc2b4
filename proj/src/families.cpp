#include "cfsurd/families.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>

#include "cfsurd/parallel.hpp"
#include "json.hpp"

#ifndef CFSURD_DEFAULT_REGISTRY
#define CFSURD_DEFAULT_REGISTRY "data/families.jsonl"
#endif

namespace cfsurd {

const char* to_string(FamilyStatus s) { return s == FamilyStatus::Verified ? "verified" : "erratum"; }

namespace {

const ParamSpec* find_param(const FamilyDescriptor& f, const std::string& name) {
  for (const auto& p : f.params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

FamilyDescriptor parse_record(const nlohmann::json& j) {
  FamilyDescriptor f;
  f.id = j.at("id").get<std::string>();
  f.citation = j.value("citation", "");
  for (const auto& p : j.at("params")) {
    ParamSpec spec;
    spec.name = p.at("name").get<std::string>();
    spec.min = p.at("min").get<long>();
    if (p.contains("max") && !p.at("max").is_null()) spec.max = p.at("max").get<long>();
    f.params.push_back(std::move(spec));
  }
  f.a_expr = Expr::parse(j.at("a").get<std::string>());
  f.b_expr = Expr::parse(j.at("b").get<std::string>());
  f.head_expr = j.contains("head") ? Expr::parse(j.at("head").get<std::string>()) : f.a_expr;
  f.pattern = Pattern::parse(j.at("pattern").get<std::string>());
  const std::string status = j.value("status", "verified");
  if (status == "verified") {
    f.declared = FamilyStatus::Verified;
  } else if (status == "erratum") {
    f.declared = FamilyStatus::Erratum;
  } else {
    throw DomainError("unknown status '" + status + "'");
  }
  f.corrects = j.value("corrects", "");
  f.corrected_by = j.value("corrected_by", "");
  if (j.contains("budget")) {
    for (const auto& [name, cap] : j.at("budget").items()) f.budget_caps.emplace_back(name, cap.get<long>());
  }
  f.note = j.value("note", "");
  return f;
}

long cap_for(const FamilyDescriptor& f, const std::string& name) {
  for (const auto& [n, cap] : f.budget_caps) {
    if (n == name) return cap;
  }
  return std::numeric_limits<long>::max();
}

}  // namespace

Instance instantiate(const FamilyDescriptor& f, const Bindings& assignment) {
  for (const auto& p : f.params) {
    auto it = assignment.find(p.name);
    if (it == assignment.end()) throw DomainError(f.id + ": missing parameter '" + p.name + "'");
    if (it->second < p.min || (p.max && it->second > *p.max)) {
      throw DomainError(f.id + ": parameter " + p.name + " = " + it->second.get_str() + " out of range");
    }
  }
  for (const auto& [name, value] : assignment) {
    if (!find_param(f, name)) throw DomainError(f.id + ": unknown parameter '" + name + "'");
  }

  Instance out;
  try {
    const Int a = f.a_expr.eval(assignment);
    const Int b = f.b_expr.eval(assignment);
    out.expected.a0 = f.head_expr.eval(assignment);
    out.expected.period = f.pattern.eval(assignment);
    out.d = a * a + b;
  } catch (const InexactDivision& e) {
    throw InvalidAssignment(f.id + ": " + e.what());
  }
  out.expected.d = out.d;
  if (sgn(out.expected.a0) <= 0) throw InvalidAssignment(f.id + ": integer part is not positive");
  for (const Int& q : out.expected.period) {
    if (sgn(q) <= 0) throw InvalidAssignment(f.id + ": pattern entry " + q.get_str() + " is not positive");
  }
  if (out.expected.period.empty()) throw InvalidAssignment(f.id + ": empty period");
  if (sgn(out.d) <= 0 || is_square(out.d)) {
    throw InvalidAssignment(f.id + ": radicand " + out.d.get_str() + " is not a positive non-square");
  }
  return out;
}

std::vector<FamilyDescriptor> load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open registry file '" + path + "'");
  std::vector<FamilyDescriptor> out;
  std::set<std::string> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_record(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw DomainError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (!ids.insert(out.back().id).second) {
      throw DomainError(path + ":" + std::to_string(lineno) + ": duplicate id '" + out.back().id + "'");
    }
  }
  return out;
}

std::string default_registry_path() {
  if (const char* env = std::getenv("CFSURD_REGISTRY"); env && *env) return env;
  return CFSURD_DEFAULT_REGISTRY;
}

std::vector<FamilyDescriptor> registry() { return load_registry(default_registry_path()); }

const FamilyDescriptor* find_family(const std::vector<FamilyDescriptor>& reg, const std::string& id) {
  for (const auto& f : reg) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

std::vector<Bindings> assignments(const FamilyDescriptor& f, const VerifyBudget& budget) {
  std::vector<std::pair<long, long>> ranges;
  for (const auto& p : f.params) {
    long hi;
    if (p.name == "n") {
      hi = budget.n_max ? *budget.n_max : p.min + std::max(1L, budget.n_count) - 1;
    } else if (p.name == "m") {
      hi = budget.m_max;
    } else if (p.name == "k") {
      hi = budget.k_max;
    } else if (p.max) {
      hi = *p.max;
    } else {
      throw DomainError(f.id + ": parameter '" + p.name + "' has no verification bound");
    }
    hi = std::min(hi, cap_for(f, p.name));
    if (p.max) hi = std::min(hi, *p.max);
    ranges.emplace_back(p.min, hi);
  }

  std::vector<Bindings> out;
  for (const auto& [lo, hi] : ranges) {
    if (hi < lo) return out;
  }
  std::vector<long> cur;
  for (const auto& r : ranges) cur.push_back(r.first);
  for (;;) {
    Bindings b;
    for (std::size_t i = 0; i < cur.size(); ++i) b[f.params[i].name] = cur[i];
    out.push_back(std::move(b));
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < ranges[i].second) {
        ++cur[i];
        for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = ranges[j].first;
        break;
      }
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

std::vector<Int> primitive_root(const std::vector<Int>& period) {
  const std::size_t n = period.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i) ok = period[i] == period[i - len];
    if (ok) return {period.begin(), period.begin() + static_cast<std::ptrdiff_t>(len)};
  }
  return period;
}

VerifyReport verify_family(const FamilyDescriptor& f, const VerifyBudget& budget) {
  const auto points = assignments(f, budget);
  struct Outcome {
    bool reduced = false;
    std::optional<VerifyFailure> failure;
  };
  std::vector<Outcome> outcomes(points.size());

  parallel_for(points.size(), budget.jobs, [&](std::size_t i) {
    Outcome& o = outcomes[i];
    Instance inst;
    try {
      inst = instantiate(f, points[i]);
    } catch (const DomainError& e) {
      o.failure = VerifyFailure{points[i], std::nullopt, std::nullopt, e.what()};
      return;
    }
    PeriodicCF actual = expand_sqrt(inst.d);
    std::vector<Int> want = primitive_root(inst.expected.period);
    o.reduced = want.size() != inst.expected.period.size();
    if (actual.a0 != inst.expected.a0) {
      o.failure = VerifyFailure{points[i], inst.expected, actual, "integer part differs"};
    } else if (actual.period != want) {
      o.failure = VerifyFailure{points[i], inst.expected, actual,
                                actual.period.size() != want.size() ? "period length differs"
                                                                    : "partial quotients differ"};
    }
  });

  VerifyReport report;
  report.id = f.id;
  report.declared = f.declared;
  report.tested = points.size();
  for (auto& o : outcomes) {
    if (o.reduced) ++report.reduced;
    if (o.failure) report.failures.push_back(std::move(*o.failure));
  }
  report.status = report.failures.empty() ? FamilyStatus::Verified : FamilyStatus::Erratum;
  return report;
}

}  // namespace cfsurd
