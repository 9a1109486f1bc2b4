#pragma once

// Integer expressions and period templates used by the family registry.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | primary
//   primary := INTEGER | NAME | NAME '(' expr (',' expr)* ')' | '(' expr ')'
//
// Division must be exact. NAME binds a parameter (n, m, k, ...) and
// NAME(...) calls one of the sequence generators listed by builtin_functions().
//
//   pattern := item (',' item)*
//   item    := expr | 'rep' '(' expr ':' pattern ')'
//
// rep(c: w) repeats the sub-pattern w c times (c >= 0).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cfsurd/arith.hpp"

namespace cfsurd {

/// Raised by Expr::eval when an exact division leaves a remainder.
class InexactDivision : public DomainError {
public:
  using DomainError::DomainError;
};

class ExprParseError : public DomainError {
public:
  using DomainError::DomainError;
};

using Bindings = std::map<std::string, Int, std::less<>>;

class Expr {
public:
  struct Node;

  Expr() = default;
  static Expr parse(const std::string& text);
  static Expr constant(const Int& v);

  Int eval(const Bindings& env) const;
  const std::string& source() const { return source_; }
  bool empty() const { return !root_; }

private:
  friend class PatternParser;
  Expr(std::shared_ptr<const Node> root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  std::shared_ptr<const Node> root_;
  std::string source_;
};

class Pattern {
public:
  struct Item;

  Pattern() = default;
  static Pattern parse(const std::string& text);

  std::vector<Int> eval(const Bindings& env) const;
  const std::string& source() const { return source_; }

private:
  friend class PatternParser;
  std::vector<std::shared_ptr<const Item>> items_;
  std::string source_;
};

/// Names accepted in function-call position.
std::vector<std::string> builtin_functions();

}  // namespace cfsurd
