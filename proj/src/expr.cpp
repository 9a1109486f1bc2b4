#include "cfsurd/expr.hpp"

#include <cctype>
#include <functional>

#include "cfsurd/sequences.hpp"

namespace cfsurd {

struct Expr::Node {
  enum class Kind { Const, Var, Neg, Add, Sub, Mul, Div, Call };
  Kind kind = Kind::Const;
  Int value;
  std::string name;
  std::vector<std::shared_ptr<const Node>> args;
};

struct Pattern::Item {
  Expr value;  // used when count is empty
  Expr count;
  std::vector<std::shared_ptr<const Item>> body;
};

namespace {

using Fn = std::function<Int(const std::vector<long>&)>;

long small(const Int& v, const std::string& fn) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) throw DomainError(fn + ": argument out of range");
  return v.get_si();
}

const std::map<std::string, std::pair<std::size_t, Fn>, std::less<>>& functions() {
  static const std::map<std::string, std::pair<std::size_t, Fn>, std::less<>> table = {
      {"fib", {1, [](const std::vector<long>& a) { return fibonacci(a[0]); }}},
      {"pell_p", {1, [](const std::vector<long>& a) { return pell_pair(a[0]).p; }}},
      {"pell_q", {1, [](const std::vector<long>& a) { return pell_pair(a[0]).q; }}},
      {"ab_A", {1, [](const std::vector<long>& a) { return ab_pair(a[0]).p; }}},
      {"ab_B", {1, [](const std::vector<long>& a) { return ab_pair(a[0]).q; }}},
      {"t113_p", {1, [](const std::vector<long>& a) { return triple113_pair(a[0]).p; }}},
      {"t113_q", {1, [](const std::vector<long>& a) { return triple113_pair(a[0]).q; }}},
      {"m2m_q", {2, [](const std::vector<long>& a) { return pair_m2m_denominator(a[0], a[1]); }}},
      {"odd_P", {2, [](const std::vector<long>& a) { return odd_family_short(a[0], a[1]).p; }}},
      {"odd_Q", {2, [](const std::vector<long>& a) { return odd_family_short(a[0], a[1]).q; }}},
      {"odd_Pp", {2, [](const std::vector<long>& a) { return odd_family_full(a[0], a[1]).p; }}},
      {"odd_Qp", {2, [](const std::vector<long>& a) { return odd_family_full(a[0], a[1]).q; }}},
      {"even_p", {2, [](const std::vector<long>& a) { return interleaved_even_pair(a[0], a[1]).p; }}},
      {"even_q", {2, [](const std::vector<long>& a) { return interleaved_even_pair(a[0], a[1]).q; }}},
  };
  return table;
}

Int eval_node(const Expr::Node& node, const Bindings& env) {
  using K = Expr::Node::Kind;
  switch (node.kind) {
    case K::Const: return node.value;
    case K::Var: {
      auto it = env.find(node.name);
      if (it == env.end()) throw DomainError("unbound parameter '" + node.name + "'");
      return it->second;
    }
    case K::Neg: return -eval_node(*node.args[0], env);
    case K::Add: return eval_node(*node.args[0], env) + eval_node(*node.args[1], env);
    case K::Sub: return eval_node(*node.args[0], env) - eval_node(*node.args[1], env);
    case K::Mul: return eval_node(*node.args[0], env) * eval_node(*node.args[1], env);
    case K::Div: {
      Int num = eval_node(*node.args[0], env);
      Int den = eval_node(*node.args[1], env);
      if (sgn(den) == 0) throw DomainError("division by zero");
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw InexactDivision(num.get_str() + "/" + den.get_str() + " is not an integer");
      }
      Int q;
      mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return q;
    }
    case K::Call: {
      const auto& [arity, fn] = functions().at(node.name);
      std::vector<long> args;
      args.reserve(arity);
      for (const auto& a : node.args) args.push_back(small(eval_node(*a, env), node.name));
      return fn(args);
    }
  }
  return 0;
}

}  // namespace

class PatternParser {
public:
  explicit PatternParser(const std::string& text) : text_(text) {}

  Expr parse_expr_only() {
    auto node = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return Expr(node, text_);
  }

  Pattern parse_pattern_only() {
    Pattern p;
    p.items_ = items();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (p.items_.empty()) fail("empty pattern");
    p.source_ = text_;
    return p;
  }

private:
  using NodePtr = std::shared_ptr<const Expr::Node>;
  using ItemPtr = std::shared_ptr<const Pattern::Item>;

  [[noreturn]] void fail(const std::string& why) const {
    throw ExprParseError(why + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string peek_name() {
    skip_ws();
    std::size_t p = pos_;
    while (p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_')) ++p;
    if (p == pos_ || std::isdigit(static_cast<unsigned char>(text_[pos_]))) return {};
    return text_.substr(pos_, p - pos_);
  }

  std::vector<ItemPtr> items() {
    std::vector<ItemPtr> out;
    do {
      out.push_back(item());
    } while (accept(','));
    return out;
  }

  ItemPtr item() {
    auto it = std::make_shared<Pattern::Item>();
    std::size_t save = pos_;
    if (peek_name() == "rep") {
      pos_ += 3;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        it->count = Expr(expr(), "");
        expect(':');
        it->body = items();
        expect(')');
        return it;
      }
      pos_ = save;
    }
    std::size_t begin = pos_;
    auto node = expr();
    it->value = Expr(node, text_.substr(begin, pos_ - begin));
    return it;
  }

  NodePtr binary(Expr::Node::Kind kind, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = kind;
    n->args = {std::move(lhs), std::move(rhs)};
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Expr::Node::Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = binary(Expr::Node::Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = binary(Expr::Node::Kind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = binary(Expr::Node::Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      auto n = std::make_shared<Expr::Node>();
      n->kind = Expr::Node::Kind::Neg;
      n->args = {unary()};
      return n;
    }
    return primary();
  }

  NodePtr primary() {
    skip_ws();
    if (accept('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t begin = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto n = std::make_shared<Expr::Node>();
      n->kind = Expr::Node::Kind::Const;
      n->value = Int(text_.substr(begin, pos_ - begin), 10);
      return n;
    }
    std::string name = peek_name();
    if (name.empty()) fail("expected a number, name or '('");
    pos_ += name.size();
    auto n = std::make_shared<Expr::Node>();
    n->name = name;
    if (accept('(')) {
      auto fit = functions().find(name);
      if (fit == functions().end()) fail("unknown function '" + name + "'");
      n->kind = Expr::Node::Kind::Call;
      do {
        n->args.push_back(expr());
      } while (accept(','));
      expect(')');
      if (n->args.size() != fit->second.first) fail("wrong number of arguments to '" + name + "'");
    } else {
      n->kind = Expr::Node::Kind::Var;
    }
    return n;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

Expr Expr::parse(const std::string& text) { return PatternParser(text).parse_expr_only(); }

Expr Expr::constant(const Int& v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Const;
  n->value = v;
  return Expr(n, v.get_str());
}

Int Expr::eval(const Bindings& env) const {
  if (!root_) throw DomainError("evaluating an empty expression");
  return eval_node(*root_, env);
}

namespace {

void expand_items(const std::vector<std::shared_ptr<const Pattern::Item>>& items, const Bindings& env,
                  std::vector<Int>& out) {
  for (const auto& item : items) {
    if (item->count.empty()) {
      out.push_back(item->value.eval(env));
      continue;
    }
    Int count = item->count.eval(env);
    if (sgn(count) < 0) throw DomainError("negative repeat count");
    if (count > 100000) throw DomainError("repeat count too large");
    for (long i = 0, c = count.get_si(); i < c; ++i) expand_items(item->body, env, out);
  }
}

}  // namespace

Pattern Pattern::parse(const std::string& text) { return PatternParser(text).parse_pattern_only(); }

std::vector<Int> Pattern::eval(const Bindings& env) const {
  std::vector<Int> out;
  expand_items(items_, env, out);
  return out;
}

std::vector<std::string> builtin_functions() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : functions()) names.push_back(name);
  return names;
}

}  // namespace cfsurd
