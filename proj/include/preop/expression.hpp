#pragma once

// Expression language for `eval`:
//
//   sum    ::= term (("+" | "-") term)*
//   term   ::= "-" term | RATIONAL "*" term | chain
//   chain  ::= primary ( "<|" primary | "|>" primary | "o_" INT primary
//                      | "<|" "(" sum ("," sum)* ")" )*
//   primary::= "(" sum ")" | ATOM
//
// `<|` is the pre-Lie product, `<|(a, b, ...)` the insertion element (one
// argument means plain `<|`), `o_i` partial composition, `|>` the NAP
// product of the free pre-Lie algebra. Operators in a chain associate to the
// left. An ATOM is an identifier or integer, optionally followed directly by
// a parenthesised tree ("1(2,3)", "g(g(1,2),3)"), or a bracketed unlabeled
// tree "[(()())]"; its meaning is up to the algebra.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "preop/errors.hpp"
#include "preop/formal_sum.hpp"
#include "preop/instances.hpp"
#include "preop/operad.hpp"
#include "preop/prelie.hpp"
#include "preop/rational.hpp"

namespace preop {

struct Expr {
  enum class Kind { Atom, Add, Subtract, Negate, Scale, Graft, Nap, Compose, Insert };

  Kind kind;
  std::size_t position;            // byte offset of the construct in the input
  std::string atom;                // Atom
  Rational scalar;                 // Scale
  std::size_t slot = 0;            // Compose
  std::vector<std::shared_ptr<const Expr>> operands;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Throws ParseError with the offending byte offset.
ExprPtr parse_expression(std::string_view text);

// Algebra requirements: Value type; atom(text) -> Value; graft, nap(a, b);
// compose(a, slot, b); insert(a, args).
template <typename Algebra>
typename Algebra::Value evaluate(const Expr& e, const Algebra& algebra) {
  using Value = typename Algebra::Value;
  auto sub = [&](std::size_t k) { return evaluate(*e.operands[k], algebra); };
  switch (e.kind) {
    case Expr::Kind::Atom:
      try {
        return algebra.atom(e.atom);
      } catch (const ParseError& err) {
        throw ParseError("bad atom '" + e.atom + "': " + err.message(), e.position + err.position());
      }
    case Expr::Kind::Add:
      return sub(0) + sub(1);
    case Expr::Kind::Subtract:
      return sub(0) - sub(1);
    case Expr::Kind::Negate:
      return -sub(0);
    case Expr::Kind::Scale:
      return e.scalar * sub(0);
    case Expr::Kind::Graft:
      return algebra.graft(sub(0), sub(1));
    case Expr::Kind::Nap:
      return algebra.nap(sub(0), sub(1));
    case Expr::Kind::Compose:
      return algebra.compose(sub(0), e.slot, sub(1));
    case Expr::Kind::Insert: {
      std::vector<Value> args;
      for (std::size_t k = 1; k < e.operands.size(); ++k) args.push_back(sub(k));
      return algebra.insert(sub(0), std::span<const Value>(args));
    }
  }
  throw Error("unreachable expression kind");
}

template <OperadInstance Op>
class OperadAlgebra {
 public:
  using Value = Element<Op>;

  explicit OperadAlgebra(const Op& op) : op_(op) {}

  Value atom(const std::string& text) const { return Value::term(op_.parse(text)); }
  Value graft(const Value& a, const Value& b) const { return prelie_product(op_, a, b); }
  Value nap(const Value&, const Value&) const {
    throw DomainError("'|>' is only defined in free-prelie, not in operad " + op_.name());
  }
  Value compose(const Value& a, std::size_t slot, const Value& b) const { return partial_compose(op_, a, slot, b); }
  Value insert(const Value& a, std::span<const Value> args) const { return insertion_element(op_, a, args); }
  std::string print(const Value& v) const {
    return to_text(v, [this](const typename Op::Basis& b) { return op_.print(b); });
  }
  nlohmann::json json(const Value& v) const {
    return to_json(v, [this](const typename Op::Basis& b) { return op_.print(b); });
  }

 private:
  const Op& op_;
};

// The free pre-Lie algebra on one generator. Atoms: "root" or "[T]" with T
// in the unlabeled tree grammar.
class FreePreLieAlgebra {
 public:
  using Value = PreLieElement;

  Value atom(const std::string& text) const;
  Value graft(const Value& a, const Value& b) const { return graft_product(a, b); }
  Value nap(const Value& a, const Value& b) const { return nap_graft(a, b); }
  Value compose(const Value&, std::size_t, const Value&) const;
  Value insert(const Value& a, std::span<const Value> args) const { return insertion_recursive(a, args); }
  std::string print(const Value& v) const { return to_text(v); }
  nlohmann::json json(const Value& v) const { return to_json(v); }
};

struct EvalResult {
  std::string text;
  nlohmann::json json;
};

// Parses and evaluates `expression` in the named algebra: any make_operad()
// name, or "free-prelie".
EvalResult evaluate_in(std::string_view algebra_name, std::string_view expression);

}  // namespace preop
