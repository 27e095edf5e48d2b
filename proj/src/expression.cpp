#include "preop/expression.hpp"

#include <cctype>
#include <variant>

namespace preop {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    auto e = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected input");
    return e;
  }

 private:
  static std::shared_ptr<Expr> make(Expr::Kind kind, std::size_t at, std::vector<ExprPtr> operands = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->position = at;
    e->operands = std::move(operands);
    return e;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_with(std::string_view s) {
    skip();
    return text_.substr(pos_, s.size()) == s;
  }
  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  ExprPtr sum() {
    auto left = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return left;
      const auto at = pos_++;
      left = make(c == '+' ? Expr::Kind::Add : Expr::Kind::Subtract, at, {left, term()});
    }
  }

  ExprPtr term() {
    const char c = peek();
    const auto at = pos_;
    if (c == '-') {
      ++pos_;
      return make(Expr::Kind::Negate, at, {term()});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // A number directly followed by "*" or "/" is a coefficient.
      auto end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end < text_.size() && text_[end] == '/') {
        ++end;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      }
      auto after = end;
      while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
      if (after < text_.size() && text_[after] == '*') {
        const auto number = text_.substr(pos_, end - pos_);
        Rational q;
        try {
          q = parse_rational(number);
        } catch (const ParseError& err) {
          throw ParseError("bad coefficient", at + err.position());
        }
        pos_ = after + 1;
        auto e = make(Expr::Kind::Scale, at, {term()});
        e->scalar = q;
        return e;
      }
    }
    return chain();
  }

  ExprPtr chain() {
    auto left = primary();
    for (;;) {
      const auto at = (skip(), pos_);
      if (starts_with("<|")) {
        pos_ += 2;
        if (peek() == '(') {
          ++pos_;
          std::vector<ExprPtr> operands{left};
          do {
            operands.push_back(sum());
          } while (peek() == ',' && ++pos_);
          expect(')');
          left = operands.size() == 2 ? make(Expr::Kind::Graft, at, std::move(operands))
                                      : make(Expr::Kind::Insert, at, std::move(operands));
        } else {
          left = make(Expr::Kind::Graft, at, {left, primary()});
        }
      } else if (starts_with("|>")) {
        pos_ += 2;
        left = make(Expr::Kind::Nap, at, {left, primary()});
      } else if (starts_with("o_")) {
        auto end = pos_ + 2;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        if (end == pos_ + 2 || end - pos_ > 11 || (end < text_.size() && ident_char(text_[end])))
          fail("expected slot number after 'o_'");
        const auto slot = std::stoul(std::string(text_.substr(pos_ + 2, end - pos_ - 2)));
        pos_ = end;
        auto e = make(Expr::Kind::Compose, at, {left, primary()});
        e->slot = slot;
        left = e;
      } else {
        return left;
      }
    }
  }

  ExprPtr primary() {
    const char c = peek();
    const auto at = pos_;
    if (c == '(') {
      ++pos_;
      auto e = sum();
      expect(')');
      return e;
    }
    if (c == '[') {
      auto end = text_.find(']', pos_);
      if (end == std::string_view::npos) fail("unterminated '['");
      pos_ = end + 1;
      return atom(at, text_.substr(at, pos_ - at));
    }
    if (!ident_char(c)) fail(c == '\0' ? "unexpected end of input" : "expected an operand");
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    const auto word = text_.substr(at, pos_ - at);
    if (word.size() > 2 && word.substr(0, 2) == "o_") {
      pos_ = at;
      fail("expected an operand before composition");
    }
    if (pos_ < text_.size() && text_[pos_] == '(') {
      int depth = 0;
      do {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      } while (depth > 0 && pos_ < text_.size());
      if (depth > 0) fail("unbalanced '(' in tree literal");
    }
    return atom(at, text_.substr(at, pos_ - at));
  }

  static ExprPtr atom(std::size_t at, std::string_view text) {
    auto e = make(Expr::Kind::Atom, at);
    e->atom = std::string(text);
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <typename Algebra>
EvalResult run(const Algebra& algebra, const Expr& e) {
  auto value = evaluate(e, algebra);
  return {algebra.print(value), algebra.json(value)};
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

PreLieElement FreePreLieAlgebra::atom(const std::string& text) const {
  if (text == "root") return PreLieElement::term(UnlabeledTree());
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    try {
      return PreLieElement::term(parse_unlabeled(std::string_view(text).substr(1, text.size() - 2)));
    } catch (const ParseError& err) {
      throw ParseError(err.message(), err.position() + 1);
    }
  }
  throw ParseError("free-prelie atoms are 'root' or '[tree]'", 0);
}

PreLieElement FreePreLieAlgebra::compose(const Value&, std::size_t, const Value&) const {
  throw DomainError("'o_i' is not defined in free-prelie");
}

EvalResult evaluate_in(std::string_view algebra_name, std::string_view expression) {
  const auto expr = parse_expression(expression);
  if (algebra_name == "free-prelie") return run(FreePreLieAlgebra{}, *expr);
  const auto operad = make_operad(algebra_name);
  return std::visit([&](const auto& op) { return run(OperadAlgebra(op), *expr); }, operad);
}

}  // namespace preop
