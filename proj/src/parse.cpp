// Recursive-descent parser for the polynomial text syntax:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*      '/' only by nonzero constants
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | symbol | '(' expr ')'
//
// Juxtaposition ("2x1", "x1 x2") is rejected.

#include <cctype>

#include "eqres/error.hpp"
#include "eqres/polynomial.hpp"

namespace eqres {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  Parser(std::string_view text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

  Polynomial run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Polynomial result = expr();
    skip_ws();
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(')
        throw ParseError("implicit multiplication is not accepted; use '*'", pos_);
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    return result;
  }

 private:
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

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant()) throw ParseError("division by a non-constant expression", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc *= Scalar(1 / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", at);
      if (pos_ < text_.size() && text_[pos_] == '(') {
        // Allow "x^(3)" but still insist on a nonnegative integer literal.
        ++pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
        const auto e = integer_literal();
        if (!accept(')')) throw ParseError("expected ')'", pos_);
        return base.pow(e);
      }
      return base.pow(integer_literal());
    }
    return base;
  }

  std::uint64_t integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a nonnegative integer exponent", start);
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) throw ParseError("exponent too large", start);
    return std::stoull(std::string(digits));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && ident_start(text_[pos_]))
        throw ParseError("implicit multiplication is not accepted; use '*'", pos_);
      Integer value(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ctx_, Scalar(value));
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto idx = ctx_->find(name);
      if (!idx) throw ParseError("unknown symbol '" + name + "'", start);
      return Polynomial::symbol(ctx_, *idx);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const ContextPtr& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, const ContextPtr& ctx) { return Parser(text, ctx).run(); }

}  // namespace eqres
