#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "ivopt/errors.hpp"
#include "ivopt/function.hpp"

namespace ivopt {

namespace {

enum class Tok {
  End, LBracket, RBracket, Comma, Plus, Minus, MarkovMinus, Star, Caret,
  LParen, RParen, Number, Ident
};

struct Token {
  Tok kind;
  std::size_t pos;
  double number = 0.0;
  std::string ident;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    cur_.pos = pos_;
    if (pos_ >= text_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '[': cur_.kind = Tok::LBracket; ++pos_; return;
      case ']': cur_.kind = Tok::RBracket; ++pos_; return;
      case ',': cur_.kind = Tok::Comma; ++pos_; return;
      case '+': cur_.kind = Tok::Plus; ++pos_; return;
      case '*': cur_.kind = Tok::Star; ++pos_; return;
      case '^': cur_.kind = Tok::Caret; ++pos_; return;
      case '(': cur_.kind = Tok::LParen; ++pos_; return;
      case ')': cur_.kind = Tok::RParen; ++pos_; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == 'M') {
          cur_.kind = Tok::MarkovMinus;
          pos_ += 2;
        } else {
          cur_.kind = Tok::Minus;
          ++pos_;
        }
        return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string tail(text_.substr(pos_));
      char* end = nullptr;
      cur_.number = std::strtod(tail.c_str(), &end);
      if (end == tail.c_str()) throw ParseError("bad number", pos_);
      pos_ += static_cast<std::size_t>(end - tail.c_str());
      cur_.kind = Tok::Number;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      cur_.kind = Tok::Ident;
      cur_.ident = std::string(text_.substr(start, pos_ - start));
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token cur_;
};

class Parser {
 public:
  Parser(std::string_view text, int dim) : lex_(text), dim_(dim) {}

  IVExpr parse() {
    std::vector<IVTerm> terms;
    terms.push_back(parse_term(false));
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::End) break;
      if (t.kind == Tok::MarkovMinus) {
        lex_.take();
        terms.push_back(parse_term(true));
        continue;
      }
      if (t.kind == Tok::Plus) {
        lex_.take();
        terms.push_back(parse_term(false));
        continue;
      }
      throw ParseError("expected '+' or '-M' between terms", t.pos);
    }
    return IVExpr(std::move(terms), dim_);
  }

 private:
  IVTerm parse_term(bool markov) {
    IVTerm term;
    term.markov = markov;
    term.coeff = parse_interval_literal();
    if (lex_.peek().kind == Tok::Star) lex_.take();
    if (starts_real_expr(lex_.peek().kind))
      term.basis = parse_sum();
    else
      term.basis = RealExpr::constant(1.0);
    return term;
  }

  static bool starts_real_expr(Tok k) {
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen ||
           k == Tok::Minus;
  }

  Interval parse_interval_literal() {
    expect(Tok::LBracket, "expected an interval literal '[lo,hi]'");
    const double a = parse_signed_number();
    expect(Tok::Comma, "expected ',' in interval literal");
    const double b = parse_signed_number();
    expect(Tok::RBracket, "expected ']' in interval literal");
    return Interval(a, b);  // unordered pairs are sorted
  }

  double parse_signed_number() {
    bool neg = false;
    while (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = !neg;
    }
    const Token t = lex_.peek();
    expect(Tok::Number, "expected a number");
    return neg ? -t.number : t.number;
  }

  // Additive level of a real expression. Stops before a '+' that starts a
  // new interval term and always stops at '-M'.
  RealExpr parse_sum() {
    RealExpr e = parse_product();
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::Plus) {
        Lexer look = lex_;  // one-token lookahead for an interval literal
        look.take();
        if (look.peek().kind == Tok::LBracket) break;
        lex_.take();
        e = RealExpr::add(std::move(e), parse_product());
        continue;
      }
      if (t.kind == Tok::Minus) {
        Lexer look = lex_;
        look.take();
        if (look.peek().kind == Tok::LBracket)
          throw ParseError("interval terms are joined with '+' or '-M'",
                           t.pos);
        lex_.take();
        e = RealExpr::sub(std::move(e), parse_product());
        continue;
      }
      break;
    }
    return e;
  }

  RealExpr parse_product() {
    RealExpr e = parse_unary();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      e = RealExpr::mul(std::move(e), parse_unary());
    }
    return e;
  }

  RealExpr parse_unary() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      return RealExpr::neg(parse_unary());
    }
    return parse_power();
  }

  RealExpr parse_power() {
    RealExpr base = parse_primary();
    if (lex_.peek().kind == Tok::Caret) {
      const Token caret = lex_.take();
      const Token t = lex_.peek();
      if (t.kind != Tok::Number || t.number != std::floor(t.number) ||
          t.number < 0)
        throw ParseError("exponent must be a nonnegative integer", caret.pos);
      lex_.take();
      return RealExpr::pow(std::move(base), static_cast<int>(t.number));
    }
    return base;
  }

  RealExpr parse_primary() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Number:
        lex_.take();
        return RealExpr::constant(t.number);
      case Tok::LParen: {
        lex_.take();
        RealExpr e = parse_sum();
        expect(Tok::RParen, "expected ')'");
        return e;
      }
      case Tok::Ident: {
        lex_.take();
        if (t.ident == "exp" || t.ident == "sin" || t.ident == "cos") {
          expect(Tok::LParen, "expected '(' after function name");
          RealExpr arg = parse_sum();
          expect(Tok::RParen, "expected ')'");
          const RealExpr::Fn fn = t.ident == "exp"   ? RealExpr::Fn::Exp
                                  : t.ident == "sin" ? RealExpr::Fn::Sin
                                                     : RealExpr::Fn::Cos;
          return RealExpr::call(fn, std::move(arg));
        }
        if (t.ident.size() > 1 && t.ident[0] == 'x') {
          bool digits = true;
          for (std::size_t i = 1; i < t.ident.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(t.ident[i]));
          if (digits) {
            const int idx = std::atoi(t.ident.c_str() + 1);
            if (idx < 1 || idx > dim_)
              throw ParseError("unknown variable '" + t.ident + "'", t.pos);
            return RealExpr::variable(idx - 1);
          }
        }
        throw ParseError("unknown identifier '" + t.ident + "'", t.pos);
      }
      default:
        throw ParseError("expected a number, variable or '('", t.pos);
    }
  }

  void expect(Tok kind, const char* message) {
    const Token& t = lex_.peek();
    if (t.kind != kind) throw ParseError(message, t.pos);
    lex_.take();
  }

  Lexer lex_;
  int dim_;
};

}  // namespace

IVExpr parse_ivexpr(std::string_view text, int dim) {
  return Parser(text, dim).parse();
}

}  // namespace ivopt
