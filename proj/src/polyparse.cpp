#include "exotic/polyparse.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace exotic {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (s.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      out.push_back({Tok::Minus, "-", i});
      i += 3;
    } else {
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
          throw Error(ErrorCode::ParseError, "unexpected character '" + std::string(1, s[i]) + "' at " + std::to_string(i));
      }
      out.push_back({k, std::string(1, s[i]), i});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const VarSet& vars) : toks_(std::move(toks)), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Tok::End) fail("trailing input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(peek().pos));
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      Polynomial rhs = term();
      if (minus) acc -= rhs; else acc += rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      bool div = take().kind == Tok::Slash;
      Polynomial rhs = unary();
      if (!div) {
        acc *= rhs;
      } else if (rhs.is_constant()) {
        if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in polynomial literal");
        acc *= Rational(1) / rhs.constant_term();
      } else {
        acc = exact_divide(acc, rhs);
      }
    }
    return acc;
  }

  Polynomial unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      take();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek().kind == Tok::Caret) {
      take();
      if (peek().kind != Tok::Number) fail("expected a non-negative integer exponent");
      std::string digits = take().text;
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        Rational q;
        q.set_str(t.text, 10);
        return Polynomial::constant(vars_, q);
      }
      case Tok::Ident: {
        take();
        auto idx = vars_.index_of(t.text);
        if (!idx) throw Error(ErrorCode::UnknownVariable, t.text);
        return Polynomial::variable(vars_, *idx);
      }
      case Tok::LParen: {
        take();
        Polynomial inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return inner;
      }
      default:
        fail("unexpected token '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const VarSet& vars_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarSet& vars) {
  return Parser(tokenize(text), vars).parse();
}

Polynomial parse_polynomial(std::string_view text) {
  auto toks = tokenize(text);
  std::vector<std::string> names;
  for (const auto& t : toks) {
    if (t.kind == Tok::Ident && std::find(names.begin(), names.end(), t.text) == names.end()) names.push_back(t.text);
  }
  VarSet vars(std::move(names));
  return Parser(std::move(toks), vars).parse();
}

}  // namespace exotic
