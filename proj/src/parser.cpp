#include "hh/parser.hpp"

#include <cctype>
#include <vector>

namespace hh {
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
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
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
        throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  RationalExpr parse() {
    RationalExpr e = expr();
    if (peek().kind != Tok::End) throw ParseError("trailing input after expression", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[cursor_]; }
  Token advance() { return tokens_[cursor_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++cursor_;
      return true;
    }
    return false;
  }

  RationalExpr expr() {
    bool negate = false;
    if (accept(Tok::Minus))
      negate = true;
    else
      accept(Tok::Plus);
    RationalExpr acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept(Tok::Plus))
        acc += term();
      else if (accept(Tok::Minus))
        acc -= term();
      else
        return acc;
    }
  }

  RationalExpr term() {
    RationalExpr acc = factor();
    while (true) {
      if (accept(Tok::Star)) {
        acc *= factor();
      } else if (peek().kind == Tok::Slash) {
        Token op = advance();
        RationalExpr rhs = factor();
        if (rhs.isZero()) throw ParseError("division by the zero expression", op.pos);
        acc /= rhs;
      } else {
        return acc;
      }
    }
  }

  RationalExpr factor() {
    RationalExpr b = base();
    if (peek().kind == Tok::Caret) {
      Token op = advance();
      int e = signedInteger();
      if (b.isZero() && e <= 0)
        throw ParseError("zero raised to a non-positive power", op.pos);
      b = b.pow(e);
    }
    return b;
  }

  int signedInteger() {
    int sign = 1;
    if (accept(Tok::Minus))
      sign = -1;
    else
      accept(Tok::Plus);
    if (peek().kind != Tok::Number)
      throw ParseError("expected integer exponent", peek().pos);
    Token t = advance();
    try {
      return sign * std::stoi(t.text);
    } catch (const std::exception&) {
      throw ParseError("exponent out of range", t.pos);
    }
  }

  RationalExpr base() {
    Token t = peek();
    switch (t.kind) {
      case Tok::Number:
        advance();
        return RationalExpr(GaussianRational::fromRationalLiteral(t.text));
      case Tok::Ident: {
        advance();
        if (t.text == "i") return RationalExpr::imaginaryUnit();
        int gen = genIndex(t.text);
        if (gen < 0) throw ParseError("unknown identifier '" + t.text + "'", t.pos);
        return RationalExpr::generator(gen);
      }
      case Tok::LParen: {
        advance();
        RationalExpr e = expr();
        if (!accept(Tok::RParen)) throw ParseError("expected ')'", peek().pos);
        return e;
      }
      default:
        throw ParseError("expected number, identifier, or '('", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
};

}  // namespace

RationalExpr parseExpr(std::string_view text) { return Parser(tokenize(text)).parse(); }

}  // namespace hh
