// Recursive-descent parsing for the formula and sequent language.
//
//   atom     = [a-z][a-z0-9_]*            ("bot" is reserved)
//   formula  = or ("->" formula)?         right-associative
//   or       = and ("|" and)*
//   and      = unary ("&" unary)*
//   unary    = "~" unary | atom | "bot" | "(" formula ")"
//   sequent  = formulas "=>" formulas     either list may be empty
//   meta     = "[" (sequent (";" sequent)*)? "]" "=>*" "[" sequent "]"
//
// ~A desugars to A -> bot while parsing; parse errors carry a 0-based
// character position.
#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stlogic/formula.hpp"
#include "stlogic/sequent.hpp"

namespace stlogic {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

enum class TokenKind {
  Ident, Bot, Tilde, Amp, Pipe, Arrow, LParen, RParen,
  Comma, Semicolon, LBracket, RBracket, FatArrow, FatArrowStar, End,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             ((text[j] >= 'a' && text[j] <= 'z') || (text[j] >= '0' && text[j] <= '9') ||
              text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      out.push_back({word == "bot" ? TokenKind::Bot : TokenKind::Ident, std::move(word), start});
      i = j;
      continue;
    }
    switch (c) {
      case '~': out.push_back({TokenKind::Tilde, "~", start}); ++i; continue;
      case '&': out.push_back({TokenKind::Amp, "&", start}); ++i; continue;
      case '|': out.push_back({TokenKind::Pipe, "|", start}); ++i; continue;
      case '(': out.push_back({TokenKind::LParen, "(", start}); ++i; continue;
      case ')': out.push_back({TokenKind::RParen, ")", start}); ++i; continue;
      case ',': out.push_back({TokenKind::Comma, ",", start}); ++i; continue;
      case ';': out.push_back({TokenKind::Semicolon, ";", start}); ++i; continue;
      case '[': out.push_back({TokenKind::LBracket, "[", start}); ++i; continue;
      case ']': out.push_back({TokenKind::RBracket, "]", start}); ++i; continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({TokenKind::Arrow, "->", start});
          i += 2;
          continue;
        }
        throw ParseError("expected '->'", start);
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          if (i + 2 < text.size() && text[i + 2] == '*') {
            out.push_back({TokenKind::FatArrowStar, "=>*", start});
            i += 3;
          } else {
            out.push_back({TokenKind::FatArrow, "=>", start});
            i += 2;
          }
          continue;
        }
        throw ParseError("expected '=>'", start);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({TokenKind::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Formula formula_only() {
    if (peek().kind == TokenKind::End) throw ParseError("empty input", 0);
    Formula f = formula();
    expect(TokenKind::End, "end of input");
    return f;
  }

  Inference inference_only() {
    Inference inf = inference();
    expect(TokenKind::End, "end of input");
    return inf;
  }

  Metainference metainference_only() {
    expect(TokenKind::LBracket, "'['");
    std::vector<Inference> premises;
    if (peek().kind != TokenKind::RBracket) {
      premises.push_back(inference());
      while (peek().kind == TokenKind::Semicolon) {
        advance();
        premises.push_back(inference());
      }
    }
    expect(TokenKind::RBracket, "']'");
    expect(TokenKind::FatArrowStar, "'=>*'");
    expect(TokenKind::LBracket, "'['");
    Inference conclusion = inference();
    expect(TokenKind::RBracket, "']'");
    expect(TokenKind::End, "end of input");
    return Metainference{std::move(premises), std::move(conclusion)};
  }

 private:
  Formula formula() {
    Formula lhs = disjunct();
    if (peek().kind == TokenKind::Arrow) {
      advance();
      return Formula::implies(std::move(lhs), formula());
    }
    return lhs;
  }

  Formula disjunct() {
    Formula f = conjunct();
    while (peek().kind == TokenKind::Pipe) {
      advance();
      f = Formula::disj(std::move(f), conjunct());
    }
    return f;
  }

  Formula conjunct() {
    Formula f = unary();
    while (peek().kind == TokenKind::Amp) {
      advance();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Tilde:
        advance();
        return Formula::negate(unary());
      case TokenKind::Ident: {
        Formula f = Formula::atom(t.text);
        advance();
        return f;
      }
      case TokenKind::Bot:
        advance();
        return Formula::bottom();
      case TokenKind::LParen: {
        advance();
        Formula f = formula();
        expect(TokenKind::RParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  // Formula list up to '=>', then formula list ending at ';', ']' or end.
  Inference inference() {
    Inference inf;
    if (peek().kind != TokenKind::FatArrow) {
      inf.antecedent.push_back(formula());
      while (peek().kind == TokenKind::Comma) {
        advance();
        inf.antecedent.push_back(formula());
      }
    }
    expect(TokenKind::FatArrow, "'=>'");
    if (starts_formula(peek().kind)) {
      inf.succedent.push_back(formula());
      while (peek().kind == TokenKind::Comma) {
        advance();
        inf.succedent.push_back(formula());
      }
    }
    return inf;
  }

  static bool starts_formula(TokenKind k) {
    return k == TokenKind::Tilde || k == TokenKind::Ident || k == TokenKind::Bot ||
           k == TokenKind::LParen;
  }

  const Token& peek() const { return tokens_[pos_]; }
  void advance() { ++pos_; }

  void expect(TokenKind k, const char* what) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + what, peek().pos);
    advance();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  return detail::Parser(text).formula_only();
}

inline Inference parse_inference(std::string_view text) {
  return detail::Parser(text).inference_only();
}

inline Metainference parse_metainference(std::string_view text) {
  return detail::Parser(text).metainference_only();
}

}  // namespace stlogic
