#include "blw/parse.hpp"

#include <cctype>
#include <vector>

namespace blw {

namespace {

enum class Tok { Ident, Bot, Top, LParen, RParen, AndOp, OrOp, Star, Arrow, Turnstile, Comma, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      i = j;
      if (word == "bot")
        out.push_back({Tok::Bot, std::move(word), start});
      else if (word == "top")
        out.push_back({Tok::Top, std::move(word), start});
      else
        out.push_back({Tok::Ident, std::move(word), start});
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; break;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; break;
      case '&': out.push_back({Tok::AndOp, "&", start}); ++i; break;
      case '*': out.push_back({Tok::Star, "*", start}); ++i; break;
      case ',': out.push_back({Tok::Comma, ",", start}); ++i; break;
      case '-':
        if (i + 1 < n && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", start});
          i += 2;
          break;
        }
        throw ParseError("unknown token '-'", start);
      case '|':
        if (i + 1 < n && text[i + 1] == '-') {
          out.push_back({Tok::Turnstile, "|-", start});
          i += 2;
        } else {
          out.push_back({Tok::OrOp, "|", start});
          ++i;
        }
        break;
      default:
        throw ParseError(std::string("unknown token '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", n});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Formula formula() {
    Formula f = impl();
    return f;
  }

  Sequent sequent() {
    std::vector<Formula> context;
    if (peek().type != Tok::Turnstile) {
      context.push_back(impl());
      while (peek().type == Tok::Comma) {
        advance();
        context.push_back(impl());
      }
    }
    expect(Tok::Turnstile, "'|-'");
    Formula conclusion = impl();
    return Sequent(std::move(context), std::move(conclusion));
  }

  void expect_end() {
    if (peek().type != Tok::End)
      throw ParseError("unexpected token \"" + peek().text + "\"", peek().pos);
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }

  void expect(Tok type, const char* what) {
    if (peek().type != type)fail(what);
    advance();
  }

  [[noreturn]] void fail(const char* expected) {
    if (peek().type == Tok::End)
      throw ParseError(std::string("expected ") + expected + " at end of input", peek().pos);
    throw ParseError(std::string("expected ") + expected + " before \"" + peek().text + "\"",
                     peek().pos);
  }

  Formula impl() {
    Formula lhs = disj();
    if (peek().type == Tok::Arrow) {
      advance();
      return Formula::implies(std::move(lhs), impl());  // right-associative
    }
    return lhs;
  }

  Formula disj() {
    Formula f = conj();
    while (peek().type == Tok::OrOp) {
      advance();
      f = Formula::disj(std::move(f), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = tens();
    while (peek().type == Tok::AndOp) {
      advance();
      f = Formula::conj(std::move(f), tens());
    }
    return f;
  }

  Formula tens() {
    Formula f = atom();
    while (peek().type == Tok::Star) {
      advance();
      f = Formula::tensor(std::move(f), atom());
    }
    return f;
  }

  Formula atom() {
    switch (peek().type) {
      case Tok::Ident: return Formula::atom(advance().text);
      case Tok::Bot: advance(); return Formula::bottom();
      case Tok::Top: advance(); return Formula::top();
      case Tok::LParen: {
        advance();
        Formula f = impl();
        expect(Tok::RParen, "')'");
        return f;
      }
      default: fail("a formula");
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  Sequent s = p.sequent();
  p.expect_end();
  return s;
}

}  // namespace blw
