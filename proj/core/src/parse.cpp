#include "forcealg/parse.hpp"

#include <cctype>
#include <vector>

namespace forcealg {

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Caret, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // 1-based offset in the input
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
    std::size_t pos = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Integer, std::string(s.substr(i, j - i)), pos});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), pos});
      i = j;
    } else {
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        case '/': k = Tok::Slash; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", pos);
      }
      out.push_back({k, std::string(1, c), pos});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, RingPtr ring) : toks_(std::move(toks)), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial acc = Polynomial::zero(ring_);
    bool negative = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negative = next().kind == Tok::Minus;
    acc = acc + parse_term(negative);
    while (peek().kind != Tok::End) {
      Tok k = peek().kind;
      if (k != Tok::Plus && k != Tok::Minus)
        throw ParseError("expected '+' or '-'", peek().pos);
      next();
      acc = acc + parse_term(k == Tok::Minus);
    }
    return acc;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  Polynomial parse_term(bool negative) {
    Scalar coeff = Scalar::one(ring_->field());
    bool saw_anything = false;

    if (peek().kind == Tok::Integer) {
      Token num = next();
      mpz_class n(num.text);
      if (peek().kind == Tok::Slash) {
        next();
        if (peek().kind != Tok::Integer) throw ParseError("expected denominator", peek().pos);
        Token den = next();
        mpz_class d(den.text);
        try {
          coeff = Scalar::fraction(ring_->field(), n, d);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), den.pos);
        }
      } else {
        coeff = Scalar::of_mpz(ring_->field(), n);
      }
      saw_anything = true;
      if (peek().kind == Tok::Star) {
        next();
        if (peek().kind != Tok::Ident) throw ParseError("expected variable after '*'", peek().pos);
      }
    }

    std::vector<std::int64_t> exps(ring_->nvars(), 0);
    while (peek().kind == Tok::Ident) {
      Token var = next();
      if (var.text == "__z" || var.text == "__t")
        throw ParseError("reserved variable name '" + var.text + "'", var.pos);
      auto idx = ring_->var_index(var.text);
      if (!idx) throw ParseError("unknown variable '" + var.text + "'", var.pos);
      std::int64_t e = 1;
      if (peek().kind == Tok::Caret) {
        next();
        if (peek().kind != Tok::Integer) throw ParseError("expected exponent", peek().pos);
        Token expo = next();
        try {
          e = std::stoll(expo.text);
        } catch (const std::exception&) {
          throw ParseError("exponent out of range", expo.pos);
        }
      }
      std::int64_t sum;
      if (__builtin_add_overflow(exps[*idx], e, &sum)) throw ParseError("exponent out of range", var.pos);
      exps[*idx] = sum;
      saw_anything = true;
      if (peek().kind == Tok::Star) {
        next();
        if (peek().kind != Tok::Ident) throw ParseError("expected variable after '*'", peek().pos);
      }
    }

    if (!saw_anything) throw ParseError("expected a term", peek().pos);
    if (negative) coeff = -coeff;
    return Polynomial::term(ring_, Monomial(std::move(exps)), std::move(coeff));
  }

  std::vector<Token> toks_;
  RingPtr ring_;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Parser p(tokenize(text), ring);
  return p.parse();
}

}  // namespace forcealg
