#include "tilearith/parse.hpp"

#include <cctype>
#include <sstream>

namespace tilearith {

namespace {

struct Token {
  enum Kind { Int, Plus, Minus, Star, Mod, Prime, End } kind;
  std::uint64_t value = 0;
  std::size_t pos = 0;
};

struct Lexer {
  const std::string& text;
  std::size_t i = 0;

  Token next() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i >= text.size()) return {Token::End, 0, i};
    std::size_t start = i;
    char c = text[i];
    if (c == '+') { ++i; return {Token::Plus, 0, start}; }
    if (c == '-') { ++i; return {Token::Minus, 0, start}; }
    if (c == '*') { ++i; return {Token::Star, 0, start}; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::uint64_t digit = static_cast<std::uint64_t>(text[i] - '0');
        if (v > (UINT64_MAX - digit) / 10)
          throw ParseError("integer overflows the host word size", start);
        v = v * 10 + digit;
        ++i;
      }
      return {Token::Int, v, start};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j])))
        ++j;
      std::string word = text.substr(i, j - i);
      i = j;
      if (word == "mod") return {Token::Mod, 0, start};
      if (word == "prime") return {Token::Prime, 0, start};
      throw ParseError("unknown word `" + word + "`", start);
    }
    throw ParseError(std::string("unexpected character `") + c + "`", start);
  }
};

}  // namespace

ExpressionSpec parse(const std::string& text) {
  Lexer lex{text};
  Token t = lex.next();
  ExpressionSpec spec;

  if (t.kind == Token::Prime) {
    t = lex.next();
    if (t.kind != Token::Int)
      throw ParseError("expected an integer after `prime`", t.pos);
    spec.kind = ExprKind::Prime;
    spec.prime.n = t.value;
    t = lex.next();
    if (t.kind != Token::End) throw ParseError("trailing input", t.pos);
    return spec;
  }

  std::vector<SignedTerm> terms;
  bool leading_minus = false;
  if (t.kind == Token::Minus) {  // rewritten as 0 - a1
    leading_minus = true;
    terms.push_back({+1, 0});
    t = lex.next();
  }
  if (t.kind != Token::Int) throw ParseError("expected an integer", t.pos);
  terms.push_back({+1, t.value});
  if (leading_minus) terms.back().sign = -1;

  bool saw_star = false;
  bool saw_plusminus = leading_minus;
  std::optional<std::uint64_t> modulus;
  for (;;) {
    t = lex.next();
    if (t.kind == Token::End) break;
    if (t.kind == Token::Mod) {
      if (saw_star) throw ParseError("`mod` does not apply to products", t.pos);
      t = lex.next();
      if (t.kind != Token::Int)
        throw ParseError("expected an integer after `mod`", t.pos);
      modulus = t.value;
      t = lex.next();
      if (t.kind != Token::End) throw ParseError("trailing input", t.pos);
      break;
    }
    int sign = 0;
    if (t.kind == Token::Plus) sign = +1;
    else if (t.kind == Token::Minus) sign = -1;
    else if (t.kind == Token::Star) sign = 0;
    else throw ParseError("expected an operator", t.pos);
    bool star = t.kind == Token::Star;
    if (star && saw_plusminus)
      throw ParseError("cannot mix `*` with `+`/`-`", t.pos);
    if (!star && saw_star)
      throw ParseError("cannot mix `+`/`-` with `*`", t.pos);
    saw_star = saw_star || star;
    saw_plusminus = saw_plusminus || !star;
    t = lex.next();
    if (t.kind != Token::Int)
      throw ParseError("expected an integer after the operator", t.pos);
    terms.push_back({star ? +1 : sign, t.value});
  }

  if (saw_star) {
    spec.kind = ExprKind::Mul;
    for (const SignedTerm& term : terms) spec.mul.inputs.push_back(term.magnitude);
    return spec;
  }

  bool any_minus = false;
  for (const SignedTerm& term : terms) any_minus = any_minus || term.sign < 0;
  if (modulus) {
    spec.kind = ExprKind::SignedMod;
    spec.sig.terms = terms;
    spec.sig.modulus = modulus;
  } else if (any_minus) {
    spec.kind = ExprKind::Signed;
    spec.sig.terms = terms;
  } else {
    spec.kind = ExprKind::Add;
    for (const SignedTerm& term : terms) spec.add.inputs.push_back(term.magnitude);
  }
  return spec;
}

std::string print_spec(const ExpressionSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case ExprKind::Add:
      for (size_t i = 0; i < spec.add.inputs.size(); ++i)
        out << (i ? "+" : "") << spec.add.inputs[i];
      break;
    case ExprKind::Mul:
      for (size_t i = 0; i < spec.mul.inputs.size(); ++i)
        out << (i ? "*" : "") << spec.mul.inputs[i];
      break;
    case ExprKind::Signed:
    case ExprKind::SignedMod: {
      const auto& terms = spec.sig.terms;
      for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
          if (terms[i].sign < 0) out << "-";
        } else {
          out << (terms[i].sign < 0 ? "-" : "+");
        }
        out << terms[i].magnitude;
      }
      if (spec.sig.modulus) out << " mod " << *spec.sig.modulus;
      break;
    }
    case ExprKind::Prime:
      out << "prime " << spec.prime.n;
      break;
  }
  return out.str();
}

}  // namespace tilearith
