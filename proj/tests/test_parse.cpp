#include <doctest.h>

#include <vector>

#include "tilearith/parse.hpp"

using namespace tilearith;

TEST_CASE("parse: plain sums") {
  ExpressionSpec s = parse("12+6+2+4");
  CHECK(s.kind == ExprKind::Add);
  CHECK(s.add.inputs == std::vector<std::uint64_t>{12, 6, 2, 4});

  s = parse("  12 +6\t+ 2+4 ");
  CHECK(s.kind == ExprKind::Add);
  CHECK(s.add.inputs == std::vector<std::uint64_t>{12, 6, 2, 4});
}

TEST_CASE("parse: signed and modular expressions") {
  ExpressionSpec s = parse("6-12+4-2 mod 3");
  CHECK(s.kind == ExprKind::SignedMod);
  REQUIRE(s.sig.terms.size() == 4);
  CHECK(s.sig.terms[0].sign == +1);
  CHECK(s.sig.terms[0].magnitude == 6);
  CHECK(s.sig.terms[1].sign == -1);
  CHECK(s.sig.terms[1].magnitude == 12);
  CHECK(s.sig.terms[3].sign == -1);
  REQUIRE(s.sig.modulus.has_value());
  CHECK(*s.sig.modulus == 3);

  s = parse("6-12+4-2");
  CHECK(s.kind == ExprKind::Signed);
  CHECK(!s.sig.modulus.has_value());

  // All-plus with a modulus still compiles through the signed path.
  s = parse("9+8 mod 5");
  CHECK(s.kind == ExprKind::SignedMod);
}

TEST_CASE("parse: products and primality") {
  ExpressionSpec s = parse("5*4*3");
  CHECK(s.kind == ExprKind::Mul);
  CHECK(s.mul.inputs == std::vector<std::uint64_t>{5, 4, 3});

  s = parse("prime 5");
  CHECK(s.kind == ExprKind::Prime);
  CHECK(s.prime.n == 5);
}

TEST_CASE("parse: leading minus becomes a zero first term") {
  ExpressionSpec s = parse("-3+5");
  CHECK(s.kind == ExprKind::Signed);
  REQUIRE(s.sig.terms.size() == 3);
  CHECK(s.sig.terms[0].sign == +1);
  CHECK(s.sig.terms[0].magnitude == 0);
  CHECK(s.sig.terms[1].sign == -1);
  CHECK(s.sig.terms[1].magnitude == 3);
  CHECK(s.sig.terms[2].sign == +1);
}

TEST_CASE("parse: a lone integer is a one-input sum") {
  ExpressionSpec s = parse("12");
  CHECK(s.kind == ExprKind::Add);
  CHECK(s.add.inputs == std::vector<std::uint64_t>{12});
}

TEST_CASE("parse: mixed operators are rejected with a position") {
  try {
    parse("5*4+3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos == 3);
  }
  CHECK_THROWS_AS(parse("5+4*3"), ParseError);
  CHECK_THROWS_AS(parse("5*4 mod 3"), ParseError);
}

TEST_CASE("parse: syntax errors carry positions") {
  try {
    parse("12+");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos == 3);
  }
  try {
    parse("12&4");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos == 2);
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("prime"), ParseError);
  CHECK_THROWS_AS(parse("mod 3"), ParseError);
  CHECK_THROWS_AS(parse("12+6 mod 3 7"), ParseError);
  CHECK_THROWS_AS(parse("hello"), ParseError);
}

TEST_CASE("parse: integer overflow of the host word") {
  CHECK_THROWS_AS(parse("99999999999999999999999"), ParseError);
  CHECK(parse("18446744073709551615").add.inputs[0] == UINT64_MAX);
}

TEST_CASE("parse: canonical print round-trips") {
  auto same = [](const ExpressionSpec& a, const ExpressionSpec& b) {
    if (a.kind != b.kind) return false;
    if (a.add.inputs != b.add.inputs) return false;
    if (a.mul.inputs != b.mul.inputs) return false;
    if (a.sig.modulus != b.sig.modulus) return false;
    if (a.sig.terms.size() != b.sig.terms.size()) return false;
    for (size_t i = 0; i < a.sig.terms.size(); ++i)
      if (a.sig.terms[i].sign != b.sig.terms[i].sign ||
          a.sig.terms[i].magnitude != b.sig.terms[i].magnitude)
        return false;
    return a.prime.n == b.prime.n;
  };

  std::uint64_t seed = 0x2545f4914f6cdd1dull;
  auto next = [&]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  for (int iter = 0; iter < 200; ++iter) {
    ExpressionSpec spec;
    switch (next() % 4) {
      case 0: {
        spec.kind = ExprKind::Add;
        int n = 2 + next() % 4;
        for (int i = 0; i < n; ++i) spec.add.inputs.push_back(next() % 100);
        break;
      }
      case 1: {
        spec.kind = ExprKind::Mul;
        int n = 2 + next() % 3;
        for (int i = 0; i < n; ++i) spec.mul.inputs.push_back(1 + next() % 99);
        break;
      }
      case 2: {
        int n = 2 + next() % 4;
        bool any_minus = false;
        for (int i = 0; i < n; ++i) {
          int sign = i == 0 || next() % 2 ? +1 : -1;
          any_minus = any_minus || sign < 0;
          spec.sig.terms.push_back({sign, next() % 100});
        }
        if (next() % 2) {
          spec.kind = ExprKind::SignedMod;
          spec.sig.modulus = 2 + next() % 50;
        } else if (any_minus) {
          spec.kind = ExprKind::Signed;
        } else {
          spec.kind = ExprKind::Add;
          for (const SignedTerm& t : spec.sig.terms)
            spec.add.inputs.push_back(t.magnitude);
          spec.sig.terms.clear();
        }
        break;
      }
      default:
        spec.kind = ExprKind::Prime;
        spec.prime.n = 2 + next() % 1000;
        break;
    }
    std::string text = print_spec(spec);
    CAPTURE(text);
    CHECK(same(parse(text), spec));
  }
}
