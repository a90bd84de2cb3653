#pragma once

// Parsed problem descriptions consumed by the construction compilers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tilearith {

enum class AddVariant { EightTile, SixTile, LType };

struct AdditionSpec {
  std::vector<std::uint64_t> inputs;  // n >= 2 non-negative integers
  AddVariant variant = AddVariant::EightTile;
};

struct SignedTerm {
  int sign = +1;  // +1 or -1
  std::uint64_t magnitude = 0;
};

struct SignedExpressionSpec {
  std::vector<SignedTerm> terms;            // first term's sign must be +1
  std::optional<std::uint64_t> modulus;     // >= 2 when present
};

struct MultiplicationSpec {
  std::vector<std::uint64_t> inputs;  // n >= 2 positive integers
};

struct PrimalitySpec {
  std::uint64_t n = 2;  // >= 2
};

enum class ExprKind { Add, Mul, Signed, SignedMod, Prime };

struct ExpressionSpec {
  ExprKind kind = ExprKind::Add;
  AdditionSpec add;          // Add
  MultiplicationSpec mul;    // Mul
  SignedExpressionSpec sig;  // Signed / SignedMod
  PrimalitySpec prime;       // Prime
};

const char* kind_name(ExprKind k);

// Bit length; bit_length(0) == 1 so zero occupies one input cell.
int bit_length(std::uint64_t v);

}  // namespace tilearith
