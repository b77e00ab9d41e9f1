// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sixlogic/error.hpp"

namespace six {

/// Index of a truth value inside a finite matrix.
using Value = std::uint8_t;

/// The six points of the involutive Stone algebra S6. The numeric value of
/// each enumerator is its index in the matrix returned by m6().
enum class TruthValue : Value { Zero = 0, OneThird = 1, N = 2, B = 3, TwoThirds = 4, One = 5 };

inline constexpr std::array<TruthValue, 6> kAllTruthValues = {
    TruthValue::Zero, TruthValue::OneThird, TruthValue::N,
    TruthValue::B,    TruthValue::TwoThirds, TruthValue::One};

inline constexpr Value index_of(TruthValue t) noexcept { return static_cast<Value>(t); }
inline constexpr TruthValue truth_value(Value v) noexcept { return static_cast<TruthValue>(v); }

/// ASCII names, also used by the n-sequent syntax and JSON formats.
inline std::string_view name_of(TruthValue t) noexcept {
  switch (t) {
    case TruthValue::Zero: return "0";
    case TruthValue::OneThird: return "1/3";
    case TruthValue::N: return "n";
    case TruthValue::B: return "b";
    case TruthValue::TwoThirds: return "2/3";
    case TruthValue::One: return "1";
  }
  return "?";
}

inline std::string_view symbol_of(TruthValue t) noexcept {
  switch (t) {
    case TruthValue::Zero: return "𝟎";
    case TruthValue::OneThird: return "⅓";
    case TruthValue::N: return "𝗇";
    case TruthValue::B: return "𝖻";
    case TruthValue::TwoThirds: return "⅔";
    case TruthValue::One: return "𝟏";
  }
  return "?";
}

inline std::optional<TruthValue> parse_truth_value(std::string_view text) noexcept {
  for (TruthValue t : kAllTruthValues)
    if (text == name_of(t) || text == symbol_of(t)) return t;
  if (text == "N") return TruthValue::N;
  if (text == "B") return TruthValue::B;
  return std::nullopt;
}

/// Lattice order of S6: Zero < OneThird < {N, B} < TwoThirds < One, N and B incomparable.
inline constexpr bool leq(TruthValue x, TruthValue y) noexcept {
  if (x == y) return true;
  if (x == TruthValue::Zero || y == TruthValue::One) return true;
  if (y == TruthValue::Zero || x == TruthValue::One) return false;
  if (x == TruthValue::OneThird) return true;
  if (y == TruthValue::TwoThirds) return true;
  return false;
}

}  // namespace six
