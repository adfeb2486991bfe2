#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qrs {

// Fixed closed alphabet; the declaration order is the canonical term order.
enum class Sym : uint8_t { q = 0, u, v, a, b, c, d, x, y, z };

inline constexpr int kNumSymbols = 10;

inline constexpr std::array<char, kNumSymbols> kSymbolNames = {
    'q', 'u', 'v', 'a', 'b', 'c', 'd', 'x', 'y', 'z'};

inline char symbol_name(Sym s) { return kSymbolNames[static_cast<int>(s)]; }

inline std::optional<Sym> symbol_from_char(char ch) {
  for (int i = 0; i < kNumSymbols; ++i) {
    if (kSymbolNames[i] == ch) return static_cast<Sym>(i);
  }
  return std::nullopt;
}

struct QrsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : QrsError {
  DivisionByZero() : QrsError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : QrsError(what) {}
};

struct VariableMismatch : QrsError {
  explicit VariableMismatch(const std::string& what) : QrsError(what) {}
};

struct OrderExhausted : QrsError {
  explicit OrderExhausted(const std::string& what) : QrsError(what) {}
};

struct NonUnitConstantTerm : QrsError {
  explicit NonUnitConstantTerm(const std::string& what) : QrsError(what) {}
};

struct ArgumentNotSeriesPositive : QrsError {
  explicit ArgumentNotSeriesPositive(const std::string& what) : QrsError(what) {}
};

struct ZeroDenominatorParameter : QrsError {
  explicit ZeroDenominatorParameter(const std::string& what) : QrsError(what) {}
};

struct UnknownIdentity : QrsError {
  explicit UnknownIdentity(const std::string& what) : QrsError(what) {}
};

struct UnsupportedExpression : QrsError {
  explicit UnsupportedExpression(const std::string& what) : QrsError(what) {}
};

}  // namespace qrs
