#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace baire {

using Nat = mpz_class;  // nonnegative, arbitrary precision
using Rat = mpq_class;  // exact rational, kept canonical

// A caller handed in data violating a documented precondition.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A bounded search exhausted its explicit budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search cap was hit because a law or oracle breaks its own contract.
struct LawError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSearchCap = std::uint64_t{1} << 16;

// 2^e as an exact rational; e may be negative.
Rat pow2(long e);

// Parses "p/q" or "p" (decimal-free, arbitrary precision).
Rat parse_rat(const std::string& text);

std::string rat_text(const Rat& q);

}  // namespace baire
