#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flagdepth {

// All combinatorial geometry in this library runs on exact rationals.
// mpq_class keeps values in lowest terms with a positive denominator,
// which is exactly the canonical form the predicates rely on.
using Rat = mpq_class;
using Int = mpz_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parses "p/q", integer, or decimal literals ("-3/4", "12", "0.25",
// "1.5e-3") into an exact rational. Decimals convert exactly.
Rat rat_parse(std::string_view text);

// "p/q", or just "p" when the denominator is 1. Round-trips through
// rat_parse bit-identically.
std::string rat_str(const Rat& q);

double rat_double(const Rat& q);

// Nearest rational with the given power-of-ten denominator. Used when
// ingesting floating-point samples; |value| must stay well below 2^53/den.
Rat rat_round(double value, std::int64_t den = 1'000'000'000'000);

}  // namespace flagdepth
