#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kturan {

// All bound formulas are evaluated in exact arithmetic; no operation in the
// library introduces floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::uint64_t n, std::uint64_t k);

// C(n, k) when it fits in 64 bits, nullopt otherwise.
std::optional<std::uint64_t> binomial_u64(std::uint64_t n, std::uint64_t k);

Rational rational_pow(const Rational& base, unsigned exponent);
BigInt floor_rational(const Rational& q);
BigInt ceil_rational(const Rational& q);

// "p/q" with the denominator always spelled out: "12/1", "-3/4".
std::string fraction_string(const Rational& q);

// Accepts "p" or "p/q" with optional sign; exact.
Rational parse_fraction(std::string_view text);

}  // namespace kturan
