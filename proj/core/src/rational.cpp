#include "kturan/rational.hpp"

#include <limits>

#include "kturan/errors.hpp"

namespace kturan {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::optional<std::uint64_t> binomial_u64(std::uint64_t n, std::uint64_t k) {
  BigInt b = binomial(n, k);
  if (b > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return b.convert_to<std::uint64_t>();
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational acc = base;
  for (unsigned e = exponent; e != 0; e >>= 1) {
    if (e & 1u) result *= acc;
    if (e > 1) acc *= acc;
  }
  return result;
}

BigInt floor_rational(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt d = num / den;
  if (num < 0 && d * den != num) --d;
  return d;
}

BigInt ceil_rational(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt d = num / den;
  if (num > 0 && d * den != num) ++d;
  return d;
}

std::string fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_fraction(std::string_view text) {
  auto fail = [&](std::size_t at, const std::string& msg) -> Rational {
    throw parse_error(msg, at);
  };
  if (text.empty()) return fail(0, "empty fraction");
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) return fail(0, "not an integer");
    return Rational(BigInt(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_int(num)) return fail(0, "bad numerator");
  if (!is_int(den)) return fail(slash + 1, "bad denominator");
  BigInt d{std::string(den)};
  if (d == 0) return fail(slash + 1, "zero denominator");
  return Rational(BigInt(std::string(num)), d);
}

}  // namespace kturan
