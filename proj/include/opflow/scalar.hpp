#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "opflow/errors.hpp"

namespace opflow {

/// Exact rational coefficient. GMP keeps every result of arithmetic in
/// lowest terms with a positive denominator; values built from strings are
/// canonicalized by parse_scalar.
using Scalar = mpq_class;

/// Default entry budget for tensors and matrices.
inline constexpr std::size_t kDefaultMaxEntries = 10'000'000;

/// (-1)^e for any integer exponent, negative ones included.
constexpr int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

/// base^exp, throwing ResourceError once the value passes `limit`.
inline std::size_t checked_pow(std::size_t base, int exp, std::size_t limit = kDefaultMaxEntries) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && r > limit / base) {
      throw ResourceError("tensor of " + std::to_string(base) + "^" + std::to_string(exp) +
                          " entries exceeds the entry budget of " + std::to_string(limit));
    }
    r *= base;
  }
  return r;
}

namespace detail {
inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  }
  return true;
}
}  // namespace detail

/// Parses "p", "-p" or "p/q" (decimal). Throws ParseError on anything else,
/// including a zero denominator.
inline Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is one.
/// p/q in canonical form. GMP arithmetic assumes canonical operands, so
/// prefer this over the two-argument mpq_class constructor.
inline Scalar rational(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  Scalar x(p, q);
  x.canonicalize();
  return x;
}

inline std::string format_scalar(Scalar x) {
  x.canonicalize();
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_str();
}

inline Scalar abs_scalar(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }

}  // namespace opflow
