#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "hodge_asym/errors.hpp"

namespace hodge_asym {

using Count = std::int64_t;
using Rational = boost::rational<std::int64_t>;

/// Slope -> multiplicity. Ordered, so iteration walks slopes ascending.
using SlopeMultiset = std::map<Rational, Count>;

/// Serialized form, always "num/den" (den > 0).
inline std::string to_fraction_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Display form: integers print without a denominator.
inline std::string to_display_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return to_fraction_string(q);
}

namespace detail {

inline std::int64_t parse_int(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorKind::InvalidInput, "cannot parse integer " + std::string(what) + " from '" +
                                      std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

/// Accepts "a", "a/b" (b != 0). Result is normalized.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_int(text, "rational"));
  auto num = detail::parse_int(text.substr(0, slash), "numerator");
  auto den = detail::parse_int(text.substr(slash + 1), "denominator");
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace hodge_asym
