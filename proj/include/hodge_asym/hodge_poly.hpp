#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "hodge_asym/dpoly.hpp"
#include "hodge_asym/errors.hpp"
#include "hodge_asym/rational.hpp"

namespace hodge_asym {

using Bidegree = std::pair<int, int>;

/// Finitely supported sum of c_{i,j} x^i y^j with i, j >= 0.
/// x tracks the form degree (Omega^i) and y the cohomological degree, so the
/// coefficient at (i, j) is h^{i,j} = dim H^j(Omega^i).
template <class Coeff>
class BivariatePoly {
 public:
  using Terms = std::map<Bidegree, Coeff>;

  BivariatePoly() = default;

  static BivariatePoly from_terms(const std::vector<std::pair<Bidegree, Coeff>>& terms) {
    BivariatePoly out;
    for (const auto& [ij, c] : terms) out.add_term(ij.first, ij.second, c);
    return out;
  }

  static BivariatePoly one() { return monomial(0, 0, Coeff(1)); }

  static BivariatePoly monomial(int i, int j, Coeff c) {
    BivariatePoly out;
    out.add_term(i, j, c);
    return out;
  }

  /// Sum over a of c_a (xy)^a.
  static BivariatePoly diagonal(const std::vector<Coeff>& coeffs) {
    BivariatePoly out;
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
      out.add_term(static_cast<int>(a), static_cast<int>(a), coeffs[a]);
    }
    return out;
  }

  Coeff coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Coeff{} : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int max_i() const {
    int m = -1;
    for (const auto& [ij, c] : terms_) m = std::max(m, ij.first);
    return m;
  }
  int max_j() const {
    int m = -1;
    for (const auto& [ij, c] : terms_) m = std::max(m, ij.second);
    return m;
  }
  int max_total_degree() const {
    int m = -1;
    for (const auto& [ij, c] : terms_) m = std::max(m, ij.first + ij.second);
    return m;
  }

  /// Drops every term with i + j > bound.
  BivariatePoly truncated(int bound) const {
    BivariatePoly out;
    for (const auto& [ij, c] : terms_) {
      if (ij.first + ij.second <= bound) out.terms_.emplace(ij, c);
    }
    return out;
  }

  BivariatePoly transposed() const {
    BivariatePoly out;
    for (const auto& [ij, c] : terms_) out.terms_.emplace(Bidegree{ij.second, ij.first}, c);
    return out;
  }

  bool is_symmetric() const { return *this == transposed(); }

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out = a;
    for (const auto& [ij, c] : b.terms_) out.add_term(ij.first, ij.second, c);
    return out;
  }

  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    return multiply(a, b, std::nullopt);
  }

  /// Product keeping only total degree <= bound (when given).
  static BivariatePoly multiply(const BivariatePoly& a, const BivariatePoly& b,
                                std::optional<int> bound) {
    BivariatePoly out;
    for (const auto& [ij, c] : a.terms_) {
      for (const auto& [kl, e] : b.terms_) {
        const int i = ij.first + kl.first;
        const int j = ij.second + kl.second;
        if (bound && i + j > *bound) continue;
        out.add_term(i, j, c * e);
      }
    }
    return out;
  }

  BivariatePoly pow(int exponent) const {
    if (exponent < 0) fail(ErrorKind::InvalidInput, "negative power");
    BivariatePoly out = one();
    for (int k = 0; k < exponent; ++k) out = out * *this;
    return out;
  }

  /// Multiplies by (xy)^shift.
  BivariatePoly shifted(int shift) const {
    BivariatePoly out;
    for (const auto& [ij, c] : terms_) out.terms_.emplace(Bidegree{ij.first + shift, ij.second + shift}, c);
    return out;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Coeff&>()))>;
    BivariatePoly<Out> out;
    for (const auto& [ij, c] : terms_) out.add_term(ij.first, ij.second, f(c));
    return out;
  }

  bool operator==(const BivariatePoly&) const = default;

  void add_term(int i, int j, const Coeff& c) {
    if (i < 0 || j < 0) fail(ErrorKind::InvalidInput, "negative bidegree");
    if constexpr (std::is_integral_v<Coeff>) {
      if (c < 0) fail(ErrorKind::InvalidInput, "Hodge polynomial coefficients must be non-negative");
    }
    if (c == Coeff{}) return;
    auto [it, inserted] = terms_.emplace(Bidegree{i, j}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second == Coeff{}) terms_.erase(it);
    }
  }

 private:
  Terms terms_;
};

using HodgePolynomial = BivariatePoly<Count>;
/// Hodge numbers that are polynomials in a family parameter d.
using SymbolicHodge = BivariatePoly<DPoly>;

inline SymbolicHodge to_symbolic(const HodgePolynomial& h) {
  return h.map_coefficients([](Count c) { return DPoly(c); });
}

inline HodgePolynomial evaluate(const SymbolicHodge& h, Count d) {
  HodgePolynomial out;
  for (const auto& [ij, poly] : h.terms()) {
    Rational v = poly(d);
    if (v.denominator() != 1) {
      fail(ErrorKind::VerificationFailed, "non-integral Hodge number at d=" + std::to_string(d));
    }
    out.add_term(ij.first, ij.second, v.numerator());
  }
  return out;
}

/// A Hodge polynomial known only up to total degree `bound`
/// (formal power series truncated at i + j <= bound).
class HodgeSeries {
 public:
  HodgeSeries(HodgePolynomial poly, int bound) : bound_(bound), poly_(poly.truncated(bound)) {
    if (bound < 0) fail(ErrorKind::InvalidInput, "negative truncation bound");
  }

  int bound() const { return bound_; }
  const HodgePolynomial& polynomial() const { return poly_; }
  Count coeff(int i, int j) const { return poly_.coeff(i, j); }

  friend HodgeSeries operator*(const HodgeSeries& a, const HodgeSeries& b) {
    const int bound = std::min(a.bound_, b.bound_);
    return HodgeSeries(HodgePolynomial::multiply(a.poly_, b.poly_, bound), bound);
  }

  bool operator==(const HodgeSeries&) const = default;

 private:
  int bound_;
  HodgePolynomial poly_;
};

// ---------------------------------------------------------------------------
// Text forms
// ---------------------------------------------------------------------------

/// "i,j:c;i,j:c" (terms in (i,j) order). Zero polynomial is "".
inline std::string format_hodge_terms(const HodgePolynomial& h) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [ij, c] : h.terms()) {
    if (!first) out << ";";
    out << ij.first << "," << ij.second << ":" << c;
    first = false;
  }
  return out.str();
}

inline HodgePolynomial parse_hodge_terms(std::string_view text) {
  HodgePolynomial out;
  while (!text.empty()) {
    auto semi = text.find(';');
    auto item = text.substr(0, semi);
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (std::all_of(item.begin(), item.end(), [](char c) { return c == ' '; })) continue;
    auto comma = item.find(',');
    auto colon = item.find(':');
    if (comma == std::string_view::npos || colon == std::string_view::npos || colon < comma) {
      fail(ErrorKind::InvalidInput, "Hodge term must look like 'i,j:c', got '" + std::string(item) + "'");
    }
    auto i = detail::parse_int(item.substr(0, comma), "i");
    auto j = detail::parse_int(item.substr(comma + 1, colon - comma - 1), "j");
    auto c = detail::parse_int(item.substr(colon + 1), "coefficient");
    out.add_term(static_cast<int>(i), static_cast<int>(j), c);
  }
  return out;
}

/// Aligned table: rows are i (form degree), columns j (cohomological degree).
inline std::string format_hodge_table(const HodgePolynomial& h) {
  const int rows = std::max(h.max_i(), 0);
  const int cols = std::max(h.max_j(), 0);
  std::size_t width = 1;
  for (const auto& [ij, c] : h.terms()) width = std::max(width, std::to_string(c).size());
  width = std::max(width, std::to_string(cols).size());
  std::ostringstream out;
  out << "h^{i,j} = dim H^j(Omega^i); rows i, columns j\n";
  out << std::string(4, ' ');
  for (int j = 0; j <= cols; ++j) {
    auto s = std::to_string(j);
    out << " " << std::string(width - s.size(), ' ') << s;
  }
  out << "\n";
  for (int i = 0; i <= rows; ++i) {
    auto label = "i=" + std::to_string(i);
    out << label << std::string(label.size() < 4 ? 4 - label.size() : 0, ' ');
    for (int j = 0; j <= cols; ++j) {
      auto s = std::to_string(h.coeff(i, j));
      out << " " << std::string(width - s.size(), ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace hodge_asym
