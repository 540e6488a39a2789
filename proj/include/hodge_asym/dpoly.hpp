#pragma once

// Univariate polynomials in a formal integer parameter d with exact rational
// coefficients (monomial basis). Used for Hodge numbers of families indexed by
// a degree d, e.g. h^{n,0} of a degree-d hypersurface = C(d-1, n+1).

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "hodge_asym/rational.hpp"

namespace hodge_asym {

class DPoly {
 public:
  DPoly() = default;
  DPoly(Rational constant) : coef_{constant} { trim(); }  // NOLINT: implicit by design of arithmetic
  DPoly(Count constant) : DPoly(Rational(constant)) {}   // NOLINT
  DPoly(int constant) : DPoly(Rational(constant)) {}     // NOLINT
  explicit DPoly(std::vector<Rational> coef) : coef_(std::move(coef)) { trim(); }

  static DPoly variable() { return DPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  /// C(d + shift, k) as a polynomial in d.
  static DPoly binomial(Count shift, Count k) {
    DPoly out(Rational(1));
    for (Count t = 0; t < k; ++t) {
      out = out * DPoly(std::vector<Rational>{Rational(shift - t, t + 1), Rational(1, t + 1)});
    }
    return out;
  }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  bool is_zero() const { return coef_.empty(); }
  bool is_constant() const { return degree() <= 0; }

  Rational coefficient(int power) const {
    if (power < 0 || power > degree()) return Rational(0);
    return coef_[static_cast<std::size_t>(power)];
  }
  Rational leading() const { return is_zero() ? Rational(0) : coef_.back(); }
  const std::vector<Rational>& coefficients() const { return coef_; }

  Rational operator()(Count d) const {
    Rational acc(0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * d + *it;
    return acc;
  }

  friend DPoly operator+(const DPoly& a, const DPoly& b) {
    std::vector<Rational> c(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) c[i] += a.coef_[i];
    for (std::size_t i = 0; i < b.coef_.size(); ++i) c[i] += b.coef_[i];
    return DPoly(std::move(c));
  }
  friend DPoly operator-(const DPoly& a) {
    auto c = a.coef_;
    for (auto& x : c) x = -x;
    return DPoly(std::move(c));
  }
  friend DPoly operator-(const DPoly& a, const DPoly& b) { return a + (-b); }
  friend DPoly operator*(const DPoly& a, const DPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coef_.size() + b.coef_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
      for (std::size_t j = 0; j < b.coef_.size(); ++j) c[i + j] += a.coef_[i] * b.coef_[j];
    }
    return DPoly(std::move(c));
  }
  DPoly& operator+=(const DPoly& b) { return *this = *this + b; }

  bool operator==(const DPoly&) const = default;

  /// e.g. "1/2*d^2 - 3/2*d + 1"; "0" for zero.
  std::string to_string(const std::string& var = "d") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      Rational c = coef_[static_cast<std::size_t>(k)];
      if (c == Rational(0)) continue;
      Rational mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        out << to_display_string(mag);
        continue;
      }
      if (mag != Rational(1)) out << to_display_string(mag) << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coef_.empty() && coef_.back() == Rational(0)) coef_.pop_back();
  }

  std::vector<Rational> coef_;
};

/// Interpolates the unique polynomial of degree < values.size() through
/// (first_d + t, values[t]) using forward differences in the basis C(d - first_d, k).
inline DPoly interpolate_forward(Count first_d, const std::vector<Rational>& values) {
  std::vector<Rational> diff = values;
  DPoly out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    out += DPoly(diff[0]) * DPoly::binomial(-first_d, static_cast<Count>(k));
    for (std::size_t t = 0; t + 1 < diff.size() - k; ++t) diff[t] = diff[t + 1] - diff[t];
  }
  return out;
}

}  // namespace hodge_asym
