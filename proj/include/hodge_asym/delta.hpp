#pragma once

// Hodge asymmetries delta^{i,j} = h^{i,j} - h^{j,i}, partially known.
//
// A ledger holds, for a variety whose diamond is only partly computable, the
// exact deltas in low total degree and opaque placeholders above it. Exact
// entries may be expressed in units of a positive scale symbol (the
// Weil-restriction degree d'), in which case the true value is scale * entry.

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "hodge_asym/dpoly.hpp"
#include "hodge_asym/errors.hpp"
#include "hodge_asym/hodge_poly.hpp"

namespace hodge_asym {

inline std::string delta_symbol(int i, int j) {
  return "delta^{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

/// exact + sum_s coef_s * s over opaque symbols s.
struct LinearForm {
  Count exact = 0;
  std::map<std::string, Count> opaque;

  static LinearForm constant(Count c) { return LinearForm{c, {}}; }
  static LinearForm symbol(const std::string& s) { return LinearForm{0, {{s, 1}}}; }

  bool is_exact() const { return opaque.empty(); }
  bool is_zero() const { return exact == 0 && opaque.empty(); }

  friend LinearForm operator+(LinearForm a, const LinearForm& b) {
    a.exact += b.exact;
    for (const auto& [s, c] : b.opaque) {
      auto& slot = a.opaque[s];
      slot += c;
      if (slot == 0) a.opaque.erase(s);
    }
    return a;
  }
  friend LinearForm operator*(Count k, LinearForm a) {
    if (k == 0) return {};
    a.exact *= k;
    for (auto& [s, c] : a.opaque) c *= k;
    return a;
  }
  friend LinearForm operator-(const LinearForm& a) { return Count{-1} * a; }

  bool operator==(const LinearForm&) const = default;

  std::string to_string(const std::string& scale = "") const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](Count c, const std::string& name) {
      if (c == 0) return;
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      Count mag = c < 0 ? -c : c;
      if (name.empty()) {
        out << mag;
      } else {
        if (mag != 1) out << mag << "*";
        out << name;
      }
    };
    emit(exact, scale);
    for (const auto& [s, c] : opaque) emit(c, s);
    if (first) out << "0";
    return out.str();
  }
};

class DeltaLedger {
 public:
  DeltaLedger() = default;
  DeltaLedger(std::string scale, int exact_through)
      : scale_(std::move(scale)), exact_through_(exact_through) {}

  /// Fully known ledger of a concrete Hodge polynomial.
  static DeltaLedger from_polynomial(const HodgePolynomial& h) {
    DeltaLedger ledger("", INT_MAX);
    for (const auto& [ij, c] : h.terms()) {
      const auto [i, j] = ij;
      if (i > j) {
        Count d = c - h.coeff(j, i);
        if (d != 0) ledger.entries_[{i, j}] = LinearForm::constant(d);
      } else if (i < j && h.coeff(j, i) == 0) {
        ledger.entries_[{j, i}] = LinearForm::constant(-c);
      }
    }
    return ledger;
  }

  const std::string& scale() const { return scale_; }
  int exact_through() const { return exact_through_; }
  const std::map<Bidegree, LinearForm>& entries() const { return entries_; }

  /// Records delta^{i,j}; entries are stored with i > j.
  void set(int i, int j, const LinearForm& value) {
    if (i == j) {
      if (!value.is_zero()) fail(ErrorKind::InvalidInput, "delta^{i,i} is always 0");
      return;
    }
    if (i < j) {
      set(j, i, -value);
      return;
    }
    if (value.is_zero()) {
      entries_.erase({i, j});
    } else {
      entries_[{i, j}] = value;
    }
  }

  /// delta^{i,j}: 0 for negative indices or i = j; antisymmetric; exact
  /// (0 when unrecorded) up to total degree exact_through; an opaque
  /// placeholder beyond unless recorded.
  LinearForm at(int i, int j) const {
    if (i < 0 || j < 0 || i == j) return {};
    if (i < j) return -at(j, i);
    auto it = entries_.find({i, j});
    if (it != entries_.end()) return it->second;
    if (i + j <= exact_through_) return {};
    return LinearForm::symbol(delta_symbol(i, j));
  }

  bool operator==(const DeltaLedger&) const = default;

 private:
  std::string scale_;
  int exact_through_ = INT_MAX;
  std::map<Bidegree, LinearForm> entries_;
};

/// scale * exact(d) + sum_s s * opaque_s(d), a polynomial in the family
/// parameter d whose coefficients mix exact numbers and opaque deltas.
struct DeltaExpr {
  std::string scale;
  DPoly exact;
  std::map<std::string, DPoly> opaque;

  void accumulate(const LinearForm& coefficient, const DPoly& value) {
    if (coefficient.exact != 0) exact += DPoly(coefficient.exact) * value;
    for (const auto& [s, c] : coefficient.opaque) {
      auto& slot = opaque[s];
      slot += DPoly(c) * value;
      if (slot.is_zero()) opaque.erase(s);
    }
  }

  friend DeltaExpr operator-(DeltaExpr e) {
    e.exact = -e.exact;
    for (auto& [s, p] : e.opaque) p = -p;
    return e;
  }

  int exact_degree() const { return exact.degree(); }

  int max_opaque_degree() const {
    int m = -1;
    for (const auto& [s, p] : opaque) m = std::max(m, p.degree());
    return m;
  }

  bool opaque_coefficients_d_independent() const { return max_opaque_degree() <= 0; }

  /// The exact part is a nonconstant polynomial in d.
  bool exact_nonconstant() const { return exact_degree() >= 1; }

  /// The top-degree coefficient in d is exact and nonzero, so the whole
  /// expression vanishes for at most exact_degree() values of d whatever the
  /// opaque symbols are.
  bool leading_coefficient_exact() const {
    return !exact.is_zero() && exact_degree() > max_opaque_degree();
  }

  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const DPoly& p, const std::string& name) {
      if (p.is_zero()) return;
      if (!first) out << " + ";
      first = false;
      if (name.empty()) {
        out << "(" << p.to_string() << ")";
      } else if (p == DPoly(Count{1})) {
        out << name;
      } else {
        out << "(" << p.to_string() << ")*" << name;
      }
    };
    emit(exact, scale);
    for (const auto& [s, p] : opaque) emit(p, s);
    if (first) out << "0";
    return out.str();
  }

  bool operator==(const DeltaExpr&) const = default;
};

namespace detail {

template <class Coeff, class Acc>
void accumulate_product_delta(const DeltaLedger& ledger, const BivariatePoly<Coeff>& h_sym,
                              int i, int j, Acc&& acc) {
  if (!h_sym.is_symmetric()) {
    fail(ErrorKind::NonSymmetricFactor, "product_delta needs a Hodge-symmetric factor");
  }
  for (const auto& [ij, c] : h_sym.terms()) {
    const auto [i2, j2] = ij;
    if (i2 > i || j2 > j) continue;
    acc(ledger.at(i - i2, j - j2), c);
  }
}

}  // namespace detail

/// delta^{i,j}(T x Y) = sum_{i1+i2=i, j1+j2=j} delta^{i1,j1}(T) h^{i2,j2}(Y)
/// for a Hodge-symmetric Y.
inline LinearForm product_delta(const DeltaLedger& ledger, const HodgePolynomial& h_sym, int i, int j) {
  LinearForm out;
  detail::accumulate_product_delta(ledger, h_sym, i, j,
                                   [&](const LinearForm& lf, Count c) { out = out + c * lf; });
  return out;
}

/// Same, for a family Y_d whose Hodge numbers are polynomials in d.
inline DeltaExpr product_delta(const DeltaLedger& ledger, const SymbolicHodge& h_sym, int i, int j) {
  DeltaExpr out;
  out.scale = ledger.scale();
  detail::accumulate_product_delta(ledger, h_sym, i, j,
                                   [&](const LinearForm& lf, const DPoly& c) { out.accumulate(lf, c); });
  return out;
}

}  // namespace hodge_asym
