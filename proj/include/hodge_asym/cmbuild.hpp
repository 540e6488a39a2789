#pragma once

// Character-level data of the CM construction: the prime l, the
// representation V of the first abelian factor, a typical U with CM types for
// the second, Shimura-Taniyama slopes, and the oriented product Z = A x B with
// its G-equivariant Hodge diamond.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodge_asym/cyclochar.hpp"
#include "hodge_asym/errors.hpp"
#include "hodge_asym/hodge_poly.hpp"
#include "hodge_asym/rational.hpp"

namespace hodge_asym {

inline constexpr int kDefaultLBound = 1000;
inline constexpr int kDefaultMaxLayers = 3;

/// Smallest prime l <= bound, l != p, with ord(p mod l) divisible by 4.
inline PrimeContext find_l(int p, int bound = kDefaultLBound) {
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, "p=" + std::to_string(p) + " is not prime");
  if (bound < 5) fail(ErrorKind::InvalidInput, "search bound for l must be >= 5");
  for (int l = 3; l <= bound; l += 2) {
    if (l == p || !is_prime(l)) continue;
    if (multiplicative_order(p, l) % 4 == 0) return PrimeContext::make(p, l);
  }
  fail(ErrorKind::NotFoundWithinBound,
       "no prime l <= " + std::to_string(bound) + " with 4 | ord(" + std::to_string(p) + " mod l)");
}

/// One <p>-coset of (Z/l)^x and its two <p^2>-cosets; `first` contains the
/// smallest residue of the orbit, `second` = p * first.
struct FrobeniusOrbit {
  std::vector<int> residues;
  std::vector<int> first;
  std::vector<int> second;
};

/// <p>-cosets ordered by smallest element.
inline std::vector<FrobeniusOrbit> frobenius_orbits(const PrimeContext& ctx) {
  std::vector<FrobeniusOrbit> out;
  std::vector<bool> seen(static_cast<std::size_t>(ctx.l), false);
  for (int a = 1; a < ctx.l; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    FrobeniusOrbit orbit;
    std::int64_t x = a;
    for (int t = 0; t < ctx.ord; ++t) {
      orbit.residues.push_back(static_cast<int>(x));
      (t % 2 == 0 ? orbit.first : orbit.second).push_back(static_cast<int>(x));
      seen[static_cast<std::size_t>(x)] = true;
      x = x * ctx.p % ctx.l;
    }
    std::sort(orbit.residues.begin(), orbit.residues.end());
    std::sort(orbit.first.begin(), orbit.first.end());
    std::sort(orbit.second.begin(), orbit.second.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

/// Per-orbit choice of which <p^2>-coset goes into V: false keeps the one
/// containing the smallest residue. An empty selector means all false.
using VSelector = std::vector<bool>;

inline VSelector parse_selector(const std::string& text, const PrimeContext& ctx) {
  const auto count = frobenius_orbits(ctx).size();
  if (text == "default") return VSelector(count, false);
  if (text == "alt") return VSelector(count, true);
  if (text.size() == count && std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1'; })) {
    VSelector out;
    for (char c : text) out.push_back(c == '1');
    return out;
  }
  fail(ErrorKind::InvalidInput, "selector must be 'default', 'alt' or a 0/1 string of length " +
                                    std::to_string(count) + ", got '" + text + "'");
}

inline std::string format_selector(const VSelector& sel) {
  std::string out;
  for (bool b : sel) out += b ? '1' : '0';
  return out;
}

inline CharRep build_V(const PrimeContext& ctx, const VSelector& selector = {}) {
  auto orbits = frobenius_orbits(ctx);
  if (!selector.empty() && selector.size() != orbits.size()) {
    fail(ErrorKind::InvalidInput, "selector needs one entry per Frobenius orbit (" + std::to_string(orbits.size()) + ")");
  }
  CharRep v(ctx.l);
  std::vector<std::int64_t> exps;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const bool flip = !selector.empty() && selector[k];
    for (int a : flip ? orbits[k].second : orbits[k].first) exps.push_back(a);
  }
  return CharRep::from_exponents(ctx.l, exps);
}

inline CharRep tau(const CharRep& v, const PrimeContext& ctx) { return frobenius_twist(v, ctx.p); }

/// Phi = { -a : a in the layer }.
inline std::vector<int> cm_type(const CharRep& layer) {
  const int l = layer.modulus();
  auto d = typical_layer_count(layer);
  if (!d || *d != 1 || layer.rank() != (l - 1) / 2) {
    fail(ErrorKind::InvalidInput, "CM type needs a single typical layer of rank (l-1)/2");
  }
  std::vector<int> phi;
  for (int a : layer.support()) phi.push_back(static_cast<int>(mod_floor(-a, l)));
  std::sort(phi.begin(), phi.end());
  return phi;
}

inline void check_cm_type(const std::vector<int>& phi, int l) {
  std::vector<int> hit(static_cast<std::size_t>(l), 0);
  for (int a : phi) {
    if (a <= 0 || a >= l) fail(ErrorKind::InvalidInput, "CM type entries must be nonzero residues");
    ++hit[static_cast<std::size_t>(a)];
    ++hit[static_cast<std::size_t>(l - a)];
  }
  for (int a = 1; a < l; ++a) {
    if (hit[static_cast<std::size_t>(a)] != 1) fail(ErrorKind::InvalidInput, "not a CM type: Phi and -Phi must partition (Z/l)^x");
  }
}

/// Shimura-Taniyama: slope |Phi cap O| / |O| with multiplicity |O| per <p>-orbit O.
inline SlopeMultiset st_slopes(const std::vector<int>& phi, const PrimeContext& ctx) {
  check_cm_type(phi, ctx.l);
  SlopeMultiset out;
  for (const auto& orbit : frobenius_orbits(ctx)) {
    Count inter = 0;
    for (int a : orbit.residues) inter += std::binary_search(phi.begin(), phi.end(), a) ? 1 : 0;
    const auto size = static_cast<Count>(orbit.residues.size());
    out[Rational(inter, size)] += size;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Typical U search
// ---------------------------------------------------------------------------

struct TypicalCandidate {
  CharRep U;
  Count r0 = 0;  // rk Lambda^3(V + U)^G
  Count r1 = 0;  // rk Lambda^3(tau V + U^dual)^G

  bool operator==(const TypicalCandidate&) const = default;
};

/// Typical representations with `layers` layers, lexicographic in the counts
/// (c_1, ..., c_h), h = (l-1)/2, where c_a layers take l-a instead of a.
inline std::vector<CharRep> typical_candidates(int l, int layers) {
  const int h = (l - 1) / 2;
  std::vector<int> c(static_cast<std::size_t>(h), 0);
  std::vector<CharRep> out;
  while (true) {
    std::vector<Count> mult(static_cast<std::size_t>(l), 0);
    for (int a = 1; a <= h; ++a) {
      mult[static_cast<std::size_t>(a)] = layers - c[static_cast<std::size_t>(a - 1)];
      mult[static_cast<std::size_t>(l - a)] = c[static_cast<std::size_t>(a - 1)];
    }
    out.emplace_back(l, std::move(mult));
    int pos = h - 1;
    while (pos >= 0 && c[static_cast<std::size_t>(pos)] == layers) c[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++c[static_cast<std::size_t>(pos)];
  }
  return out;
}

inline TypicalCandidate evaluate_candidate(const CharRep& v, const CharRep& u, const PrimeContext& ctx) {
  return {u, invariants_rank(exterior_power(direct_sum(v, u), 3)),
          invariants_rank(exterior_power(direct_sum(tau(v, ctx), dual(u)), 3))};
}

inline std::vector<TypicalCandidate> typical_candidate_table(const CharRep& v, const PrimeContext& ctx, int layers) {
  std::vector<TypicalCandidate> out;
  for (auto& u : typical_candidates(ctx.l, layers)) out.push_back(evaluate_candidate(v, u, ctx));
  return out;
}

struct TypicalSearchResult {
  TypicalCandidate hit;
  int layers = 0;
  Count candidates_tried = 0;
};

inline TypicalSearchResult search_typical_U(const CharRep& v, const PrimeContext& ctx, int max_layers = kDefaultMaxLayers) {
  if (max_layers < 1) fail(ErrorKind::InvalidInput, "max_layers must be >= 1");
  if (v.modulus() != ctx.l) fail(ErrorKind::ModulusMismatch, "V is not a representation of Z/" + std::to_string(ctx.l));
  if (dual(v) != v) fail(ErrorKind::InvalidInput, "V must be self-dual");
  if (tau(v, ctx) == v) fail(ErrorKind::InvalidInput, "V must differ from its Frobenius twist");
  Count tried = 0;
  for (int d = 1; d <= max_layers; ++d) {
    for (auto& u : typical_candidates(ctx.l, d)) {
      ++tried;
      auto cand = evaluate_candidate(v, u, ctx);
      if (cand.r0 != cand.r1) return {std::move(cand), d, tried};
    }
  }
  fail(ErrorKind::SearchExhausted,
       "no typical U with distinct invariant ranks using up to " + std::to_string(max_layers) + " layers");
}

// ---------------------------------------------------------------------------
// Z = A x B
// ---------------------------------------------------------------------------

struct CMData {
  PrimeContext ctx;
  VSelector selector;
  CharRep V{5};
  CharRep U{5};
  std::vector<CharRep> U_layers;
  std::vector<std::vector<int>> phi_per_layer;
  CharRep W_omega{5};  // H^0(Z, Omega^1)
  CharRep W_o{5};      // H^1(Z, O)
  bool oriented = false;
  Count r0 = 0;        // pre-orientation rk Lambda^3(W_omega)^G
  Count r1 = 0;        // pre-orientation rk Lambda^3(W_o)^G

  int dim() const { return static_cast<int>(W_omega.rank()); }
  bool operator==(const CMData&) const = default;
};

inline CMData assemble_Z(const CharRep& v, const CharRep& u, const PrimeContext& ctx, const VSelector& selector = {}) {
  require_same_modulus(v, u);
  if (!is_typical(u)) fail(ErrorKind::InvalidInput, "U must be typical");
  CMData z;
  z.ctx = ctx;
  z.selector = selector.empty() ? VSelector(frobenius_orbits(ctx).size(), false) : selector;
  z.V = v;
  z.U = u;
  z.U_layers = typical_layers(u);
  for (const auto& layer : z.U_layers) z.phi_per_layer.push_back(cm_type(layer));
  z.W_omega = direct_sum(v, u);
  z.W_o = direct_sum(tau(v, ctx), dual(u));
  z.r0 = invariants_rank(exterior_power(z.W_omega, 3));
  z.r1 = invariants_rank(exterior_power(z.W_o, 3));
  if (z.r0 == z.r1) fail(ErrorKind::EqualRanks, "Lambda^3 invariant ranks coincide; U does not separate");
  if (z.r0 > z.r1) {
    // Pass to the dual abelian scheme: H^0(Omega^1) and H^1(O) swap and dualize.
    auto w_omega = dual(z.W_o);
    z.W_o = dual(z.W_omega);
    z.W_omega = std::move(w_omega);
    z.oriented = true;
  }
  return z;
}

/// h^{i,j} = rk (Lambda^i W_omega tensor Lambda^j W_o)^G.
inline HodgePolynomial equivariant_diamond(const CharRep& w_omega, const CharRep& w_o) {
  require_same_modulus(w_omega, w_o);
  const int l = w_omega.modulus();
  auto a = exterior_powers(w_omega, w_omega.rank());
  auto b = exterior_powers(w_o, w_o.rank());
  HodgePolynomial out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Count h = 0;
      for (int e = 0; e < l; ++e) h += a[i][e] * b[j][-e];
      out.add_term(static_cast<int>(i), static_cast<int>(j), h);
    }
  }
  return out;
}

inline HodgePolynomial equivariant_diamond(const CMData& z) { return equivariant_diamond(z.W_omega, z.W_o); }

/// (h^{n,0}, h^{n-1,1}, ..., h^{0,n}).
inline std::vector<Count> degree_slice_descending(const HodgePolynomial& h, int n) {
  std::vector<Count> out;
  for (int i = n; i >= 0; --i) out.push_back(h.coeff(i, n - i));
  return out;
}

/// The degree-3 slice before the orientation step.
inline std::vector<Count> unoriented_degree3_slice(const CMData& z) {
  const auto& w_omega = z.oriented ? dual(z.W_o) : z.W_omega;
  const auto& w_o = z.oriented ? dual(z.W_omega) : z.W_o;
  return degree_slice_descending(equivariant_diamond(w_omega, w_o), 3);
}

/// Every Shimura-Taniyama slope of every layer is 1/2. The first factor is
/// always isoclinic of slope 1/2 (its p^2-Frobenius is sigma composed with [p]).
inline bool is_isoclinic(const CMData& z) {
  for (const auto& phi : z.phi_per_layer) {
    auto slopes = st_slopes(phi, z.ctx);
    if (slopes.size() != 1 || slopes.begin()->first != Rational(1, 2)) return false;
  }
  return true;
}

/// Newton slopes of the invariant part of H^n in the isoclinic case: n/2 on
/// the whole slice.
inline SlopeMultiset invariant_newton_slopes(const CMData& z, const HodgePolynomial& diamond, int n) {
  if (!is_isoclinic(z)) fail(ErrorKind::ScopeViolation, "invariant slopes are only determined in the isoclinic case");
  Count rank = 0;
  for (int i = 0; i <= n; ++i) rank += diamond.coeff(i, n - i);
  SlopeMultiset out;
  if (rank > 0) out[Rational(n, 2)] = rank;
  return out;
}

}  // namespace hodge_asym
