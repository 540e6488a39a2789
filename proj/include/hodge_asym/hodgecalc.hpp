#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hodge_asym/cyclochar.hpp"
#include "hodge_asym/delta.hpp"
#include "hodge_asym/dpoly.hpp"
#include "hodge_asym/errors.hpp"
#include "hodge_asym/hodge_poly.hpp"

namespace hodge_asym {

template <class Coeff>
BivariatePoly<Coeff> product(const BivariatePoly<Coeff>& a, const BivariatePoly<Coeff>& b) {
  return a * b;
}

inline HodgeSeries product(const HodgeSeries& a, const HodgeSeries& b) { return a * b; }

inline HodgePolynomial projective_space(int n) {
  if (n < 0) fail(ErrorKind::InvalidInput, "projective space of negative dimension");
  return HodgePolynomial::diagonal(std::vector<Count>(static_cast<std::size_t>(n) + 1, 1));
}

/// H(Bl_Z Y) = H(Y) + H(Z) * (xy + (xy)^2 + ... + (xy)^r) for Z of codimension r + 1.
template <class Coeff>
BivariatePoly<Coeff> blow_up(const BivariatePoly<Coeff>& ambient, const BivariatePoly<Coeff>& center, int r) {
  if (r <= 0) fail(ErrorKind::InvalidInput, "blow-up center must have codimension >= 2 (r >= 1)");
  std::vector<Coeff> exceptional(static_cast<std::size_t>(r) + 1, Coeff(1));
  exceptional[0] = Coeff{};
  return ambient + center * BivariatePoly<Coeff>::diagonal(exceptional);
}

inline Count delta(const HodgePolynomial& h, int i, int j) { return h.coeff(i, j) - h.coeff(j, i); }

// ---------------------------------------------------------------------------
// Hypersurfaces
// ---------------------------------------------------------------------------

/// #{(a_0, ..., a_{parts-1}) : lo <= a_t <= hi, sum a_t = target}.
inline Count bounded_compositions(int parts, Count lo, Count hi, Count target) {
  if (parts < 0 || target < 0) return 0;
  if (hi < lo) return parts == 0 && target == 0 ? 1 : 0;
  std::vector<Count> ways(static_cast<std::size_t>(target) + 1, 0);
  ways[0] = 1;
  for (int t = 0; t < parts; ++t) {
    std::vector<Count> next(ways.size(), 0);
    for (std::size_t s = 0; s < ways.size(); ++s) {
      if (ways[s] == 0) continue;
      for (Count a = lo; a <= hi && s + static_cast<std::size_t>(a) < ways.size(); ++a) {
        next[s + static_cast<std::size_t>(a)] += ways[s];
      }
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(target)];
}

/// Primitive middle Hodge number h^{p,n-p}_prim of a smooth degree-d
/// hypersurface in P^{n+1}: lattice points a in [1, d-1]^{n+2} with
/// sum a = d (n + 1 - p).
inline Count hypersurface_primitive(Count d, int n, int p) {
  if (p < 0 || p > n) return 0;
  return bounded_compositions(n + 2, 1, d - 1, d * (n + 1 - p));
}

inline void check_hypersurface_args(Count d, int n) {
  if (d < 1) fail(ErrorKind::InvalidInput, "hypersurface degree must be >= 1");
  if (n < 1) fail(ErrorKind::InvalidInput, "hypersurface dimension must be >= 1");
}

/// Hodge diamond of a smooth degree-d hypersurface T_{d,n} in P^{n+1}.
inline HodgePolynomial hypersurface(Count d, int n) {
  check_hypersurface_args(d, n);
  HodgePolynomial h;
  for (int a = 0; a <= n; ++a) {
    if (2 * a != n) h.add_term(a, a, 1);
  }
  for (int p = 0; p <= n; ++p) {
    h.add_term(p, n - p, hypersurface_primitive(d, n, p) + (2 * p == n ? 1 : 0));
  }
  return h;
}

/// The same diamond with every entry a polynomial in d. Middle-row counts are
/// interior lattice-point counts of dilates of a lattice polytope, hence
/// polynomials of degree n + 1 in d (valid for every d >= 1).
inline SymbolicHodge hypersurface_symbolic(int n) {
  check_hypersurface_args(1, n);
  SymbolicHodge h;
  for (int a = 0; a <= n; ++a) {
    if (2 * a != n) h.add_term(a, a, DPoly(Count{1}));
  }
  for (int p = 0; p <= n; ++p) {
    std::vector<Rational> values;
    for (Count d = 1; d <= n + 2; ++d) values.emplace_back(hypersurface_primitive(d, n, p));
    DPoly poly = interpolate_forward(1, values);
    for (Count d = n + 3; d <= n + 4; ++d) {
      if (poly(d) != Rational(hypersurface_primitive(d, n, p))) {
        fail(ErrorKind::VerificationFailed, "middle Hodge number is not polynomial in d");
      }
    }
    if (2 * p == n) poly += DPoly(Count{1});
    h.add_term(p, n - p, poly);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Blow-up towers
// ---------------------------------------------------------------------------

/// Y_0 = T_{d,n}; Y_{t+1} = Bl_{Y_t} P^{N_t}. H(Y_s) = F(xy) + H(T) (xy)^s G(xy).
template <class Coeff>
struct TowerResult {
  BivariatePoly<Coeff> hodge;
  std::vector<Count> ambient_dims;  // N_0 .. N_{s-1}
  std::vector<Count> f;             // F(t), coefficients ascending
  std::vector<Count> g;             // G(t)
};

/// Fills ambient dimensions (default N_t = dim Y_t + 2) and checks codim >= 2.
inline std::vector<Count> tower_ambient_dims(int n, int s, const std::vector<Count>& requested) {
  if (s < 0) fail(ErrorKind::InvalidInput, "tower length must be >= 0");
  if (!requested.empty() && requested.size() != static_cast<std::size_t>(s)) {
    fail(ErrorKind::InvalidInput, "need exactly s ambient dimensions");
  }
  std::vector<Count> dims;
  Count dim = n;
  for (int t = 0; t < s; ++t) {
    Count big_n = requested.empty() ? dim + 2 : requested[static_cast<std::size_t>(t)];
    if (big_n <= dim + 1) {
      fail(ErrorKind::InvalidInput, "ambient P^" + std::to_string(big_n) + " gives codimension < 2 for a center of dimension " +
                                        std::to_string(dim));
    }
    dims.push_back(big_n);
    dim = big_n;
  }
  return dims;
}

namespace detail {

inline std::vector<Count> poly_mul(const std::vector<Count>& a, const std::vector<Count>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Count> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline std::vector<Count> poly_add(std::vector<Count> a, const std::vector<Count>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

template <class Coeff>
TowerResult<Coeff> build_tower(const BivariatePoly<Coeff>& base, int n, int s, const std::vector<Count>& requested) {
  TowerResult<Coeff> out;
  out.ambient_dims = tower_ambient_dims(n, s, requested);
  out.hodge = base;
  out.f = {};
  out.g = {1};
  Count dim = n;
  for (Count big_n : out.ambient_dims) {
    const int r = static_cast<int>(big_n - dim - 1);
    BivariatePoly<Coeff> ambient =
        projective_space(static_cast<int>(big_n)).map_coefficients([](Count c) { return Coeff(c); });
    out.hodge = blow_up(ambient, out.hodge, r);
    // R(t) = t + ... + t^r = t (1 + ... + t^{r-1})
    std::vector<Count> ones(static_cast<std::size_t>(r), 1);
    std::vector<Count> rt(static_cast<std::size_t>(r) + 1, 1);
    rt[0] = 0;
    out.f = poly_add(std::vector<Count>(static_cast<std::size_t>(big_n) + 1, 1), poly_mul(out.f, rt));
    out.g = poly_mul(out.g, ones);
    dim = big_n;
  }
  return out;
}

}  // namespace detail

inline TowerResult<Count> blow_up_tower(Count d, int n, int s, const std::vector<Count>& ambient_dims = {}) {
  return detail::build_tower(hypersurface(d, n), n, s, ambient_dims);
}

inline TowerResult<DPoly> blow_up_tower_symbolic(int n, int s, const std::vector<Count>& ambient_dims = {}) {
  return detail::build_tower(hypersurface_symbolic(n), n, s, ambient_dims);
}

// ---------------------------------------------------------------------------
// Classifying-stack series and the special-fiber correction
// ---------------------------------------------------------------------------

enum class StackKind { MuP, ZModP };

/// Truncated Hodge series of B(mu_p) = (1+x)/(1-xy) or B(Z/p) = 1/(1-y) over F_p.
inline HodgeSeries stack_series(StackKind kind, int bound) {
  if (bound < 0) fail(ErrorKind::InvalidInput, "negative truncation bound");
  HodgePolynomial h;
  for (int k = 0; k <= bound; ++k) {
    if (kind == StackKind::MuP) {
      if (2 * k <= bound) h.add_term(k, k, 1);
      if (2 * k + 1 <= bound) h.add_term(k + 1, k, 1);
    } else {
      h.add_term(0, k, 1);
    }
  }
  return HodgeSeries(h, bound);
}

/// Elliptic curve: 1 + x + y + xy.
inline HodgePolynomial elliptic_curve() {
  return HodgePolynomial::from_terms({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}});
}

/// Keeps only the classes of x^0..x^3 and y^1..y^3 (reduction modulo the
/// monomial ideal (x^4, xy, y^4)).
inline HodgePolynomial reduce_mod_x4_xy_y4(const HodgePolynomial& h) {
  HodgePolynomial out;
  for (const auto& [ij, c] : h.terms()) {
    const auto [i, j] = ij;
    if ((j == 0 && i <= 3) || (i == 0 && j <= 3)) out.add_term(i, j, c);
  }
  return out;
}

/// The part of a special-fiber Hodge polynomial that survives modulo (x^4, xy, y^4).
struct SpecialFiberSlice {
  Count h10 = 0, h20 = 0, h30 = 0;
  Count h01 = 0, h02 = 0, h03 = 0;

  HodgePolynomial polynomial() const {
    return HodgePolynomial::from_terms({{{0, 0}, 1},
                                        {{1, 0}, h10},
                                        {{2, 0}, h20},
                                        {{3, 0}, h30},
                                        {{0, 1}, h01},
                                        {{0, 2}, h02},
                                        {{0, 3}, h03}});
  }
  Count delta30() const { return h30 - h03; }
  bool operator==(const SpecialFiberSlice&) const = default;
};

/// (1/(1-y)) * ((1+x)/(1-xy)) * (1+x+y+xy)^l modulo (x^4, xy, y^4).
inline HodgePolynomial auxiliary_special_fiber_series(Count l) {
  if (l < 0) fail(ErrorKind::InvalidInput, "number of elliptic factors must be >= 0");
  constexpr int kBound = 3;
  HodgeSeries curves(HodgePolynomial::one(), kBound);
  HodgeSeries e(elliptic_curve(), kBound);
  for (Count t = 0; t < l; ++t) curves = curves * e;
  auto series = stack_series(StackKind::ZModP, kBound) * stack_series(StackKind::MuP, kBound) * curves;
  return reduce_mod_x4_xy_y4(series.polynomial());
}

struct SpecialFiberFix {
  Count delta30 = 0;            // input delta^{3,0} of the special fiber
  Count l = 0;                  // number of elliptic-curve factors, -delta30 - 1
  Count h30 = 0, h03 = 0;       // composed special fiber, from the series
  Count delta_after = 0;        // h30 - h03 of the composed special fiber
  Count shift = 0;              // delta_after - delta30
  bool closed_forms_match = false;
  bool symmetric = false;       // delta_after == 0

  bool operator==(const SpecialFiberFix&) const = default;
};

/// h^{3,0} and h^{0,3} of X x Y modulo (x^4, xy, y^4), by direct multiplication.
inline std::pair<Count, Count> special_fiber_product(const SpecialFiberSlice& x, Count l) {
  auto prod = reduce_mod_x4_xy_y4(x.polynomial() * auxiliary_special_fiber_series(l));
  return {prod.coeff(3, 0), prod.coeff(0, 3)};
}

/// Closed forms (valid when h^{1,0} = h^{0,1} = 0):
///   h^{3,0} = C(l,3) + C(l,2) + h^{3,0} + (l+1) h^{2,0}
///   h^{0,3} = C(l,3) + C(l,2) + l + 1 + h^{0,3} + (l+1) h^{0,2}
inline std::pair<Count, Count> special_fiber_closed_form(const SpecialFiberSlice& x, Count l) {
  const Count base = binomial(l, 3) + binomial(l, 2);
  return {base + x.h30 + (l + 1) * x.h20, base + l + 1 + x.h03 + (l + 1) * x.h02};
}

/// Chooses l = -delta30 - 1 elliptic factors and recomputes the composed
/// special fiber. `slice` defaults to the synthetic (h30, h03) = (0, -delta30).
inline SpecialFiberFix special_fiber_fix(Count delta30, std::optional<SpecialFiberSlice> slice = std::nullopt) {
  if (delta30 >= 0) {
    fail(ErrorKind::NonNegativeDelta, "special-fiber correction needs delta^{3,0} < 0, got " + std::to_string(delta30));
  }
  SpecialFiberSlice x = slice.value_or(SpecialFiberSlice{0, 0, 0, 0, 0, -delta30});
  if (x.delta30() != delta30) fail(ErrorKind::InvalidInput, "slice does not have the stated delta^{3,0}");
  if (x.h20 != x.h02 || x.h10 != x.h01) {
    fail(ErrorKind::InvalidInput, "special fiber must be symmetric in degrees 1 and 2");
  }
  SpecialFiberFix out;
  out.delta30 = delta30;
  out.l = -delta30 - 1;
  std::tie(out.h30, out.h03) = special_fiber_product(x, out.l);
  out.delta_after = out.h30 - out.h03;
  out.shift = out.delta_after - delta30;
  if (x.h10 == 0) out.closed_forms_match = special_fiber_closed_form(x, out.l) == std::pair{out.h30, out.h03};
  out.symmetric = out.delta_after == 0;
  return out;
}

// ---------------------------------------------------------------------------
// Prime-to-p polarization after a point blow-up
// ---------------------------------------------------------------------------

struct PolarizationChoice {
  Count n = 0;      // multiplier of the exceptional divisor
  Count value = 0;  // (H + nE)^dim = H^dim - (k - n)^dim + k^dim

  bool operator==(const PolarizationChoice&) const = default;
};

inline Count checked_pow(Count base, int exp) {
  __int128 r = 1;
  for (int t = 0; t < exp; ++t) {
    r *= base;
    if (r > INT64_MAX || r < INT64_MIN) fail(ErrorKind::InvalidInput, "self-intersection overflows 64 bits");
  }
  return static_cast<Count>(r);
}

inline Count blowup_self_intersection(Count hd, Count k, int dim, Count n) {
  return hd - checked_pow(k - n, dim) + checked_pow(k, dim);
}

/// Smallest n >= 0 with H^dim - (k-n)^dim + k^dim not divisible by p.
inline PolarizationChoice polarization_degree_search(Count hd, Count k, int dim, Count p) {
  if (dim < 1) fail(ErrorKind::InvalidInput, "dimension must be >= 1");
  if (k < 1) fail(ErrorKind::InvalidInput, "degree of H on E must be >= 1");
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, "p must be prime");
  for (Count n = 0; n <= p; ++n) {
    Count residue = mod_floor(mod_floor(hd, p) - pow_mod(k - n, dim, p) + pow_mod(k, dim, p), p);
    if (residue != 0) return {n, blowup_self_intersection(hd, k, dim, n)};
  }
  fail(ErrorKind::VerificationFailed, "no multiplier found in 0..p");
}

// ---------------------------------------------------------------------------
// Weil restriction
// ---------------------------------------------------------------------------

/// Hodge polynomial of the d'-fold self-product (base change of a Weil restriction).
inline HodgePolynomial weil_restriction_power(const HodgePolynomial& h, int d_prime) {
  if (d_prime < 1) fail(ErrorKind::InvalidInput, "Weil restriction degree must be >= 1");
  return h.pow(d_prime);
}

/// For an opaque degree d': delta^{3,0}(X) = d' * delta^{3,0}(X'), valid when X'
/// is Hodge-symmetric in degrees 1 and 2. Returns the coefficient of d'.
inline Count weil_restriction_delta30_coefficient(const HodgePolynomial& h) {
  if (delta(h, 1, 0) != 0 || delta(h, 2, 0) != 0) {
    fail(ErrorKind::InvalidInput, "Weil-restriction identity needs symmetry in degrees 1 and 2");
  }
  return delta(h, 3, 0);
}

}  // namespace hodge_asym
