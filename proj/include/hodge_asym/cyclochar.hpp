#pragma once

// Character calculus for the cyclic group G = Z/l (l prime).
//
// A representation over a coefficient ring containing the l-th roots of unity
// splits into characters chi_a : sigma -> zeta^a, so it is determined by the
// vector of multiplicities indexed by the exponent a in 0..l-1. Everything the
// construction needs (duals, Frobenius twists, tensor and exterior powers,
// ranks of invariants) is computed from that vector alone.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodge_asym/errors.hpp"
#include "hodge_asym/rational.hpp"

namespace hodge_asym {

// ---------------------------------------------------------------------------
// Small number theory
// ---------------------------------------------------------------------------

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Representative of a mod m in 0..m-1.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  __int128 result = 1 % m;
  __int128 b = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

/// Smallest k >= 1 with a^k = 1 (mod m). Requires gcd(a, m) = 1.
inline int multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m < 2 || std::gcd(mod_floor(a, m), m) != 1) {
    fail(ErrorKind::InvalidInput,
         "multiplicative order undefined for " + std::to_string(a) + " mod " + std::to_string(m));
  }
  std::int64_t x = mod_floor(a, m);
  int k = 1;
  while (x != 1) {
    x = (x * mod_floor(a, m)) % m;
    ++k;
  }
  return k;
}

/// The residues of the cyclic subgroup generated by g in (Z/m)^x, sorted.
inline std::vector<int> cyclic_subgroup(std::int64_t g, int m) {
  std::vector<int> out;
  std::int64_t x = 1;
  do {
    out.push_back(static_cast<int>(x));
    x = (x * mod_floor(g, m)) % m;
  } while (x != 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return static_cast<std::int64_t>(r);
}

// ---------------------------------------------------------------------------
// PrimeContext
// ---------------------------------------------------------------------------

/// The pair (p, l) with the standing condition that the order of p in
/// (Z/l)^x is divisible by 4. `half_ord_group` is the subgroup <p^2>.
struct PrimeContext {
  int p = 0;
  int l = 0;
  int ord = 0;
  std::vector<int> half_ord_group;

  bool operator==(const PrimeContext&) const = default;

  static PrimeContext make(int p, int l) {
    if (!is_prime(p)) fail(ErrorKind::InvalidInput, "p=" + std::to_string(p) + " is not prime");
    if (!is_prime(l)) fail(ErrorKind::InvalidInput, "l=" + std::to_string(l) + " is not prime");
    if (p == l) fail(ErrorKind::InvalidInput, "l must differ from p");
    PrimeContext ctx;
    ctx.p = p;
    ctx.l = l;
    ctx.ord = multiplicative_order(p, l);
    if (ctx.ord % 4 != 0) {
      fail(ErrorKind::InvalidInput, "order of " + std::to_string(p) + " mod " + std::to_string(l) +
                                        " is " + std::to_string(ctx.ord) +
                                        ", not divisible by 4");
    }
    ctx.half_ord_group = cyclic_subgroup(static_cast<std::int64_t>(p) * p, l);
    return ctx;
  }

  bool minus_one_in_half_ord_group() const {
    return std::binary_search(half_ord_group.begin(), half_ord_group.end(), l - 1);
  }
};

// ---------------------------------------------------------------------------
// CharRep
// ---------------------------------------------------------------------------

/// A representation of Z/l given by its character multiplicities.
/// mult[a] is the multiplicity of sigma -> zeta^a. Immutable once built.
class CharRep {
 public:
  explicit CharRep(int l) : l_(checked_modulus(l)), mult_(static_cast<std::size_t>(l), 0) {}

  CharRep(int l, std::vector<Count> mult) : l_(checked_modulus(l)), mult_(std::move(mult)) {
    if (mult_.size() != static_cast<std::size_t>(l_)) {
      fail(ErrorKind::InvalidInput, "multiplicity vector must have length l");
    }
    for (auto m : mult_) {
      if (m < 0) fail(ErrorKind::InvalidInput, "negative multiplicity");
    }
  }

  /// Exponents may be negative or >= l; they are reduced mod l.
  static CharRep from_pairs(int l, const std::vector<std::pair<std::int64_t, Count>>& pairs) {
    CharRep rep(l);
    for (auto [e, m] : pairs) {
      if (m < 0) fail(ErrorKind::InvalidInput, "negative multiplicity");
      rep.mult_[static_cast<std::size_t>(mod_floor(e, l))] += m;
    }
    return rep;
  }

  static CharRep from_exponents(int l, const std::vector<std::int64_t>& exponents) {
    CharRep rep(l);
    for (auto e : exponents) rep.mult_[static_cast<std::size_t>(mod_floor(e, l))] += 1;
    return rep;
  }

  static CharRep trivial(int l) { return from_pairs(l, {{0, 1}}); }

  int modulus() const { return l_; }
  const std::vector<Count>& multiplicities() const { return mult_; }

  Count operator[](std::int64_t exponent) const {
    return mult_[static_cast<std::size_t>(mod_floor(exponent, l_))];
  }

  Count rank() const { return std::accumulate(mult_.begin(), mult_.end(), Count{0}); }

  /// Exponents with multiplicity, ascending.
  std::vector<int> exponents() const {
    std::vector<int> out;
    for (int a = 0; a < l_; ++a) {
      for (Count k = 0; k < mult_[static_cast<std::size_t>(a)]; ++k) out.push_back(a);
    }
    return out;
  }

  std::vector<int> support() const {
    std::vector<int> out;
    for (int a = 0; a < l_; ++a) {
      if (mult_[static_cast<std::size_t>(a)] > 0) out.push_back(a);
    }
    return out;
  }

  bool operator==(const CharRep&) const = default;

 private:
  static int checked_modulus(int l) {
    if (!is_prime(l)) fail(ErrorKind::InvalidInput, "modulus l=" + std::to_string(l) + " is not prime");
    return l;
  }

  int l_;
  std::vector<Count> mult_;
};

inline void require_same_modulus(const CharRep& a, const CharRep& b) {
  if (a.modulus() != b.modulus()) {
    fail(ErrorKind::ModulusMismatch, "l=" + std::to_string(a.modulus()) + " vs l=" +
                                         std::to_string(b.modulus()));
  }
}

inline CharRep direct_sum(const CharRep& a, const CharRep& b) {
  require_same_modulus(a, b);
  auto m = a.multiplicities();
  for (std::size_t e = 0; e < m.size(); ++e) m[e] += b.multiplicities()[e];
  return CharRep(a.modulus(), std::move(m));
}

inline CharRep dual(const CharRep& v) {
  const int l = v.modulus();
  std::vector<Count> m(static_cast<std::size_t>(l), 0);
  for (int a = 0; a < l; ++a) m[static_cast<std::size_t>(a)] = v[-a];
  return CharRep(l, std::move(m));
}

/// V^tau: g acts by rho(g^p), i.e. exponents are multiplied by p.
inline CharRep frobenius_twist(const CharRep& v, std::int64_t p) {
  const int l = v.modulus();
  if (mod_floor(p, l) == 0) {
    fail(ErrorKind::InvalidInput, "Frobenius twist by p=" + std::to_string(p) +
                                      " which is 0 mod l=" + std::to_string(l));
  }
  std::vector<Count> m(static_cast<std::size_t>(l), 0);
  for (int a = 0; a < l; ++a) {
    m[static_cast<std::size_t>(mod_floor(p * a, l))] += v.multiplicities()[static_cast<std::size_t>(a)];
  }
  return CharRep(l, std::move(m));
}

inline CharRep tensor(const CharRep& v, const CharRep& w) {
  require_same_modulus(v, w);
  const int l = v.modulus();
  std::vector<Count> m(static_cast<std::size_t>(l), 0);
  for (int a = 0; a < l; ++a) {
    auto va = v.multiplicities()[static_cast<std::size_t>(a)];
    if (va == 0) continue;
    for (int b = 0; b < l; ++b) {
      m[static_cast<std::size_t>((a + b) % l)] += va * w.multiplicities()[static_cast<std::size_t>(b)];
    }
  }
  return CharRep(l, std::move(m));
}

/// Lambda^0 .. Lambda^max_k of V in one pass, via the generating function
/// prod_i (1 + t x^{a_i}) truncated at t^max_k, with x^l = 1.
inline std::vector<CharRep> exterior_powers(const CharRep& v, std::int64_t max_k) {
  if (max_k < 0) fail(ErrorKind::InvalidInput, "negative exterior power");
  const int l = v.modulus();
  const auto lu = static_cast<std::size_t>(l);
  const auto top = static_cast<std::size_t>(max_k);
  std::vector<std::vector<Count>> coef(top + 1, std::vector<Count>(lu, 0));
  coef[0][0] = 1;
  std::size_t filled = 0;  // highest t-degree that can be nonzero so far
  for (int a : v.exponents()) {
    filled = std::min(filled + 1, top);
    for (std::size_t k = filled; k >= 1; --k) {
      const auto& prev = coef[k - 1];
      auto& cur = coef[k];
      for (std::size_t e = 0; e < lu; ++e) {
        if (prev[e] != 0) cur[(e + static_cast<std::size_t>(a)) % lu] += prev[e];
      }
    }
  }
  std::vector<CharRep> out;
  out.reserve(top + 1);
  for (auto& c : coef) out.emplace_back(l, std::move(c));
  return out;
}

/// Lambda^k V. k > rank gives the zero representation; k = 0 the trivial line.
inline CharRep exterior_power(const CharRep& v, std::int64_t k) {
  if (k < 0) fail(ErrorKind::InvalidInput, "negative exterior power");
  if (k > v.rank()) return CharRep(v.modulus());
  return std::move(exterior_powers(v, k).back());
}

inline Count invariants_rank(const CharRep& v) { return v[0]; }

/// If U is typical, the number d of layers (each layer a set S with
/// S and S^{-1} disjoint, |S| = (l-1)/2); otherwise nullopt.
/// U is typical iff mult[0] = 0 and mult[a] + mult[-a] is the same for every
/// nonzero a; that common value is d.
inline std::optional<Count> typical_layer_count(const CharRep& u) {
  const int l = u.modulus();
  if (l == 2) fail(ErrorKind::InvalidInput, "typicality requires an odd prime modulus");
  if (u[0] != 0) return std::nullopt;
  const Count d = u[1] + u[-1];
  for (int a = 2; a <= (l - 1) / 2; ++a) {
    if (u[a] + u[-a] != d) return std::nullopt;
  }
  return d;
}

inline bool is_typical(const CharRep& u) { return typical_layer_count(u).has_value(); }

/// Splits a typical U into d multiplicity-free layers of rank (l-1)/2.
/// Layer t takes exponent a from the pair {a, -a} while a still has
/// multiplicity left, else -a.
inline std::vector<CharRep> typical_layers(const CharRep& u) {
  auto d = typical_layer_count(u);
  if (!d) fail(ErrorKind::InvalidInput, "representation is not typical");
  const int l = u.modulus();
  std::vector<CharRep> layers;
  for (Count t = 0; t < *d; ++t) {
    std::vector<std::pair<std::int64_t, Count>> pairs;
    for (int a = 1; a <= (l - 1) / 2; ++a) {
      pairs.emplace_back(t < u[a] ? a : l - a, 1);
    }
    layers.push_back(CharRep::from_pairs(l, pairs));
  }
  return layers;
}

// ---------------------------------------------------------------------------
// Text form: "l=5; 1:1,2:1"
// ---------------------------------------------------------------------------

inline std::string format_char_rep(const CharRep& v) {
  std::ostringstream out;
  out << "l=" << v.modulus() << ";";
  bool first = true;
  for (int a : v.support()) {
    out << (first ? " " : ",") << a << ":" << v[a];
    first = false;
  }
  return out.str();
}

inline CharRep parse_char_rep(std::string_view text) {
  auto semi = text.find(';');
  auto head = text.substr(0, semi);
  while (!head.empty() && head.front() == ' ') head.remove_prefix(1);
  if (head.substr(0, 2) != "l=") {
    fail(ErrorKind::InvalidInput, "character text must start with 'l=': '" + std::string(text) + "'");
  }
  const auto l = detail::parse_int(head.substr(2), "modulus");
  if (l < 2 || l > (1 << 20)) fail(ErrorKind::InvalidInput, "modulus out of range");
  std::vector<std::pair<std::int64_t, Count>> pairs;
  if (semi != std::string_view::npos) {
    auto body = text.substr(semi + 1);
    while (!body.empty()) {
      auto comma = body.find(',');
      auto item = body.substr(0, comma);
      body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
      bool blank = std::all_of(item.begin(), item.end(), [](char c) { return c == ' '; });
      if (blank) continue;
      auto colon = item.find(':');
      if (colon == std::string_view::npos) {
        pairs.emplace_back(detail::parse_int(item, "exponent"), 1);
      } else {
        pairs.emplace_back(detail::parse_int(item.substr(0, colon), "exponent"),
                           detail::parse_int(item.substr(colon + 1), "multiplicity"));
      }
    }
  }
  return CharRep::from_pairs(static_cast<int>(l), pairs);
}

}  // namespace hodge_asym
