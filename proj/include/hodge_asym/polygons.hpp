#pragma once

// Discrete shadow of a filtered phi-module D = H^n: the Hodge numbers
// h^{i,n-i} (graded dimensions of the Hodge filtration) and the multiset of
// Frobenius slopes. Only endpoint and polygon comparisons are modeled.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "hodge_asym/errors.hpp"
#include "hodge_asym/rational.hpp"

namespace hodge_asym {

struct PolygonData {
  int n = 0;                  // cohomological degree
  std::vector<Count> hodge;   // hodge[i] = h^{i, n-i}, i = 0..n
  SlopeMultiset newton;       // slope -> multiplicity
  int shift = 0;              // Tate-twist offset: hodge[i] sits in filtration index i + shift

  /// Validates lengths, signs and equal ranks.
  static PolygonData make(int n, std::vector<Count> hodge_by_i, SlopeMultiset newton, int shift = 0) {
    if (n < 0) fail(ErrorKind::InvalidInput, "negative degree");
    if (hodge_by_i.size() != static_cast<std::size_t>(n) + 1) {
      fail(ErrorKind::InvalidInput, "Hodge vector of degree " + std::to_string(n) + " needs " +
                                        std::to_string(n + 1) + " entries");
    }
    for (auto h : hodge_by_i) {
      if (h < 0) fail(ErrorKind::InvalidInput, "negative Hodge number");
    }
    for (auto it = newton.begin(); it != newton.end();) {
      if (it->second < 0) fail(ErrorKind::InvalidInput, "negative slope multiplicity");
      it = it->second == 0 ? newton.erase(it) : std::next(it);
    }
    PolygonData pd{n, std::move(hodge_by_i), std::move(newton), shift};
    Count newton_rank = 0;
    for (const auto& [s, m] : pd.newton) newton_rank += m;
    if (newton_rank != pd.rank()) {
      fail(ErrorKind::InvalidInput, "Hodge rank " + std::to_string(pd.rank()) + " differs from Newton rank " +
                                        std::to_string(newton_rank));
    }
    return pd;
  }

  /// Hodge numbers listed as (h^{n,0}, h^{n-1,1}, ..., h^{0,n}).
  static PolygonData from_descending(int n, std::vector<Count> descending, SlopeMultiset newton) {
    std::reverse(descending.begin(), descending.end());
    return make(n, std::move(descending), std::move(newton));
  }

  Count rank() const { return std::accumulate(hodge.begin(), hodge.end(), Count{0}); }

  /// Weight after twisting: slopes are symmetric about weight / 2.
  int weight() const { return n + 2 * shift; }

  std::vector<Count> descending() const { return {hodge.rbegin(), hodge.rend()}; }

  bool operator==(const PolygonData&) const = default;
};

inline Count t_H(const PolygonData& pd) {
  Count acc = 0;
  for (std::size_t i = 0; i < pd.hodge.size(); ++i) acc += (static_cast<Count>(i) + pd.shift) * pd.hodge[i];
  return acc;
}

inline Rational t_N(const SlopeMultiset& slopes) {
  Rational acc(0);
  for (const auto& [s, m] : slopes) acc += s * m;
  return acc;
}

inline Rational t_N(const PolygonData& pd) { return t_N(pd.newton); }

inline bool check_weak_admissibility_endpoints(const PolygonData& pd) { return t_N(pd) == Rational(t_H(pd)); }

/// Multiset form: slopes invariant under lambda -> weight - lambda.
inline bool check_slope_symmetry(const SlopeMultiset& slopes, int weight) {
  for (const auto& [s, m] : slopes) {
    auto it = slopes.find(Rational(weight) - s);
    if (it == slopes.end() || it->second != m) return false;
  }
  return true;
}

inline bool check_slope_symmetry(const PolygonData& pd) { return check_slope_symmetry(pd.newton, pd.weight()); }

/// Scalar consequence: 2 t_N = weight * rank.
inline bool check_slope_symmetry_scalar(const PolygonData& pd) {
  return t_N(pd) * 2 == Rational(static_cast<Count>(pd.weight()) * pd.rank());
}

/// h^{1,n-1} + 2h^{2,n-2} + ... + n h^{n,0} = n h^{0,n} + ... + h^{n-1,1},
/// i.e. 2 t_H = n rank (with n the twisted weight).
inline bool check_degree_relation(const PolygonData& pd) {
  return 2 * t_H(pd) == static_cast<Count>(pd.weight()) * pd.rank();
}

/// For odd n: the rank (a Betti number) is even.
inline bool check_parity(const PolygonData& pd) {
  if (pd.n % 2 == 0) fail(ErrorKind::EvenDegree, "parity check is defined for odd degree only");
  return pd.rank() % 2 == 0;
}

/// Values of a convex polygon from (0,0) with the given ascending slopes, at
/// integer abscissae 0..rank.
/// Polygon height at x, slopes taken in increasing order.
inline Rational polygon_at(const SlopeMultiset& slopes, Count x) {
  Rational y(0);
  for (const auto& [s, m] : slopes) {
    if (x <= 0) break;
    const Count step = std::min(x, m);
    y += s * Rational(step);
    x -= step;
  }
  return y;
}

inline Count polygon_length(const SlopeMultiset& slopes) {
  Count n = 0;
  for (const auto& [s, m] : slopes) n += m;
  return n;
}

inline SlopeMultiset hodge_slopes(const PolygonData& pd) {
  SlopeMultiset out;
  for (std::size_t i = 0; i < pd.hodge.size(); ++i) {
    if (pd.hodge[i] > 0) out[Rational(static_cast<Count>(i) + pd.shift)] += pd.hodge[i];
  }
  return out;
}

/// Endpoints agree and the Newton polygon lies on or above the Hodge polygon.
inline bool newton_above_hodge(const PolygonData& pd) {
  const auto hodge = hodge_slopes(pd);
  const Count len = polygon_length(pd.newton);
  if (len != polygon_length(hodge) || polygon_at(pd.newton, len) != polygon_at(hodge, len)) return false;
  // Both are piecewise linear; comparing at the union of breakpoints suffices.
  std::set<Count> xs;
  for (const auto* poly : {&pd.newton, &hodge}) {
    Count x = 0;
    for (const auto& [s, m] : *poly) xs.insert(x += m);
  }
  for (Count x : xs) {
    if (polygon_at(pd.newton, x) < polygon_at(hodge, x)) return false;
  }
  return true;
}

/// D(m): slopes shift by -m and filtration indices by -m.
inline PolygonData twisted(const PolygonData& pd, int m) {
  SlopeMultiset slopes;
  for (const auto& [s, mult] : pd.newton) slopes[s - m] += mult;
  return PolygonData::make(pd.n, pd.hodge, std::move(slopes), pd.shift - m);
}

/// A single-slope datum a/b (b = rank, a = t_H) with filtration dimensions
/// dim F^i = h^{i,n-i} + ... + h^{n,0}. Irreducible Frobenius makes it weakly
/// admissible; at the polygon level it passes the endpoint and
/// Newton-above-Hodge checks.
struct WeaklyAdmissibleDatum {
  Count a = 0;
  Count b = 0;
  std::vector<Count> filtration_dims;  // F^0 .. F^n
  PolygonData polygon;

  Rational slope() const { return b == 0 ? Rational(0) : Rational(a, b); }
};

inline WeaklyAdmissibleDatum construct_weakly_admissible(int n, const std::vector<Count>& hodge_by_i) {
  auto probe = PolygonData::make(n, hodge_by_i, {{Rational(0), std::accumulate(hodge_by_i.begin(), hodge_by_i.end(), Count{0})}});
  if (!check_degree_relation(probe)) {
    fail(ErrorKind::RelationViolated, "Hodge numbers violate the degree relation 2 t_H = n rank");
  }
  WeaklyAdmissibleDatum out;
  out.b = probe.rank();
  out.a = t_H(probe);
  out.filtration_dims.assign(hodge_by_i.size(), 0);
  Count tail = 0;
  for (std::size_t i = hodge_by_i.size(); i-- > 0;) {
    tail += hodge_by_i[i];
    out.filtration_dims[i] = tail;
  }
  SlopeMultiset newton;
  if (out.b > 0) newton[Rational(out.a, out.b)] = out.b;
  out.polygon = PolygonData::make(n, hodge_by_i, std::move(newton));
  return out;
}

/// t_H recovered from filtration dimensions: sum_{i >= 1} dim F^i.
inline Count t_H_from_filtration(const std::vector<Count>& filtration_dims) {
  Count acc = 0;
  for (std::size_t i = 1; i < filtration_dims.size(); ++i) acc += filtration_dims[i];
  return acc;
}

}  // namespace hodge_asym
