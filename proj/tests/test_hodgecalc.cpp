#include "hodge_asym/hodgecalc.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace hodge_asym {
namespace {

HodgePolynomial poly(std::vector<std::pair<Bidegree, Count>> terms) { return HodgePolynomial::from_terms(terms); }

HodgePolynomial random_poly(std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(1, 4);
  HodgePolynomial out;
  for (int k = 0; k < terms; ++k) out.add_term(deg(rng), deg(rng), coef(rng));
  return out;
}

TEST(ProductTest, Examples) {
  auto p1 = projective_space(1);
  EXPECT_EQ(product(p1, p1), poly({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}));
  auto h = poly({{{3, 0}, 1}, {{1, 2}, 4}});
  EXPECT_EQ(product(h, HodgePolynomial::one()), h);
  auto a = poly({{{0, 0}, 1}, {{3, 0}, 1}});
  auto b = poly({{{0, 0}, 1}, {{0, 3}, 1}});
  EXPECT_EQ(product(a, b).coeff(3, 3), 1);
}

TEST(ProductTest, RingLaws) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(rng, 4, 5);
    auto b = random_poly(rng, 4, 5);
    auto c = random_poly(rng, 4, 5);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * HodgePolynomial::one(), a);
  }
}

TEST(ProjectiveSpaceTest, Examples) {
  EXPECT_EQ(projective_space(0), HodgePolynomial::one());
  EXPECT_EQ(projective_space(2), poly({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}}));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(projective_space(n), hypersurface(1, n)) << n;
}

TEST(BlowUpTest, Examples) {
  EXPECT_EQ(blow_up(projective_space(2), HodgePolynomial::one(), 1), poly({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}));
  EXPECT_EQ(blow_up(projective_space(3), projective_space(1), 1),
            poly({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 2}, {{3, 3}, 1}}));
  EXPECT_EQ(blow_up(projective_space(3), HodgePolynomial{}, 2), projective_space(3));
  EXPECT_THROW(blow_up(projective_space(3), projective_space(2), 0), Error);
}

TEST(BlowUpTest, PreservesConnectednessAndShiftsCenter) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto ambient = projective_space(5) + random_poly(rng, 3, 3);
    auto center = random_poly(rng, 3, 3);
    const int r = 1 + trial % 3;
    auto blown = blow_up(ambient, center, r);
    EXPECT_EQ(blown.coeff(0, 0), ambient.coeff(0, 0));
    HodgePolynomial added;
    for (int t = 1; t <= r; ++t) added = added + center.shifted(t);
    EXPECT_EQ(blown, ambient + added);
  }
}

TEST(HypersurfaceTest, Examples) {
  EXPECT_EQ(hypersurface(5, 2).coeff(2, 0), 4);
  auto quartic = hypersurface(4, 2);
  EXPECT_EQ(quartic.coeff(2, 0), 1);
  EXPECT_EQ(quartic.coeff(1, 1), 20);
  EXPECT_EQ(quartic.coeff(0, 2), 1);
  auto cubic = hypersurface(3, 2);
  EXPECT_EQ(cubic.coeff(1, 1), 7);
  EXPECT_EQ(cubic.coeff(2, 0), 0);
  EXPECT_EQ(hypersurface(5, 2).coeff(1, 1), 45);
  EXPECT_THROW(hypersurface(0, 2), Error);
  EXPECT_THROW(hypersurface(3, 0), Error);
}

TEST(HypersurfaceTest, AgreesWithLatticeOracle) {
  for (Count d = 1; d <= 10; ++d) {
    for (int n = 1; n <= 5; ++n) {
      auto h = hypersurface(d, n);
      auto row = oracle::hypersurface_middle_row(d, n);
      for (int p = 0; p <= n; ++p) EXPECT_EQ(h.coeff(p, n - p), row[static_cast<std::size_t>(p)]) << d << "," << n;
      EXPECT_EQ(h.coeff(n, 0), binomial(d - 1, n + 1));
      EXPECT_TRUE(h.is_symmetric());
      for (const auto& [ij, c] : h.terms()) EXPECT_EQ(h.coeff(n - ij.first, n - ij.second), c);
      for (int a = 0; a <= n; ++a) {
        if (2 * a != n) {
          EXPECT_EQ(h.coeff(a, a), 1);
        }
      }
      if (d == 2) {
        EXPECT_EQ(h.coeff(n, 0), 0);
      }
    }
  }
}

TEST(HypersurfaceTest, SymbolicMatchesConcrete) {
  for (int n = 1; n <= 4; ++n) {
    auto sym = hypersurface_symbolic(n);
    for (Count d = 1; d <= 12; ++d) EXPECT_EQ(evaluate(sym, d), hypersurface(d, n)) << d << "," << n;
    EXPECT_EQ(sym.coeff(n, 0), DPoly::binomial(-1, n + 1));
  }
}

TEST(TowerTest, Examples) {
  EXPECT_EQ(blow_up_tower(4, 2, 0).hodge, hypersurface(4, 2));
  auto t = blow_up_tower(3, 1, 1, {3});
  EXPECT_EQ(t.hodge, projective_space(3) + hypersurface(3, 1).shifted(1));
  EXPECT_EQ(t.hodge.coeff(2, 1), 1);
  EXPECT_THROW(blow_up_tower(3, 1, 1, {2}), Error);
  EXPECT_THROW(blow_up_tower(3, 1, 2, {3}), Error);
}

TEST(TowerTest, DecompositionAndOffDiagonalOnset) {
  for (Count d = 3; d <= 7; ++d) {
    for (int n = 1; n <= 3; ++n) {
      for (int s = 0; s <= 3; ++s) {
        auto t = blow_up_tower(d, n, s);
        const auto base = hypersurface(d, n);
        if (s > 0) {
          ASSERT_FALSE(t.f.empty());
          EXPECT_EQ(t.f.front(), 1);
        }
        EXPECT_EQ(t.g.front(), 1);
        HodgePolynomial rebuilt = HodgePolynomial::diagonal(t.f) + (base * HodgePolynomial::diagonal(t.g)).shifted(s);
        EXPECT_EQ(rebuilt, t.hodge);
        int onset = 1 << 20;
        for (const auto& [ij, c] : t.hodge.terms()) {
          if (ij.first != ij.second) onset = std::min(onset, ij.first + ij.second);
        }
        if (base.coeff(n, 0) > 0) {
          EXPECT_EQ(onset, n + 2 * s) << d << "," << n << "," << s;
        }
      }
    }
  }
}

TEST(TowerTest, SymbolicMatchesConcrete) {
  for (int n = 1; n <= 3; ++n) {
    for (int s = 0; s <= 3; ++s) {
      auto sym = blow_up_tower_symbolic(n, s);
      for (Count d = 2; d <= 8; ++d) EXPECT_EQ(evaluate(sym.hodge, d), blow_up_tower(d, n, s).hodge);
    }
  }
}

TEST(StackSeriesTest, Examples) {
  EXPECT_EQ(stack_series(StackKind::MuP, 3).polynomial(),
            poly({{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}}));
  EXPECT_EQ(stack_series(StackKind::ZModP, 3).polynomial(),
            poly({{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 1}}));
  auto prod = stack_series(StackKind::MuP, 3) * stack_series(StackKind::ZModP, 3);
  oracle::Table mu(4, std::vector<oracle::Count>(4, 0));
  oracle::Table z(4, std::vector<oracle::Count>(4, 0));
  mu[0][0] = mu[1][0] = mu[1][1] = mu[2][1] = 1;
  for (int k = 0; k < 4; ++k) z[0][k] = 1;
  auto expect = oracle::table_mul(mu, z);
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; i + j <= 3; ++j) EXPECT_EQ(prod.coeff(i, j), expect[i][j]) << i << "," << j;
  }
  EXPECT_EQ(prod.polynomial().max_total_degree(), 3);
}

TEST(StackSeriesTest, Recurrences) {
  for (int bound : {0, 5, 12}) {
    auto mu = stack_series(StackKind::MuP, bound);
    auto zp = stack_series(StackKind::ZModP, bound);
    for (int k = 0; 2 * k + 2 <= bound; ++k) EXPECT_EQ(mu.coeff(k + 1, k + 1), mu.coeff(k, k));
    for (int k = 0; 2 * k + 3 <= bound; ++k) EXPECT_EQ(mu.coeff(k + 2, k + 1), mu.coeff(k + 1, k));
    for (int k = 0; k + 1 <= bound; ++k) EXPECT_EQ(zp.coeff(0, k + 1), zp.coeff(0, k));
    EXPECT_LE(mu.polynomial().max_total_degree(), bound);
  }
}

TEST(DeltaTest, Examples) {
  auto h = poly({{{0, 0}, 1}, {{3, 0}, 1}});
  EXPECT_EQ(delta(h, 3, 0), 1);
  EXPECT_EQ(delta(h, 0, 3), -1);
  EXPECT_EQ(delta(h, 2, 2), 0);
}

TEST(SpecialFiberTest, SeriesMatchesOracle) {
  for (Count l = 0; l <= 10; ++l) {
    auto lib = auxiliary_special_fiber_series(l);
    auto ref = oracle::special_fiber_series(l);
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 3; ++j) EXPECT_EQ(lib.coeff(i, j), ref[i][j]) << "l=" << l << " (" << i << "," << j << ")";
    }
  }
}

TEST(SpecialFiberTest, ArithmeticOfL) {
  EXPECT_EQ(special_fiber_fix(-3).l, 2);
  EXPECT_EQ(special_fiber_fix(-1).l, 0);
  try {
    special_fiber_fix(0);
    FAIL() << "expected NonNegativeDelta";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonNegativeDelta);
  }
}

// The closed forms for h^{3,0} and h^{0,3} of the product differ by
// -(l + 1) + (h^{3,0} - h^{0,3}), so the product's delta^{3,0} is
// delta - (l + 1), not delta + l + 1. These tests pin the computed value.
TEST(SpecialFiberTest, ShiftIsMinusLPlusOne) {
  for (Count d30 = -1; d30 >= -10; --d30) {
    auto fix = special_fiber_fix(d30);
    EXPECT_TRUE(fix.closed_forms_match);
    EXPECT_EQ(fix.shift, -(fix.l + 1));
    EXPECT_EQ(fix.delta_after, 2 * d30);
    EXPECT_FALSE(fix.symmetric);

    oracle::Table x(4, std::vector<oracle::Count>(4, 0));
    x[0][0] = 1;
    x[0][3] = -d30;
    auto prod = oracle::table_mul(x, oracle::special_fiber_series(fix.l));
    EXPECT_EQ(fix.h30, prod[3][0]);
    EXPECT_EQ(fix.h03, prod[0][3]);
  }
}

TEST(SpecialFiberTest, ClosedFormsWithDegreeTwoClasses) {
  SpecialFiberSlice x{0, 2, 1, 0, 2, 4};
  auto fix = special_fiber_fix(-3, x);
  EXPECT_TRUE(fix.closed_forms_match);
  EXPECT_EQ(special_fiber_product(x, 2), special_fiber_closed_form(x, 2));
  EXPECT_THROW(special_fiber_fix(-3, SpecialFiberSlice{0, 1, 1, 0, 2, 4}), Error);
  EXPECT_THROW(special_fiber_fix(-2, x), Error);
}

TEST(PolarizationTest, Examples) {
  auto a = polarization_degree_search(2, 1, 2, 2);
  EXPECT_EQ(a.n, 1);
  EXPECT_EQ(a.value, 3);
  auto b = polarization_degree_search(1, 1, 2, 2);
  EXPECT_EQ(b.n, 0);
  EXPECT_EQ(b.value, 1);
  EXPECT_EQ(blowup_self_intersection(5, 2, 3, 1), 5 - 1 + 8);
  EXPECT_THROW(polarization_degree_search(1, 0, 2, 2), Error);
  EXPECT_THROW(polarization_degree_search(1, 1, 0, 2), Error);
}

TEST(PolarizationTest, RandomDrawsAreCoprime) {
  std::mt19937 rng(500);
  const std::vector<Count> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<int> small(1, 10);
  std::uniform_int_distribution<int> dims(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const Count p = primes[pick(rng)];
    const Count hd = small(rng);
    const Count k = small(rng);
    const int dim = dims(rng);
    auto c = polarization_degree_search(hd, k, dim, p);
    EXPECT_LE(c.n, p);
    EXPECT_NE(mod_floor(c.value, p), 0);
    EXPECT_EQ(c.value, hd - oracle::ipow(k - c.n, dim) + oracle::ipow(k, dim));
    for (Count n = 0; n < c.n; ++n) EXPECT_EQ(mod_floor(blowup_self_intersection(hd, k, dim, n), p), 0);
  }
}

TEST(WeilRestrictionTest, Examples) {
  auto h = poly({{{0, 0}, 1}, {{2, 1}, 5}, {{1, 2}, 2}, {{0, 3}, 1}, {{1, 1}, 1}});
  EXPECT_EQ(weil_restriction_power(h, 1), h);
  EXPECT_EQ(delta(weil_restriction_power(h, 2), 3, 0), 2 * delta(h, 3, 0));
  EXPECT_EQ(delta(weil_restriction_power(h, 3), 3, 0), 3 * delta(h, 3, 0));
  EXPECT_EQ(weil_restriction_delta30_coefficient(h), -1);
  EXPECT_THROW(weil_restriction_delta30_coefficient(poly({{{1, 0}, 1}})), Error);
  EXPECT_THROW(weil_restriction_power(h, 0), Error);
}

}  // namespace
}  // namespace hodge_asym
