#include "hodge_asym/pipeline.hpp"

#include <map>
#include <string>

#include "gtest/gtest.h"
#include "hodge_asym/serialize.hpp"

namespace hodge_asym {
namespace {

const Check* find_check(const ConstructionCertificate& c, const std::string& name) {
  for (const auto& k : c.checks) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

std::string failed_checks(const ConstructionCertificate& c) {
  std::string out;
  for (const auto& k : c.checks) {
    if (!k.passed) out += k.name + " (" + k.detail + ") ";
  }
  return out;
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& e : j) {
      if (has_float(e)) return true;
    }
  }
  return false;
}

// Certificates are expensive enough to share across tests.
const ConstructionCertificate& cached(int p, int i, int j) {
  static std::map<std::tuple<int, int, int>, ConstructionCertificate> cache;
  auto key = std::make_tuple(p, i, j);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, theorem_main(p, i, j)).first;
  return it->second;
}

TEST(QuotientTest, CertificateLedger) {
  const auto& c = cached(2, 3, 0);
  auto q = quotient_bookkeeping(c.z_diamond);
  EXPECT_EQ(q.ledger.at(3, 0), LinearForm::constant(-1));
  EXPECT_EQ(q.ledger.at(2, 1), LinearForm::constant(3));
  EXPECT_TRUE(q.ledger.at(1, 0).is_zero());
  EXPECT_TRUE(q.ledger.at(2, 0).is_zero());
  EXPECT_EQ(q.low.h_i0, (std::vector<Count>{1, 0, 2, 0}));
  EXPECT_EQ(q.low.h_0i, (std::vector<Count>{1, 0, 2, 1}));
}

TEST(QuotientTest, SymmetricInputGivesZeroLedger) {
  auto q = quotient_bookkeeping(projective_space(3) * hypersurface(3, 1));
  EXPECT_TRUE(q.ledger.entries().empty());
  EXPECT_THROW(quotient_bookkeeping(HodgePolynomial::monomial(1, 0, 1)), Error);
}

TEST(TheoremMainTest, DegreeThree) {
  const auto& c = cached(2, 3, 0);
  EXPECT_TRUE(c.all_passed()) << failed_checks(c);
  EXPECT_EQ(c.cm.ctx.l, 5);
  EXPECT_EQ(c.degree3_slice, (std::vector<Count>{0, 5, 2, 1}));
  EXPECT_EQ(c.degree3_slice_unoriented, (std::vector<Count>{0, 5, 2, 1}));
  EXPECT_EQ(c.aux.kind, AuxKind::None);
  EXPECT_EQ(c.delta_result.scale, "d'");
  EXPECT_EQ(c.delta_result.exact, DPoly(Count{-1}));
  EXPECT_TRUE(c.delta_result.opaque.empty());
  EXPECT_EQ(c.ledger.at(3, 0).to_string(c.ledger.scale()), "-d'");
  EXPECT_EQ(c.d_policy.kind, "constant");
}

TEST(TheoremMainTest, FourTwoTower) {
  const auto& c = cached(2, 4, 2);
  EXPECT_TRUE(c.all_passed()) << failed_checks(c);
  EXPECT_EQ(c.aux.kind, AuxKind::Tower);
  EXPECT_EQ(c.aux.n, 1);
  EXPECT_EQ(c.aux.s, 1);
  DPoly d = DPoly::variable();
  EXPECT_EQ(c.delta_result.exact, (d - DPoly(Count{1})) * (d - DPoly(Count{2})));
  EXPECT_EQ(c.delta_result.exact, DPoly(Count{2}) * DPoly::binomial(-1, 2));
  EXPECT_TRUE(c.delta_result.opaque_coefficients_d_independent());
}

TEST(TheoremMainTest, FourOneProductOfLines) {
  const auto& c = cached(2, 4, 1);
  EXPECT_TRUE(c.all_passed()) << failed_checks(c);
  EXPECT_EQ(c.aux.kind, AuxKind::P1Power);
  EXPECT_EQ(c.delta_result.exact, -DPoly::variable());
  ASSERT_EQ(c.delta_result.opaque.size(), 1u);
  EXPECT_EQ(c.delta_result.opaque.at("delta^{4,1}"), DPoly(Count{1}));
  EXPECT_EQ(c.d_policy.kind, "all_but_finitely_many");
  EXPECT_EQ(c.d_policy.max_exceptions, 1);
}

TEST(TheoremMainTest, CaseSelection) {
  EXPECT_EQ(choose_aux_case(5, 0).n, 2);
  EXPECT_EQ(choose_aux_case(5, 0).s, 0);
  EXPECT_EQ(choose_aux_case(6, 1).n, 2);
  EXPECT_EQ(choose_aux_case(6, 1).s, 1);
  EXPECT_EQ(choose_aux_case(5, 3).n, 1);
  EXPECT_EQ(choose_aux_case(5, 3).s, 2);
  EXPECT_EQ(choose_aux_case(3, 2).kind, AuxKind::P1Power);
  EXPECT_EQ(choose_aux_case(4, 1).kind, AuxKind::P1Power);
  auto fallback = choose_aux_case(4, 3);
  EXPECT_EQ(fallback.kind, AuxKind::Tower);
  EXPECT_TRUE(fallback.surface_fallback);
  EXPECT_EQ(fallback.n, 2);
  EXPECT_EQ(fallback.s, 1);
  EXPECT_TRUE(choose_aux_case(5, 2).surface_fallback);
  EXPECT_EQ(choose_aux_case(5, 2).s, 1);
}

TEST(TheoremMainTest, EveryTargetUpToDegreeEight) {
  for (int p : {2, 3}) {
    for (int total = 3; total <= 8; ++total) {
      for (int j = 0; 2 * j < total; ++j) {
        const int i = total - j;
        const auto& c = cached(p, i, j);
        EXPECT_TRUE(c.all_passed()) << p << " (" << i << "," << j << "): " << failed_checks(c);
        if (total > 3) {
          EXPECT_TRUE(c.delta_result.exact_nonconstant()) << i << "," << j;
          EXPECT_TRUE(c.delta_result.opaque_coefficients_d_independent()) << i << "," << j;
        }
      }
    }
  }
}

TEST(TheoremMainTest, TransposeNegates) {
  for (auto [i, j] : {std::pair{3, 0}, {4, 2}, {4, 1}, {5, 1}, {4, 3}}) {
    auto c = theorem_main(2, j, i);
    EXPECT_TRUE(c.transposed);
    EXPECT_EQ(c.normalized, (Bidegree{i, j}));
    EXPECT_EQ(c.delta_result, -cached(2, i, j).delta_result);
  }
}

TEST(TheoremMainTest, InvalidTargets) {
  for (auto [i, j] : {std::pair{2, 2}, {2, 0}, {1, 1}, {-1, 5}}) {
    try {
      theorem_main(2, i, j);
      FAIL() << "expected InvalidTarget for " << i << "," << j;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidTarget);
    }
  }
}

TEST(TheoremMainTest, LargerPrimeUsesL13) {
  auto c = theorem_main(11, 3, 0);
  EXPECT_TRUE(c.all_passed()) << failed_checks(c);
  EXPECT_EQ(c.cm.ctx.l, 13);
  EXPECT_LT(c.degree3_slice.front(), c.degree3_slice.back());
}

TEST(TheoremMainTest, IsoclinicWeakAdmissibilityAtEveryDegree) {
  for (int p : {2, 3, 7, 11}) {
    auto c = theorem_main(p, 3, 0);
    ASSERT_TRUE(is_isoclinic(c.cm));
    const int dim = c.cm.dim();
    for (int n = 0; n <= 2 * dim; ++n) {
      Count th = 0;
      Count rank = 0;
      for (int i = 0; i <= n; ++i) {
        th += i * c.z_diamond.coeff(i, n - i);
        rank += c.z_diamond.coeff(i, n - i);
      }
      EXPECT_EQ(2 * th, n * rank) << "p=" << p << " n=" << n;
    }
  }
}

TEST(TheoremMainTest, Deterministic) {
  for (auto [i, j] : {std::pair{3, 0}, {4, 2}}) {
    EXPECT_EQ(serialize_certificate(theorem_main(3, i, j)), serialize_certificate(theorem_main(3, i, j)));
  }
}

TEST(SerializeTest, RoundTrip) {
  ConstructOptions opt;
  opt.polarization = true;
  for (auto [i, j] : {std::pair{3, 0}, {4, 2}, {4, 1}, {1, 4}, {5, 2}}) {
    auto c = theorem_main(2, i, j, opt);
    const auto text = serialize_certificate(c);
    auto back = parse_certificate(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(serialize_certificate(back), text);
    EXPECT_EQ(serialize_certificate(regenerate(back)), text);
    EXPECT_FALSE(has_float(Json::parse(text)));
  }
}

TEST(SerializeTest, RejectsMalformed) {
  EXPECT_THROW(parse_certificate("{"), Error);
  EXPECT_THROW(parse_certificate("{}"), Error);
}

TEST(EmbellishTest, Polarization) {
  ConstructOptions opt;
  opt.polarization = true;
  auto c = theorem_main(3, 4, 2, opt);
  EXPECT_TRUE(c.all_passed()) << failed_checks(c);
  ASSERT_TRUE(c.polarization.has_value());
  EXPECT_EQ(c.polarization->hd, 3);
  EXPECT_EQ(c.polarization->k, 1);
  EXPECT_EQ(c.polarization->dim, c.cm.dim() + 4);
  EXPECT_EQ(c.polarization->choice.n, 1);
  EXPECT_EQ(c.polarization->choice.value, 4);
  EXPECT_NE(find_check(c, "lemma-polarization-offdiagonal"), nullptr);
}

TEST(EmbellishTest, SpecialFiberScope) {
  ConstructOptions opt;
  opt.special_fiber = true;
  try {
    theorem_main(2, 4, 2, opt);
    FAIL() << "expected ScopeViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScopeViolation);
  }
}

// The recomputed special fiber has delta^{3,0} = delta - (l + 1); the checks
// asserting the +(l + 1) shift and the resulting symmetry therefore fail.
TEST(EmbellishTest, SpecialFiberRecordsComputedShift) {
  ConstructOptions opt;
  opt.special_fiber = true;
  auto c = theorem_main(2, 3, 0, opt);
  ASSERT_TRUE(c.special_fiber.has_value());
  EXPECT_EQ(c.special_fiber->multiplier, 1);
  ASSERT_EQ(c.special_fiber->samples.size(), 5u);
  for (const auto& s : c.special_fiber->samples) {
    EXPECT_EQ(s.fix.l, s.d_prime - 1);
    EXPECT_EQ(s.fix.shift, -(s.fix.l + 1));
  }
  EXPECT_TRUE(find_check(c, "lemma-specialfibersym-closed-forms")->passed);
  EXPECT_TRUE(find_check(c, "lemma-specialfibersym-generic-persists")->passed);
  EXPECT_FALSE(find_check(c, "lemma-specialfibersym-shift")->passed);
  EXPECT_FALSE(find_check(c, "lemma-specialfibersym")->passed);
  EXPECT_FALSE(c.all_passed());
}

}  // namespace
}  // namespace hodge_asym
