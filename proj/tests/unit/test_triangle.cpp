#include <gtest/gtest.h>

#include "lamcoord/dynnikov.hpp"
#include "lamcoord/triangle.hpp"

namespace lamcoord {
namespace {

TriangleCoords lamination_n23() { return make_triangle(signature(2, 3), {4, 2, 2, 6}, {2, 6, 8, 4}, {8}, {1, 1}); }
TriangleCoords lamination_n22() { return make_triangle(signature(2, 2), {4, 2}, {6, 2, 2}, {4}, {1, 0}); }

TEST(MakeTriangle, RejectsWrongLengths) {
  EXPECT_THROW(make_triangle(signature(2, 2), {4}, {6, 2, 2}, {4}, {1, 0}), DomainError);
  EXPECT_THROW(make_triangle(signature(2, 2), {4, 2}, {6, 2, 2}, {}, {1, 0}), DomainError);
}

TEST(CoreEncoding, SignedEntries) {
  EXPECT_EQ(decode_core(3), (CoreEncoding{0, false, 3}));
  EXPECT_EQ(decode_core(0), (CoreEncoding{0, false, 0}));
  EXPECT_EQ(decode_core(-1), (CoreEncoding{0, true, 0}));
  EXPECT_EQ(decode_core(-4), (CoreEncoding{2, false, 0}));
  EXPECT_EQ(decode_core(-5), (CoreEncoding{2, true, 0}));
  for (Int c = -9; c <= 9; ++c) EXPECT_EQ(encode_core(decode_core(c)), c);
}

TEST(DeriveB, KnownValues) {
  EXPECT_EQ(derive_b(lamination_n23()), (std::vector<Int>{-2, -1, 2}));
  EXPECT_EQ(derive_b(lamination_n22()), (std::vector<Int>{2, 0}));
  EXPECT_EQ(derive_b(make_triangle(signature(2, 2), {2, 2}, {4, 4, 4}, {4}, {0, 0})), (std::vector<Int>{0, 0}));
}

TEST(CensusS, OnN23) {
  const auto s1 = census_s(lamination_n23(), 1);
  EXPECT_EQ(s1, (SRegionCensus{2, 0, 2, LoopSide::Left}));
  const auto s2 = census_s(lamination_n23(), 2);
  EXPECT_EQ(s2, (SRegionCensus{1, 5, 1, LoopSide::Left}));
}

TEST(CensusS, EmptyRegion) {
  const auto tau = make_triangle(signature(1, 3), {0, 0, 0, 0}, {0, 0, 0}, {}, {1});
  EXPECT_EQ(census_s(tau, 1), (SRegionCensus{}));
}

TEST(CensusS, NegativeCountIsInfeasible) {
  const auto tau = make_triangle(signature(2, 2), {0, 0}, {4, 0, 0}, {0}, {0, 0});
  try {
    census_s(tau, 1);
    FAIL() << "expected InfeasibleCensus";
  } catch (const InfeasibleCensus& e) {
    EXPECT_EQ(e.region(), "S_1");
    EXPECT_EQ(e.value(), -2);
  }
}

TEST(CensusSPrime, OnN23) {
  const auto c = census_sprime(lamination_n23(), 1);
  EXPECT_EQ(c.noncore_loops, 1);
  EXPECT_EQ(c.core_loops, 1);
  EXPECT_EQ(c.straight_cores, 0);
  EXPECT_EQ(c.above, 2);
  EXPECT_EQ(c.below, 2);
  EXPECT_EQ(c.side, LoopSide::Right);
}

TEST(CensusSPrime, OnN22) {
  const auto c = census_sprime(lamination_n22(), 1);
  EXPECT_EQ(c.straight_cores, 1);
  EXPECT_EQ(c.above, 1);
  EXPECT_EQ(c.below, 0);
  EXPECT_EQ(c.noncore_loops, 0);
  EXPECT_EQ(c.core_loops, 0);
}

TEST(CensusSPrime, NonPrimitiveOnly) {
  const auto tau = make_triangle(signature(2, 2), {0, 0}, {0, 0, 0}, {0}, {-3, 0});
  const auto c = census_sprime(tau, 1);
  EXPECT_EQ(c.above + c.below + c.loops() + c.straight_cores, 0);
  EXPECT_EQ(c.crosscap, (CoreEncoding{1, true, 0}));
}

TEST(CensusEnds, KnownValues) {
  const auto e1 = census_ends(lamination_n23());
  EXPECT_EQ(e1.delta_zero.left_loops, 1);
  EXPECT_EQ(e1.delta_prime_k.noncore_loops, 1);
  EXPECT_EQ(e1.delta_prime_k.core_loops, 1);
  const auto e2 = census_ends(lamination_n22());
  EXPECT_EQ(e2.delta_zero.left_loops, 3);
  EXPECT_EQ(e2.delta_prime_k.noncore_loops, 1);
  EXPECT_EQ(e2.delta_prime_k.core_loops, 0);
  const auto empty = census_ends(make_triangle(signature(2, 2), {0, 0}, {0, 0, 0}, {0}, {-1, 0}));
  EXPECT_EQ(empty.delta_prime_k, (DeltaPrimeKCensus{}));
}

TEST(Validate, WorkedLaminationsAreValid) {
  EXPECT_TRUE(validate(lamination_n23()).valid()) << validate(lamination_n23()).to_string();
  EXPECT_TRUE(validate(lamination_n22()).valid());
}

TEST(Validate, OddBeta) {
  auto tau = lamination_n23();
  tau.beta[0] = 3;
  const auto report = validate(tau);
  EXPECT_FALSE(report.valid());
  EXPECT_TRUE(report.has(ViolationKind::BetaParity));
  EXPECT_NE(report.to_string().find("beta_1"), std::string::npos);
}

TEST(Validate, AllZeroAndNegative) {
  EXPECT_TRUE(validate(make_triangle(signature(2, 2), {0, 0}, {0, 0, 0}, {0}, {0, 0})).has(ViolationKind::AllZero));
  EXPECT_TRUE(validate(make_triangle(signature(2, 2), {-2, 0}, {2, 2, 2}, {2}, {0, 0})).has(ViolationKind::Negative));
}

TEST(Validate, SEqualityBroken) {
  // alpha_1 + alpha_2 must equal max(beta_1, beta_2).
  const auto tau = make_triangle(signature(2, 2), {2, 2}, {2, 2, 2}, {2}, {0, 0});
  EXPECT_TRUE(validate(tau).has(ViolationKind::SEquality));
}

TEST(Validate, ShiftedLaminationFailsFixpoint) {
  auto tau = lamination_n23();
  for (auto& a : tau.alpha) a += 2;
  for (auto& b : tau.beta) b += 2;
  tau.gamma[0] += 4;
  EXPECT_TRUE(validate(tau).has(ViolationKind::Fixpoint));
}

TEST(Validate, BoundaryParallelCurveIsOnlyAFixpointViolation) {
  // The N_{2,3} lamination plus a curve parallel to the boundary.
  auto tau = lamination_n23();
  for (auto& a : tau.alpha) a += 1;
  for (auto& b : tau.beta) b += 2;
  tau.gamma[0] += 2;
  const auto report = validate(tau);
  ASSERT_EQ(report.violations.size(), 1u) << report.to_string();
  EXPECT_EQ(report.violations[0].kind, ViolationKind::Fixpoint);
  EXPECT_EQ(code(report.violations[0].kind), "fixpoint");
}

TEST(Census, EqualitiesHoldOnDecodedCoordinates) {
  // Every decode in a small box satisfies the S and S' equalities.
  const auto sig = signature(2, 3);
  int checked = 0;
  for (Int a1 = -1; a1 <= 1; ++a1) {
    for (Int b3 = -2; b3 <= 2; ++b3) {
      for (Int t = -2; t <= 2; ++t) {
        for (Int c1 = -1; c1 <= 2; ++c1) {
          const auto out = try_decode(make_dynnikov(sig, {a1, 1}, {-1, 0, b3}, {t}, {c1, 1}));
          if (!out.result) continue;
          const TriangleCoords& tau = out.result->tau;
          const RegionCensus rc = census(tau);
          for (int i = 1; i <= 2; ++i) {
            const auto& s = rc.s[static_cast<std::size_t>(i - 1)];
            EXPECT_EQ(s.above + s.below + 2 * s.loops, std::max(tau.beta[i - 1], tau.beta[i]));
          }
          const auto& sp = rc.sprime[0];
          EXPECT_EQ(sp.above + sp.below + sp.straight_cores + 2 * sp.loops(), std::max(tau.beta[2], tau.beta[3]));
          EXPECT_EQ((sp.above - sp.below - sp.straight_cores) % 2, 0);
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 50);
}

} // namespace
} // namespace lamcoord
