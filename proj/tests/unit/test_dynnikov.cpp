#include <gtest/gtest.h>

#include "lamcoord/dynnikov.hpp"

namespace lamcoord {
namespace {

DynnikovCoords rho_n23() { return make_dynnikov(signature(2, 3), {-1, 2}, {-2, -1, 2}, {0}, {1, 1}); }
DynnikovCoords rho_n22() { return make_dynnikov(signature(2, 2), {-1}, {2, 0}, {1}, {1, 0}); }

TEST(Encode, OnN23) {
  const auto tau = make_triangle(signature(2, 3), {4, 2, 2, 6}, {2, 6, 8, 4}, {8}, {1, 1});
  EXPECT_EQ(encode(tau), rho_n23());
}

TEST(Encode, OnN22) {
  const auto tau = make_triangle(signature(2, 2), {4, 2}, {6, 2, 2}, {4}, {1, 0});
  EXPECT_EQ(encode(tau), rho_n22());
}

TEST(Encode, LoneCoreCurve) {
  const auto tau = make_triangle(signature(2, 3), {0, 0, 0, 0}, {0, 0, 0, 0}, {0}, {-1, 0});
  EXPECT_EQ(encode(tau), make_dynnikov(signature(2, 3), {0, 0}, {0, 0, 0}, {0}, {-1, 0}));
}

TEST(Encode, RejectsInvalid) {
  const auto tau = make_triangle(signature(2, 2), {4, 2}, {5, 2, 2}, {4}, {1, 0});
  try {
    encode(tau);
    FAIL() << "expected InvalidTriangleCoords";
  } catch (const InvalidTriangleCoords& e) {
    EXPECT_TRUE(e.report().has(ViolationKind::BetaParity));
  }
}

TEST(Psi, KnownValues) {
  EXPECT_EQ(psi_from_dynnikov(rho_n22(), 1), 1);
  EXPECT_EQ(psi_from_dynnikov(rho_n23(), 1), 0);
  EXPECT_EQ(psi_from_dynnikov(make_dynnikov(signature(2, 2), {0}, {3, 7}, {0}, {-5, 0}), 1), 0);
}

TEST(ComputeXY, KnownValues) {
  const XY e2 = compute_xy(rho_n22());
  EXPECT_EQ(e2.x, 6);
  EXPECT_EQ(e2.y, 6);
  const XY e1 = compute_xy(rho_n23());
  EXPECT_EQ(e1.x, 2);
  EXPECT_EQ(e1.y, -2);
  const XY zero = compute_xy(make_dynnikov(signature(2, 2), {0}, {0, 0}, {0}, {0, 1}));
  EXPECT_EQ(zero.x, 0);
  EXPECT_EQ(zero.y, 0);
}

TEST(ComputeXY, EmptyMaxima) {
  const XY k1 = compute_xy(make_dynnikov(signature(1, 3), {1, 0}, {0, 0}, {}, {1}));
  EXPECT_TRUE(k1.x.has_value());
  EXPECT_FALSE(k1.y.has_value());
  const XY n1 = compute_xy(make_dynnikov(signature(3, 1), {}, {0, 0}, {1, 1}, {1, 0, 0}));
  EXPECT_FALSE(n1.x.has_value());
  EXPECT_TRUE(n1.y.has_value());
}

TEST(Decode, OnN22) {
  const DecodeResult r = decode(rho_n22());
  EXPECT_EQ(r.tau, make_triangle(signature(2, 2), {4, 2}, {6, 2, 2}, {4}, {1, 0}));
  EXPECT_EQ(r.intermediates.psi, std::vector<Int>{1});
  EXPECT_EQ(r.intermediates.x, 6);
  EXPECT_EQ(r.intermediates.y, 6);
  EXPECT_EQ(r.intermediates.r, 0);
  EXPECT_EQ(r.intermediates.a_sprime, std::vector<Int>{1});
  EXPECT_EQ(r.intermediates.b_sprime, std::vector<Int>{0});
}

TEST(Decode, OnN23) {
  const DecodeResult r = decode(rho_n23());
  EXPECT_EQ(r.tau, make_triangle(signature(2, 3), {4, 2, 2, 6}, {2, 6, 8, 4}, {8}, {1, 1}));
  EXPECT_EQ(r.intermediates.r, 0);
  EXPECT_EQ(r.intermediates.beta_star, (std::vector<Int>{2, 6, 8, 4}));
}

TEST(Decode, LoneCoreCurve) {
  const auto rho = make_dynnikov(signature(2, 2), {0}, {0, 0}, {0}, {-1, 0});
  const DecodeResult r = decode(rho);
  EXPECT_EQ(r.tau, make_triangle(signature(2, 2), {0, 0}, {0, 0, 0}, {0}, {-1, 0}));
  EXPECT_EQ(r.intermediates.r, 0);
}

TEST(Decode, ZeroTupleRejected) {
  const auto rho = make_dynnikov(signature(2, 2), {0}, {0, 0}, {0}, {0, 0});
  EXPECT_THROW(decode(rho), DomainError);
  EXPECT_EQ(try_decode(rho).failure, DecodeFailure::ZeroTuple);
}

TEST(Decode, ParityObstructionRejected) {
  // t_1 = 1 with psi_1 = 0 would need an odd beta.
  const auto rho = make_dynnikov(signature(2, 2), {0}, {0, 0}, {1}, {0, 0});
  const DecodeOutcome out = try_decode(rho);
  EXPECT_FALSE(out.result.has_value());
  EXPECT_EQ(out.failure, DecodeFailure::ParityObstruction);
  EXPECT_EQ(out.failing_index, 1);
  EXPECT_THROW(decode(rho), DomainError);
}

TEST(Decode, RComponentWithOneCrosscap) {
  // c_1 = 1 with nothing else: the core needs one R-component.
  const auto rho = make_dynnikov(signature(1, 5), {0, 0, 0, 0}, {0, 0, 0, 0}, {}, {1});
  const DecodeResult r = decode(rho);
  EXPECT_EQ(r.intermediates.beta_star.back(), 0);
  EXPECT_EQ(r.intermediates.r, 1);
  EXPECT_EQ(r.tau.beta, (std::vector<Int>{2, 2, 2, 2, 2}));
  EXPECT_EQ(r.tau.alpha, (std::vector<Int>(8, 1)));
  EXPECT_EQ(encode(r.tau), rho);
}

TEST(RCount, KnownValues) {
  EXPECT_EQ(r_count(2, 2), 1);
  EXPECT_EQ(r_count(0, 1), 1);
  EXPECT_EQ(r_count(4, 1), 0);
  for (Int b = 0; b <= 12; b += 2) {
    for (Int c = -3; 2 * c <= b; ++c) EXPECT_EQ(r_count(b, c), 0) << b << " " << c;
  }
}

TEST(Flatten, RoundTrip) {
  const auto rho = rho_n23();
  const auto flat = flatten(rho);
  EXPECT_EQ(flat, (std::vector<Int>{-1, 2, -2, -1, 2, 0, 1, 1}));
  EXPECT_EQ(unflatten(rho.sig, flat), rho);
  EXPECT_THROW(unflatten(rho.sig, {1, 2}), DomainError);
}

class RoundTrip : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(RoundTrip, ParityConsistentTuplesRoundTrip) {
  const auto [k, n] = GetParam();
  const auto sig = signature(k, n);
  const int len = sig.dynnikov_length();
  std::vector<Int> v(static_cast<std::size_t>(len), -1);
  Int round_trips = 0;
  Int obstructed = 0;
  for (;;) {
    const DynnikovCoords rho = unflatten(sig, v);
    if (!rho.is_zero()) {
      const DecodeOutcome out = try_decode(rho);
      if (out.result) {
        ASSERT_TRUE(validate(out.result->tau).valid()) << to_string(rho);
        ASSERT_EQ(encode(out.result->tau), rho) << to_string(rho);
        const auto b = derive_b(out.result->tau);
        EXPECT_EQ(b, rho.b);
        ++round_trips;
      } else {
        ASSERT_EQ(out.failure, DecodeFailure::ParityObstruction);
        ++obstructed;
      }
    }
    std::size_t i = 0;
    while (i < v.size() && v[i] == 1) v[i++] = -1;
    if (i == v.size()) break;
    ++v[i];
  }
  EXPECT_GT(round_trips, 0);
  if (k == 1) EXPECT_EQ(obstructed, 0);
}

INSTANTIATE_TEST_SUITE_P(SmallSurfaces, RoundTrip,
                         ::testing::Values(std::pair{2, 2}, std::pair{1, 3}, std::pair{3, 1}, std::pair{2, 3},
                                           std::pair{1, 2}, std::pair{2, 1}, std::pair{4, 1}));

} // namespace
} // namespace lamcoord
