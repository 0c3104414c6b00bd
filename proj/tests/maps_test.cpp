#include <gtest/gtest.h>

#include <random>

#include "hirota/maps.hpp"

namespace hirota {
namespace {

using Q = Rational;
using S = State3<Q>;

// Hand-expanded formulas, kept apart from the library's bracket tables.
S lv_oracle(const S& x) {
  Q x1 = x[0], x2 = x[1], x3 = x[2];
  Q a1 = 1 - x2 + x2 * x3, a2 = 1 - x3 + x3 * x1, a3 = 1 - x1 + x1 * x2;
  return {x1 * a1 / a2, x2 * a2 / a3, x3 * a3 / a1};
}

S kdv_oracle(const S& x) {
  Q x1 = x[0], x2 = x[1], x3 = x[2];
  Q b1 = 1 + x1 * x3 + x1 * x2 * x3 * x3;
  Q b2 = 1 + x1 * x2 + x1 * x1 * x2 * x3;
  Q b3 = 1 + x2 * x3 + x1 * x2 * x2 * x3;
  return {x1 * b1 / b2, x2 * b2 / b3, x3 * b3 / b1};
}

S random_state(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  return {Q(num(rng), den(rng)), Q(num(rng), den(rng)), Q(num(rng), den(rng))};
}

TEST(LvMap, ForwardExample) {
  S y = lv_forward(S{2, 3, 5});
  EXPECT_EQ(y, (S{Q(13, 3), Q(18, 5), Q(25, 13)}));
  EXPECT_EQ(y, lv_oracle(S{2, 3, 5}));
  auto inv = invariants(MapKind::LV, y);
  EXPECT_EQ(inv.r, 30);
  EXPECT_EQ(inv.s, -8);
}

TEST(LvMap, FixedPoint) { EXPECT_EQ(lv_forward(S{1, 1, 1}), (S{1, 1, 1})); }

TEST(LvMap, SingularDenominator) {
  try {
    lv_forward(S{0, 5, 1});
    FAIL();
  } catch (const SingularHit& hit) {
    EXPECT_EQ(hit.denominator(), 1);
  }
}

TEST(KdvMap, ForwardExample) {
  S y = kdv_forward(S{1, 2, 3});
  EXPECT_EQ(y, (S{Q(22, 9), Q(18, 19), Q(57, 22)}));
  EXPECT_EQ(y, kdv_oracle(S{1, 2, 3}));
  auto inv = invariants(MapKind::KdV, y);
  EXPECT_EQ(inv.r, 6);
  EXPECT_EQ(inv.s, 84);
}

TEST(Maps, AgreeWithOracleAndConserveInvariants) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    S x = random_state(rng);
    for (MapKind kind : {MapKind::LV, MapKind::KdV}) {
      S y;
      try {
        y = map_step(kind, x);
      } catch (const SingularHit&) {
        continue;
      }
      EXPECT_EQ(y, kind == MapKind::LV ? lv_oracle(x) : kdv_oracle(x));
      EXPECT_EQ(invariants(kind, y), invariants(kind, x));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1900);
}

TEST(Maps, InverseRoundTrip) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    S x = random_state(rng);
    for (MapKind kind : {MapKind::LV, MapKind::KdV}) {
      try {
        EXPECT_EQ(map_step(kind, map_step(kind, x), Direction::Backward), x);
        EXPECT_EQ(map_step(kind, map_step(kind, x, Direction::Backward)), x);
      } catch (const SingularHit&) {
      }
    }
  }
}

TEST(Maps, CyclicEquivariance) {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    S x = random_state(rng);
    for (MapKind kind : {MapKind::LV, MapKind::KdV}) {
      try {
        EXPECT_EQ(map_step(kind, rotate(x)), rotate(map_step(kind, x)));
      } catch (const SingularHit&) {
      }
    }
  }
}

TEST(Maps, StateIndexIsCyclic) {
  S x{1, 2, 3};
  EXPECT_EQ(x.at(4), x.at(1));
  EXPECT_EQ(x.at(0), x.at(3));
}

TEST(Orbit, LongRationalOrbitConserves) {
  PrecisionScope scope(60);
  State3<BigFloat> x{BigFloat(2), BigFloat(3), BigFloat(5)};
  auto orb = orbit(MapKind::LV, x, 1000);
  ASSERT_FALSE(orb.hit);
  ASSERT_EQ(orb.states.size(), 1001u);
  auto inv = invariants(MapKind::LV, orb.states.back());
  EXPECT_LT(boost::multiprecision::abs(inv.r - 30), BigFloat("1e-40"));
  EXPECT_LT(boost::multiprecision::abs(inv.s + 8), BigFloat("1e-40"));
}

TEST(Orbit, ExactShortOrbitAndBackward) {
  auto fwd = orbit(MapKind::LV, S{2, 3, 5}, 4);
  ASSERT_FALSE(fwd.hit);
  auto back = orbit(MapKind::LV, fwd.states.back(), 4, Direction::Backward);
  ASSERT_FALSE(back.hit);
  EXPECT_EQ(back.states.back(), (S{2, 3, 5}));
}

TEST(Orbit, StopsAtSingularity) {
  auto orb = orbit(MapKind::LV, S{0, 5, 1}, 10);
  ASSERT_TRUE(orb.hit);
  EXPECT_EQ(orb.hit->step, 1);
  EXPECT_EQ(orb.hit->denominator, 1);
  EXPECT_EQ(orb.states.size(), 1u);
  EXPECT_THROW(orbit(MapKind::LV, S{1, 1, 1}, -1), InvalidArgument);
}

TEST(Orbit, SymbolicSeedHitsSingularity) {
  RatFunc r(MultiPoly::r()), s(MultiPoly::s()), one(1);
  State3<RatFunc> seed{(r - s) / (r + one), r * (s + one) / (r - s), (r + one) / (s + one)};
  auto inv = invariants(MapKind::LV, seed);
  EXPECT_EQ(inv.r, r);
  EXPECT_EQ(inv.s, s);
  auto orb = orbit(MapKind::LV, seed, 3);
  ASSERT_TRUE(orb.hit);
  EXPECT_EQ(orb.hit->step, 1);
  EXPECT_EQ(orb.hit->denominator, 1);
}

}  // namespace
}  // namespace hirota
