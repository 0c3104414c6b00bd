#include <gtest/gtest.h>

#include <random>

#include "hirota/confinement.hpp"

namespace hirota {
namespace {

MultiPoly P(const char* text) { return parse_poly(text); }
RatFunc F(const MultiPoly& num, const MultiPoly& den) { return RatFunc(num, den); }

const MultiPoly kR = MultiPoly::r(), kS = MultiPoly::s();
const MultiPoly kA2 = P("r+1"), kB2 = P("r-s"), kG2 = P("s+1");
const MultiPoly kA3 = P("-r*s^2 + r^2 - 3*r*s - s"), kB3 = P("3*r*s + r - s^2 + r^2*s");
const MultiPoly kG3 = P("r^2 + s^2 + r + s - r*s + 1");

// Shared by several tests; the symbolic run is the expensive part.
const ConfinementReport& lv_run() {
  static const ConfinementReport rep = confinement_run(MapKind::LV, 10);
  return rep;
}

const IvppTable& lv_table() {
  static const IvppTable table = extract_factors(lv_run(), 6);
  return table;
}

TEST(Seed, LvClosedForm) {
  auto seed = seed_state(MapKind::LV);
  EXPECT_EQ(seed[0], F(kB2, kA2));
  EXPECT_EQ(seed[1], F(kR * kG2, kB2));
  EXPECT_EQ(seed[2], F(kA2, kG2));
}

TEST(Seed, IdentitiesHoldForBothMaps) {
  for (MapKind kind : {MapKind::LV, MapKind::KdV}) {
    auto x = seed_state(kind);
    auto inv = invariants(kind, x);
    EXPECT_EQ(inv.r, RatFunc(kR));
    EXPECT_EQ(inv.s, RatFunc(kS));
    RatFunc one(1);
    RatFunc bracket = kind == MapKind::LV ? one - x[2] + x[2] * x[0] : one + x[0] * x[1] + x[0] * x[0] * x[1] * x[2];
    EXPECT_TRUE(bracket.is_zero());
  }
}

TEST(Confinement, LvPattern) {
  const auto& rep = lv_run();
  EXPECT_EQ(rep.singular_steps, (std::vector<int>{1, 2}));
  EXPECT_EQ(rep.first_regular_step, 3);
  ASSERT_EQ(rep.states.size(), 11u);
  for (int t = 3; t <= 10; ++t) EXPECT_TRUE(rep.states[t].finite()) << t;
  // (inf, 0, 1) then (1, 0, inf)
  EXPECT_FALSE(rep.states[1].x[0]);
  EXPECT_EQ(*rep.states[1].x[1], RatFunc(0));
  EXPECT_EQ(*rep.states[1].x[2], RatFunc(1));
  EXPECT_EQ(*rep.states[2].x[0], RatFunc(1));
  EXPECT_EQ(*rep.states[2].x[1], RatFunc(0));
  EXPECT_FALSE(rep.states[2].x[2]);
}

TEST(Confinement, DisplayedStates) {
  const auto& rep = lv_run();
  auto x3 = rep.states[3].values();
  EXPECT_EQ(x3[0], F(kA2, kG2));
  EXPECT_EQ(x3[1], F(kR * kG2, kB2));
  EXPECT_EQ(x3[2], F(kB2, kA2));
  auto x4 = rep.states[4].values();
  EXPECT_EQ(x4[0], F(kA2 * kA3, kB2 * kG3));
  EXPECT_EQ(x4[2], F(kB2 * kB3, kG2 * kA3));
  // x1 x2 x3 = r fixes x2 from the other two components.
  EXPECT_EQ(x4[1], F(kR * kG2 * kG3, kA2 * kB3));
  EXPECT_NE(x4[1], F(kR * kG2 * kG3, kB2 * kB3));
}

TEST(Confinement, OrbitConservesInvariants) {
  const auto& rep = lv_run();
  for (int t = 3; t <= 10; ++t) {
    auto inv = invariants(MapKind::LV, rep.states[t].values());
    EXPECT_EQ(inv.r, RatFunc(kR));
    EXPECT_EQ(inv.s, RatFunc(kS));
  }
}

TEST(Confinement, KdvConfinesFinitely) {
  auto rep = confinement_run(MapKind::KdV, 8);
  ASSERT_FALSE(rep.singular_steps.empty());
  EXPECT_EQ(rep.singular_steps, (std::vector<int>{1, 2}));
  EXPECT_EQ(rep.first_regular_step, 3);
  for (int t = rep.first_regular_step; t <= 8; ++t) EXPECT_TRUE(rep.states[t].finite()) << t;
  EXPECT_THROW(extract_factors(rep, 3), ExtractionMismatch);
}

TEST(Confinement, RejectsShortRuns) { EXPECT_THROW(confinement_run(MapKind::LV, 2), InvalidArgument); }

TEST(Extraction, LowOrderFactors) {
  const auto& table = lv_table();
  EXPECT_EQ(table.alpha(2), P("r+1"));
  EXPECT_EQ(table.beta(2), P("r-s"));
  EXPECT_EQ(table.gamma(2), P("s+1"));
  EXPECT_TRUE(same_up_to_constant(table.gamma(3), kG3));
  EXPECT_TRUE(same_up_to_constant(table.gamma(4), poly_pow(kB2, 3) - kS * poly_pow(kA2, 3)));
  EXPECT_EQ(table.t_max(), 6);
}

TEST(Extraction, MatchesPublishedForms) {
  const auto& table = lv_table();
  for (const auto& [t, ref] : reference_factors()) {
    if (t > 5) continue;
    EXPECT_TRUE(same_up_to_constant(table.gamma(t), *ref.gamma)) << "gamma " << t;
    EXPECT_TRUE(same_up_to_constant(table.alpha(t), *ref.alpha)) << "alpha " << t;
    EXPECT_TRUE(same_up_to_constant(table.beta(t), *ref.beta)) << "beta " << t;
  }
}

TEST(Extraction, EntriesAreCanonical) {
  for (const auto& [t, e] : lv_table().entries()) {
    EXPECT_EQ(e.gamma, canonical(e.gamma));
    EXPECT_EQ(e.alpha, canonical(e.alpha));
    EXPECT_EQ(e.beta, canonical(e.beta));
    EXPECT_FALSE(e.gamma.is_constant());
  }
}

TEST(Extraction, SecondComponentNumerator) {
  const auto& rep = lv_run();
  const auto& table = lv_table();
  for (int t = 3; t <= 7; ++t) {
    MultiPoly want = kR * gamma_product(table, t - 2) * gamma_product(table, t - 1);
    EXPECT_TRUE(same_up_to_constant(rep.states[t].values()[1].num(), want)) << t;
  }
}

TEST(Extraction, DenominatorCarriesAllDivisors) {
  // x1^[6] = a(4) a(5) / (b(4) g[5]) and x1^[5] has g[4] = g(2) g(4): the
  // period-2 factor reappears at t = 4 although 4 is not prime.
  const auto& table = lv_table();
  MultiPoly den5 = lv_run().states[5].values()[0].den();
  EXPECT_TRUE(same_up_to_constant(den5, table.beta(3) * table.gamma(2) * table.gamma(4)));
  EXPECT_THROW(exact_divide(den5, table.beta(3) * table.gamma(4) * table.gamma(4)), NotDivisible);
}

TEST(Extraction, RejectsSmallTmax) { EXPECT_THROW(extract_factors(MapKind::LV, 1), InvalidArgument); }

TEST(Table, MissingFactor) {
  IvppTable table(MapKind::LV);
  table.set(2, {kG2, kA2, kB2});
  EXPECT_THROW(table.at(3), MissingFactor);
  EXPECT_THROW(table.set(4, {kG3, kA3, kB3}), InvalidArgument);
  EXPECT_EQ(table.at(1).gamma, MultiPoly(1));
}

TEST(TauChain, GaugeFixedValues) {
  auto chain = tau_chain(lv_table(), -4, 4);
  ASSERT_EQ(chain.size(), 9u);
  auto at = [&](int t) { return chain[t + 4]; };
  EXPECT_EQ(at(-1).values, (std::array<MultiPoly, 3>{1, 1, 1}));
  EXPECT_EQ(at(0).values, (std::array<MultiPoly, 3>{1, MultiPoly(), 1}));
  EXPECT_EQ(at(1).values, (std::array<MultiPoly, 3>{1, 1, 1}));
  EXPECT_EQ(at(2).values, (std::array<MultiPoly, 3>{kA2, kG2, kB2}));
  EXPECT_EQ(at(4).values[1], lv_table().gamma(2) * lv_table().gamma(4));
  EXPECT_EQ(at(-2).values, (std::array<MultiPoly, 3>{kB2, kG2, kA2}));
  EXPECT_EQ(at(0).labels, (std::array<std::string, 3>{"lambda_2", "0", "lambda_1"}));
  EXPECT_EQ(at(2).labels, (std::array<std::string, 3>{"lambda'_2", "lambda'_0", "lambda'_1"}));
  EXPECT_EQ(at(3).labels, (std::array<std::string, 3>{"lambda'_1", "lambda'_2", "lambda'_0"}));
  EXPECT_EQ(at(-1).labels, (std::array<std::string, 3>{"lambda_0", "lambda_1", "lambda_2"}));
}

TEST(TauChain, SixUsesEveryDivisor) {
  auto chain = tau_chain(lv_table(), 6, 6);
  const auto& tb = lv_table();
  EXPECT_EQ(chain[0].values[1], tb.gamma(2) * tb.gamma(3) * tb.gamma(6));
}

TEST(TauChain, MissingFactor) {
  IvppTable table(MapKind::LV);
  table.set(2, {kG2, kA2, kB2});
  EXPECT_THROW(tau_chain(table, 0, 3), MissingFactor);
  EXPECT_THROW(tau_chain(table, -3, 0), MissingFactor);
}

TEST(LevelSet, QuadraticExample) {
  PrecisionScope scope(80);
  auto x = level_set_point(MapKind::LV, Rational(4), Rational(-1), Rational(-1));
  BigFloat root89 = boost::multiprecision::sqrt(BigFloat(89));
  BigFloat tol("1e-70");
  EXPECT_LT(abs(x[0] - ComplexBF(BigFloat(-1))), tol);
  EXPECT_LT(abs(x[1] - ComplexBF((root89 - 5) / 4)), tol);
  EXPECT_LT(abs(x[2] - ComplexBF((-root89 - 5) / 4)), tol);
}

TEST(LevelSet, DegenerateAndInvariants) {
  PrecisionScope scope(80);
  EXPECT_THROW(level_set_point(MapKind::LV, Rational(1), Rational(0), Rational(1)), DegenerateLevel);
  EXPECT_THROW(level_set_point(MapKind::LV, Rational(1), Rational(0), Rational(0)), DegenerateLevel);
  EXPECT_THROW(level_set_point(MapKind::KdV, Rational(2), Rational(0), Rational(-2)), DegenerateLevel);
  BigFloat tol("1e-70");
  for (MapKind kind : {MapKind::LV, MapKind::KdV}) {
    for (auto [r, s, x1] : {std::tuple{1, 0, 2}, std::tuple{3, 7, -2}, std::tuple{-5, 2, 3}}) {
      auto x = level_set_point(kind, Rational(r), Rational(s), Rational(x1));
      auto inv = invariants(kind, x);
      EXPECT_LT(abs(inv.r - ComplexBF(BigFloat(r))), tol);
      EXPECT_LT(abs(inv.s - ComplexBF(BigFloat(s))), tol);
    }
  }
}

TEST(Roots, KnownPolynomials) {
  PrecisionScope scope(60);
  auto c = [](int v) { return ComplexBF(BigFloat(v)); };
  // (z - 1)(z - 2)(z + 3) = z^3 - 7z + 6
  auto roots = polynomial_roots({c(6), c(-7), c(0), c(1)});
  ASSERT_EQ(roots.size(), 3u);
  for (int want : {1, 2, -3}) {
    BigFloat best = 1;
    for (auto& z : roots) best = std::min(best, abs(z - c(want)));
    EXPECT_LT(best, BigFloat("1e-50"));
  }
  auto imag = polynomial_roots({c(1), c(0), c(1)});
  for (auto& z : imag) EXPECT_LT(abs(z * z + c(1)), BigFloat("1e-50"));
  EXPECT_THROW(polynomial_roots({c(3)}), RootNotFound);
}

TEST(Periodicity, PeriodTwoExample) {
  PrecisionScope scope(80);
  auto x = level_set_point(MapKind::LV, Rational(4), Rational(-1), Rational(-1));
  EXPECT_LT(distance(lv_forward(lv_forward(x)), x), BigFloat("1e-40"));
  EXPECT_GT(distance(lv_forward(x), x), BigFloat("1e-3"));
}

TEST(Periodicity, SampledVarieties) {
  for (int t : {2, 3, 4}) {
    auto rep = ivpp_periodicity_check(lv_table(), t, 20);
    EXPECT_EQ(rep.samples.size(), 20u);
    EXPECT_TRUE(rep.passed(BigFloat("1e-40"), BigFloat("1e-3"))) << t;
    ASSERT_TRUE(rep.min_proper_distance);
    EXPECT_GT(*rep.min_proper_distance, BigFloat("1e-3"));
  }
}

TEST(Periodicity, ConstantSlice) {
  EXPECT_THROW(periodicity_check(P("r + 1"), 2, 3), RootNotFound);
}

TEST(Periodicity, ComplexRootsAccepted) {
  // gamma(3) has no real s for most rational r.
  auto rep = ivpp_periodicity_check(lv_table(), 3, 5);
  int complex = 0;
  for (const auto& s : rep.samples) complex += !s.real_root;
  EXPECT_GT(complex, 0);
  EXPECT_TRUE(rep.passed(BigFloat("1e-40"), BigFloat("1e-3")));
}

TauGrid random_grid(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 9), sign(0, 1);
  TauGrid grid;
  for (int j = -2; j <= 5; ++j)
    for (int t = -1; t <= 4; ++t) grid[{j, t}] = Rational(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  return grid;
}

TEST(Gauge, IdentityAndExponentialInvariance) {
  std::mt19937_64 rng(8080);
  TauGrid grid = random_grid(rng);
  EXPECT_EQ(gauge_transform(grid, 1, 1, 1), grid);
  for (MapKind kind : {MapKind::LV, MapKind::KdV}) {
    auto before = reduced_variables(kind, grid);
    auto after = reduced_variables(kind, gauge_transform(grid, 2, 3, Rational(5, 7)));
    EXPECT_FALSE(before.empty());
    EXPECT_EQ(before, after);
  }
}

TEST(Gauge, CrossTermChangesVariables) {
  std::mt19937_64 rng(9090);
  TauGrid grid = random_grid(rng), crossed = grid;
  for (auto& [key, tau] : crossed) tau *= detail::int_pow(Rational(2), key.first * key.second);
  EXPECT_NE(reduced_variables(MapKind::LV, grid), reduced_variables(MapKind::LV, crossed));
}

TEST(Gauge, RejectsZeroFactor) {
  TauGrid grid{{{0, 0}, Rational(1)}};
  EXPECT_THROW(gauge_transform(grid, 0, 1, 1), InvalidArgument);
}

}  // namespace
}  // namespace hirota
