#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hirota/lattice.hpp"

namespace hirota {
namespace {

using Q = Rational;

const LatticePoint kOrigin{{0, 0, 0, 0}};

Coefficients standard_z() { return Coefficients({Q(0), Q(1), Q(2), Q(3)}); }

// A field holding only the six corners of the octahedron at the origin.
TauField octahedron(const std::array<Q, 6>& corner_values) {
  TauField f(Patch::cube(0, 1));
  for (std::size_t k = 0; k < 6; ++k) f.set(kOrigin.shifted(kPairs[k][0], kPairs[k][1]), corner_values[k]);
  return f;
}

Q random_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  return Q(num(rng), den(rng));
}

// 4x4 determinant by cofactor expansion along the first row.
Q det4(const std::array<std::array<Q, 4>, 4>& m) {
  auto det3 = [&](int skip) {
    std::array<int, 3> c{};
    for (int k = 0, n = 0; k < 4; ++k)
      if (k != skip) c[n++] = k;
    return m[1][c[0]] * (m[2][c[1]] * m[3][c[2]] - m[2][c[2]] * m[3][c[1]]) -
           m[1][c[1]] * (m[2][c[0]] * m[3][c[2]] - m[2][c[2]] * m[3][c[0]]) +
           m[1][c[2]] * (m[2][c[0]] * m[3][c[1]] - m[2][c[1]] * m[3][c[0]]);
  };
  Q out = 0;
  for (int k = 0; k < 4; ++k) out += (k % 2 ? -1 : 1) * m[0][k] * det3(k);
  return out;
}

TEST(Coefficients, DualAndThreeTerm) {
  auto c = standard_z();
  EXPECT_EQ(c.a(1, 4), -3);
  EXPECT_EQ(c.a(4, 1), 3);
  EXPECT_EQ(c.three_term(), 0);
  // *a_12 = 2 a_34, *a_13 = -2 a_24, *a_14 = 2 a_23
  EXPECT_EQ(c.dual(1, 2), 2 * c.a(3, 4));
  EXPECT_EQ(c.dual(1, 3), -2 * c.a(2, 4));
  EXPECT_EQ(c.dual(1, 4), 2 * c.a(2, 3));
  for (int i = 1; i <= 4; ++i) {
    Q row = 0;
    for (int j = 1; j <= 4; ++j) {
      EXPECT_EQ(c.dual(i, j), -c.dual(j, i));
      row += c.dual(i, j);
    }
    EXPECT_EQ(row, 0) << "row " << i;
  }
  EXPECT_THROW(Coefficients({Q(0), Q(1), Q(1), Q(3)}), InvalidArgument);
}

TEST(Coefficients, ThreeTermForRandomZ) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<Q, 4> z{random_q(rng), random_q(rng), random_q(rng), random_q(rng)};
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) distinct = distinct && z[i] != z[j];
    if (!distinct) continue;
    EXPECT_EQ(Coefficients(z).three_term(), 0);
  }
}

TEST(Residual, Examples) {
  auto c = standard_z();
  auto ones = TauField::constant(Patch::cube(0, 1), 1);
  EXPECT_EQ(hm_residual(ones, c, kOrigin), 0);
  EXPECT_EQ(pfaffian_F(ones, c, kOrigin), 0);
  EXPECT_EQ(det_F(ones, c, kOrigin), 0);

  auto bumped = ones;
  bumped.set(kOrigin.shifted(1, 2), 2);
  EXPECT_EQ(hm_residual(bumped, c, kOrigin), 1);
  EXPECT_EQ(pfaffian_F(bumped, c, kOrigin), 1);
  EXPECT_EQ(det_F(bumped, c, kOrigin), 1);
}

TEST(Residual, OutOfPatch) {
  auto ones = TauField::constant(Patch::cube(0, 1), 1);
  EXPECT_THROW(hm_residual(ones, standard_z(), LatticePoint{{1, 0, 0, 0}}), OutOfPatch);
  EXPECT_THROW(ones.set(LatticePoint{{2, 0, 0, 0}}, 1), OutOfPatch);
}

TEST(Residual, PluckerMinors) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  auto unit = Coefficients::from_pairs({1, 1, 1, 1, 1, 1});
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<std::array<int, 4>, 2> m{};
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    std::array<Q, 6> minors{};
    for (std::size_t k = 0; k < 6; ++k) {
      int i = kPairs[k][0] - 1, j = kPairs[k][1] - 1;
      minors[k] = m[0][i] * m[1][j] - m[0][j] * m[1][i];
    }
    ASSERT_EQ(hm_residual(octahedron(minors), unit, kOrigin), 0);
  }
}

TEST(Residual, DeterminantIsPfaffianSquared) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<Q, 4> z{};
    do z = {random_q(rng), random_q(rng), random_q(rng), random_q(rng)};
    while (z[0] == z[1] || z[0] == z[2] || z[0] == z[3] || z[1] == z[2] || z[1] == z[3] || z[2] == z[3]);
    Coefficients c(z);
    auto field = octahedron({random_q(rng), random_q(rng), random_q(rng), random_q(rng), random_q(rng), random_q(rng)});
    Q pf = pfaffian_F(field, c, kOrigin);
    ASSERT_EQ(det_F(field, c, kOrigin), pf * pf);
    ASSERT_EQ(det4(hm_matrix(field, c, kOrigin)), pf * pf);
    ASSERT_EQ(hm_residual(field, c, kOrigin), pf);
  }
}

TEST(Backlund, ConstantSolvesOnesSystem) {
  auto c = standard_z();
  Patch patch = Patch::cube(-1, 1);
  auto eqs = assemble_backlund(TauField::constant(patch, 1), c, patch);
  EXPECT_EQ(eqs.size(), 4u * 16u);
  for (const auto& eq : eqs) {
    Q sum = 0;
    for (const auto& [q, coef] : eq.terms) sum += coef;
    EXPECT_EQ(sum, 0);
  }
}

TEST(Backlund, SolveOnesGivesHmField) {
  auto c = standard_z();
  Patch patch = Patch::cube(-2, 2);
  auto result = backlund_solve(TauField::constant(patch, 1), c, patch, 3);
  EXPECT_EQ(result.field.patch().lo, Patch::cube(-2, 1).lo);
  EXPECT_EQ(result.field.patch().hi, Patch::cube(-2, 1).hi);
  EXPECT_GT(result.null_space_dim, 0u);
  EXPECT_LT(result.null_space_dim, result.unknowns);
  auto interior = result.field.patch().interior().points();
  EXPECT_EQ(interior.size(), 81u);
  for (const auto& p : interior) ASSERT_EQ(hm_residual(result.field, c, p), 0) << p.str();
  // a generic element, not a multiple of tau0
  std::set<Q> distinct;
  for (const auto& [q, v] : result.field.values()) distinct.insert(v);
  EXPECT_GT(distinct.size(), 1u);
}

TEST(Backlund, NonConstantSeedField) {
  // one-soliton field: phi_u + phi_v with phi_u(p) = prod_k (z_k - u)^{p_k}
  auto c = standard_z();
  Patch patch = Patch::cube(-1, 2);
  TauField tau0(patch);
  const Q u(5, 2), v(-1, 2);
  for (const auto& p : patch.points()) {
    Q e1 = 1, e2 = 1;
    for (int k = 0; k < 4; ++k) {
      Q f1 = c.z().value()[k] - u, f2 = c.z().value()[k] - v;
      for (int n = 0; n < std::abs(p.p[k]); ++n) {
        e1 = p.p[k] > 0 ? e1 * f1 : e1 / f1;
        e2 = p.p[k] > 0 ? e2 * f2 : e2 / f2;
      }
    }
    tau0.set(p, e1 + 3 * e2);
  }
  ASSERT_TRUE(hm_violations(tau0, c).empty());
  auto result = backlund_solve(tau0, c, patch, 9);
  EXPECT_FALSE(result.field.patch().interior().empty());
  EXPECT_TRUE(hm_violations(result.field, c).empty());
}

TEST(Backlund, Errors) {
  auto c = standard_z();
  Patch single = Patch::cube(0, 0);
  EXPECT_THROW(backlund_solve(TauField::constant(single, 1), c, single), PatchTooSmall);
  Patch patch = Patch::cube(-1, 1);
  EXPECT_THROW(backlund_chain(TauField::constant(patch, 1), c, patch, 0), InvalidArgument);
  EXPECT_THROW(backlund_solve(TauField(patch), c, patch), OutOfPatch);
}

TEST(Backlund, ChainOfThree) {
  auto c = standard_z();
  Patch patch = Patch::cube(-2, 2);
  auto chain = backlund_chain(TauField::constant(patch, 1), c, patch, 3, 7);
  ASSERT_EQ(chain.size(), 3u);
  for (const auto& stage : chain) {
    EXPECT_FALSE(stage.field.patch().interior().empty());
    EXPECT_GT(stage.null_space_dim, 0u);
    EXPECT_TRUE(hm_violations(stage.field, c).empty());
  }
  auto again = backlund_chain(TauField::constant(patch, 1), c, patch, 3, 7);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(chain[k].field, again[k].field);
  auto other = backlund_chain(TauField::constant(patch, 1), c, patch, 1, 8);
  EXPECT_NE(chain[0].field, other[0].field);
}

TEST(Patch, LevelWindow) {
  Patch slab = Patch::cube(-1, 1);
  slab.level_lo = slab.level_hi = 0;
  EXPECT_EQ(slab.points().size(), 19u);
  EXPECT_FALSE(slab.contains(LatticePoint{{1, 0, 0, 0}}));
  auto centers = slab.interior();
  for (const auto& p : centers.points()) EXPECT_EQ(p.level(), -2);
}

TEST(Connection, SameFieldAndUnrelatedFields) {
  Patch patch = Patch::cube(-1, 2);
  std::mt19937_64 rng(21);
  TauField a(patch), b(patch);
  for (const auto& p : patch.points()) {
    a.set(p, random_q(rng));
    b.set(p, random_q(rng) + 100);
  }
  LatticePoint p{{0, 0, 0, 1}};
  EXPECT_TRUE(chain_connection_check(a, a, p));
  EXPECT_FALSE(chain_connection_check(a, b, p));
  // O(p + d3 - d4) needs p3 + 2 <= 2
  EXPECT_THROW(chain_connection_check(a, a, LatticePoint{{0, 0, 1, 1}}), OutOfPatch);
}

}  // namespace
}  // namespace hirota
