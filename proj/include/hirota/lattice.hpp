#pragma once

// tau-fields on boxes of Z^4, the octahedron HM residual, the Pfaffian and
// determinant of F_ij = a_ij tau_ij, and Baecklund transformations obtained by
// solving sum_j *a_ij tau_ij(p) sigma(p + d_j) = 0 exactly.
//
// Indices i, j are 1-based throughout. tau_ij(p) = tau(p + d_i + d_j).

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hirota/algebra/scalar.hpp"

namespace hirota {

struct LatticePoint {
  std::array<int, 4> p{};

  int level() const { return p[0] + p[1] + p[2] + p[3]; }
  LatticePoint shifted(int i) const {
    LatticePoint q = *this;
    ++q.p[i - 1];
    return q;
  }
  LatticePoint shifted(int i, int j) const { return shifted(i).shifted(j); }
  std::string str() const {
    return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + "," +
           std::to_string(p[3]) + ")";
  }
  auto operator<=>(const LatticePoint&) const = default;
};

inline LatticePoint operator+(LatticePoint a, const LatticePoint& b) {
  for (int k = 0; k < 4; ++k) a.p[k] += b.p[k];
  return a;
}

/// The six index pairs in the order 12, 13, 14, 23, 24, 34.
inline constexpr std::array<std::array<int, 2>, 6> kPairs{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

inline int levi_civita(int i, int j, int k, int l) {
  std::array<int, 4> v{i, j, k, l};
  int sign = 1;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      if (v[a] == v[b]) return 0;
      if (v[a] > v[b]) sign = -sign;
    }
  return sign;
}

/// Antisymmetric coefficients a_ij, normally a_ij = z_i - z_j.
class Coefficients {
 public:
  explicit Coefficients(const std::array<Rational, 4>& z) : z_(z) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (z[i] == z[j]) throw InvalidArgument("z values must be pairwise distinct");
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) a_[i - 1][j - 1] = z[i - 1] - z[j - 1];
  }

  /// Explicit a_12, a_13, a_14, a_23, a_24, a_34 (no z behind them).
  static Coefficients from_pairs(const std::array<Rational, 6>& upper) {
    Coefficients c;
    for (std::size_t k = 0; k < 6; ++k) {
      auto [i, j] = kPairs[k];
      c.a_[i - 1][j - 1] = upper[k];
      c.a_[j - 1][i - 1] = -upper[k];
    }
    return c;
  }

  const std::optional<std::array<Rational, 4>>& z() const { return z_; }
  const Rational& a(int i, int j) const { return a_[i - 1][j - 1]; }

  /// *a_ij = sum_kl eps_ijkl a_kl
  Rational dual(int i, int j) const {
    Rational out = 0;
    for (int k = 1; k <= 4; ++k)
      for (int l = 1; l <= 4; ++l)
        if (int e = levi_civita(i, j, k, l)) out += e * a(k, l);
    return out;
  }

  /// a14 a23 - a24 a13 + a34 a12; zero whenever a comes from z.
  Rational three_term() const { return a(1, 4) * a(2, 3) - a(2, 4) * a(1, 3) + a(3, 4) * a(1, 2); }

 private:
  Coefficients() = default;
  std::optional<std::array<Rational, 4>> z_;
  std::array<std::array<Rational, 4>, 4> a_{};
};

/// Axis-aligned box lo <= p <= hi, optionally cut to the hyperplane levels
/// level_lo <= p1+p2+p3+p4 <= level_hi.
struct Patch {
  static constexpr int kUnbounded = std::numeric_limits<int>::max();

  std::array<int, 4> lo{}, hi{};
  int level_lo = -kUnbounded, level_hi = kUnbounded;

  static Patch cube(int lo, int hi) { return {{lo, lo, lo, lo}, {hi, hi, hi, hi}}; }
  bool contains(const LatticePoint& q) const {
    for (int k = 0; k < 4; ++k)
      if (q.p[k] < lo[k] || q.p[k] > hi[k]) return false;
    return q.level() >= level_lo && q.level() <= level_hi;
  }
  bool empty() const { return points().empty(); }
  std::vector<LatticePoint> points() const {
    std::vector<LatticePoint> out;
    for (int k = 0; k < 4; ++k)
      if (lo[k] > hi[k]) return out;
    LatticePoint q{lo};
    while (true) {
      if (contains(q)) out.push_back(q);
      int k = 3;
      for (; k >= 0; --k) {
        if (q.p[k] < hi[k]) {
          ++q.p[k];
          break;
        }
        q.p[k] = lo[k];
      }
      if (k < 0) return out;
    }
  }
  /// Centers whose six corners lie in the patch.
  Patch interior() const {
    Patch out = *this;
    for (int& h : out.hi) --h;
    if (level_lo != -kUnbounded) out.level_lo = level_lo - 2;
    if (level_hi != kUnbounded) out.level_hi = level_hi - 2;
    return out;
  }
  bool operator==(const Patch&) const = default;
};

/// tau values on (part of) a box. Reading a point outside the box, or one
/// that carries no value, raises OutOfPatch.
class TauField {
 public:
  TauField() = default;
  explicit TauField(Patch patch) : patch_(patch) {}

  static TauField constant(Patch patch, const Rational& value) {
    TauField f(patch);
    for (const auto& q : patch.points()) f.values_[q] = value;
    return f;
  }

  const Patch& patch() const { return patch_; }
  const std::map<LatticePoint, Rational>& values() const { return values_; }
  bool has(const LatticePoint& q) const { return values_.count(q) != 0; }

  void set(const LatticePoint& q, const Rational& value) {
    if (!patch_.contains(q)) throw OutOfPatch("point " + q.str() + " is outside the patch");
    values_[q] = value;
  }
  const Rational& at(const LatticePoint& q) const {
    auto it = values_.find(q);
    if (it == values_.end()) throw OutOfPatch("no tau value at " + q.str());
    return it->second;
  }
  const Rational& tau(const LatticePoint& p, int i, int j) const { return at(p.shifted(i, j)); }

  bool operator==(const TauField&) const = default;

 private:
  Patch patch_;
  std::map<LatticePoint, Rational> values_;
};

/// a14 a23 tau14 tau23 - a24 a13 tau24 tau13 + a34 a12 tau34 tau12 at center p.
inline Rational hm_residual(const TauField& tau, const Coefficients& c, const LatticePoint& p) {
  auto t = [&](int i, int j) { return tau.tau(p, i, j); };
  return c.a(1, 4) * c.a(2, 3) * t(1, 4) * t(2, 3) - c.a(2, 4) * c.a(1, 3) * t(2, 4) * t(1, 3) +
         c.a(3, 4) * c.a(1, 2) * t(3, 4) * t(1, 2);
}

/// F_ij = a_ij tau_ij(p), antisymmetric, zero diagonal.
inline std::array<std::array<Rational, 4>, 4> hm_matrix(const TauField& tau, const Coefficients& c,
                                                        const LatticePoint& p) {
  std::array<std::array<Rational, 4>, 4> F{};
  for (auto [i, j] : kPairs) {
    F[i - 1][j - 1] = c.a(i, j) * tau.tau(p, i, j);
    F[j - 1][i - 1] = -F[i - 1][j - 1];
  }
  return F;
}

/// Pf(F) = F12 F34 - F13 F24 + F14 F23. With this slot pairing Pf(F) equals
/// hm_residual with sign +1.
inline Rational pfaffian_F(const TauField& tau, const Coefficients& c, const LatticePoint& p) {
  auto F = hm_matrix(tau, c, p);
  return F[0][1] * F[2][3] - F[0][2] * F[1][3] + F[0][3] * F[1][2];
}

/// Leibniz expansion of det F, independent of the Pfaffian formula.
inline Rational det_F(const TauField& tau, const Coefficients& c, const LatticePoint& p) {
  auto F = hm_matrix(tau, c, p);
  std::array<int, 4> perm{0, 1, 2, 3};
  Rational det = 0;
  do {
    Rational term = levi_civita(perm[0] + 1, perm[1] + 1, perm[2] + 1, perm[3] + 1);
    for (int k = 0; k < 4 && term != 0; ++k) term *= F[k][perm[k]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// One linear equation sum_k coef_k sigma(point_k) = 0.
struct LinearEquation {
  LatticePoint center;
  int row = 0;  // i
  std::vector<std::pair<LatticePoint, Rational>> terms;
};

/// sum_j *a_ij tau_ij(p) sigma(p + d_j) = 0 for i = 1..4 at every center of
/// patch.interior(). Rows that vanish identically are dropped.
inline std::vector<LinearEquation> assemble_backlund(const TauField& tau0, const Coefficients& c,
                                                     const Patch& patch) {
  std::vector<LinearEquation> out;
  for (const auto& p : patch.interior().points())
    for (int i = 1; i <= 4; ++i) {
      LinearEquation eq{p, i, {}};
      for (int j = 1; j <= 4; ++j) {
        if (j == i) continue;
        Rational coef = c.dual(i, j) * tau0.tau(p, i, j);
        if (coef != 0) eq.terms.emplace_back(p.shifted(j), coef);
      }
      if (!eq.terms.empty()) out.push_back(std::move(eq));
    }
  return out;
}

struct BacklundResult {
  TauField field;
  std::size_t null_space_dim = 0;  // of the assembled system, summed over levels
  std::size_t unknowns = 0;
};

namespace detail {

// Reduced row echelon form in place; returns the pivot column of each row.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = Rational(1) / m[row][col];
    for (std::size_t k = col; k < cols; ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t k = col; k < cols; ++k)
        if (m[row][k] != 0) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Small nonzero rationals from the engine, without library distributions so
// that the stream is identical on every platform.
inline Rational random_rational(std::mt19937_64& rng) {
  std::int64_t num = static_cast<std::int64_t>(rng() % 61) - 30;
  if (num == 0) num = 31;
  std::int64_t den = static_cast<std::int64_t>(rng() % 30) + 1;
  return Rational(num) / Rational(den);
}

}  // namespace detail

/// Solves the Baecklund system built from tau0 on `patch`. The system splits
/// by hyperplane level and each level is solved by exact elimination; a
/// seeded random combination of the null basis is taken.
///
/// The new field lives on the box with hi reduced by one. On a finite box the
/// equations do not pin down sigma near the extreme levels, and there generic
/// null elements violate HM. Every octahedron of the new field has its corners
/// on one level, so each level is checked exactly and the returned patch is
/// cut to the longest run of levels on which all octahedra pass. Combinations
/// that put a zero on a corner inside that run are rejected.
inline BacklundResult backlund_solve(const TauField& tau0, const Coefficients& c, const Patch& patch,
                                     std::uint64_t seed = 1) {
  Patch centers = patch.interior();
  if (centers.empty()) throw PatchTooSmall();
  auto equations = assemble_backlund(tau0, c, patch);

  std::map<int, std::vector<const LinearEquation*>> by_level;
  for (const auto& eq : equations) by_level[eq.center.level()].push_back(&eq);

  struct LevelSystem {
    std::vector<LatticePoint> unknowns;
    std::vector<std::vector<Rational>> rref;
    std::vector<std::size_t> pivots, free;
  };
  std::vector<LevelSystem> systems;
  BacklundResult result;
  for (const auto& [level, eqs] : by_level) {
    LevelSystem sys;
    std::map<LatticePoint, std::size_t> index;
    for (const auto* eq : eqs)
      for (const auto& [q, unused] : eq->terms)
        if (index.emplace(q, index.size()).second) sys.unknowns.push_back(q);
    const std::size_t n = sys.unknowns.size();
    sys.rref.assign(eqs.size(), std::vector<Rational>(n));
    for (std::size_t r = 0; r < eqs.size(); ++r)
      for (const auto& [q, coef] : eqs[r]->terms) sys.rref[r][index.at(q)] = coef;
    sys.pivots = detail::rref(sys.rref, n);
    sys.rref.resize(sys.pivots.size());
    std::vector<bool> is_pivot(n, false);
    for (auto col : sys.pivots) is_pivot[col] = true;
    for (std::size_t col = 0; col < n; ++col)
      if (!is_pivot[col]) sys.free.push_back(col);
    result.null_space_dim += sys.free.size();
    result.unknowns += n;
    systems.push_back(std::move(sys));
  }
  if (result.null_space_dim == 0) throw TrivialNullSpace();

  Patch box = patch;
  for (int& h : box.hi) --h;
  box.level_lo = -Patch::kUnbounded;
  box.level_hi = Patch::kUnbounded;

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    TauField sigma(box);
    for (const auto& sys : systems) {
      std::vector<Rational> x(sys.unknowns.size());
      for (auto col : sys.free) x[col] = detail::random_rational(rng);
      for (std::size_t r = 0; r < sys.pivots.size(); ++r) {
        Rational v = 0;
        for (auto col : sys.free)
          if (sys.rref[r][col] != 0) v -= sys.rref[r][col] * x[col];
        x[sys.pivots[r]] = v;
      }
      for (std::size_t k = 0; k < x.size(); ++k)
        if (box.contains(sys.unknowns[k])) sigma.set(sys.unknowns[k], x[k]);
    }

    // corner level -> every octahedron on it has all corners, nonzero and HM
    std::map<int, bool> level_ok;
    for (const auto& p : box.interior().points()) {
      bool ok = true;
      for (auto [i, j] : kPairs) ok = ok && sigma.has(p.shifted(i, j)) && sigma.tau(p, i, j) != 0;
      ok = ok && hm_residual(sigma, c, p) == 0;
      auto [it, fresh] = level_ok.emplace(p.level() + 2, ok);
      if (!fresh) it->second = it->second && ok;
    }
    int best_lo = 0, best_hi = -1, run_lo = 0;
    bool in_run = false;
    for (auto it = level_ok.begin(); it != level_ok.end(); ++it) {
      if (!it->second) {
        in_run = false;
        continue;
      }
      if (!in_run || std::prev(it)->first != it->first - 1) run_lo = it->first;
      in_run = true;
      if (it->first - run_lo > best_hi - best_lo) {
        best_lo = run_lo;
        best_hi = it->first;
      }
    }
    if (best_hi < best_lo) continue;
    Patch out_patch = box;
    out_patch.level_lo = best_lo;
    out_patch.level_hi = best_hi;
    TauField field(out_patch);
    for (const auto& [q, v] : sigma.values())
      if (out_patch.contains(q)) field.set(q, v);
    result.field = std::move(field);
    return result;
  }
  throw TrivialNullSpace();
}

/// Iterated backlund_solve; stage k uses seed + k.
inline std::vector<BacklundResult> backlund_chain(const TauField& tau0, const Coefficients& c, const Patch& patch,
                                                  int length, std::uint64_t seed = 1) {
  if (length < 1) throw InvalidArgument("chain length must be at least 1");
  std::vector<BacklundResult> out;
  const TauField* current = &tau0;
  Patch box = patch;
  for (int k = 0; k < length; ++k) {
    out.push_back(backlund_solve(*current, c, box, seed + static_cast<std::uint64_t>(k)));
    current = &out.back().field;
    box = current->patch();
  }
  return out;
}

/// Centers of interior octahedra of `tau` with a nonzero residual.
inline std::vector<LatticePoint> hm_violations(const TauField& tau, const Coefficients& c) {
  std::vector<LatticePoint> bad;
  for (const auto& p : tau.patch().interior().points())
    if (hm_residual(tau, c, p) != 0) bad.push_back(p);
  return bad;
}

/// tau14[1] = tau13 and tau24[1] = tau23 between O(p) in tauA and
/// O(p + d3 - d4) in tauB.
inline bool chain_connection_check(const TauField& tauA, const TauField& tauB, const LatticePoint& p) {
  LatticePoint next = p;
  ++next.p[2];
  --next.p[3];
  for (auto [i, j] : kPairs) {
    tauA.tau(p, i, j);
    tauB.tau(next, i, j);
  }
  return tauB.tau(next, 1, 4) == tauA.tau(p, 1, 3) && tauB.tau(next, 2, 4) == tauA.tau(p, 2, 3);
}

}  // namespace hirota
