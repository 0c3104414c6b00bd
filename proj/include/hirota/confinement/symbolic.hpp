#pragma once

// Symbolic singularity confinement over Q(r,s): seed construction on the
// singular surface, passage through the singular steps, and peeling of the
// invariant-variety factors alpha, beta, gamma from the confined orbit.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hirota/detail/laurent.hpp"
#include "hirota/maps.hpp"

namespace hirota {

namespace detail {

// Polynomials in an auxiliary unknown u with MultiPoly coefficients,
// coefficient k multiplies u^k. Only used to solve for the seed.
using UPoly = std::vector<MultiPoly>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  trim(out);
  return out;
}

inline UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline UPoly operator-(const UPoly& a) {
  UPoly out = a;
  for (auto& c : out) c = -c;
  return out;
}

inline UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

// Quotient of p by the linear l = l[0] + l[1] u, if the division is exact.
inline std::optional<UPoly> divide_linear(const UPoly& p, const UPoly& l) {
  if (p.size() < 2) return std::nullopt;
  UPoly rem = p, quot(p.size() - 1);
  try {
    for (std::size_t k = p.size() - 1; k >= 1; --k) {
      quot[k - 1] = exact_divide(rem[k], l[1]);
      rem[k] = MultiPoly();
      rem[k - 1] -= quot[k - 1] * l[0];
    }
  } catch (const NotDivisible&) {
    return std::nullopt;
  }
  if (!rem[0].is_zero()) return std::nullopt;
  trim(quot);
  return quot;
}

struct UFrac {
  UPoly num, den;
};

inline UFrac operator*(const UFrac& a, const UFrac& b) { return {a.num * b.num, a.den * b.den}; }
inline UFrac operator+(const UFrac& a, const UFrac& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
inline UFrac ufrac(UPoly p) { return {std::move(p), {MultiPoly(1)}}; }

inline RatFunc evaluate_at(const UPoly& p, const RatFunc& u) {
  RatFunc acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * u + RatFunc(*it);
  return acc;
}

inline RatFunc evaluate_at(const UFrac& f, const RatFunc& u) { return evaluate_at(f.num, u) / evaluate_at(f.den, u); }

// With u = x1, the vanishing bracket and r = x1 x2 x3 fix x2 and x3 as
// rational functions of u; the s-invariant then leaves one polynomial
// equation in u over Q[r,s]. Factors coming from the substitution itself
// are divided out and the remaining equation must be linear.
inline State3<RatFunc> solve_seed(MapKind kind) {
  const MultiPoly r = MultiPoly::r(), s = MultiPoly::s(), one(1);
  const UPoly u{MultiPoly(), one};
  UFrac x1 = ufrac(u), x2, x3;
  std::vector<UPoly> spurious{u};
  UFrac s_expr;
  if (kind == MapKind::LV) {
    // 1 - x3 + x3 x1 = 0  =>  x3 = 1/(1-u),  x2 = r/(u x3) = r(1-u)/u
    UPoly one_minus_u{one, -one};
    x3 = {{one}, one_minus_u};
    x2 = {UPoly{r} * one_minus_u, u};
    spurious.push_back(one_minus_u);
    auto comp = [&](const UFrac& x) { return UFrac{x.den - x.num, x.den}; };
    s_expr = comp(x1) * comp(x2) * comp(x3);
  } else {
    // 1 + x1 x2 + x1 (x1 x2 x3) = 0 with x1 x2 x3 = r  =>  x2 = -(1 + r u)/u,
    // x3 = r/(u x2) = -r/(1 + r u)
    UPoly one_plus_ru{one, r};
    x2 = {-one_plus_ru, u};
    x3 = {UPoly{-r}, one_plus_ru};
    spurious.push_back(one_plus_ru);
    auto onep = [&](const UFrac& a, const UFrac& b) {
      UFrac p = a * b;
      return UFrac{p.den + p.num, p.den};
    };
    s_expr = onep(x1, x2) * onep(x2, x3) * onep(x3, x1);
  }
  UPoly eq = s_expr.num - UPoly{s} * s_expr.den;
  for (bool reduced = true; reduced;) {
    reduced = false;
    for (const UPoly& f : spurious)
      if (auto q = divide_linear(eq, f)) {
        eq = *q;
        reduced = true;
      }
  }
  if (eq.size() != 2) throw DerivationFailed("seed equation is not linear after removing substitution factors");
  RatFunc root = RatFunc(-eq[0]) / RatFunc(eq[1]);
  State3<RatFunc> seed{evaluate_at(x1, root), evaluate_at(x2, root), evaluate_at(x3, root)};

  auto inv = invariants(kind, seed);
  if (!(inv.r == RatFunc(r)) || !(inv.s == RatFunc(s))) throw DerivationFailed("seed does not lie on the level surface");
  try {
    map_step(kind, seed);
    throw DerivationFailed("seed does not make the first step singular");
  } catch (const SingularHit&) {
  }
  return seed;
}

}  // namespace detail

/// Point on the level surface (r, s) where the x1-denominator of the first
/// step vanishes identically.
inline State3<RatFunc> seed_state(MapKind kind) { return detail::solve_seed(kind); }

/// One orbit entry; infinite components have no value.
struct SymbolicState {
  std::array<std::optional<RatFunc>, 3> x;

  bool finite() const { return x[0] && x[1] && x[2]; }
  State3<RatFunc> values() const { return {*x[0], *x[1], *x[2]}; }
};

struct ConfinementReport {
  MapKind kind;
  std::vector<int> singular_steps;  // steps whose state has an infinite component
  int first_regular_step = -1;      // first finite step after the singular run
  std::vector<SymbolicState> states;  // states[t] = x^[t], t = 0..steps
};

namespace detail {

inline SymbolicState finite_state(const State3<RatFunc>& x) { return {{{x[0], x[1], x[2]}}}; }

template <int N>
SymbolicState limit_state(const State3<Laurent<N>>& x) {
  SymbolicState out;
  for (int j = 0; j < 3; ++j)
    if (x[j].is_exact_zero() || x[j].valuation() >= 0) out.x[j] = x[j].limit();
  return out;
}

// Perturbs x1 -> x1 + eps at `from` and iterates until the limit state is
// finite and the exact map can continue from it, or `max_steps` run out.
template <int N>
std::vector<SymbolicState> pass_singularity(MapKind kind, const State3<RatFunc>& from, int max_steps) {
  State3<Laurent<N>> x{Laurent<N>::linear(from[0], RatFunc(1)), Laurent<N>(from[1]), Laurent<N>(from[2])};
  std::vector<SymbolicState> out;
  for (int k = 0; k < max_steps; ++k) {
    x = map_step(kind, x);
    out.push_back(limit_state(x));
    if (!out.back().finite()) continue;
    try {
      map_step(kind, out.back().values());
      break;
    } catch (const SingularHit&) {
    }
  }
  return out;
}

inline std::vector<SymbolicState> pass_singularity_adaptive(MapKind kind, const State3<RatFunc>& from, int max_steps) {
  try {
    return pass_singularity<4>(kind, from, max_steps);
  } catch (const PrecisionExhausted&) {
  }
  try {
    return pass_singularity<8>(kind, from, max_steps);
  } catch (const PrecisionExhausted&) {
  }
  return pass_singularity<16>(kind, from, max_steps);
}

}  // namespace detail

/// Symbolic orbit x^[0..steps] from the seed. A step is singular when some
/// component of x^[t] is infinite in the eps -> 0 limit.
inline ConfinementReport confinement_run(MapKind kind, int steps) {
  if (steps < 3) throw InvalidArgument("confinement_run needs at least 3 steps");
  ConfinementReport rep{kind, {}, -1, {}};
  State3<RatFunc> cur = seed_state(kind);
  rep.states.push_back(detail::finite_state(cur));
  while (static_cast<int>(rep.states.size()) <= steps) {
    try {
      cur = map_step(kind, cur);
      rep.states.push_back(detail::finite_state(cur));
      continue;
    } catch (const SingularHit&) {
    }
    int remaining = steps + 1 - static_cast<int>(rep.states.size());
    for (auto& st : detail::pass_singularity_adaptive(kind, cur, remaining)) rep.states.push_back(std::move(st));
    if (!rep.states.back().finite()) break;
    cur = rep.states.back().values();
  }
  for (int t = 0; t < static_cast<int>(rep.states.size()); ++t) {
    if (!rep.states[t].finite()) {
      rep.singular_steps.push_back(t);
    } else if (!rep.singular_steps.empty() && rep.first_regular_step < 0) {
      rep.first_regular_step = t;
    }
  }
  return rep;
}

struct IvppEntry {
  MultiPoly gamma, alpha, beta;
};

/// alpha, beta, gamma for t = 2..t_max, all canonical; t = 1 reads as ones.
class IvppTable {
 public:
  IvppTable() = default;
  explicit IvppTable(MapKind kind) : kind_(kind) {}

  MapKind kind() const { return kind_; }
  int t_max() const { return entries_.empty() ? 1 : entries_.rbegin()->first; }
  bool contains(int t) const { return t == 1 || entries_.count(t) > 0; }
  const std::map<int, IvppEntry>& entries() const { return entries_; }

  IvppEntry at(int t) const {
    if (t == 1) return {MultiPoly(1), MultiPoly(1), MultiPoly(1)};
    auto it = entries_.find(t);
    if (it == entries_.end()) throw MissingFactor(t);
    return it->second;
  }
  const MultiPoly& gamma(int t) const { return find(t).gamma; }
  const MultiPoly& alpha(int t) const { return find(t).alpha; }
  const MultiPoly& beta(int t) const { return find(t).beta; }

  void set(int t, IvppEntry e) {
    if (t < 2) throw InvalidArgument("IVPP entries start at t = 2");
    if (t != t_max() + 1 && !contains(t)) throw InvalidArgument("IVPP table must stay contiguous");
    if (e.gamma.is_constant()) throw InvalidArgument("gamma must be nonconstant");
    entries_[t] = {canonical(e.gamma), canonical(e.alpha), canonical(e.beta)};
  }

 private:
  const IvppEntry& find(int t) const {
    auto it = entries_.find(t);
    if (it == entries_.end()) throw MissingFactor(t);
    return it->second;
  }

  MapKind kind_ = MapKind::LV;
  std::map<int, IvppEntry> entries_;
};

namespace detail {

inline MultiPoly peel(const MultiPoly& p, const MultiPoly& known, int t, const char* what) {
  try {
    return canonical(exact_divide(p, known));
  } catch (const NotDivisible&) {
    throw ExtractionMismatch("x^[" + std::to_string(t) + "]: " + what + " does not contain the previous factor");
  }
}

inline void expect_same(const MultiPoly& got, const MultiPoly& want, int t, const char* what) {
  if (!same_up_to_constant(got, want))
    throw ExtractionMismatch("x^[" + std::to_string(t) + "]: " + what + " disagrees with the peeled factors");
}

}  // namespace detail

/// gamma^[t]: product of gamma(d) over divisors d >= 2 of |t|.
inline MultiPoly gamma_product(const IvppTable& table, int t) {
  t = t < 0 ? -t : t;
  MultiPoly out(1);
  for (int d = 2; d <= t; ++d)
    if (t % d == 0) out = out * table.at(d).gamma;
  return out;
}

/// Reads alpha, beta, gamma off the confined orbit using
///   x1^[t] = a(t-2) a(t-1) / (b(t-2) g[t-1])
///   x2^[t] = r g[t-2] g[t-1] / (a(t-2) b(t-1))
///   x3^[t] = b(t-2) b(t-1) / (g[t-2] a(t-1))
/// where g[k] is the product of g(d) over divisors d >= 2 of k. Each new
/// factor is peeled from one component and checked against the others. The
/// x2 denominator is forced by x1 x2 x3 = r once x1 and x3 are fixed.
inline IvppTable extract_factors(const ConfinementReport& rep, int t_max) {
  if (t_max < 2) throw InvalidArgument("t_max must be at least 2");
  if (rep.first_regular_step < 0) throw ExtractionMismatch("orbit never leaves the singular run");
  const int t0 = rep.first_regular_step;
  if (static_cast<int>(rep.states.size()) <= t0 + t_max - 2)
    throw InvalidArgument("confinement run too short for t_max");
  IvppTable table(rep.kind);
  const MultiPoly r = MultiPoly::r();
  for (int t = t0; t <= t0 + t_max - 2; ++t) {
    if (!rep.states[t].finite()) throw ExtractionMismatch("x^[" + std::to_string(t) + "] is singular");
    State3<RatFunc> x = rep.states[t].values();
    int k = t - t0 + 2;  // factor index produced at this step
    IvppEntry prev = table.at(k - 1);
    MultiPoly prev_bracket = gamma_product(table, k - 1);
    MultiPoly alpha = detail::peel(x[0].num(), prev.alpha, t, "x1 numerator");
    MultiPoly bracket = detail::peel(x[0].den(), prev.beta, t, "x1 denominator");
    MultiPoly beta = detail::peel(x[2].num(), prev.beta, t, "x3 numerator");
    detail::expect_same(x[2].den(), prev_bracket * alpha, t, "x3 denominator");
    detail::expect_same(x[1].num(), r * prev_bracket * bracket, t, "x2 numerator");
    detail::expect_same(x[1].den(), prev.alpha * beta, t, "x2 denominator");
    MultiPoly lower(1);
    for (int d = 2; d < k; ++d)
      if (k % d == 0) lower = lower * table.gamma(d);
    MultiPoly gamma = detail::peel(bracket, lower, t, "gamma bracket");
    if (gamma.is_constant()) throw ExtractionMismatch("gamma(" + std::to_string(k) + ") is constant");
    table.set(k, {gamma, alpha, beta});
  }
  return table;
}

inline IvppTable extract_factors(MapKind kind, int t_max) {
  if (t_max < 2) throw InvalidArgument("t_max must be at least 2");
  ConfinementReport rep = confinement_run(kind, std::max(3, t_max + 1));
  return extract_factors(rep, t_max);
}

struct TauTriple {
  int t;
  std::array<MultiPoly, 3> values;   // tau^[t+2] with every lambda set to 1
  std::array<std::string, 3> labels;  // lambda factor each entry carries
};

/// Gauge-fixed tau^[t+2] for t in [t_lo, t_hi].
inline std::vector<TauTriple> tau_chain(const IvppTable& table, int t_lo, int t_hi) {
  if (t_lo > t_hi) throw InvalidArgument("empty t range");
  auto mod3 = [](int k) { return std::to_string(((k % 3) + 3) % 3); };
  auto lp = [&](int k) { return "lambda'_" + mod3(k); };
  auto lm = [&](int k) { return "lambda_" + mod3(k); };
  const MultiPoly one(1);
  std::vector<TauTriple> out;
  for (int t = t_lo; t <= t_hi; ++t) {
    TauTriple tr{t, {one, one, one}, {}};
    if (t >= 2) {
      IvppEntry e = table.at(t);
      tr.values = {e.alpha, gamma_product(table, t), e.beta};
      tr.labels = {lp(1 - t), lp(2 - t), lp(-t)};
    } else if (t == 1) {
      tr.labels = {lp(0), lp(1), lp(2)};
    } else if (t == 0) {
      tr.values[1] = MultiPoly();
      tr.labels = {lm(2), "0", lm(1)};
    } else if (t == -1) {
      tr.labels = {lm(0), lm(1), lm(2)};
    } else {
      IvppEntry e = table.at(-t);
      tr.values = {e.beta, gamma_product(table, t), e.alpha};
      tr.labels = {lm(2 - t), lm(-t), lm(1 - t)};
    }
    out.push_back(std::move(tr));
  }
  return out;
}

}  // namespace hirota
