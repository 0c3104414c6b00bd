#pragma once

// Numeric side of the invariant varieties: points on a prescribed level
// surface, high-precision polynomial roots, and the check that points on
// gamma(t) = 0 are periodic with period t.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hirota/confinement/symbolic.hpp"

namespace hirota {

/// Point with invariants (r, s) and first coordinate x1. x2, x3 are the two
/// roots of u^2 - S u + P with P = x2 x3 = r/x1 and S = x2 + x3 read off the
/// s-invariant; complex when the discriminant is negative.
inline State3<ComplexBF> level_set_point(MapKind kind, const ComplexBF& r, const ComplexBF& s, const ComplexBF& x1) {
  const ComplexBF one(BigFloat(1)), zero(BigFloat(0));
  if (x1 == zero) throw DegenerateLevel("level-set split needs x1 != 0");
  ComplexBF p = r / x1, sum;
  if (kind == MapKind::LV) {
    if (x1 == one) throw DegenerateLevel("level-set split needs x1 != 1");
    sum = one + p - s / (one - x1);
  } else {
    if (one + p == zero) throw DegenerateLevel("level-set split needs x1 != -r");
    sum = (s / (one + p) - one - x1 * x1 * p) / x1;
  }
  ComplexBF root = sqrt(sum * sum - ComplexBF(BigFloat(4)) * p);
  ComplexBF half(BigFloat("0.5"));
  return {x1, (sum + root) * half, (sum - root) * half};
}

inline State3<ComplexBF> level_set_point(MapKind kind, const Rational& r, const Rational& s, const Rational& x1) {
  return level_set_point(kind, ComplexBF(r), ComplexBF(s), ComplexBF(x1));
}

template <class T>
BigFloat distance(const State3<T>& a, const State3<T>& b) {
  BigFloat out = 0;
  for (int j = 0; j < 3; ++j) {
    BigFloat d = abs(a[j] - b[j]);
    if (d > out) out = d;
  }
  return out;
}

namespace detail {

// Value and derivative by Horner; c[k] multiplies z^k.
inline std::pair<ComplexBF, ComplexBF> horner(const std::vector<ComplexBF>& c, const ComplexBF& z) {
  ComplexBF p(BigFloat(0)), dp(BigFloat(0));
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

inline BigFloat epsilon_for_current_precision() {
  return boost::multiprecision::pow(BigFloat(10), -static_cast<int>(BigFloat::default_precision()) + 5);
}

}  // namespace detail

/// All complex roots of sum c[k] z^k (Aberth-Ehrlich) at the current
/// BigFloat precision.
inline std::vector<ComplexBF> polynomial_roots(std::vector<ComplexBF> c) {
  const ComplexBF zero(BigFloat(0)), one(BigFloat(1));
  while (!c.empty() && c.back() == zero) c.pop_back();
  if (c.size() < 2) throw RootNotFound("polynomial is constant");
  const std::size_t n = c.size() - 1;
  BigFloat radius = 0;
  for (std::size_t k = 0; k < n; ++k) {
    BigFloat q = abs(c[k] / c[n]);
    if (q > radius) radius = q;
  }
  radius += 1;
  const BigFloat two_pi = 2 * boost::multiprecision::acos(BigFloat(-1));
  std::vector<ComplexBF> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    BigFloat theta = two_pi * k / n + BigFloat("0.4");
    z[k] = ComplexBF(radius * boost::multiprecision::cos(theta), radius * boost::multiprecision::sin(theta));
  }
  const BigFloat eps = detail::epsilon_for_current_precision();
  for (int iter = 0; iter < 2000; ++iter) {
    BigFloat worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      auto [p, dp] = detail::horner(c, z[k]);
      if (p == zero) continue;
      ComplexBF w = p / dp;
      ComplexBF sum = zero;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += one / (z[k] - z[j]);
      ComplexBF step = w / (one - w * sum);
      z[k] -= step;
      BigFloat rel = abs(step) / (1 + abs(z[k]));
      if (rel > worst) worst = rel;
    }
    if (worst < eps) return z;
  }
  throw RootNotFound("root iteration did not converge");
}

/// gamma(r0, s) as a polynomial in s.
inline std::vector<ComplexBF> slice_in_s(const MultiPoly& gamma, const Rational& r0) {
  std::vector<Rational> q(static_cast<std::size_t>(std::max(0, gamma.degree_s())) + 1, Rational(0));
  for (const auto& [m, c] : gamma.terms()) {
    Rational rp = 1;
    for (unsigned i = 0; i < m.r; ++i) rp *= r0;
    q[m.s] += c * rp;
  }
  std::vector<ComplexBF> out;
  for (const Rational& v : q) out.emplace_back(v);
  return out;
}

/// Best-conditioned root of the slice, real if one exists.
inline ComplexBF slice_root(const MultiPoly& gamma, const Rational& r0) {
  auto c = slice_in_s(gamma, r0);
  bool constant = true;
  for (std::size_t k = 1; k < c.size(); ++k)
    if (!(c[k] == ComplexBF(BigFloat(0)))) constant = false;
  if (constant) throw RootNotFound("slice of gamma at this r is constant in s");
  auto roots = polynomial_roots(c);
  const BigFloat real_tol = boost::multiprecision::sqrt(detail::epsilon_for_current_precision());
  std::optional<ComplexBF> best;
  bool best_real = false;
  BigFloat best_slope = -1;
  for (ComplexBF z : roots) {
    bool real = boost::multiprecision::abs(z.im) < real_tol * (1 + abs(z));
    if (real) z.im = 0;
    // Newton polish at full precision.
    for (int i = 0; i < 8; ++i) {
      auto [p, dp] = detail::horner(c, z);
      if (dp == ComplexBF(BigFloat(0))) break;
      z -= p / dp;
    }
    BigFloat slope = abs(detail::horner(c, z).second) / boost::multiprecision::pow(1 + abs(z), static_cast<int>(c.size()) - 2);
    if (!best || (real && !best_real) || (real == best_real && slope > best_slope)) {
      best = z;
      best_real = real;
      best_slope = slope;
    }
  }
  return *best;
}

struct PeriodicSample {
  Rational r;
  ComplexBF s;
  Rational x1;
  State3<ComplexBF> point;
  std::vector<BigFloat> distance;  // distance[k-1]: |x^[k] - x| for k = 1..t
  bool real_root;
};

struct PeriodicityReport {
  int t = 0;
  unsigned digits = 0;
  std::vector<PeriodicSample> samples;
  BigFloat max_return_distance = 0;
  std::optional<BigFloat> min_nonperiod_distance;  // over t' < t not dividing t
  std::optional<BigFloat> min_proper_distance;     // over every t' < t

  bool passed(const BigFloat& tol, const BigFloat& separation) const {
    return !samples.empty() && max_return_distance < tol &&
           (!min_nonperiod_distance || *min_nonperiod_distance > separation);
  }
};

namespace detail {

// True when (r, s) also lies on gamma(2) = 0 or gamma(3) = 0 (other than the
// target). Intersections of invariant varieties contain the indeterminate
// points of the map, where periodicity does not hold.
inline bool on_other_variety(const MultiPoly& target, const ComplexBF& r, const ComplexBF& s) {
  const BigFloat tol = boost::multiprecision::sqrt(epsilon_for_current_precision());
  for (const char* text : {"s + 1", "r^2 - r*s + s^2 + r + s + 1"}) {
    MultiPoly g = parse_poly(text);
    if (same_up_to_constant(g, target)) continue;
    if (abs(evaluate(g, r, s)) < tol) return true;
  }
  return false;
}

}  // namespace detail

/// Samples points on gamma(r, s) = 0 (rational r, root s, rational x1) and
/// iterates t LV steps from each. Samples where gamma meets gamma(2) or
/// gamma(3) are skipped.
inline PeriodicityReport periodicity_check(const MultiPoly& gamma, int t, int samples, unsigned digits = kDefaultDigits,
                                           std::uint64_t seed = 1) {
  if (t < 1) throw InvalidArgument("period must be positive");
  if (samples < 1) throw InvalidArgument("need at least one sample");
  PrecisionScope scope(digits);
  PeriodicityReport rep;
  rep.t = t;
  rep.digits = digits;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rnum(-7, 7), rden(1, 5), xnum(-9, 9), xden(2, 7);
  int attempts = 0;
  while (static_cast<int>(rep.samples.size()) < samples) {
    if (++attempts > 50 * samples) throw RootNotFound("could not place sample points on the variety");
    Rational r(rnum(rng), rden(rng)), x1(xnum(rng), xden(rng));
    if (r == 0 || x1 == 0) continue;
    ComplexBF s;
    try {
      s = slice_root(gamma, r);
    } catch (const RootNotFound&) {
      continue;
    }
    if (detail::on_other_variety(gamma, ComplexBF(r), s)) continue;
    PeriodicSample smp{r, s, x1, {}, {}, s.im == 0};
    try {
      smp.point = level_set_point(MapKind::LV, ComplexBF(r), s, ComplexBF(x1));
      State3<ComplexBF> x = smp.point;
      for (int k = 1; k <= t; ++k) {
        x = lv_forward(x);
        smp.distance.push_back(distance(x, smp.point));
      }
    } catch (const SingularHit&) {
      continue;
    } catch (const DegenerateLevel&) {
      continue;
    }
    rep.max_return_distance = std::max(rep.max_return_distance, smp.distance.back());
    for (int k = 1; k < t; ++k) {
      const BigFloat& d = smp.distance[k - 1];
      if (!rep.min_proper_distance || d < *rep.min_proper_distance) rep.min_proper_distance = d;
      if (t % k != 0 && (!rep.min_nonperiod_distance || d < *rep.min_nonperiod_distance)) rep.min_nonperiod_distance = d;
    }
    rep.samples.push_back(std::move(smp));
  }
  return rep;
}

inline PeriodicityReport ivpp_periodicity_check(const IvppTable& table, int t, int samples,
                                                unsigned digits = kDefaultDigits, std::uint64_t seed = 1) {
  if (table.kind() != MapKind::LV) throw InvalidArgument("periodicity check is defined for the LV table");
  return periodicity_check(table.gamma(t), t, samples, digits, seed);
}

}  // namespace hirota
