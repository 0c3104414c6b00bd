#pragma once

// tau-grids indexed by (j, t) and the reduced map variables built from them.
// j is not reduced mod 3 here: an exponential factor q^j is only compatible
// with the periodic identification when q^3 = 1.

#include <map>
#include <utility>

#include "hirota/maps.hpp"

namespace hirota {

using GridKey = std::pair<int, int>;  // (j, t)
using TauGrid = std::map<GridKey, Rational>;

namespace detail {

inline Rational int_pow(const Rational& base, int e) {
  Rational out = 1, b = e < 0 ? Rational(1) / base : base;
  for (int k = e < 0 ? -e : e; k > 0; --k) out *= b;
  return out;
}

}  // namespace detail

/// tau_j^[t] -> C a^t q^j tau_j^[t]
inline TauGrid gauge_transform(const TauGrid& grid, const Rational& C, const Rational& a, const Rational& q) {
  if (C == 0 || a == 0 || q == 0) throw InvalidArgument("gauge factors must be nonzero");
  TauGrid out;
  for (const auto& [key, tau] : grid) out[key] = tau * C * detail::int_pow(a, key.second) * detail::int_pow(q, key.first);
  return out;
}

/// Reduced variables with shift 1 wherever all four tau values exist:
///   LV:  x_j^[t] = tau_{j+2}^[t] tau_{j-1}^[t+1] / (tau_{j+1}^[t] tau_j^[t+1])
///   KdV: x_j^[t] = tau_{j+1}^[t] tau_{j-1}^[t+1] / (tau_j^[t] tau_j^[t+1])
inline std::map<GridKey, Rational> reduced_variables(MapKind kind, const TauGrid& grid) {
  std::map<GridKey, Rational> out;
  for (const auto& [key, unused] : grid) {
    auto [j, t] = key;
    GridKey n1{kind == MapKind::LV ? j + 2 : j + 1, t}, n2{j - 1, t + 1};
    GridKey d1{kind == MapKind::LV ? j + 1 : j, t}, d2{j, t + 1};
    auto f1 = grid.find(n1), f2 = grid.find(n2), g1 = grid.find(d1), g2 = grid.find(d2);
    if (f1 == grid.end() || f2 == grid.end() || g1 == grid.end() || g2 == grid.end()) continue;
    Rational den = g1->second * g2->second;
    if (den == 0) throw DenominatorZero();
    out[key] = f1->second * f2->second / den;
  }
  return out;
}

}  // namespace hirota
