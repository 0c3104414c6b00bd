#pragma once

#include "hirota/algebra/multipoly.hpp"
#include "hirota/detail/dense_poly.hpp"
#include "hirota/detail/modular_gcd.hpp"

namespace hirota {

namespace detail {

using ZPoly = Dense<Integer>;   // Z[s]
using ZZPoly = Dense<ZPoly>;    // Z[s][r]

/// p must have integer coefficients.
inline ZZPoly to_dense(const MultiPoly& p) {
  int dr = p.degree_r(), ds = p.degree_s();
  std::vector<std::vector<Integer>> grid(dr + 1, std::vector<Integer>(ds + 1));
  for (const auto& [m, c] : p.terms()) grid[m.r][m.s] = boost::multiprecision::numerator(c);
  std::vector<ZPoly> rows;
  rows.reserve(grid.size());
  for (auto& row : grid) rows.emplace_back(std::move(row));
  return ZZPoly(std::move(rows));
}

inline MultiPoly from_dense(const ZZPoly& d) {
  MultiPoly p;
  for (std::size_t i = 0; i < d.c.size(); ++i)
    for (std::size_t j = 0; j < d.c[i].c.size(); ++j)
      p.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, Rational(d.c[i].c[j]));
  return p;
}

/// Largest monomial dividing every term.
inline Monomial monomial_content(const MultiPoly& p) {
  Monomial m{~0u, ~0u};
  for (const auto& [e, c] : p.terms()) m = {std::min(m.r, e.r), std::min(m.s, e.s)};
  return m;
}

// Shared front end: zero/constant cases, canonical scaling and monomial
// content. `core` computes the gcd of two primitive integer polynomials with
// no monomial factor.
template <class Core>
MultiPoly gcd_front(const MultiPoly& a, const MultiPoly& b, Core core) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
  if (a.is_zero()) return canonical(b);
  if (b.is_zero()) return canonical(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  MultiPoly ca = canonical(a), cb = canonical(b);
  if (ca == cb) return ca;
  Monomial ma = monomial_content(ca), mb = monomial_content(cb);
  Monomial common{std::min(ma.r, mb.r), std::min(ma.s, mb.s)};
  MultiPoly qa, qb;
  for (const auto& [m, c] : ca.terms()) qa.add_term({m.r - ma.r, m.s - ma.s}, c);
  for (const auto& [m, c] : cb.terms()) qb.add_term({m.r - mb.r, m.s - mb.s}, c);
  MultiPoly g = (qa.is_constant() || qb.is_constant()) ? MultiPoly(1) : core(qa, qb);
  return canonical(g.shifted(common));
}

}  // namespace detail

/// Greatest common divisor in canonical form (integer primitive, positive
/// leading coefficient). gcd(0, 0) is rejected.
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  return detail::gcd_front(a, b, [](const MultiPoly& x, const MultiPoly& y) { return detail::modular_gcd(x, y).gcd; });
}

/// Same contract as poly_gcd, computed by the subresultant remainder sequence.
/// Much slower on large inputs; kept as an independent reference.
inline MultiPoly poly_gcd_subresultant(const MultiPoly& a, const MultiPoly& b) {
  return detail::gcd_front(a, b, [](const MultiPoly& x, const MultiPoly& y) {
    return detail::from_dense(detail::ring_gcd(detail::to_dense(x), detail::to_dense(y)));
  });
}

}  // namespace hirota
