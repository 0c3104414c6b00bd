#pragma once

// Dense univariate polynomials over an integral domain, nested to get
// Z[s][r]. Only what the subresultant GCD needs is provided.

#include <utility>
#include <vector>

#include "hirota/algebra/scalar.hpp"

namespace hirota::detail {

// ---- Integer ring primitives -------------------------------------------

inline bool ring_is_zero(const Integer& a) { return a == 0; }
inline Integer ring_one(const Integer&) { return 1; }
inline Integer ring_gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer ring_div_exact(const Integer& a, const Integer& b) { return a / b; }
inline bool ring_is_negative_unit_normal(const Integer& a) { return a < 0; }
inline bool ring_is_unit(const Integer& a) { return a == 1 || a == -1; }

template <class C>
struct Dense {
  std::vector<C> c;  // c[i] multiplies x^i; no trailing zero

  Dense() = default;
  explicit Dense(std::vector<C> coeffs) : c(std::move(coeffs)) { trim(); }
  static Dense constant(C v) { return Dense(std::vector<C>{std::move(v)}); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const C& lead() const { return c.back(); }
  void trim() {
    while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
  }
  friend bool operator==(const Dense&, const Dense&) = default;
};

// ---- Generic Dense<C> arithmetic ---------------------------------------

template <class C>
bool ring_is_zero(const Dense<C>& a) {
  return a.is_zero();
}
template <class C>
Dense<C> ring_one(const Dense<C>& proto) {
  return Dense<C>::constant(ring_one(proto.is_zero() ? C{} : proto.c[0]));
}
template <class C>
bool ring_is_unit(const Dense<C>& a) {
  return a.degree() == 0 && ring_is_unit(a.c[0]);
}

template <class C>
Dense<C> operator+(const Dense<C>& a, const Dense<C>& b) {
  std::vector<C> out(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] = out[i] + b.c[i];
  return Dense<C>(std::move(out));
}
template <class C>
Dense<C> operator-(const Dense<C>& a) {
  std::vector<C> out(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = -a.c[i];
  return Dense<C>(std::move(out));
}
template <class C>
Dense<C> operator-(const Dense<C>& a, const Dense<C>& b) {
  return a + (-b);
}
template <class C>
Dense<C> operator*(const Dense<C>& a, const Dense<C>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<C> out(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (ring_is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
  }
  return Dense<C>(std::move(out));
}
template <class C>
Dense<C> scale(const Dense<C>& a, const C& k) {
  std::vector<C> out(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = a.c[i] * k;
  return Dense<C>(std::move(out));
}
template <class C>
Dense<C> divide_coefficients(const Dense<C>& a, const C& k) {
  std::vector<C> out(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = ring_div_exact(a.c[i], k);
  return Dense<C>(std::move(out));
}

template <class C>
C power(const C& base, int k) {
  C result = ring_one(base), b = base;
  while (k > 0) {
    if (k & 1) result = result * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return result;
}

/// Exact division in C[x]; the caller guarantees divisibility.
template <class C>
Dense<C> ring_div_exact(const Dense<C>& a, const Dense<C>& b) {
  if (b.degree() == 0) return divide_coefficients(a, b.c[0]);
  Dense<C> rem = a;
  std::vector<C> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    C factor = ring_div_exact(rem.lead(), b.lead());
    for (int i = 0; i <= b.degree(); ++i) rem.c[i + shift] = rem.c[i + shift] - factor * b.c[i];
    q[shift] = factor;
    rem.trim();
  }
  return Dense<C>(std::move(q));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class C>
Dense<C> prem(const Dense<C>& a, const Dense<C>& b) {
  Dense<C> r = a;
  int e = a.degree() - b.degree() + 1;
  const C& lb = b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    C lr = r.lead();
    for (auto& v : r.c) v = v * lb;
    for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] = r.c[i + shift] - lr * b.c[i];
    r.trim();
    --e;
  }
  if (e > 0 && !r.is_zero()) r = scale(r, power(lb, e));
  return r;
}

template <class C>
C content(const Dense<C>& a) {
  C g{};
  for (const auto& v : a.c) {
    g = ring_is_zero(g) ? v : ring_gcd(g, v);
    if (ring_is_unit(g)) break;
  }
  return g;
}

template <class C>
bool ring_is_negative_unit_normal(const Dense<C>& a) {
  return !a.is_zero() && ring_is_negative_unit_normal(a.lead());
}

template <class C>
Dense<C> normalize_sign(Dense<C> a) {
  if (ring_is_negative_unit_normal(a)) a = -a;
  return a;
}

/// Subresultant PRS GCD over C[x] where C is a GCD domain.
template <class C>
Dense<C> ring_gcd(const Dense<C>& a0, const Dense<C>& b0) {
  if (a0.is_zero()) return normalize_sign(b0);
  if (b0.is_zero()) return normalize_sign(a0);
  Dense<C> a = a0, b = b0;
  if (a.degree() < b.degree()) std::swap(a, b);
  C ca = content(a), cb = content(b);
  C d = ring_gcd(ca, cb);
  a = divide_coefficients(a, ca);
  b = divide_coefficients(b, cb);
  if (b.degree() == 0) return normalize_sign(Dense<C>::constant(d));
  C g = ring_one(d), h = ring_one(d);
  while (true) {
    int delta = a.degree() - b.degree();
    Dense<C> r = prem(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = Dense<C>::constant(ring_one(d));
      break;
    }
    a = std::move(b);
    b = divide_coefficients(r, g * power(h, delta));
    g = a.lead();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = ring_div_exact(power(g, delta), power(h, delta - 1));
    }
  }
  b = divide_coefficients(b, content(b));
  return normalize_sign(scale(b, d));
}

}  // namespace hirota::detail
