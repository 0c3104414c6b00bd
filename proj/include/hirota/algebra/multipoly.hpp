#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <utility>

#include "hirota/algebra/scalar.hpp"

namespace hirota {

/// Exponent pair of the monomial r^r * s^s.
struct Monomial {
  unsigned r = 0;
  unsigned s = 0;

  unsigned degree() const noexcept { return r + s; }
  friend bool operator==(Monomial, Monomial) = default;
  friend Monomial operator*(Monomial a, Monomial b) { return {a.r + b.r, a.s + b.s}; }
  bool divides(Monomial m) const noexcept { return r <= m.r && s <= m.s; }
};

/// Graded lexicographic order with r > s, largest first.
struct GradedLexGreater {
  bool operator()(Monomial a, Monomial b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.r > b.r;
  }
};

/// Sparse polynomial in r, s with exact rational coefficients. No zero
/// coefficient is ever stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexGreater>;

  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(Rational(c)) {}
  MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
  }

  static MultiPoly monomial(const Rational& c, unsigned r_exp, unsigned s_exp) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(Monomial{r_exp, s_exp}, c);
    return p;
  }
  static MultiPoly r() { return monomial(1, 1, 0); }
  static MultiPoly s() { return monomial(1, 0, 1); }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }

  /// Constant term (zero if absent).
  Rational constant() const { return coefficient({0, 0}); }

  Rational coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Leading monomial / coefficient under graded lex. Undefined for zero.
  Monomial leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  int total_degree() const { return is_zero() ? -1 : static_cast<int>(leading_monomial().degree()); }
  int degree_r() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.r));
    return d;
  }
  int degree_s() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.s));
    return d;
  }

  /// Adds c*m in place.
  void add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
  }
  MultiPoly& operator/=(const Rational& c) {
    if (c == 0) throw DenominatorZero();
    for (auto& [m, v] : terms_) v /= c;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [m, v] : a.terms_) v = -v;
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by r^dr s^ds.
  MultiPoly shifted(Monomial by) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * by, c);
    return out;
  }

  /// d/ds.
  MultiPoly derivative_s() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_)
      if (m.s > 0) out.add_term({m.r, m.s - 1}, c * m.s);
    return out;
  }

 private:
  Terms terms_;
};

inline MultiPoly poly_pow(const MultiPoly& base, unsigned k) {
  MultiPoly result(1), b = base;
  while (k) {
    if (k & 1u) result *= b;
    k >>= 1u;
    if (k) b *= b;
  }
  return result;
}

/// Substitutes scalar values for r and s. Works for any field with
/// FieldTraits (Rational, BigFloat, ComplexBF, RatFunc).
template <class T>
T evaluate(const MultiPoly& p, const T& r, const T& s) {
  // Group by powers of r, Horner in s within each group.
  T acc = field_from<T>(0);
  int dr = p.degree_r();
  if (dr < 0) return acc;
  for (int i = dr; i >= 0; --i) {
    T row = field_from<T>(0);
    int ds = -1;
    for (const auto& [m, c] : p.terms())
      if (static_cast<int>(m.r) == i) ds = std::max(ds, static_cast<int>(m.s));
    for (int j = ds; j >= 0; --j) {
      row = row * s + field_from<T>(p.coefficient({static_cast<unsigned>(i), static_cast<unsigned>(j)}));
    }
    acc = acc * r + row;
  }
  return acc;
}

/// Exact quotient a / b. Throws NotDivisible if b does not divide a.
inline MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DenominatorZero();
  if (b.is_constant()) return a / b.constant();
  MultiPoly rem = a, q;
  const Monomial lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!rem.is_zero()) {
    Monomial lr = rem.leading_monomial();
    if (!lb.divides(lr)) throw NotDivisible();
    Monomial shift{lr.r - lb.r, lr.s - lb.s};
    Rational c = rem.leading_coefficient() / cb;
    q.add_term(shift, c);
    rem -= b.shifted(shift) * c;
  }
  return q;
}

/// Integer-content-free representative with positive leading coefficient:
/// the unique canonical associate of p over Q. Zero maps to zero.
inline MultiPoly canonical(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    den_lcm = boost::multiprecision::lcm(den_lcm, Integer(boost::multiprecision::denominator(c)));
    num_gcd = boost::multiprecision::gcd(num_gcd, Integer(boost::multiprecision::numerator(c)));
  }
  Rational scale(den_lcm, num_gcd);
  if (p.leading_coefficient() < 0) scale = -scale;
  return p * scale;
}

/// Canonical associate together with the unit: p == unit * canonical(p).
inline std::pair<Rational, MultiPoly> split_unit(const MultiPoly& p) {
  MultiPoly c = canonical(p);
  if (c.is_zero()) return {Rational(0), c};
  return {p.leading_coefficient() / c.leading_coefficient(), c};
}

/// True when a = c*b for some nonzero rational c.
inline bool same_up_to_constant(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return canonical(a) == canonical(b);
}

}  // namespace hirota
