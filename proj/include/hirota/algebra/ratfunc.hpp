#pragma once

#include <utility>

#include "hirota/algebra/gcd.hpp"

namespace hirota {

/// Reduced fraction num/den of polynomials in r, s. The denominator is kept
/// canonical (integer primitive, positive leading coefficient) and coprime to
/// the numerator, so the representation is unique.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(MultiPoly p) : num_(std::move(p)), den_(1) {}
  RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == MultiPoly(1); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    MultiPoly g = poly_gcd(a.den_, b.den_);
    MultiPoly ac = exact_divide(a.den_, g), bc = exact_divide(b.den_, g);
    return RatFunc(a.num_ * bc + b.num_ * ac, ac * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, Reduced{}); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel so that only coprime pieces are multiplied.
    MultiPoly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
    MultiPoly n = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
    MultiPoly d = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
    return RatFunc(std::move(n), std::move(d), Reduced{}).normalized();
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    if (is_zero()) throw DenominatorZero();
    return RatFunc(den_, num_, Reduced{}).normalized();
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  struct Reduced {};
  // num/den already coprime.
  RatFunc(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  RatFunc normalized() && {
    auto [unit, d] = split_unit(den_);
    num_ /= unit;
    den_ = std::move(d);
    return std::move(*this);
  }

  void reduce() {
    if (den_.is_zero()) throw DenominatorZero();
    if (num_.is_zero()) {
      den_ = MultiPoly(1);
      return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
    auto [unit, d] = split_unit(den_);
    num_ /= unit;
    den_ = std::move(d);
  }

  MultiPoly num_;
  MultiPoly den_;
};

template <>
struct FieldTraits<RatFunc> {
  static RatFunc from(const Rational& q) { return RatFunc(q); }
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
};

/// Evaluates a rational function at scalar (r, s).
template <class T>
T evaluate(const RatFunc& f, const T& r, const T& s) {
  T d = evaluate(f.den(), r, s);
  if (field_is_zero(d)) throw DenominatorZero();
  return evaluate(f.num(), r, s) / d;
}

}  // namespace hirota
