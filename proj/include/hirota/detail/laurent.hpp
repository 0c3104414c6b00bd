#pragma once

// Truncated Laurent series in a perturbation parameter eps with RatFunc
// coefficients. Used to carry a symbolic orbit through steps where the exact
// map divides by an identically vanishing bracket: the perturbed orbit is
// iterated and the eps -> 0 limit is read off once it is finite again.

#include <algorithm>
#include <vector>

#include "hirota/algebra/ratfunc.hpp"

namespace hirota::detail {

/// Raised when cancellation has consumed every known coefficient. Callers
/// retry with a larger relative precision.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted() : Error("Laurent series precision exhausted") {}
};

/// sum_k c[k] eps^(val+k) + O(eps^(val+N')) where N' = c.size() <= N.
/// A normalized series has c[0] != 0; the exact zero is the empty series
/// with val == kZeroVal.
template <int N>
class Laurent {
 public:
  static constexpr int kZeroVal = 1 << 28;

  Laurent() : val_(kZeroVal) {}
  Laurent(long c) : Laurent(RatFunc(c)) {}
  Laurent(const Rational& c) : Laurent(RatFunc(c)) {}
  Laurent(const RatFunc& c) : val_(0), c_(N, RatFunc()) {
    c_[0] = c;
    normalize_exact();
  }
  /// c0 + c1 * eps
  static Laurent linear(const RatFunc& c0, const RatFunc& c1) {
    Laurent out;
    out.val_ = 0;
    out.c_.assign(N, RatFunc());
    out.c_[0] = c0;
    if (N > 1) out.c_[1] = c1;
    out.normalize();
    return out;
  }

  bool is_exact_zero() const { return c_.empty() && val_ == kZeroVal; }
  int valuation() const { return val_; }
  int precision() const { return static_cast<int>(c_.size()); }
  const RatFunc& leading() const { return c_.front(); }

  /// Limit as eps -> 0. Only meaningful when valuation() >= 0.
  RatFunc limit() const { return (is_exact_zero() || val_ > 0) ? RatFunc() : c_.front(); }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    Laurent out;
    out.val_ = std::min(a.val_, b.val_);
    int abs_prec = std::min(a.val_ + a.precision(), b.val_ + b.precision());
    int n = std::max(0, abs_prec - out.val_);
    out.c_.assign(n, RatFunc());
    for (int k = 0; k < n; ++k) {
      int e = out.val_ + k;
      if (e - a.val_ >= 0 && e - a.val_ < a.precision()) out.c_[k] += a.c_[e - a.val_];
      if (e - b.val_ >= 0 && e - b.val_ < b.precision()) out.c_[k] += b.c_[e - b.val_];
    }
    out.normalize();
    return out;
  }
  friend Laurent operator-(const Laurent& a) {
    Laurent out = a;
    for (auto& v : out.c_) v = -v;
    return out;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return Laurent();
    Laurent out;
    out.val_ = a.val_ + b.val_;
    int n = std::min(a.precision(), b.precision());
    out.c_.assign(n, RatFunc());
    for (int i = 0; i < n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j < n; ++j)
        if (!b.c_[j].is_zero()) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.normalize();
    return out;
  }
  friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.inverse(); }

  Laurent inverse() const {
    if (is_exact_zero()) throw DenominatorZero();
    Laurent out;
    out.val_ = -val_;
    int n = precision();
    out.c_.assign(n, RatFunc());
    RatFunc inv0 = c_[0].inverse();
    out.c_[0] = inv0;
    for (int k = 1; k < n; ++k) {
      RatFunc acc;
      for (int i = 1; i <= k; ++i)
        if (!c_[i].is_zero()) acc += c_[i] * out.c_[k - i];
      out.c_[k] = -(acc * inv0);
    }
    out.normalize();
    return out;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.val_ == b.val_ && a.c_ == b.c_; }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) throw PrecisionExhausted();
    if (lead) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      val_ += static_cast<int>(lead);
    }
  }
  // Constants carry full precision; zero is exact.
  void normalize_exact() {
    if (c_[0].is_zero()) {
      c_.clear();
      val_ = kZeroVal;
    }
  }

  int val_;
  std::vector<RatFunc> c_;
};

}  // namespace hirota::detail

namespace hirota {

template <int N>
struct FieldTraits<detail::Laurent<N>> {
  static detail::Laurent<N> from(const Rational& q) { return detail::Laurent<N>(q); }
  static bool is_zero(const detail::Laurent<N>& x) { return x.is_exact_zero(); }
};

}  // namespace hirota
