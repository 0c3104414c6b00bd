#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "hirota/errors.hpp"

namespace hirota {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 80;

/// Sets the working precision (decimal digits) of newly created BigFloat
/// values for the lifetime of the scope. MPFR's default precision is process
/// wide, so numeric drivers should not run concurrently with different
/// precisions.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
  }
  ~PrecisionScope() { BigFloat::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Parses `n` or `n/d` (optional sign, surrounding whitespace ignored).
inline Rational parse_rational(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
  };
  std::size_t p = begin;
  bool negative = false;
  if (p < end && (text[p] == '-' || text[p] == '+')) negative = text[p++] == '-';
  std::size_t slash = text.find('/', p);
  if (slash == std::string_view::npos || slash >= end) slash = end;
  if (!digits_ok(p, slash)) throw SyntaxError("expected an integer", p);
  Integer num(std::string(text.substr(p, slash - p)));
  Integer den = 1;
  if (slash != end) {
    if (!digits_ok(slash + 1, end)) throw SyntaxError("expected a denominator", slash + 1);
    den = Integer(std::string(text.substr(slash + 1, end - slash - 1)));
    if (den == 0) throw SyntaxError("zero denominator", slash + 1);
  }
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// Complex number with BigFloat parts; both parts share the working precision.
struct ComplexBF {
  BigFloat re{0};
  BigFloat im{0};

  ComplexBF() = default;
  ComplexBF(BigFloat real, BigFloat imag = BigFloat(0)) : re(std::move(real)), im(std::move(imag)) {}
  explicit ComplexBF(const Rational& q) : re(BigFloat(q)), im(0) {}

  friend ComplexBF operator+(const ComplexBF& a, const ComplexBF& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexBF operator-(const ComplexBF& a, const ComplexBF& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexBF operator-(const ComplexBF& a) { return {-a.re, -a.im}; }
  friend ComplexBF operator*(const ComplexBF& a, const ComplexBF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexBF operator/(const ComplexBF& a, const ComplexBF& b) {
    BigFloat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  ComplexBF& operator+=(const ComplexBF& o) { return *this = *this + o; }
  ComplexBF& operator-=(const ComplexBF& o) { return *this = *this - o; }
  ComplexBF& operator*=(const ComplexBF& o) { return *this = *this * o; }
  ComplexBF& operator/=(const ComplexBF& o) { return *this = *this / o; }
  friend bool operator==(const ComplexBF& a, const ComplexBF& b) { return a.re == b.re && a.im == b.im; }
};

inline BigFloat abs(const ComplexBF& z) { return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im); }

/// Principal square root.
inline ComplexBF sqrt(const ComplexBF& z) {
  using boost::multiprecision::sqrt;
  if (z.im == 0) {
    if (z.re >= 0) return {sqrt(z.re), BigFloat(0)};
    return {BigFloat(0), sqrt(-z.re)};
  }
  BigFloat m = abs(z);
  BigFloat re = sqrt((m + z.re) / 2);
  BigFloat im = sqrt((m - z.re) / 2);
  if (z.im < 0) im = -im;
  return {re, im};
}

inline std::string to_string(const BigFloat& x, int digits = 20) {
  return x.str(digits, std::ios_base::scientific);
}

inline std::string to_string(const ComplexBF& z, int digits = 20) {
  std::string out = to_string(z.re, digits);
  if (z.im != 0) out += (z.im < 0 ? " - " : " + ") + to_string(BigFloat(boost::multiprecision::abs(z.im)), digits) + "i";
  return out;
}

/// Minimal field interface used by the generic map and evaluation code.
template <class T>
struct FieldTraits {
  static T from(const Rational& q) { return T(q); }
  static bool is_zero(const T& x) { return x == T(0); }
};

template <>
struct FieldTraits<ComplexBF> {
  static ComplexBF from(const Rational& q) { return ComplexBF(q); }
  static bool is_zero(const ComplexBF& z) { return z.re == 0 && z.im == 0; }
};

template <class T>
T field_from(const Rational& q) {
  return FieldTraits<T>::from(q);
}

template <class T>
bool field_is_zero(const T& x) {
  return FieldTraits<T>::is_zero(x);
}

}  // namespace hirota
