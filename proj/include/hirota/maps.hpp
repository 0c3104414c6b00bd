#pragma once

// Three-dimensional Lotka-Volterra and KdV maps obtained from the Hirota-Miwa
// equation by the period-3 reduction. Everything is generic over the scalar
// field (Rational, BigFloat, ComplexBF, RatFunc).

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "hirota/algebra.hpp"

namespace hirota {

enum class MapKind { LV, KdV };
enum class Direction { Forward, Backward };

inline std::string_view to_string(MapKind kind) { return kind == MapKind::LV ? "lv" : "kdv"; }

inline MapKind parse_map_kind(std::string_view text) {
  if (text == "lv" || text == "LV") return MapKind::LV;
  if (text == "kdv" || text == "KdV" || text == "KDV") return MapKind::KdV;
  throw InvalidArgument("unknown map kind: " + std::string(text));
}

/// Phase point (x1, x2, x3); indices are cyclic mod 3.
template <class T>
struct State3 {
  std::array<T, 3> x;

  State3() = default;
  State3(T x1, T x2, T x3) : x{std::move(x1), std::move(x2), std::move(x3)} {}

  /// 1-based, cyclic: at(4) == at(1).
  const T& at(int j) const { return x[((j - 1) % 3 + 3) % 3]; }
  T& operator[](std::size_t i) { return x[i]; }
  const T& operator[](std::size_t i) const { return x[i]; }

  friend bool operator==(const State3& a, const State3& b) { return a.x == b.x; }
};

/// (x1, x2, x3) -> (x2, x3, x1)
template <class T>
State3<T> rotate(const State3<T>& s) {
  return {s[1], s[2], s[0]};
}

template <class T>
struct InvariantPair {
  T r;
  T s;
  friend bool operator==(const InvariantPair& a, const InvariantPair& b) { return a.r == b.r && a.s == b.s; }
};

namespace detail {

// x_j' = x_j * num_j / den_j with den_j checked in component order.
template <class T>
State3<T> apply_brackets(const State3<T>& x, const std::array<T, 3>& num, const std::array<T, 3>& den) {
  for (int j = 0; j < 3; ++j)
    if (field_is_zero(den[j])) throw SingularHit(j + 1);
  return {x[0] * num[0] / den[0], x[1] * num[1] / den[1], x[2] * num[2] / den[2]};
}

// LV bracket 1 - x_{j+1} + x_{j+1} x_{j+2}, j = 1..3.
template <class T>
std::array<T, 3> lv_brackets(const State3<T>& x) {
  const T one = field_from<T>(1);
  return {one - x[1] + x[1] * x[2], one - x[2] + x[2] * x[0], one - x[0] + x[0] * x[1]};
}

// KdV brackets 1 + x1 x3 + x1 x2 x3^2 and its cyclic images.
template <class T>
std::array<T, 3> kdv_brackets(const State3<T>& x) {
  const T one = field_from<T>(1);
  const T p = x[0] * x[1] * x[2];
  return {one + x[0] * x[2] + p * x[2], one + x[0] * x[1] + p * x[0], one + x[1] * x[2] + p * x[1]};
}

}  // namespace detail

/// x1' = x1 (1 - x2 + x2 x3) / (1 - x3 + x3 x1), cyclically.
template <class T>
State3<T> lv_forward(const State3<T>& x) {
  auto a = detail::lv_brackets(x);
  return detail::apply_brackets(x, {a[0], a[1], a[2]}, {a[1], a[2], a[0]});
}

/// Inverse of lv_forward: x1 = y1 (1 - y3 + y2 y3) / (1 - y2 + y1 y2), cyclically.
template <class T>
State3<T> lv_inverse(const State3<T>& y) {
  const T one = field_from<T>(1);
  std::array<T, 3> c{one - y[2] + y[1] * y[2], one - y[0] + y[2] * y[0], one - y[1] + y[0] * y[1]};
  return detail::apply_brackets(y, {c[0], c[1], c[2]}, {c[2], c[0], c[1]});
}

template <class T>
State3<T> kdv_forward(const State3<T>& x) {
  auto b = detail::kdv_brackets(x);
  return detail::apply_brackets(x, {b[0], b[1], b[2]}, {b[1], b[2], b[0]});
}

/// Inverse of kdv_forward: x1 = y1 (1 + y1 y2 + y1 y2^2 y3) / (1 + y1 y3 + y1^2 y2 y3), cyclically.
template <class T>
State3<T> kdv_inverse(const State3<T>& y) {
  const T one = field_from<T>(1);
  const T p = y[0] * y[1] * y[2];
  std::array<T, 3> e{one + y[0] * y[1] + p * y[1], one + y[1] * y[2] + p * y[2], one + y[0] * y[2] + p * y[0]};
  return detail::apply_brackets(y, {e[0], e[1], e[2]}, {e[2], e[0], e[1]});
}

template <class T>
State3<T> map_step(MapKind kind, const State3<T>& x, Direction dir = Direction::Forward) {
  if (kind == MapKind::LV) return dir == Direction::Forward ? lv_forward(x) : lv_inverse(x);
  return dir == Direction::Forward ? kdv_forward(x) : kdv_inverse(x);
}

/// LV: r = x1 x2 x3, s = (1-x1)(1-x2)(1-x3).
/// KdV: r = x1 x2 x3, s = (1+x1 x2)(1+x2 x3)(1+x3 x1).
template <class T>
InvariantPair<T> invariants(MapKind kind, const State3<T>& x) {
  const T one = field_from<T>(1);
  T r = x[0] * x[1] * x[2];
  if (kind == MapKind::LV) return {r, (one - x[0]) * (one - x[1]) * (one - x[2])};
  return {r, (one + x[0] * x[1]) * (one + x[1] * x[2]) * (one + x[2] * x[0])};
}

struct SingularInfo {
  int step;         // orbit step whose computation failed (1-based)
  int denominator;  // 1-based component
};

template <class T>
struct Orbit {
  std::vector<State3<T>> states;     // states[k] = x^[k] (or x^[-k] backward)
  std::optional<SingularInfo> hit;   // set when the orbit stopped early
};

/// Iterates n steps. On a vanishing denominator the orbit stops and the hit is
/// recorded; states holds everything computed before it.
template <class T>
Orbit<T> orbit(MapKind kind, const State3<T>& x0, int n, Direction dir = Direction::Forward) {
  if (n < 0) throw InvalidArgument("orbit length must be nonnegative");
  Orbit<T> out;
  out.states.reserve(static_cast<std::size_t>(n) + 1);
  out.states.push_back(x0);
  for (int k = 1; k <= n; ++k) {
    try {
      out.states.push_back(map_step(kind, out.states.back(), dir));
    } catch (const SingularHit& hit) {
      out.hit = SingularInfo{k, hit.denominator()};
      break;
    }
  }
  return out;
}

}  // namespace hirota
