#pragma once

// Bivariate integer GCD by Brown's dense modular method: images in F_p[r][s]
// from evaluation in r, univariate GCDs in s and interpolation; images are
// combined by the Chinese remainder theorem until they stabilize and the
// candidate divides both inputs over Z.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hirota/algebra/multipoly.hpp"

namespace hirota::detail::modp {

using u64 = std::uint64_t;
using UP = std::vector<u64>;  // F_p[x], index = degree, no trailing zeros
using BP = std::vector<UP>;   // F_p[r][s], index = degree in s

inline u64 mul(u64 a, u64 b, u64 p) { return a * b % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 power(u64 a, u64 e, u64 p) {
  u64 out = 1;
  for (a %= p; e; e >>= 1, a = mul(a, a, p))
    if (e & 1) out = mul(out, a, p);
  return out;
}

inline u64 inverse(u64 a, u64 p) { return power(a, p - 2, p); }

inline void trim(UP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const UP& a) { return static_cast<int>(a.size()) - 1; }

inline u64 eval(const UP& a, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (mul(acc, x, p) + *it) % p;
  return acc;
}

inline UP scale(UP a, u64 c, u64 p) {
  for (auto& v : a) v = mul(v, c, p);
  trim(a);
  return a;
}

inline UP multiply(const UP& a, const UP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  UP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mul(a[i], b[j], p)) % p;
  }
  trim(out);
  return out;
}

// a = q b + rem; b nonzero.
inline std::pair<UP, UP> divmod(UP a, const UP& b, u64 p) {
  if (deg(a) < deg(b)) return {{}, std::move(a)};
  UP q(a.size() - b.size() + 1, 0);
  u64 inv = inverse(b.back(), p);
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    u64 c = mul(a[k + b.size() - 1], inv, p);
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = sub(a[k + j], mul(c, b[j], p), p);
  }
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

inline UP monic(UP a, u64 p) { return a.empty() ? a : scale(std::move(a), inverse(a.back(), p), p); }

inline UP gcd(UP a, UP b, u64 p) {
  while (!b.empty()) {
    UP rem = divmod(std::move(a), b, p).second;
    a = std::move(b);
    b = std::move(rem);
  }
  return monic(std::move(a), p);
}

inline int deg_s(const BP& a) { return static_cast<int>(a.size()) - 1; }

inline int deg_r(const BP& a) {
  int d = -1;
  for (const auto& c : a) d = std::max(d, deg(c));
  return d;
}

inline void trim(BP& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

inline UP content(const BP& a, u64 p) {
  UP g;
  for (const auto& c : a) {
    g = gcd(std::move(g), c, p);
    if (g.size() == 1) break;
  }
  return g;
}

inline BP divide_coefficients(BP a, const UP& d, u64 p) {
  for (auto& c : a) c = divmod(std::move(c), d, p).first;
  return a;
}

inline UP eval_r(const BP& a, u64 x, u64 p) {
  UP out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = eval(a[i], x, p);
  trim(out);
  return out;
}

// Does h divide a in F_p[r][s]?
inline bool divides(const BP& h, BP a, u64 p) {
  const int dh = deg_s(h);
  while (deg_s(a) >= dh) {
    auto [q, rem] = divmod(a.back(), h.back(), p);
    if (!rem.empty()) return false;
    int shift = deg_s(a) - dh;
    for (int i = 0; i <= dh; ++i) {
      UP prod = multiply(q, h[i], p);
      UP& dst = a[i + shift];
      if (dst.size() < prod.size()) dst.resize(prod.size(), 0);
      for (std::size_t k = 0; k < prod.size(); ++k) dst[k] = sub(dst[k], prod[k], p);
      trim(dst);
    }
    trim(a);
  }
  return a.empty();
}

// Newton interpolation through (xs[i], ys[i]).
inline UP interpolate(const std::vector<u64>& xs, std::vector<u64> ys, u64 p) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      ys[i] = mul(sub(ys[i], ys[i - 1], p), inverse(sub(xs[i], xs[i - j], p), p), p);
  UP out{ys[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // out = out * (x - xs[k]) + ys[k]
    UP next(out.size() + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] = (next[i + 1] + out[i]) % p;
      next[i] = sub(next[i], mul(out[i], xs[k], p), p);
    }
    next[0] = (next[0] + ys[k]) % p;
    out = std::move(next);
  }
  trim(out);
  return out;
}

/// gcd in F_p[r][s], up to a unit; nullopt if evaluation points ran out.
inline std::optional<BP> gcd(const BP& a, const BP& b, u64 p) {
  UP ca = content(a, p), cb = content(b, p), c = gcd(ca, cb, p);
  BP pa = divide_coefficients(a, ca, p), pb = divide_coefficients(b, cb, p);
  if (deg_s(pa) == 0 || deg_s(pb) == 0) return BP{c};
  UP lead = gcd(pa.back(), pb.back(), p);
  const std::size_t needed = static_cast<std::size_t>(std::min(deg_r(pa), deg_r(pb)) + deg(lead)) + 1;
  std::vector<u64> xs;
  std::vector<UP> images;
  int current = deg_s(pa) + 1;
  for (u64 x = 1; x < p && xs.size() < 4 * needed + 32; ++x) {
    u64 lx = eval(lead, x, p);
    if (!lx || !eval(pa.back(), x, p) || !eval(pb.back(), x, p)) continue;
    UP h = gcd(eval_r(pa, x, p), eval_r(pb, x, p), p);
    if (deg(h) == 0) return BP{c};
    if (deg(h) > current) continue;
    if (deg(h) < current) {
      current = deg(h);
      xs.clear();
      images.clear();
    }
    xs.push_back(x);
    images.push_back(scale(std::move(h), lx, p));
    if (xs.size() < needed) continue;
    BP cand(current + 1);
    std::vector<u64> ys(xs.size());
    for (int k = 0; k <= current; ++k) {
      for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = k < static_cast<int>(images[i].size()) ? images[i][k] : 0;
      cand[k] = interpolate(xs, ys, p);
    }
    trim(cand);
    cand = divide_coefficients(cand, content(cand, p), p);
    if (divides(cand, pa, p) && divides(cand, pb, p)) {
      for (auto& coef : cand) coef = multiply(coef, c, p);
      return cand;
    }
  }
  return std::nullopt;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Primes just below 2^31, generated on demand.
class PrimeSource {
 public:
  u64 next() {
    do --last_;
    while (!is_prime(last_));
    return last_;
  }

 private:
  u64 last_ = (u64{1} << 31);
};

inline BP reduce(const MultiPoly& a, u64 p) {
  BP out(static_cast<std::size_t>(a.degree_s()) + 1);
  for (const auto& [m, c] : a.terms()) {
    UP& row = out[m.s];
    if (row.size() <= m.r) row.resize(m.r + 1, 0);
    row[m.r] = mpz_fdiv_ui(mpq_numref(c.backend().data()), p);
  }
  for (auto& row : out) trim(row);
  trim(out);
  return out;
}

}  // namespace hirota::detail::modp

namespace hirota::detail {

struct GcdWithCofactors {
  MultiPoly gcd, a_over_gcd, b_over_gcd;
};

/// a, b: nonzero with integer coefficients. The gcd is primitive with a
/// positive lex-leading (s, then r) coefficient; callers canonicalize.
inline GcdWithCofactors modular_gcd(const MultiPoly& a, const MultiPoly& b) {
  using namespace modp;
  auto lex_lead = [](const MultiPoly& f) {
    Monomial best{0, 0};
    Rational c = 0;
    for (const auto& [m, v] : f.terms())
      if (c == 0 || m.s > best.s || (m.s == best.s && m.r > best.r)) {
        best = m;
        c = v;
      }
    return std::pair{best, boost::multiprecision::numerator(c)};
  };
  auto [ma, la] = lex_lead(a);
  auto [mb, lb] = lex_lead(b);
  Integer beta = boost::multiprecision::gcd(la, lb);

  PrimeSource primes;
  std::optional<std::pair<int, int>> lead;  // (deg_s, deg_r) of the images
  std::map<std::pair<unsigned, unsigned>, Integer> acc;
  Integer modulus = 1;
  std::optional<MultiPoly> previous;
  for (int round = 0; round < 4000; ++round) {
    u64 p = primes.next();
    if (la % p == 0 || lb % p == 0) continue;
    auto image = gcd(reduce(a, p), reduce(b, p), p);
    if (!image) continue;
    if (deg_s(*image) == 0 && deg_r(*image) == 0) return {MultiPoly(1), a, b};
    std::pair<int, int> lm{deg_s(*image), deg(image->back())};
    if (lead && lm > *lead) continue;
    if (!lead || lm < *lead) {
      lead = lm;
      acc.clear();
      modulus = 1;
      previous.reset();
    }
    u64 norm = mul(static_cast<u64>(mpz_fdiv_ui(beta.backend().data(), p)), inverse(image->back().back(), p), p);
    std::map<std::pair<unsigned, unsigned>, u64> residues;
    for (std::size_t i = 0; i < image->size(); ++i)
      for (std::size_t j = 0; j < (*image)[i].size(); ++j)
        if ((*image)[i][j]) residues[{static_cast<unsigned>(i), static_cast<unsigned>(j)}] = mul((*image)[i][j], norm, p);
    u64 minv = inverse(static_cast<u64>(mpz_fdiv_ui(modulus.backend().data(), p)), p);
    for (const auto& [key, unused] : residues) acc.try_emplace(key, Integer(0));
    for (auto& [key, value] : acc) {
      auto it = residues.find(key);
      u64 want = it == residues.end() ? 0 : it->second;
      u64 have = static_cast<u64>(mpz_fdiv_ui(value.backend().data(), p));
      value += modulus * Integer(mul(sub(want, have, p), minv, p));
    }
    modulus *= p;
    Integer half = modulus / 2;
    MultiPoly cand;
    for (const auto& [key, value] : acc)
      if (value != 0) cand.add_term({key.second, key.first}, Rational(value > half ? Integer(value - modulus) : value));
    cand = canonical(cand);
    if (previous && *previous == cand) {
      try {
        return {cand, exact_divide(a, cand), exact_divide(b, cand)};
      } catch (const NotDivisible&) {
      }
    }
    previous = std::move(cand);
  }
  throw Error("modular gcd did not converge");
}

}  // namespace hirota::detail
