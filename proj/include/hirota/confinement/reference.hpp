#pragma once

// Published closed forms of the LV invariant-variety factors, used as golden
// data. Entries are stored as printed (not canonicalized); compare with
// same_up_to_constant.

#include <map>
#include <optional>

#include "hirota/algebra.hpp"

namespace hirota {

struct ReferenceEntry {
  std::optional<MultiPoly> gamma, alpha, beta;
};

inline std::map<int, ReferenceEntry> reference_factors() {
  const MultiPoly r = MultiPoly::r(), s = MultiPoly::s(), one(1);
  const MultiPoly rp = r + one, sp = s + one, rm = r - s;
  auto pw = [](const MultiPoly& p, unsigned k) { return poly_pow(p, k); };

  std::map<int, ReferenceEntry> out;
  out[2] = {sp, rp, rm};
  out[3] = {parse_poly("r^2 + s^2 + r + s - r*s + 1"), parse_poly("-r*s^2 + r^2 - 3*r*s - s"),
            parse_poly("3*r*s + r - s^2 + r^2*s")};
  out[4] = {pw(rm, 3) - s * pw(rp, 3),
            parse_poly("r^4*s + 3*r^3*s + r^2*s^3 + 6*r^2*s + r^2 - r^3*s^2 - s^4*r - 6*r*s^2 - 3*r*s^3 - s^2"),
            parse_poly("r^4 - 3*r^3*s + r^2*s^3 + 6*r^2*s^2 + r^2 + r^3 + 3*r*s + 6*r*s^2 + r - s^3")};
  out[5] = {-pw(rm, 6) + (r - MultiPoly(2)) * rp * sp * pw(rm, 4) +
                (MultiPoly(2) * s + r) * pw(rp, 2) * pw(sp, 2) * pw(rm, 2) - pw(s, 2) * pw(rp, 3) * pw(sp, 3),
            parse_poly("-s^6*r - 3*r*s^5 + 3*r^2*s^5 - 6*s^4*r - 6*r^3*s^4 + 3*s^4*r^2 + r^2*s^3 - r^3*s^3"
                       " + 10*r^4*s^3 - 10*r*s^3 - s^3 + s^3*r^5 + 21*r^2*s^2 + 21*r^4*s^2 + 27*r^3*s^2"
                       " + 6*r^2*s + 3*r^3*s - 3*r^4*s - 6*r^5*s + r^5 + r^2 + r^4 + r^3 + r^6"),
            parse_poly("-s^6*r^2 + s^5 - 6*r^2*s^5 + s^5*r^3 - 21*s^4*r^2 - s^4*r^4 + 3*r^3*s^4 - 10*s^4*r"
                       " + 3*r^4*s^3 - r^2*s^3 - 6*r*s^3 + 27*r^3*s^3 + s^3*r^5 - 3*r^2*s^2 - 3*r*s^2"
                       " - 21*r^4*s^2 - r^3*s^2 - 6*r^5*s^2 - r^6*s^2 - r*s - 3*r^2*s - 6*r^3*s - 10*r^4*s + r^5")};
  const MultiPoly q = rp * sp;
  out[6] = {MultiPoly(-3) * pw(rm, 4) - q * (q - MultiPoly(3)) * pw(rm, 2) -
                MultiPoly(3) * q * parse_poly("r^3 + s^3 - r^2*s^2 - 2*r^2*s - 2*r*s^2 - r^2 - s^2"),
            std::nullopt, std::nullopt};
  return out;
}

}  // namespace hirota
