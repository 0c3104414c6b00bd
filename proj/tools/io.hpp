#pragma once

// JSON / CSV marshaling for the command-line front end.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "hirota/algebra.hpp"
#include "hirota/confinement.hpp"
#include "hirota/flowgraph.hpp"
#include "hirota/lattice.hpp"
#include "hirota/maps.hpp"

namespace hirota::io {

using Json = nlohmann::ordered_json;

inline std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

inline State3<Rational> parse_state(const std::string& text) {
  auto parts = split(text);
  if (parts.size() != 3) throw InvalidArgument("--x needs three comma-separated rationals");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

inline std::array<Rational, 4> parse_z(const std::string& text) {
  auto parts = split(text);
  if (parts.size() != 4) throw InvalidArgument("--z needs four comma-separated rationals");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]), parse_rational(parts[3])};
}

inline Json state_json(const State3<Rational>& x) { return Json::array({x[0].str(), x[1].str(), x[2].str()}); }

// ---- orbit ----

inline Json orbit_json(MapKind kind, const Orbit<Rational>& orb) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < orb.states.size(); ++k) {
    auto inv = invariants(kind, orb.states[k]);
    rows.push_back({{"step", k}, {"x", state_json(orb.states[k])}, {"r", inv.r.str()}, {"s", inv.s.str()}});
  }
  Json out{{"map", std::string(to_string(kind))}, {"states", rows}};
  out["singular"] = orb.hit ? Json{{"step", orb.hit->step}, {"denominator", orb.hit->denominator}} : Json(nullptr);
  return out;
}

inline std::string orbit_csv(MapKind kind, const Orbit<Rational>& orb) {
  std::string out = "step,x1,x2,x3,r,s\n";
  for (std::size_t k = 0; k < orb.states.size(); ++k) {
    const auto& x = orb.states[k];
    auto inv = invariants(kind, x);
    out += std::to_string(k) + "," + x[0].str() + "," + x[1].str() + "," + x[2].str() + "," + inv.r.str() + "," +
           inv.s.str() + "\n";
  }
  if (orb.hit)
    out += "# singular step=" + std::to_string(orb.hit->step) + " denominator=" + std::to_string(orb.hit->denominator) +
           "\n";
  return out;
}

// ---- confinement / IVPP ----

inline Json confinement_json(const ConfinementReport& rep) {
  Json states = Json::array();
  for (std::size_t t = 0; t < rep.states.size(); ++t) {
    Json x = Json::array();
    for (const auto& c : rep.states[t].x) x.push_back(c ? format_ratfunc(*c) : std::string("inf"));
    states.push_back({{"t", t}, {"x", x}});
  }
  return {{"map", std::string(to_string(rep.kind))},
          {"singular_steps", rep.singular_steps},
          {"first_regular_step", rep.first_regular_step},
          {"states", states}};
}

inline Json ivpp_json(const IvppTable& table) {
  Json entries = Json::array();
  for (const auto& [t, e] : table.entries())
    entries.push_back(
        {{"t", t}, {"gamma", format_poly(e.gamma)}, {"alpha", format_poly(e.alpha)}, {"beta", format_poly(e.beta)}});
  return {{"map", std::string(to_string(table.kind()))}, {"t_max", table.t_max()}, {"entries", entries}};
}

inline IvppTable ivpp_from_json(const Json& j) {
  IvppTable table(parse_map_kind(j.at("map").get<std::string>()));
  for (const auto& e : j.at("entries"))
    table.set(e.at("t").get<int>(), {parse_poly(e.at("gamma").get<std::string>()),
                                     parse_poly(e.at("alpha").get<std::string>()),
                                     parse_poly(e.at("beta").get<std::string>())});
  return table;
}

struct GoldenRow {
  int t;
  std::string factor;
  bool match;
};

/// Compares against the embedded published table, up to nonzero constants.
inline std::vector<GoldenRow> golden_compare(const IvppTable& table) {
  std::vector<GoldenRow> rows;
  for (const auto& [t, ref] : reference_factors()) {
    if (!table.contains(t) || t == 1) continue;
    auto entry = table.at(t);
    auto add = [&](const char* name, const std::optional<MultiPoly>& want, const MultiPoly& got) {
      if (want) rows.push_back({t, name, same_up_to_constant(*want, got)});
    };
    add("gamma", ref.gamma, entry.gamma);
    add("alpha", ref.alpha, entry.alpha);
    add("beta", ref.beta, entry.beta);
  }
  return rows;
}

// ---- periodicity ----

inline Json periodicity_json(const PeriodicityReport& rep, const std::string& gamma, bool passed) {
  Json samples = Json::array();
  for (const auto& s : rep.samples)
    samples.push_back({{"r", s.r.str()},
                       {"s", to_string(s.s, 30)},
                       {"x1", s.x1.str()},
                       {"return_distance", to_string(s.distance.back(), 6)}});
  Json out{{"t", rep.t}, {"digits", rep.digits}, {"gamma", gamma}, {"samples", samples}};
  out["max_return_distance"] = to_string(rep.max_return_distance, 6);
  out["min_nonperiod_distance"] = rep.min_nonperiod_distance ? Json(to_string(*rep.min_nonperiod_distance, 6)) : Json();
  out["passed"] = passed;
  return out;
}

// ---- lattice ----

inline Json tau_field_json(const TauField& f, const Coefficients& c) {
  Json z = Json::array();
  if (c.z())
    for (const auto& v : *c.z()) z.push_back(v.str());
  Json points = Json::array();
  for (const auto& [q, v] : f.values()) points.push_back({{"p", q.p}, {"tau", v.str()}});
  return {{"z", z}, {"points", points}};
}

struct FieldFile {
  Coefficients coefficients;
  TauField field;
};

/// Reads {"z":[...],"points":[{"p":[..],"tau":".."}]}; the patch is the
/// bounding box of the points, cut to the levels they occupy.
inline FieldFile tau_field_from_json(const Json& j) {
  auto zs = j.at("z");
  if (zs.size() != 4) throw InvalidArgument("\"z\" needs four entries");
  std::array<Rational, 4> z;
  for (int k = 0; k < 4; ++k) z[k] = parse_rational(zs[k].get<std::string>());
  const auto& pts = j.at("points");
  if (pts.empty()) throw InvalidArgument("\"points\" is empty");
  Patch box{{INT32_MAX, INT32_MAX, INT32_MAX, INT32_MAX}, {INT32_MIN, INT32_MIN, INT32_MIN, INT32_MIN}, INT32_MAX,
            INT32_MIN};
  std::vector<std::pair<LatticePoint, Rational>> values;
  for (const auto& e : pts) {
    auto p = e.at("p").get<std::array<int, 4>>();
    for (int k = 0; k < 4; ++k) {
      box.lo[k] = std::min(box.lo[k], p[k]);
      box.hi[k] = std::max(box.hi[k], p[k]);
    }
    box.level_lo = std::min(box.level_lo, LatticePoint{p}.level());
    box.level_hi = std::max(box.level_hi, LatticePoint{p}.level());
    values.emplace_back(LatticePoint{p}, parse_rational(e.at("tau").get<std::string>()));
  }
  TauField field(box);
  for (const auto& [q, v] : values) field.set(q, v);
  return {Coefficients(z), std::move(field)};
}

struct ResidualRow {
  LatticePoint p;
  Rational residual, pfaffian, det;
};

/// Every center whose six corners carry values.
inline std::vector<ResidualRow> residual_rows(const TauField& f, const Coefficients& c) {
  std::vector<ResidualRow> rows;
  for (const auto& p : f.patch().interior().points()) {
    bool complete = true;
    for (auto [i, j] : kPairs) complete = complete && f.has(p.shifted(i, j));
    if (complete) rows.push_back({p, hm_residual(f, c, p), pfaffian_F(f, c, p), det_F(f, c, p)});
  }
  return rows;
}

inline std::string residual_csv_rows(const std::vector<ResidualRow>& rows, const std::string& prefix = "") {
  std::string out;
  for (const auto& r : rows)
    out += prefix + std::to_string(r.p.p[0]) + "," + std::to_string(r.p.p[1]) + "," + std::to_string(r.p.p[2]) + "," +
           std::to_string(r.p.p[3]) + "," + r.residual.str() + "\n";
  return out;
}

// ---- flowgraph ----

inline Json corner_path_json(const std::vector<Corner>& path) {
  Json labels = Json::array();
  for (const auto& c : path) labels.push_back(c.str());
  return labels;
}

}  // namespace hirota::io
