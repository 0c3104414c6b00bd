#pragma once

// Corners tau_ij of one octahedron, the shift operators D(ij,kl) between
// them, the direction rule along edges, and routes between corners.
//
// A shift operator is stored as its exponent vector e, D = D_1^e1 ... D_4^e4.
// D(ij,kl) = D_k D_l D_j^-1 D_i^-1 has e = indicator(kl) - indicator(ij).

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hirota/errors.hpp"

namespace hirota {

using ShiftOp = std::array<int, 4>;

inline ShiftOp operator+(ShiftOp a, const ShiftOp& b) {
  for (int k = 0; k < 4; ++k) a[k] += b[k];
  return a;
}

inline ShiftOp operator-(ShiftOp a, const ShiftOp& b) {
  for (int k = 0; k < 4; ++k) a[k] -= b[k];
  return a;
}

struct Corner {
  int i = 1, j = 2;  // i < j

  Corner() = default;
  Corner(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {
    if (a == b || a < 1 || a > 4 || b < 1 || b > 4) throw InvalidArgument("corner needs two distinct indices in 1..4");
  }
  static Corner parse(std::string_view text) {
    if (text.size() != 2 || text[0] < '1' || text[0] > '4' || text[1] < '1' || text[1] > '4')
      throw InvalidArgument("bad corner label '" + std::string(text) + "'");
    return Corner(text[0] - '0', text[1] - '0');
  }
  std::string str() const { return std::to_string(i) + std::to_string(j); }
  bool has(int k) const { return k == i || k == j; }
  ShiftOp indicator() const {
    ShiftOp e{};
    e[i - 1] = e[j - 1] = 1;
    return e;
  }
  auto operator<=>(const Corner&) const = default;
};

inline std::vector<Corner> all_corners() {
  return {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
}

/// D(src, dst). src == dst raises IdentityPair rather than returning zero.
inline ShiftOp morphism(const Corner& src, const Corner& dst) {
  if (src == dst) throw IdentityPair();
  return dst.indicator() - src.indicator();
}

/// Which reading of the cyclic rule to use.
///   Textual: tau_ab -> tau_bc ... allowed iff (a, b, c) runs forward on
///            1<2<3<4<1, a = source-only index, b = shared, c = target-only.
///            Reproduces "D(34,24) is possible" and "D(24,12) is not".
///   Formula: the literal "D(ij,ik) iff k<i<j", i.e. (c, b, a) runs forward.
///            Exactly the reverse of Textual on every edge.
enum class Orientation { Textual, Formula };

inline bool is_edge(const Corner& a, const Corner& b) {
  int shared = (b.has(a.i) ? 1 : 0) + (b.has(a.j) ? 1 : 0);
  return shared == 1;
}

inline bool allowed(const Corner& src, const Corner& dst, Orientation o = Orientation::Textual) {
  if (!is_edge(src, dst)) throw NotAnEdge("corners " + src.str() + " and " + dst.str() + " are not adjacent");
  int b = dst.has(src.i) ? src.i : src.j;
  int a = src.i == b ? src.j : src.i;
  int c = dst.i == b ? dst.j : dst.i;
  auto fwd = [](int from, int to) { return ((to - from) % 4 + 4) % 4; };
  bool textual = fwd(a, b) < fwd(a, c);
  return o == Orientation::Textual ? textual : !textual;
}

inline ShiftOp compose(const std::vector<Corner>& path) {
  ShiftOp e{};
  for (std::size_t k = 1; k < path.size(); ++k) e = e + morphism(path[k - 1], path[k]);
  return e;
}

/// Every simple directed path src -> ... -> dst along allowed edges. For
/// src == dst the only route is the one-corner path.
inline std::vector<std::vector<Corner>> routes(const Corner& src, const Corner& dst,
                                               Orientation o = Orientation::Textual) {
  std::vector<std::vector<Corner>> out;
  std::vector<Corner> path{src};
  auto walk = [&](auto&& self) -> void {
    const Corner& here = path.back();
    if (here == dst) {
      out.push_back(path);
      return;
    }
    for (const auto& next : all_corners()) {
      if (!is_edge(here, next) || !allowed(here, next, o)) continue;
      bool seen = false;
      for (const auto& c : path) seen = seen || c == next;
      if (seen) continue;
      path.push_back(next);
      self(self);
      path.pop_back();
    }
  };
  walk(walk);
  return out;
}

/// A corner of O(p)[t] = O(p + t d3 - t d4).
struct ChainNode {
  Corner corner;
  int t = 0;

  /// Lattice position relative to p.
  ShiftOp position() const {
    ShiftOp e = corner.indicator();
    e[2] += t;
    e[3] -= t;
    return e;
  }
};

/// The corner names of one octahedron: (X, Y, Z) = (14, 24, 34) and
/// (X', Y', Z') = (23, 13, 12).
inline Corner named_corner(std::string_view name) {
  if (name == "X") return {1, 4};
  if (name == "Y") return {2, 4};
  if (name == "Z") return {3, 4};
  if (name == "X'") return {2, 3};
  if (name == "Y'") return {1, 3};
  if (name == "Z'") return {1, 2};
  throw InvalidArgument("unknown corner name '" + std::string(name) + "'");
}

enum class StepKind { Identity, Allowed, Forbidden, NotAdjacent };

inline const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Identity: return "id";
    case StepKind::Allowed: return "allowed";
    case StepKind::Forbidden: return "forbidden";
    case StepKind::NotAdjacent: return "not-adjacent";
  }
  return "?";
}

/// Classifies a step between chain nodes. Nodes at the same lattice position
/// are identified (the connection condition tau14[1] = tau13, tau24[1] =
/// tau23); otherwise the step must be an edge of O[t] for some t holding both.
inline StepKind classify_step(const ChainNode& from, const ChainNode& to, Orientation o = Orientation::Textual) {
  if (from.position() == to.position()) return StepKind::Identity;
  for (int t : {from.t, to.t}) {
    auto as_corner = [t](const ChainNode& n, Corner& out) {
      ShiftOp e = n.position();
      e[2] -= t;
      e[3] += t;
      int ones = 0, idx[2] = {0, 0};
      for (int k = 0; k < 4; ++k) {
        if (e[k] == 1 && ones < 2) idx[ones++] = k + 1;
        else if (e[k] != 0) return false;
      }
      if (ones != 2) return false;
      out = Corner(idx[0], idx[1]);
      return true;
    };
    Corner a, b;
    if (as_corner(from, a) && as_corner(to, b) && is_edge(a, b))
      return allowed(a, b, o) ? StepKind::Allowed : StepKind::Forbidden;
  }
  return StepKind::NotAdjacent;
}

struct RouteTemplate {
  std::vector<std::string> labels;  // e.g. {"X", "Y", "Z", "X[1]"}
  std::vector<ChainNode> nodes;
};

/// The five routes carrying a corner of O to its image in O[1]:
///   X -> Y -> Z -> X[1],  X -> Y -> Z' -> X[1],  X -> Z -> Y' -> X[1],
///   Y -> Z -> X' -> Y[1],  Z -> Y' -> X' -> Z[1].
inline std::vector<RouteTemplate> route_templates() {
  const std::vector<std::vector<std::string>> names{{"X", "Y", "Z", "X[1]"},
                                                    {"X", "Y", "Z'", "X[1]"},
                                                    {"X", "Z", "Y'", "X[1]"},
                                                    {"Y", "Z", "X'", "Y[1]"},
                                                    {"Z", "Y'", "X'", "Z[1]"}};
  std::vector<RouteTemplate> out;
  for (const auto& row : names) {
    RouteTemplate r{row, {}};
    for (const auto& label : row) {
      bool shifted = label.size() > 3 && label.substr(label.size() - 3) == "[1]";
      std::string base = shifted ? label.substr(0, label.size() - 3) : label;
      r.nodes.push_back({named_corner(base), shifted ? 1 : 0});
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct TemplateCheck {
  RouteTemplate route;
  std::vector<StepKind> steps;
  ShiftOp total{};  // lattice translation from first to last node

  bool present() const {
    for (auto k : steps)
      if (k != StepKind::Identity && k != StepKind::Allowed) return false;
    return true;
  }
};

inline TemplateCheck check_template(const RouteTemplate& route, Orientation o = Orientation::Textual) {
  TemplateCheck out{route, {}, {}};
  for (std::size_t k = 1; k < route.nodes.size(); ++k) {
    out.steps.push_back(classify_step(route.nodes[k - 1], route.nodes[k], o));
    out.total = out.total + (route.nodes[k].position() - route.nodes[k - 1].position());
  }
  return out;
}

}  // namespace hirota
