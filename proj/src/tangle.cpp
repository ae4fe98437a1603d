#include "pkh/tangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace pkh {

namespace {

struct UnionFind {
  std::map<int, int> parent;

  void add(int x) { parent.emplace(x, x); }

  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end())
      throw std::logic_error("union-find: unknown label");
    while (it->second != x) {
      x = it->second;
      it = parent.find(x);
    }
    return x;
  }

  void join(int a, int b) { parent[find(a)] = find(b); }
};

// Slot pairs joined by each smoothing, in the fixed convention.
std::array<std::array<int, 2>, 2> smoothing_pairs(int bit) {
  bool first = kZeroSmoothingJoinsFirstPair ? (bit == 0) : (bit != 0);
  if (first) return {{{0, 1}, {2, 3}}};
  return {{{0, 3}, {1, 2}}};
}

std::vector<int> all_labels(const TangleDiagram& t) {
  std::vector<int> ls;
  for (const auto& c : t.crossings) ls.insert(ls.end(), c.begin(), c.end());
  ls.insert(ls.end(), t.endpoints.begin(), t.endpoints.end());
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  return ls;
}

// Strand-flow consistency: every edge with two crossing ends must leave
// one of them and enter the other.  Ends at the boundary are free.
bool orientation_flows(const std::vector<std::array<int, 4>>& crossings,
                       const std::vector<std::pair<int, int>>& orientation,
                       std::string* why) {
  std::map<int, std::vector<bool>> ends;  // label -> outgoing flags
  for (size_t c = 0; c < crossings.size(); ++c) {
    const auto& cr = crossings[c];
    const auto& [u, o] = orientation[c];
    if (cr[0] == cr[2] || cr[1] == cr[3])
      throw std::invalid_argument(
          "orientation: crossing strand occupies both parallel slots");
    if (u != cr[0] && u != cr[2]) {
      if (why) *why = "outgoing under-edge is not an under-edge";
      return false;
    }
    if (o != cr[1] && o != cr[3]) {
      if (why) *why = "outgoing over-edge is not an over-edge";
      return false;
    }
    for (int s = 0; s < 4; ++s) {
      bool under = (s % 2 == 0);
      bool out = under ? (cr[s] == u) : (cr[s] == o);
      ends[cr[s]].push_back(out);
    }
  }
  for (const auto& [label, flags] : ends) {
    if (flags.size() > 2) return false;  // unreachable for valid diagrams
    if (flags.size() == 2 && flags[0] == flags[1]) {
      if (why)
        *why = "edge " + std::to_string(label) +
               " flows the same way at both of its crossings";
      return false;
    }
  }
  return true;
}

void check_planar(const TangleDiagram& t) {
  const int n = static_cast<int>(t.crossings.size());
  const int ndarts = 4 * n + 4;
  // Rotation: counterclockwise around each crossing, clockwise around
  // the boundary vertex (it is viewed from outside the disk).
  std::vector<int> sigma(ndarts), alpha(ndarts, -1);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 4; ++k) sigma[4 * i + k] = 4 * i + (k + 1) % 4;
  for (int j = 0; j < 4; ++j) sigma[4 * n + j] = 4 * n + (j + 3) % 4;

  std::map<int, std::vector<int>> darts_of;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 4; ++k) darts_of[t.crossings[i][k]].push_back(4 * i + k);
  for (int j = 0; j < 4; ++j) darts_of[t.endpoints[j]].push_back(4 * n + j);
  for (const auto& [label, ds] : darts_of) {
    if (ds.size() != 2)
      throw std::invalid_argument("edge " + std::to_string(label) +
                                  " does not appear exactly twice");
    alpha[ds[0]] = ds[1];
    alpha[ds[1]] = ds[0];
  }

  // Vertices: n crossings plus the boundary.  Components via the edges.
  std::vector<int> comp(n + 1);
  for (int v = 0; v <= n; ++v) comp[v] = v;
  auto vfind = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  auto vertex_of = [&](int dart) { return dart < 4 * n ? dart / 4 : n; };
  for (int d = 0; d < ndarts; ++d)
    comp[vfind(vertex_of(d))] = vfind(vertex_of(alpha[d]));

  // Count faces of phi = sigma . alpha per component.
  std::map<int, int> faces, verts, edges;
  std::vector<bool> seen(ndarts, false);
  for (int d = 0; d < ndarts; ++d) {
    if (seen[d]) continue;
    int e = d;
    do {
      seen[e] = true;
      e = sigma[alpha[e]];
    } while (e != d);
    ++faces[vfind(vertex_of(d))];
  }
  for (int v = 0; v <= n; ++v) ++verts[vfind(v)];
  for (const auto& [label, ds] : darts_of)
    ++edges[vfind(vertex_of(ds[0]))];

  for (const auto& [root, f] : faces) {
    int euler = verts[root] - edges[root] + f;
    if (euler != 2)
      throw std::invalid_argument("diagram is not planar");
  }
}

}  // namespace

std::string saddle_name(SaddleKind k) {
  switch (k) {
    case SaddleKind::EarringArcCircleSplit: return "earring-arc-circle-split";
    case SaddleKind::EarringArcCircleMerge: return "earring-arc-circle-merge";
    case SaddleKind::PlainArcCircleSplit: return "plain-arc-circle-split";
    case SaddleKind::PlainArcCircleMerge: return "plain-arc-circle-merge";
    case SaddleKind::CircleCircleMerge: return "circle-circle-merge";
    case SaddleKind::CircleSplit: return "circle-split";
    case SaddleKind::ArcArc: return "arc-arc";
  }
  return "unknown";
}

void validate_tangle(const TangleDiagram& t) {
  if (t.crossings.size() > 16)
    throw std::invalid_argument("too many crossings");

  std::map<int, int> occur;
  for (const auto& c : t.crossings)
    for (int l : c) ++occur[l];
  for (int l : t.endpoints) ++occur[l];
  for (const auto& [label, count] : occur)
    if (count != 2)
      throw std::invalid_argument("edge " + std::to_string(label) +
                                  " appears " + std::to_string(count) +
                                  " times, expected 2");
  std::vector<int> loops = t.loops;
  std::sort(loops.begin(), loops.end());
  if (std::adjacent_find(loops.begin(), loops.end()) != loops.end())
    throw std::invalid_argument("duplicate loop label");
  for (int l : loops)
    if (occur.count(l))
      throw std::invalid_argument("loop label " + std::to_string(l) +
                                  " also appears on a strand");

  check_planar(t);

  if (!t.orientation.empty() && t.orientation.size() != t.crossings.size())
    throw std::invalid_argument(
        "orientation list length differs from crossing count");
  if (t.oriented()) {
    std::string why;
    if (!orientation_flows(t.crossings, t.orientation, &why))
      throw std::invalid_argument("inconsistent orientation: " + why);
  }
}

TangleDiagram parse_tangle(const nlohmann::json& j) {
  TangleDiagram t;
  const auto& eps = j.at("endpoints");
  if (eps.size() != 4)
    throw std::invalid_argument("endpoints must list 4 labels (E, N, W, S)");
  for (int i = 0; i < 4; ++i) t.endpoints[i] = eps[i].get<int>();
  for (const auto& c : j.at("crossings")) {
    if (c.size() != 4)
      throw std::invalid_argument("crossing must list 4 edge labels");
    t.crossings.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>(),
                           c[3].get<int>()});
  }
  if (j.contains("orientation"))
    for (const auto& o : j["orientation"]) {
      if (o.size() != 2)
        throw std::invalid_argument(
            "orientation entry must be [under-exit, over-exit]");
      t.orientation.emplace_back(o[0].get<int>(), o[1].get<int>());
    }
  if (j.contains("loops"))
    for (const auto& l : j["loops"]) t.loops.push_back(l.get<int>());
  validate_tangle(t);
  return t;
}

nlohmann::json tangle_json(const TangleDiagram& t) {
  nlohmann::json j;
  j["endpoints"] = t.endpoints;
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : t.crossings) j["crossings"].push_back(c);
  if (!t.orientation.empty()) {
    j["orientation"] = nlohmann::json::array();
    for (const auto& [u, o] : t.orientation)
      j["orientation"].push_back({u, o});
  }
  if (!t.loops.empty()) j["loops"] = t.loops;
  return j;
}

LinkDiagram parse_link(const nlohmann::json& j) {
  if (j.contains("endpoints") && !j["endpoints"].empty())
    throw std::invalid_argument("link diagram must not have open endpoints");
  LinkDiagram l;
  for (const auto& c : j.at("crossings")) {
    if (c.size() != 4)
      throw std::invalid_argument("crossing must list 4 edge labels");
    l.crossings.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>(),
                           c[3].get<int>()});
  }
  l.basepoint = j.at("basepoint").get<int>();
  if (j.contains("orientation"))
    for (const auto& o : j["orientation"])
      l.orientation.emplace_back(o[0].get<int>(), o[1].get<int>());
  if (j.contains("loops"))
    for (const auto& lab : j["loops"]) l.loops.push_back(lab.get<int>());

  std::map<int, int> occur;
  for (const auto& c : l.crossings)
    for (int lab : c) ++occur[lab];
  for (const auto& [label, count] : occur)
    if (count != 2)
      throw std::invalid_argument("edge " + std::to_string(label) +
                                  " appears " + std::to_string(count) +
                                  " times, expected 2");
  bool base_ok = occur.count(l.basepoint) ||
                 std::count(l.loops.begin(), l.loops.end(), l.basepoint);
  if (!base_ok)
    throw std::invalid_argument("basepoint is not an edge of the diagram");
  if (!l.orientation.empty() && l.orientation.size() != l.crossings.size())
    throw std::invalid_argument(
        "orientation list length differs from crossing count");
  return l;
}

nlohmann::json link_json(const LinkDiagram& l) {
  nlohmann::json j;
  j["endpoints"] = nlohmann::json::array();
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : l.crossings) j["crossings"].push_back(c);
  j["basepoint"] = l.basepoint;
  if (!l.orientation.empty()) {
    j["orientation"] = nlohmann::json::array();
    for (const auto& [u, o] : l.orientation)
      j["orientation"].push_back({u, o});
  }
  if (!l.loops.empty()) j["loops"] = l.loops;
  return j;
}

Resolution resolve(const TangleDiagram& t, uint32_t bits) {
  const int n = static_cast<int>(t.crossings.size());
  if (n < 32 && bits >= (1u << n))
    throw std::invalid_argument("resolution bits out of range");

  UnionFind uf;
  for (int l : all_labels(t)) uf.add(l);
  for (int l : t.loops) uf.add(l);
  for (int c = 0; c < n; ++c) {
    auto pairs = smoothing_pairs((bits >> c) & 1);
    for (const auto& [s1, s2] : pairs)
      uf.join(t.crossings[c][s1], t.crossings[c][s2]);
  }

  std::map<int, std::vector<int>> groups;
  for (const auto& [label, _] : uf.parent) groups[uf.find(label)].push_back(label);

  int earring_root = uf.find(t.endpoints[0]);
  std::vector<int> endpoint_roots;
  for (int e : t.endpoints) endpoint_roots.push_back(uf.find(e));

  Resolution r;
  if (endpoint_roots[0] == endpoint_roots[3] &&
      endpoint_roots[1] == endpoint_roots[2] &&
      endpoint_roots[0] != endpoint_roots[1])
    r.type = 0;
  else if (endpoint_roots[0] == endpoint_roots[1] &&
           endpoint_roots[2] == endpoint_roots[3] &&
           endpoint_roots[0] != endpoint_roots[2])
    r.type = 1;
  else
    throw std::logic_error("resolved arcs do not pair E-S/N-W or E-N/W-S");

  int other_root = endpoint_roots[0] == endpoint_roots[1] ? endpoint_roots[2]
                                                          : endpoint_roots[1];
  for (auto& [root, labels] : groups) {
    std::sort(labels.begin(), labels.end());
    if (root == earring_root || root == other_root) continue;
    r.circles.push_back(labels);
  }
  std::sort(r.circles.begin(), r.circles.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });

  for (int i = 0; i < r.num_circles(); ++i)
    for (int l : r.circles[i]) r.comp_of[l] = i;
  for (int l : groups[earring_root]) r.comp_of[l] = -1;
  for (int l : groups[other_root]) r.comp_of[l] = -2;
  return r;
}

ResolutionCube build_cube(const TangleDiagram& t) {
  const int n = static_cast<int>(t.crossings.size());
  ResolutionCube cube;
  cube.n = n;
  cube.vertices.reserve(1u << n);
  for (uint32_t v = 0; v < (1u << n); ++v)
    cube.vertices.push_back(resolve(t, v));

  for (uint32_t v = 0; v < (1u << n); ++v) {
    for (int c = 0; c < n; ++c) {
      if ((v >> c) & 1) continue;
      CubeEdge e;
      e.from = v;
      e.to = v | (1u << c);
      e.crossing = c;
      const Resolution& src = cube.vertices[e.from];
      const Resolution& tgt = cube.vertices[e.to];
      const auto& cr = t.crossings[c];

      auto sp = smoothing_pairs(0);
      auto tp = smoothing_pairs(1);
      int f1 = src.comp_of.at(cr[sp[0][0]]);
      int f2 = src.comp_of.at(cr[sp[1][0]]);
      int g1 = tgt.comp_of.at(cr[tp[0][0]]);
      int g2 = tgt.comp_of.at(cr[tp[1][0]]);

      if (f1 == f2) {
        if (f1 >= 0) {
          e.kind = SaddleKind::CircleSplit;
          e.src_affected = {f1};
          if (g1 < 0 || g2 < 0 || g1 == g2)
            throw std::logic_error("circle split target is not two circles");
          e.tgt_affected = {std::min(g1, g2), std::max(g1, g2)};
        } else {
          e.kind = f1 == -1 ? SaddleKind::EarringArcCircleSplit
                            : SaddleKind::PlainArcCircleSplit;
          int born = g1 >= 0 ? g1 : g2;
          if (born < 0 || (g1 >= 0 && g2 >= 0))
            throw std::logic_error("arc split target is not arc plus circle");
          e.tgt_affected = {born};
        }
        if (tgt.num_circles() != src.num_circles() + 1)
          throw std::logic_error("split does not add one circle");
      } else if (f1 >= 0 && f2 >= 0) {
        e.kind = SaddleKind::CircleCircleMerge;
        e.src_affected = {std::min(f1, f2), std::max(f1, f2)};
        if (g1 != g2 || g1 < 0)
          throw std::logic_error("circle merge target is not one circle");
        e.tgt_affected = {g1};
        if (tgt.num_circles() != src.num_circles() - 1)
          throw std::logic_error("merge does not remove one circle");
      } else if (f1 < 0 && f2 < 0) {
        e.kind = SaddleKind::ArcArc;
        if (tgt.type == src.type)
          throw std::logic_error("arc-arc saddle does not flip the type");
        if (tgt.num_circles() != src.num_circles())
          throw std::logic_error("arc-arc saddle changes the circle count");
      } else {
        int arc = f1 < 0 ? f1 : f2;
        int circle = f1 >= 0 ? f1 : f2;
        e.kind = arc == -1 ? SaddleKind::EarringArcCircleMerge
                           : SaddleKind::PlainArcCircleMerge;
        e.src_affected = {circle};
        if (g1 != g2 || g1 != arc)
          throw std::logic_error("arc merge target is not the same arc");
        if (tgt.num_circles() != src.num_circles() - 1)
          throw std::logic_error("merge does not remove one circle");
      }
      if (e.kind != SaddleKind::ArcArc && tgt.type != src.type)
        throw std::logic_error("circle saddle flips the arc type");

      // Unaffected circles persist with identical edge sets.
      for (int s = 0; s < src.num_circles(); ++s) {
        if (std::count(e.src_affected.begin(), e.src_affected.end(), s))
          continue;
        int tpos = tgt.comp_of.at(src.circles[s][0]);
        if (tpos < 0 || tgt.circles[tpos] != src.circles[s])
          throw std::logic_error("unaffected circle changed along an edge");
        if (std::count(e.tgt_affected.begin(), e.tgt_affected.end(), tpos))
          throw std::logic_error("unaffected circle marked affected");
        e.unaffected_map.push_back(tpos);
      }
      cube.edges.push_back(std::move(e));
    }
  }
  return cube;
}

LinkDiagram close_tangle(const TangleDiagram& t, int closure) {
  if (closure != 0 && closure != 1)
    throw std::invalid_argument("closure must be 0 or 1");
  LinkDiagram l;
  l.crossings = t.crossings;
  l.orientation = t.orientation;
  l.loops = t.loops;

  std::array<int, 4> ep = t.endpoints;
  // Pairs of endpoint positions joined by the closure arcs.
  std::array<std::array<int, 2>, 2> joins =
      closure == 0 ? std::array<std::array<int, 2>, 2>{{{0, 3}, {1, 2}}}
                   : std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}};
  for (const auto& [p1, p2] : joins) {
    int u = ep[p1], v = ep[p2];
    if (u == v) {
      // A free arc closing onto itself becomes a crossingless circle.
      l.loops.push_back(u);
      continue;
    }
    for (auto& c : l.crossings)
      for (int& lab : c)
        if (lab == v) lab = u;
    for (auto& [a, b] : l.orientation) {
      if (a == v) a = u;
      if (b == v) b = u;
    }
    for (int& lab : ep)
      if (lab == v) lab = u;
  }
  l.basepoint = ep[0];
  return l;
}

int crossing_sign(const std::array<int, 4>& crossing,
                  const std::pair<int, int>& orient) {
  const auto& [u, o] = orient;
  if (crossing[0] == crossing[2] || crossing[1] == crossing[3])
    throw std::invalid_argument("crossing strand occupies both parallel slots");
  int su, so;
  if (u == crossing[0])
    su = 0;
  else if (u == crossing[2])
    su = 2;
  else
    throw std::invalid_argument("outgoing under-edge not found at crossing");
  if (o == crossing[1])
    so = 1;
  else if (o == crossing[3])
    so = 3;
  else
    throw std::invalid_argument("outgoing over-edge not found at crossing");
  // Positive exactly when the understrand exits one slot
  // counterclockwise of the overstrand exit.
  return ((su == 2 && so == 1) || (su == 0 && so == 3)) ? 1 : -1;
}

std::optional<std::pair<int, int>> link_writhe_counts(const LinkDiagram& l) {
  if (!l.oriented()) return std::nullopt;
  if (!orientation_flows(l.crossings, l.orientation, nullptr))
    return std::nullopt;
  int np = 0, nm = 0;
  for (size_t c = 0; c < l.crossings.size(); ++c)
    (crossing_sign(l.crossings[c], l.orientation[c]) > 0 ? np : nm) += 1;
  return std::make_pair(np, nm);
}

std::optional<std::pair<int, int>> tangle_writhe_counts(
    const TangleDiagram& t) {
  if (!t.oriented()) return std::nullopt;
  int np = 0, nm = 0;
  for (size_t c = 0; c < t.crossings.size(); ++c)
    (crossing_sign(t.crossings[c], t.orientation[c]) > 0 ? np : nm) += 1;
  return std::make_pair(np, nm);
}

std::optional<std::pair<int, int>> writhe_counts(const TangleDiagram& t,
                                                 int closure) {
  if (!t.oriented()) return std::nullopt;
  return link_writhe_counts(close_tangle(t, closure));
}

}  // namespace pkh
