// Generates the committed corpus: standalone tangle diagrams under
// corpus/tangles and Reidemeister-move pairs under corpus/pairs.  Each
// pair is built by performing the move as a labeled surgery on a base
// diagram, and the generator refuses to emit a pair unless both sides
// validate and produce identical absolute rank tables for both test
// Lagrangians.  Output is deterministic; the repository copy of
// corpus/ is the exact output of this tool.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pkh/functor_f.hpp"
#include "pkh/pairing.hpp"
#include "pkh/tangle.hpp"
#include "test_diagrams.hpp"

using namespace pkh;
using namespace pkh::testing;

namespace {

// One occurrence of an edge label: a crossing slot, or (crossing == -1)
// a boundary endpoint with slot indexing E, N, W, S.
struct Occ {
  int crossing = -1;
  int slot = 0;
};

std::vector<Occ> occurrences(const TangleDiagram& t, int label) {
  std::vector<Occ> out;
  for (size_t c = 0; c < t.crossings.size(); ++c)
    for (int s = 0; s < 4; ++s)
      if (t.crossings[c][s] == label)
        out.push_back({static_cast<int>(c), s});
  for (int s = 0; s < 4; ++s)
    if (t.endpoints[s] == label) out.push_back({-1, s});
  return out;
}

// Exit slot of the named strand half at crossing c, resolved the same
// way the sign computation resolves it.
bool is_exit(const TangleDiagram& t, const Occ& o) {
  const auto& cr = t.crossings[o.crossing];
  const auto& [u, ov] = t.orientation[o.crossing];
  int su = (u == cr[0]) ? 0 : 2;
  int so = (ov == cr[1]) ? 1 : 3;
  return o.slot == su || o.slot == so;
}

// Head (inflow end) of a directed edge, read off the crossing flows.
// Fails on edges running endpoint to endpoint; those need an explicit
// choice of direction.
Occ head_of(const TangleDiagram& t, int label) {
  auto occs = occurrences(t, label);
  if (occs.size() != 2) throw std::logic_error("edge not on a strand");
  // An entering crossing slot is the head outright.
  for (const auto& o : occs)
    if (o.crossing >= 0 && !is_exit(t, o)) return o;
  // Otherwise the edge leaves a crossing and ends on the boundary.
  if (occs[0].crossing >= 0 || occs[1].crossing >= 0)
    for (const auto& o : occs)
      if (o.crossing == -1) return o;
  throw std::logic_error("edge direction is not determined by the flows");
}

int fresh_label(const TangleDiagram& t) {
  int m = 0;
  for (const auto& c : t.crossings)
    for (int l : c) m = std::max(m, l);
  for (int l : t.endpoints) m = std::max(m, l);
  for (int l : t.loops) m = std::max(m, l);
  return m + 1;
}

void relabel(TangleDiagram& t, const Occ& o, int label) {
  if (o.crossing >= 0)
    t.crossings[o.crossing][o.slot] = label;
  else
    t.endpoints[o.slot] = label;
}

// R1: curl the directed edge e just before its head.  The loop edge l
// sits at adjacent slots, the continuation f takes over e's head.
TangleDiagram kink(const TangleDiagram& t, int e, const Occ& head,
                   bool positive) {
  TangleDiagram out = t;
  int f = fresh_label(t), l = f + 1;
  relabel(out, head, f);
  if (positive)
    out.crossings.push_back({e, f, l, l});
  else
    out.crossings.push_back({e, l, l, f});
  out.orientation.push_back({l, f});
  validate_tangle(out);
  return out;
}

// R2: push the directed edge e underneath the directed edge g, just
// before both heads.  The two chiralities of the poke differ by which
// side e bulges to; exactly one of them is planar for a given face, so
// the caller can ask for the flipped template.
TangleDiagram poke_under(const TangleDiagram& t, int e, const Occ& ehead,
                         int g, const Occ& ghead, bool flip) {
  TangleDiagram out = t;
  int m = fresh_label(t), n = m + 1, e2 = m + 2, g2 = m + 3;
  relabel(out, ehead, e2);
  relabel(out, ghead, g2);
  if (!flip) {
    out.crossings.push_back({e, g, m, n});
    out.crossings.push_back({m, g2, e2, n});
  } else {
    out.crossings.push_back({e, n, m, g});
    out.crossings.push_back({m, n, e2, g2});
  }
  out.orientation.push_back({m, n});
  out.orientation.push_back({e2, g2});
  validate_tangle(out);
  return out;
}

TangleDiagram poke_either(const TangleDiagram& t, int e, const Occ& ehead,
                          int g, const Occ& ghead) {
  try {
    return poke_under(t, e, ehead, g, ghead, false);
  } catch (const std::invalid_argument&) {
    return poke_under(t, e, ehead, g, ghead, true);
  }
}

// Reflection across the vertical axis: cyclic order reverses at every
// crossing, E and W trade places, flows keep their labels.
TangleDiagram mirror(const TangleDiagram& t) {
  TangleDiagram out = t;
  std::swap(out.endpoints[0], out.endpoints[2]);
  for (auto& c : out.crossings) c = {c[0], c[3], c[2], c[1]};
  validate_tangle(out);
  return out;
}

// Orients a diagram by walking each strand from the boundary inward,
// preferring inlets at N, S, E, W in that order; remaining closed
// strands are walked from an arbitrary crossing.  Passing through a
// crossing swaps slots 0 and 2 (under) or 1 and 3 (over).
std::vector<std::pair<int, int>> strand_walk(const TangleDiagram& t) {
  int n = static_cast<int>(t.crossings.size());
  std::vector<std::array<int, 4>> exit_label(n, {-1, -1, -1, -1});
  std::vector<std::vector<char>> seen(n, std::vector<char>(4, 0));
  auto other = [&](int label, const Occ& from) -> Occ {
    for (const auto& o : occurrences(t, label))
      if (o.crossing != from.crossing || o.slot != from.slot) return o;
    throw std::logic_error("edge has a single occurrence");
  };
  // Follows the strand carrying `label` away from `at`; returns the
  // endpoint slot it exits through, or -1 when it closes up on itself.
  auto walk = [&](Occ at, int label) -> int {
    while (true) {
      Occ next = other(label, at);
      if (next.crossing == -1) return next.slot;
      if (seen[next.crossing][next.slot]) return -1;
      seen[next.crossing][next.slot] = 1;
      int out = next.slot ^ 2;
      seen[next.crossing][out] = 1;
      label = t.crossings[next.crossing][out];
      exit_label[next.crossing][out] = label;
      at = {next.crossing, out};
    }
  };
  std::vector<char> used(4, 0);
  for (int s : {1, 3, 0, 2}) {
    if (used[s]) continue;
    used[s] = 1;
    int outlet = walk({-1, s}, t.endpoints[s]);
    if (outlet >= 0) used[outlet] = 1;
  }
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s)
      if (!seen[c][s]) {
        seen[c][s] = 1;
        int out = s ^ 2;
        seen[c][out] = 1;
        exit_label[c][out] = t.crossings[c][out];
        walk({c, out}, t.crossings[c][out]);
      }
  std::vector<std::pair<int, int>> orient;
  for (int c = 0; c < n; ++c) {
    int u = exit_label[c][0] >= 0 ? exit_label[c][0] : exit_label[c][2];
    int o = exit_label[c][1] >= 0 ? exit_label[c][1] : exit_label[c][3];
    if (u < 0 || o < 0) throw std::logic_error("strand walk missed a slot");
    orient.push_back({u, o});
  }
  return orient;
}

// Capped positive 3-braids realizing the two sides of the triple-point
// move: the strand between the outer crossings slides across the third.
TangleDiagram r3_side_a() {
  TangleDiagram t;
  t.endpoints = {5, 7, 8, 1};
  t.crossings = {{1, 2, 3, 4}, {3, 2, 5, 6}, {4, 6, 7, 8}};
  t.orientation = strand_walk(t);
  validate_tangle(t);
  return t;
}

TangleDiagram r3_side_b() {
  TangleDiagram t;
  t.endpoints = {7, 8, 6, 1};
  t.crossings = {{2, 2, 3, 4}, {1, 4, 5, 6}, {5, 3, 7, 8}};
  t.orientation = strand_walk(t);
  validate_tangle(t);
  return t;
}

RankTable paired_table(const TangleDiagram& t, int k) {
  TwistedComplex tc = build_delta(build_cube(t), tangle_writhe_counts(t));
  return cohomology(pair(tc, k));
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << j.dump(2) << "\n";
}

void emit_tangle(const std::filesystem::path& dir, const std::string& name,
                 const TangleDiagram& t) {
  validate_tangle(t);
  write_json(dir / (name + ".json"), tangle_json(t));
  std::printf("tangle %-14s %zu crossings\n", name.c_str(),
              t.crossings.size());
}

void emit_pair(const std::filesystem::path& dir, const std::string& name,
               const std::string& move, const TangleDiagram& a,
               const TangleDiagram& b) {
  validate_tangle(a);
  validate_tangle(b);
  auto wa = tangle_writhe_counts(a), wb = tangle_writhe_counts(b);
  if (!wa || !wb) throw std::runtime_error(name + ": side lost orientation");
  int dp = wb->first - wa->first, dm = wb->second - wa->second;
  bool ok = (move == "R1+" && dp == 1 && dm == 0) ||
            (move == "R1-" && dp == 0 && dm == 1) ||
            (move == "R2" && dp == 1 && dm == 1) ||
            (move == "R3" && dp == 0 && dm == 0);
  if (!ok)
    throw std::runtime_error(name + ": writhe change does not match " + move);
  for (int k = 0; k < 2; ++k)
    if (paired_table(a, k) != paired_table(b, k))
      throw std::runtime_error(name + ": rank tables differ at k = " +
                               std::to_string(k));
  nlohmann::json j;
  j["move"] = move;
  j["first"] = tangle_json(a);
  j["second"] = tangle_json(b);
  write_json(dir / (name + ".json"), j);
  std::printf("pair   %-18s %s, both tables match\n", name.c_str(),
              move.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path root = argc > 1 ? argv[1] : "corpus";
  std::filesystem::create_directories(root / "tangles");
  std::filesystem::create_directories(root / "pairs");

  emit_tangle(root / "tangles", "trivial0", trivial_tangle(0));
  emit_tangle(root / "tangles", "trivial1", trivial_tangle(1));
  TangleDiagram looped = trivial_tangle(0);
  looped.loops = {7};
  emit_tangle(root / "tangles", "trivial0_loop", looped);
  emit_tangle(root / "tangles", "cross", cross_tangle());
  emit_tangle(root / "tangles", "fig8", figure8_tangle());
  for (int n = 2; n <= 8; ++n) {
    emit_tangle(root / "tangles", "twist_pos_" + std::to_string(n),
                twist_tangle(n, true));
    emit_tangle(root / "tangles", "twist_neg_" + std::to_string(n),
                twist_tangle(n, false));
  }

  const TangleDiagram cross = cross_tangle();
  const TangleDiagram tw2p = twist_tangle(2, true);
  const TangleDiagram tw2n = twist_tangle(2, false);

  emit_pair(root / "pairs", "r1_pos_cross", "R1+", cross,
            kink(cross, 4, head_of(cross, 4), true));
  emit_pair(root / "pairs", "r1_neg_cross", "R1-", cross,
            kink(cross, 4, head_of(cross, 4), false));
  emit_pair(root / "pairs", "r1_pos_trivial0", "R1+", trivial_tangle(0),
            kink(trivial_tangle(0), 1, Occ{-1, 0}, true));
  emit_pair(root / "pairs", "r1_neg_trivial1", "R1-", trivial_tangle(1),
            kink(trivial_tangle(1), 2, Occ{-1, 3}, false));
  emit_pair(root / "pairs", "r1_pos_twist2", "R1+", tw2p,
            kink(tw2p, 2, head_of(tw2p, 2), true));
  emit_pair(root / "pairs", "r1_neg_twist2", "R1-", tw2n,
            kink(tw2n, 2, head_of(tw2n, 2), false));

  emit_pair(root / "pairs", "r2_trivial0", "R2", trivial_tangle(0),
            poke_either(trivial_tangle(0), 1, Occ{-1, 0}, 2, Occ{-1, 1}));
  emit_pair(root / "pairs", "r2_trivial1", "R2", trivial_tangle(1),
            poke_either(trivial_tangle(1), 1, Occ{-1, 0}, 2, Occ{-1, 3}));
  emit_pair(root / "pairs", "r2_cross", "R2", cross,
            poke_either(cross, 1, head_of(cross, 1), 2, head_of(cross, 2)));
  emit_pair(root / "pairs", "r2_twist2", "R2", tw2p,
            poke_either(tw2p, 1, head_of(tw2p, 1), 4, head_of(tw2p, 4)));

  TangleDiagram a = r3_side_a(), b = r3_side_b();
  emit_pair(root / "pairs", "r3_braid", "R3", a, b);
  emit_pair(root / "pairs", "r3_braid_mirror", "R3", mirror(a), mirror(b));

  std::printf("corpus written to %s\n", root.string().c_str());
  return 0;
}
