#pragma once

// 2-tangle diagrams in the 4-punctured disk, their cube of resolutions,
// and the two closures to link diagrams.
//
// A diagram is a list of crossings, each written as the 4-tuple of
// incident edge labels read counterclockwise starting from an edge of
// the understrand, together with the labels of the four boundary
// endpoints in the order E, N, W, S.  Every edge label appears exactly
// twice across crossing slots and endpoint slots; crossingless closed
// components are listed separately under "loops".
//
// Smoothing convention: the 0-resolution of a crossing (e1, e2, e3, e4)
// joins e1-e2 and e3-e4, the 1-resolution joins e1-e4 and e2-e3.  The
// opposite convention amounts to flipping kZeroSmoothingJoinsFirstPair;
// the chirality tests in the acceptance suite pin the choice.
//
// An optional orientation gives, per crossing, the labels of the
// outgoing under-edge and outgoing over-edge.  Diagrams without one are
// processed in relative mode (gradings defined up to translation).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pkh {

constexpr bool kZeroSmoothingJoinsFirstPair = true;

struct TangleDiagram {
  std::array<int, 4> endpoints = {0, 0, 0, 0};     // labels at E, N, W, S
  std::vector<std::array<int, 4>> crossings;
  // Per crossing: (outgoing under-edge label, outgoing over-edge label).
  std::vector<std::pair<int, int>> orientation;
  std::vector<int> loops;                          // crossingless circles

  // Complete orientation data; vacuously true without crossings.
  bool oriented() const { return orientation.size() == crossings.size(); }
};

struct LinkDiagram {
  std::vector<std::array<int, 4>> crossings;
  std::vector<std::pair<int, int>> orientation;
  std::vector<int> loops;
  int basepoint = 0;   // edge label carrying the reduction basepoint

  // Complete orientation data; vacuously true without crossings.
  bool oriented() const { return orientation.size() == crossings.size(); }
};

enum class SaddleKind {
  EarringArcCircleSplit,
  EarringArcCircleMerge,
  PlainArcCircleSplit,
  PlainArcCircleMerge,
  CircleCircleMerge,
  CircleSplit,
  ArcArc,
};

std::string saddle_name(SaddleKind k);

// One resolved diagram: two boundary arcs plus a set of circles.
// Circles are kept in canonical order, sorted by smallest edge label.
// comp_of maps each edge label to its circle index, or to -1 for the
// earring arc (the one through the E endpoint) and -2 for the other arc.
struct Resolution {
  int type = 0;   // 0: arcs pair E-S and N-W; 1: arcs pair E-N and W-S
  std::vector<std::vector<int>> circles;
  std::map<int, int> comp_of;

  int num_circles() const { return static_cast<int>(circles.size()); }
};

// Cube edge from vertex `from` to `from | 1 << crossing`.  Affected
// lists hold positions into the canonical circle order of the source
// and target resolutions; unaffected_map lists, for each source circle
// not affected (in source order), its position in the target.
struct CubeEdge {
  uint32_t from = 0;
  uint32_t to = 0;
  int crossing = 0;
  SaddleKind kind = SaddleKind::ArcArc;
  std::vector<int> src_affected;
  std::vector<int> tgt_affected;
  std::vector<int> unaffected_map;
};

struct ResolutionCube {
  int n = 0;
  std::vector<Resolution> vertices;   // indexed by resolution bitmask
  std::vector<CubeEdge> edges;
};

// Parsing and serialization; parse validates, and validation includes a
// planarity check via rotation-system face counting.
TangleDiagram parse_tangle(const nlohmann::json& j);
nlohmann::json tangle_json(const TangleDiagram& t);
LinkDiagram parse_link(const nlohmann::json& j);
nlohmann::json link_json(const LinkDiagram& l);
void validate_tangle(const TangleDiagram& t);

Resolution resolve(const TangleDiagram& t, uint32_t bits);
ResolutionCube build_cube(const TangleDiagram& t);

// Joins the boundary endpoints: closure 0 joins E-S and N-W, closure 1
// joins E-N and W-S.  The basepoint lands on the edge through E.
LinkDiagram close_tangle(const TangleDiagram& t, int closure);

// +1 or -1 from the outgoing-edge slots of one oriented crossing.
int crossing_sign(const std::array<int, 4>& crossing,
                  const std::pair<int, int>& orient);

// (n+, n-) of the tangle itself, or nullopt when unoriented.  The cube
// bigrading only needs this; closures are not involved.
std::optional<std::pair<int, int>> tangle_writhe_counts(
    const TangleDiagram& t);

// (n+, n-) for the chosen closure, or nullopt when the diagram is
// unoriented or its orientation does not extend over the closure arcs.
std::optional<std::pair<int, int>> writhe_counts(const TangleDiagram& t,
                                                 int closure);
std::optional<std::pair<int, int>> link_writhe_counts(const LinkDiagram& l);

}  // namespace pkh
