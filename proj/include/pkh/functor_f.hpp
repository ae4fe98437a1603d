// Evaluation of the cobordism functor on cube edges.
//
// Objects of the target are shifted tensor powers A^{otimes m}{sigma}
// tagged with an arc-pairing label L_l and a cube filtration level h.
// Morphisms are F_2-sums of elementary tensors phi (x) g, with phi a
// linear map between the tensor powers and g a pillowcase generator.
// Each saddle acts by a fixed template on the affected circles, which
// the template expects in the final tensor positions; build_delta
// conjugates by the permutations that restore the canonical circle
// order of each resolution.

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pkh/f2linalg.hpp"
#include "pkh/pillowcase_cat.hpp"
#include "pkh/tangle.hpp"

namespace pkh {

// A^{otimes m}{sigma} (x) L_l at filtration level h.  An element of
// intrinsic degree d sits in degree d - sigma after the shift.
struct SigmaObject {
  Lag l = Lag::L0;
  int m = 0;
  int sigma = 0;
  int h = 0;

  bool operator==(const SigmaObject&) const = default;
};

struct Summand {
  F2Matrix phi;  // 2^{m_tgt} x 2^{m_src}
  Gen g = Gen::a0;

  bool operator==(const Summand&) const = default;
};

// F_2-sum of elementary tensors sharing source and target.  Normalized
// form: at most one summand per generator, no zero matrices, summands
// in generator order.
struct SigmaMorphism {
  std::vector<Summand> summands;

  bool zero() const { return summands.empty(); }
  bool operator==(const SigmaMorphism&) const = default;
};

// Collects like generators mod 2 and drops vanished summands.  Throws
// std::invalid_argument when summands disagree on dimensions or on the
// generators' hom space.
SigmaMorphism normalized(std::vector<Summand> summands);

SigmaMorphism add(const SigmaMorphism& a, const SigmaMorphism& b);

// Elementary-tensor extension of the composition maps: matrices
// multiply, generators compose.  Arguments are ordered as in mu2/mu3
// (`later` is applied after `earlier`).
SigmaMorphism mu2_sigma(const SigmaMorphism& later, const SigmaMorphism& earlier);
SigmaMorphism mu3_sigma(const SigmaMorphism& z, const SigmaMorphism& y,
                        const SigmaMorphism& x);

// Degree of phi (x) g as a map A^{otimes m}{sigma_src} -> A^{otimes
// m'}{sigma_tgt} in the first grading; nullopt when phi is zero or
// inhomogeneous.
std::optional<int> summand_degree(const Summand& s, const SigmaObject& src,
                                  const SigmaObject& tgt);

// Template morphism of one saddle kind, affected circles last.  m_src
// counts all source circles, l_src is the source arc-pairing type.
// Throws std::invalid_argument when the kind needs more circles than
// m_src provides.
SigmaMorphism f1_elementary(SaddleKind kind, int m_src, int l_src);

// Formal direct sum of SigmaObjects with a strictly filtration-raising
// differential delta, keyed by (source index, target index).
struct TwistedComplex {
  std::vector<SigmaObject> objects;
  std::map<std::pair<int, int>, SigmaMorphism> delta;
  // False when built without an orientation; gradings are then only
  // meaningful up to a common shift.
  bool absolute = true;

  bool operator==(const TwistedComplex&) const = default;
};

// Twisted complex of a resolution cube.  counts = (n+, n-) from the
// tangle's own orientation, or nullopt for relative gradings (treated
// as (0, 0)).  Vertex i gets h(i) = -n^- + |i| and sigma(i) =
// n^- - n^+ - 2h(i); object index equals the vertex bitmask.  Every
// entry is audited for bidegree (1, 1) before the complex is returned.
TwistedComplex build_delta(const ResolutionCube& cube,
                           std::optional<std::pair<int, int>> counts);

}  // namespace pkh
