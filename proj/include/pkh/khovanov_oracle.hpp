// Independent reduced-Khovanov cross-check.
//
// Everything here recomputes the invariant from the closed diagram
// alone: its own union-find smoothing, its own circle bases and edge
// differentials, and its own rank sweep per quantum degree.  It shares
// only the parsed diagram struct, the F_2 linear algebra, and the
// output table types with the pipeline it is checking.

#pragma once

#include "pkh/pairing.hpp"
#include "pkh/tangle.hpp"

namespace pkh {

// Bigraded ranks of reduced Khovanov cohomology over F_2, keyed by
// (q + h, h) with the unknot at q = -1.  Needs a consistently oriented
// diagram for the absolute gradings; throws std::invalid_argument
// otherwise.  Cost is exponential in the crossing number.
RankTable reduced_khovanov(const LinkDiagram& d);

// Kauffman-bracket state sum in the same normalization, with exact
// integer Laurent arithmetic.  Needs an oriented diagram.
Laurent kauffman_jones(const LinkDiagram& d);

// Human-readable rank mismatches between two absolute tables; empty
// means they agree everywhere.
std::vector<std::string> compare_tables(const RankTable& ours,
                                        const RankTable& oracle);

}  // namespace pkh
