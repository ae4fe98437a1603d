// Pairing twisted complexes against the test curves.
//
// Pairing with W_k replaces each object A^{otimes m}{sigma} (x) L_l by
// copies of the tensor power indexed by the module generators with
// test index k and target L_l, and each delta summand phi (x) g by
// phi (x) (action of g).  Only the two-input module action enters: the
// three-input action vanishes on every composable pair of delta
// entries, which pair() re-checks on each call rather than assuming.
// Cohomology is computed one r - s diagonal at a time; the diagonals
// are independent, so the default entry point spreads them across
// OpenMP workers, with a serial reference kept alongside.

#pragma once

#include <string>

#include "pkh/functor_f.hpp"

namespace pkh {

struct BigradedGenerator {
  int object = 0;  // index into the source complex's objects
  int tensor = 0;  // basis index into A^{otimes m}
  ModGen w = ModGen::alpha;
  int r = 0;  // first grading
  int s = 0;  // homological grading

  bool operator==(const BigradedGenerator&) const = default;
};

struct BigradedChainComplex {
  int k = 0;
  bool absolute = true;
  std::vector<BigradedGenerator> generators;
  F2Matrix differential;  // column j holds the boundary of generator j

  bool operator==(const BigradedChainComplex&) const = default;
};

// Finitely supported rank function on bigradings (r, s); only positive
// ranks are stored.
struct RankTable {
  std::map<std::pair<int, int>, int> ranks;
  bool absolute = true;

  bool operator==(const RankTable&) const = default;
};

// Chain complex of the pairing with W_k.  A generator t (x) w over
// vertex i sits in bidegree (deg t - sigma_i + deg w, h_i).  Audited on
// every call: the differential squares to zero, has bidegree exactly
// (1, 1), and no composable pair of delta entries acts through the
// three-input module map; violations throw std::logic_error.
BigradedChainComplex pair(const TwistedComplex& tc, int k);

// Bigraded cohomology ranks.  Requires the differential to square to
// zero and preserve r - s; throws std::invalid_argument otherwise.
RankTable cohomology(const BigradedChainComplex& c);
RankTable cohomology_serial(const BigradedChainComplex& c);

// Chain-level cancellation over F_2 until no differential entries
// remain; the survivors' labels are bookkeeping, not a basis
// decomposition.  Cohomology is preserved.
BigradedChainComplex reduce(const BigradedChainComplex& c);

// Laurent polynomials in q as exponent -> integer coefficient.
using Laurent = std::map<int, long long>;

// Bigraded Euler characteristic sum_{r,s} (-1)^s rank(r, s) q^{r-s}.
// Rejects relative-mode tables: the exponents would only be defined up
// to a common shift.
Laurent jones(const RankTable& rt);

std::string laurent_string(const Laurent& p);

nlohmann::json rank_table_json(const RankTable& rt);
RankTable parse_rank_table(const nlohmann::json& j);

}  // namespace pkh
