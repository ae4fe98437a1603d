// Twisted-complex checks and simplification.
//
// A complex is accepted when delta is strictly filtration-raising,
// every entry is a bidegree-(1, 1) morphism between its endpoints, and
// the squared and cubed differentials vanish separately.  Cancellation
// of an invertible unit entry is available as an optimization; its
// output is re-verified and re-paired rather than trusted.

#pragma once

#include <string>

#include "pkh/functor_f.hpp"

namespace pkh {

// One message per violation; empty report means the complex is
// twisted.  The default entry point shards composition sources across
// OpenMP workers when available; the serial variant is the reference
// the parallel one is tested against.
std::vector<std::string> verify_twisted(const TwistedComplex& tc);
std::vector<std::string> verify_twisted_serial(const TwistedComplex& tc);

// Cancels the object pair (a, b) along delta[(a, b)], which must carry
// an invertible summand psi (x) e with e the unit of the common arc
// type.  Remaining entries are corrected by the single zig-zag through
// the pair; the generators in play compose trivially under mu^3, so no
// longer corrections arise.  Postconditions are enforced, not assumed:
// the output passes verify_twisted and pairs to the same cohomology for
// both test curves, else std::logic_error with diagnostics.  Throws
// std::invalid_argument when the pivot is missing or not invertible.
TwistedComplex eliminate(const TwistedComplex& tc, std::pair<int, int> pivot);

// Eliminates unit pivots until none remain.  Freshly built complexes
// have none (saddle maps never carry an invertible unit summand), so
// this is the identity on them; it shrinks hand-built or merged
// complexes.
TwistedComplex eliminate_all(const TwistedComplex& tc);

nlohmann::json twisted_json(const TwistedComplex& tc);
TwistedComplex parse_twisted(const nlohmann::json& j);

}  // namespace pkh
