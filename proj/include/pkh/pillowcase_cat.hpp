#pragma once

// The Fukaya category of the pillowcase restricted to the two objects
// L_0, L_1, plus the two test objects W_0, W_1 acting as right modules.
// Compositions are encoded as finite tables on the twelve hom-space
// generators (six more for the modules); mu^1 vanishes and mu^n = 0 for
// n >= 4, so the A-infinity relations close at arity-5 inputs and are
// checked exhaustively.
//
// mu2(x, y) means "x after y": y in (B, C) and x in (C, D) compose to
// an element of (B, D).  Hom pairs are written (source, target).

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

namespace pkh {

enum class Lag : int { L0 = 0, L1 = 1 };

enum class Gen : int {
  a0, b0, c0, d0,      // (L0, L0)
  a1, b1, c1, d1,      // (L1, L1)
  p01, q01,            // (L1, L0)
  p10, q10,            // (L0, L1)
};

enum class ModGen : int {
  alpha, beta,         // (W0, L0)
  gamma,               // (W0, L1)
  tau,                 // (W1, L0)
  rho, sigma,          // (W1, L1)
};

constexpr int kNumGen = 12;
constexpr int kNumModGen = 6;

struct NonComposableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Lag gen_source(Gen x);
Lag gen_target(Gen x);
int gen_degree(Gen x);
bool is_unit(Gen x);
Gen unit_of(Lag l);
std::string gen_name(Gen x);
Gen gen_from_name(const std::string& name);

int mod_test_index(ModGen m);   // which W_k the generator pairs with
Lag mod_target(ModGen m);
int mod_degree(ModGen m);
std::string mod_name(ModGen m);
ModGen mod_from_name(const std::string& name);

using Mu2Table = std::map<std::pair<Gen, Gen>, Gen>;
using Mu3Table = std::map<std::tuple<Gen, Gen, Gen>, Gen>;
using ModMu2Table = std::map<std::pair<Gen, ModGen>, ModGen>;
using ModMu3Table = std::map<std::tuple<Gen, Gen, ModGen>, ModGen>;

// Table builders reject keys that fail to compose and results landing
// in the wrong hom space.  Degree bookkeeping is left to the verifiers
// so that corrupted tables can be fed through them in tests.
Mu2Table make_mu2_table(const std::vector<std::array<Gen, 3>>& entries);
Mu3Table make_mu3_table(const std::vector<std::array<Gen, 4>>& entries);

const Mu2Table& mu2_table();
const Mu3Table& mu3_table();
const ModMu2Table& module_mu2_table();
const ModMu3Table& module_mu3_table();

// Compositions against the canonical tables.  A non-composable pair of
// arguments throws; a composable pair with zero product returns nullopt.
std::optional<Gen> mu2(Gen x, Gen y);
std::optional<Gen> mu3(Gen x, Gen y, Gen z);
std::optional<ModGen> module_mu2(Gen x, ModGen m);
std::optional<ModGen> module_mu3(Gen x2, Gen x1, ModGen m);

// Exhaustive A-infinity audit: degree homogeneity of every table entry,
// strict unitality, and the arity-3/4/5 relations over all composable
// generator tuples.  Returns human-readable violations (empty = pass).
// The default entry points spread the relation sweep over OpenMP
// workers sharded by the outermost argument; the serial variants run
// the same shards in order and are the reference the parallel ones are
// tested against.
std::vector<std::string> verify_ainfty();
std::vector<std::string> verify_ainfty(const Mu2Table& t2, const Mu3Table& t3);
std::vector<std::string> verify_ainfty_serial();
std::vector<std::string> verify_ainfty_serial(const Mu2Table& t2,
                                              const Mu3Table& t3);

// Same audit for the module structure of W_k (k = 0 or 1): unit action,
// degree homogeneity, and the mixed relations with up to four algebra
// inputs.
std::vector<std::string> verify_module_relations(int k);
std::vector<std::string> verify_module_relations(int k, const Mu2Table& t2,
                                                 const Mu3Table& t3,
                                                 const ModMu2Table& m2,
                                                 const ModMu3Table& m3);
std::vector<std::string> verify_module_relations_serial(int k);
std::vector<std::string> verify_module_relations_serial(int k,
                                                        const Mu2Table& t2,
                                                        const Mu3Table& t3,
                                                        const ModMu2Table& m2,
                                                        const ModMu3Table& m3);

// Compares the mu^2 level of the category against the two auxiliary
// algebras: a graded injective (non-surjective) map from the 6-dim
// algebra, an ungraded isomorphism from the 12-dim one, and the degree
// count showing no graded isomorphism exists.
std::vector<std::string> verify_algebra_comparisons();

// All four composition tables plus gradings, serialized for inspection.
nlohmann::json tables_json();

}  // namespace pkh
