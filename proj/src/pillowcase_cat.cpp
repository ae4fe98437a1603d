#include "pkh/pillowcase_cat.hpp"

#include <bit>
#include <cstdint>

#include "pkh/f2linalg.hpp"

namespace pkh {

namespace {

struct GenInfo {
  Lag src;
  Lag tgt;
  int deg;
  const char* name;
};

constexpr GenInfo kGenInfo[kNumGen] = {
    {Lag::L0, Lag::L0, 0, "a0"},  {Lag::L0, Lag::L0, 3, "b0"},
    {Lag::L0, Lag::L0, -2, "c0"}, {Lag::L0, Lag::L0, 1, "d0"},
    {Lag::L1, Lag::L1, 0, "a1"},  {Lag::L1, Lag::L1, 3, "b1"},
    {Lag::L1, Lag::L1, -2, "c1"}, {Lag::L1, Lag::L1, 1, "d1"},
    {Lag::L1, Lag::L0, -1, "p01"}, {Lag::L1, Lag::L0, 2, "q01"},
    {Lag::L0, Lag::L1, 2, "p10"}, {Lag::L0, Lag::L1, -1, "q10"},
};

struct ModInfo {
  int k;
  Lag tgt;
  int deg;
  const char* name;
};

constexpr ModInfo kModInfo[kNumModGen] = {
    {0, Lag::L0, 0, "alpha"}, {0, Lag::L0, -2, "beta"},
    {0, Lag::L1, -1, "gamma"}, {1, Lag::L0, -1, "tau"},
    {1, Lag::L1, 0, "rho"},   {1, Lag::L1, -2, "sigma"},
};

bool composable2(Gen x, Gen y) { return gen_source(x) == gen_target(y); }

bool mod_composable2(Gen x, ModGen m) {
  return gen_source(x) == mod_target(m);
}

// Sums of generators are encoded as bitmasks over the generator index;
// all arithmetic below is over F_2 so sums are XORs.
uint16_t gmask(std::optional<Gen> g) {
  return g ? static_cast<uint16_t>(1u << static_cast<int>(*g)) : 0;
}

uint16_t mmask(std::optional<ModGen> m) {
  return m ? static_cast<uint16_t>(1u << static_cast<int>(*m)) : 0;
}

std::optional<Gen> eval2(const Mu2Table& t, Gen x, Gen y) {
  auto it = t.find({x, y});
  return it == t.end() ? std::nullopt : std::optional<Gen>(it->second);
}

std::optional<Gen> eval3(const Mu3Table& t, Gen x, Gen y, Gen z) {
  auto it = t.find({x, y, z});
  return it == t.end() ? std::nullopt : std::optional<Gen>(it->second);
}

std::optional<ModGen> evalM2(const ModMu2Table& t, Gen x, ModGen m) {
  auto it = t.find({x, m});
  return it == t.end() ? std::nullopt : std::optional<ModGen>(it->second);
}

std::optional<ModGen> evalM3(const ModMu3Table& t, Gen x2, Gen x1, ModGen m) {
  auto it = t.find({x2, x1, m});
  return it == t.end() ? std::nullopt : std::optional<ModGen>(it->second);
}

std::string key_name(Gen x, Gen y) {
  return gen_name(x) + ", " + gen_name(y);
}

std::string key_name(Gen x, Gen y, Gen z) {
  return gen_name(x) + ", " + gen_name(y) + ", " + gen_name(z);
}

}  // namespace

Lag gen_source(Gen x) { return kGenInfo[static_cast<int>(x)].src; }
Lag gen_target(Gen x) { return kGenInfo[static_cast<int>(x)].tgt; }
int gen_degree(Gen x) { return kGenInfo[static_cast<int>(x)].deg; }
bool is_unit(Gen x) { return x == Gen::a0 || x == Gen::a1; }
Gen unit_of(Lag l) { return l == Lag::L0 ? Gen::a0 : Gen::a1; }
std::string gen_name(Gen x) { return kGenInfo[static_cast<int>(x)].name; }

Gen gen_from_name(const std::string& name) {
  for (int i = 0; i < kNumGen; ++i)
    if (name == kGenInfo[i].name) return static_cast<Gen>(i);
  throw std::invalid_argument("unknown generator: " + name);
}

int mod_test_index(ModGen m) { return kModInfo[static_cast<int>(m)].k; }
Lag mod_target(ModGen m) { return kModInfo[static_cast<int>(m)].tgt; }
int mod_degree(ModGen m) { return kModInfo[static_cast<int>(m)].deg; }
std::string mod_name(ModGen m) { return kModInfo[static_cast<int>(m)].name; }

ModGen mod_from_name(const std::string& name) {
  for (int i = 0; i < kNumModGen; ++i)
    if (name == kModInfo[i].name) return static_cast<ModGen>(i);
  throw std::invalid_argument("unknown module generator: " + name);
}

Mu2Table make_mu2_table(const std::vector<std::array<Gen, 3>>& entries) {
  Mu2Table t;
  for (const auto& [x, y, res] : entries) {
    if (!composable2(x, y))
      throw NonComposableError("mu2 table key does not compose: " +
                               key_name(x, y));
    if (gen_source(res) != gen_source(y) || gen_target(res) != gen_target(x))
      throw std::invalid_argument("mu2 table value in wrong hom space: " +
                                  key_name(x, y));
    if (!t.emplace(std::make_pair(x, y), res).second)
      throw std::invalid_argument("duplicate mu2 table key: " + key_name(x, y));
  }
  return t;
}

Mu3Table make_mu3_table(const std::vector<std::array<Gen, 4>>& entries) {
  Mu3Table t;
  for (const auto& [x, y, z, res] : entries) {
    if (!composable2(x, y) || !composable2(y, z))
      throw NonComposableError("mu3 table key does not compose: " +
                               key_name(x, y, z));
    if (gen_source(res) != gen_source(z) || gen_target(res) != gen_target(x))
      throw std::invalid_argument("mu3 table value in wrong hom space: " +
                                  key_name(x, y, z));
    if (!t.emplace(std::make_tuple(x, y, z), res).second)
      throw std::invalid_argument("duplicate mu3 table key: " +
                                  key_name(x, y, z));
  }
  return t;
}

const Mu2Table& mu2_table() {
  static const Mu2Table table = [] {
    std::vector<std::array<Gen, 3>> es = {
        {Gen::b0, Gen::c0, Gen::d0},  {Gen::c0, Gen::b0, Gen::d0},
        {Gen::b1, Gen::c1, Gen::d1},  {Gen::c1, Gen::b1, Gen::d1},
        {Gen::b0, Gen::p01, Gen::q01}, {Gen::p01, Gen::b1, Gen::q01},
        {Gen::q10, Gen::b0, Gen::p10}, {Gen::b1, Gen::q10, Gen::p10},
        {Gen::p01, Gen::p10, Gen::d0}, {Gen::q01, Gen::q10, Gen::d0},
        {Gen::q10, Gen::q01, Gen::d1}, {Gen::p10, Gen::p01, Gen::d1},
        {Gen::p01, Gen::q10, Gen::c0}, {Gen::q10, Gen::p01, Gen::c1},
    };
    // Strict units: a_l absorbs on both sides.
    for (int i = 0; i < kNumGen; ++i) {
      Gen x = static_cast<Gen>(i);
      if (!is_unit(x)) {
        es.push_back({unit_of(gen_target(x)), x, x});
        es.push_back({x, unit_of(gen_source(x)), x});
      }
    }
    es.push_back({Gen::a0, Gen::a0, Gen::a0});
    es.push_back({Gen::a1, Gen::a1, Gen::a1});
    return make_mu2_table(es);
  }();
  return table;
}

const Mu3Table& mu3_table() {
  static const Mu3Table table = make_mu3_table({
      {Gen::q10, Gen::b0, Gen::p01, Gen::a1},
      {Gen::p01, Gen::q10, Gen::b0, Gen::a0},
      {Gen::q01, Gen::q10, Gen::b0, Gen::b0},
      {Gen::p01, Gen::p10, Gen::b0, Gen::b0},
      {Gen::p10, Gen::p01, Gen::b1, Gen::b1},
      {Gen::b1, Gen::q10, Gen::q01, Gen::b1},
      {Gen::c0, Gen::b0, Gen::c0, Gen::c0},
      {Gen::c0, Gen::q01, Gen::q10, Gen::c0},
      {Gen::c0, Gen::p01, Gen::p10, Gen::c0},
      {Gen::c1, Gen::b1, Gen::c1, Gen::c1},
      {Gen::c1, Gen::p10, Gen::p01, Gen::c1},
      {Gen::q10, Gen::q01, Gen::c1, Gen::c1},
      {Gen::d0, Gen::c0, Gen::b0, Gen::d0},
      {Gen::b0, Gen::c0, Gen::d0, Gen::d0},
      {Gen::q01, Gen::q10, Gen::d0, Gen::d0},
      {Gen::p01, Gen::p10, Gen::d0, Gen::d0},
      {Gen::b1, Gen::c1, Gen::d1, Gen::d1},
      {Gen::d1, Gen::c1, Gen::b1, Gen::d1},
      {Gen::d1, Gen::q10, Gen::q01, Gen::d1},
      {Gen::p10, Gen::p01, Gen::d1, Gen::d1},
      {Gen::p01, Gen::p10, Gen::q01, Gen::q01},
      {Gen::p10, Gen::p01, Gen::p10, Gen::p10},
      {Gen::q10, Gen::q01, Gen::q10, Gen::q10},
      {Gen::q10, Gen::p01, Gen::p10, Gen::q10},
  });
  return table;
}

const ModMu2Table& module_mu2_table() {
  static const ModMu2Table table = [] {
    ModMu2Table t;
    auto put = [&t](Gen x, ModGen m, ModGen res) {
      if (!mod_composable2(x, m))
        throw NonComposableError("module mu2 table key does not compose");
      if (gen_target(x) != mod_target(res) ||
          mod_test_index(m) != mod_test_index(res))
        throw std::invalid_argument("module mu2 table value in wrong space");
      t.emplace(std::make_pair(x, m), res);
    };
    for (int i = 0; i < kNumModGen; ++i) {
      ModGen m = static_cast<ModGen>(i);
      put(unit_of(mod_target(m)), m, m);
    }
    put(Gen::c0, ModGen::alpha, ModGen::beta);
    put(Gen::q10, ModGen::alpha, ModGen::gamma);
    put(Gen::p01, ModGen::gamma, ModGen::beta);
    put(Gen::c1, ModGen::rho, ModGen::sigma);
    put(Gen::q10, ModGen::tau, ModGen::sigma);
    put(Gen::p01, ModGen::rho, ModGen::tau);
    return t;
  }();
  return table;
}

const ModMu3Table& module_mu3_table() {
  static const ModMu3Table table = [] {
    ModMu3Table t;
    auto put = [&t](Gen x2, Gen x1, ModGen m, ModGen res) {
      if (!composable2(x2, x1) || !mod_composable2(x1, m))
        throw NonComposableError("module mu3 table key does not compose");
      if (gen_target(x2) != mod_target(res) ||
          mod_test_index(m) != mod_test_index(res))
        throw std::invalid_argument("module mu3 table value in wrong space");
      t.emplace(std::make_tuple(x2, x1, m), res);
    };
    put(Gen::b0, Gen::p01, ModGen::gamma, ModGen::alpha);
    put(Gen::q01, Gen::q10, ModGen::alpha, ModGen::alpha);
    put(Gen::c0, Gen::b0, ModGen::beta, ModGen::beta);
    put(Gen::p01, Gen::p10, ModGen::alpha, ModGen::alpha);
    put(Gen::b1, Gen::q10, ModGen::tau, ModGen::rho);
    put(Gen::q10, Gen::q01, ModGen::sigma, ModGen::sigma);
    put(Gen::c1, Gen::b1, ModGen::sigma, ModGen::sigma);
    put(Gen::p10, Gen::p01, ModGen::rho, ModGen::rho);
    put(Gen::p01, Gen::p10, ModGen::tau, ModGen::tau);
    return t;
  }();
  return table;
}

std::optional<Gen> mu2(Gen x, Gen y) {
  if (!composable2(x, y))
    throw NonComposableError("mu2: arguments do not compose: " +
                             key_name(x, y));
  return eval2(mu2_table(), x, y);
}

std::optional<Gen> mu3(Gen x, Gen y, Gen z) {
  if (!composable2(x, y) || !composable2(y, z))
    throw NonComposableError("mu3: arguments do not compose: " +
                             key_name(x, y, z));
  return eval3(mu3_table(), x, y, z);
}

std::optional<ModGen> module_mu2(Gen x, ModGen m) {
  if (!mod_composable2(x, m))
    throw NonComposableError("module mu2: arguments do not compose: " +
                             gen_name(x) + ", " + mod_name(m));
  return evalM2(module_mu2_table(), x, m);
}

std::optional<ModGen> module_mu3(Gen x2, Gen x1, ModGen m) {
  if (!composable2(x2, x1) || !mod_composable2(x1, m))
    throw NonComposableError("module mu3: arguments do not compose: " +
                             key_name(x2, x1) + ", " + mod_name(m));
  return evalM3(module_mu3_table(), x2, x1, m);
}

namespace {

// Table sanity for the category: composable keys, matching hom spaces,
// homogeneous degree, strict unitality.
std::vector<std::string> ainfty_table_checks(const Mu2Table& t2,
                                             const Mu3Table& t3) {
  std::vector<std::string> bad;
  for (const auto& [key, res] : t2) {
    const auto& [x, y] = key;
    if (!composable2(x, y)) {
      bad.push_back("mu2 key not composable: " + key_name(x, y));
      continue;
    }
    if (gen_source(res) != gen_source(y) || gen_target(res) != gen_target(x))
      bad.push_back("mu2 value in wrong hom space: " + key_name(x, y));
    if (gen_degree(res) != gen_degree(x) + gen_degree(y))
      bad.push_back("mu2 entry not degree homogeneous: " + key_name(x, y) +
                    " -> " + gen_name(res));
  }
  for (const auto& [key, res] : t3) {
    const auto& [x, y, z] = key;
    if (!composable2(x, y) || !composable2(y, z)) {
      bad.push_back("mu3 key not composable: " + key_name(x, y, z));
      continue;
    }
    if (gen_source(res) != gen_source(z) || gen_target(res) != gen_target(x))
      bad.push_back("mu3 value in wrong hom space: " + key_name(x, y, z));
    if (gen_degree(res) != gen_degree(x) + gen_degree(y) + gen_degree(z) - 1)
      bad.push_back("mu3 entry not degree homogeneous: " + key_name(x, y, z) +
                    " -> " + gen_name(res));
    if (is_unit(x) || is_unit(y) || is_unit(z))
      bad.push_back("mu3 nonzero on a unit argument: " + key_name(x, y, z));
  }
  for (int i = 0; i < kNumGen; ++i) {
    Gen x = static_cast<Gen>(i);
    if (eval2(t2, unit_of(gen_target(x)), x) != std::optional<Gen>(x))
      bad.push_back("left unit fails on " + gen_name(x));
    if (eval2(t2, x, unit_of(gen_source(x))) != std::optional<Gen>(x))
      bad.push_back("right unit fails on " + gen_name(x));
  }
  return bad;
}

// Arity-3/4/5 relations with the outermost argument fixed; the shard
// unit for both the parallel and the serial verifier.
std::vector<std::string> ainfty_relations_for(const Mu2Table& t2,
                                              const Mu3Table& t3, int iz) {
  std::vector<std::string> bad;
  Gen z = static_cast<Gen>(iz);

  // Arity-3 relation: composition is associative (mu1 = 0).
  for (int iy = 0; iy < kNumGen; ++iy)
    for (int ix = 0; ix < kNumGen; ++ix) {
      Gen y = static_cast<Gen>(iy), x = static_cast<Gen>(ix);
      if (!composable2(z, y) || !composable2(y, x)) continue;
      auto zy = eval2(t2, z, y);
      auto yx = eval2(t2, y, x);
      uint16_t sum = 0;
      if (zy) sum ^= gmask(eval2(t2, *zy, x));
      if (yx) sum ^= gmask(eval2(t2, z, *yx));
      if (sum)
        bad.push_back("associativity fails at (" + key_name(z, y, x) + ")");
    }

  // Arity-4 relation: the five-term identity tying mu2 and mu3 together.
  for (int iy = 0; iy < kNumGen; ++iy)
    for (int ix = 0; ix < kNumGen; ++ix)
      for (int iw = 0; iw < kNumGen; ++iw) {
        Gen y = static_cast<Gen>(iy), x = static_cast<Gen>(ix),
            w = static_cast<Gen>(iw);
        if (!composable2(z, y) || !composable2(y, x) || !composable2(x, w))
          continue;
        uint16_t sum = 0;
        if (auto t = eval3(t3, z, y, x)) sum ^= gmask(eval2(t2, *t, w));
        if (auto t = eval3(t3, y, x, w)) sum ^= gmask(eval2(t2, z, *t));
        if (auto t = eval2(t2, z, y)) sum ^= gmask(eval3(t3, *t, x, w));
        if (auto t = eval2(t2, y, x)) sum ^= gmask(eval3(t3, z, *t, w));
        if (auto t = eval2(t2, x, w)) sum ^= gmask(eval3(t3, z, y, *t));
        if (sum)
          bad.push_back("arity-4 relation fails at (" + key_name(z, y, x) +
                        ", " + gen_name(w) + ")");
      }

  // Arity-5 relation: mu3 composed with itself in all three slots.
  for (int iy = 0; iy < kNumGen; ++iy)
    for (int ix = 0; ix < kNumGen; ++ix)
      for (int iw = 0; iw < kNumGen; ++iw)
        for (int iv = 0; iv < kNumGen; ++iv) {
          Gen y = static_cast<Gen>(iy), x = static_cast<Gen>(ix),
              w = static_cast<Gen>(iw), v = static_cast<Gen>(iv);
          if (!composable2(z, y) || !composable2(y, x) ||
              !composable2(x, w) || !composable2(w, v))
            continue;
          uint16_t sum = 0;
          if (auto t = eval3(t3, z, y, x)) sum ^= gmask(eval3(t3, *t, w, v));
          if (auto t = eval3(t3, y, x, w)) sum ^= gmask(eval3(t3, z, *t, v));
          if (auto t = eval3(t3, x, w, v)) sum ^= gmask(eval3(t3, z, y, *t));
          if (sum)
            bad.push_back("arity-5 relation fails at (" + key_name(z, y, x) +
                          ", " + key_name(w, v) + ")");
        }

  return bad;
}

// Table sanity for the module action over test curve k, plus the unit
// action.
std::vector<std::string> module_table_checks(int k, const ModMu2Table& m2,
                                             const ModMu3Table& m3) {
  std::vector<std::string> bad;
  for (const auto& [key, res] : m2) {
    const auto& [x, m] = key;
    if (mod_test_index(m) != k) continue;
    if (!mod_composable2(x, m)) {
      bad.push_back("module mu2 key not composable: " + gen_name(x) + ", " +
                    mod_name(m));
      continue;
    }
    if (gen_target(x) != mod_target(res) ||
        mod_test_index(res) != mod_test_index(m))
      bad.push_back("module mu2 value in wrong space: " + gen_name(x) + ", " +
                    mod_name(m));
    if (mod_degree(res) != gen_degree(x) + mod_degree(m))
      bad.push_back("module mu2 entry not degree homogeneous: " + gen_name(x) +
                    ", " + mod_name(m));
  }
  for (const auto& [key, res] : m3) {
    const auto& [x2, x1, m] = key;
    if (mod_test_index(m) != k) continue;
    if (!composable2(x2, x1) || !mod_composable2(x1, m)) {
      bad.push_back("module mu3 key not composable: " + key_name(x2, x1) +
                    ", " + mod_name(m));
      continue;
    }
    if (gen_target(x2) != mod_target(res) ||
        mod_test_index(res) != mod_test_index(m))
      bad.push_back("module mu3 value in wrong space: " + key_name(x2, x1) +
                    ", " + mod_name(m));
    if (mod_degree(res) != gen_degree(x2) + gen_degree(x1) + mod_degree(m) - 1)
      bad.push_back("module mu3 entry not degree homogeneous: " +
                    key_name(x2, x1) + ", " + mod_name(m));
    if (is_unit(x2) || is_unit(x1))
      bad.push_back("module mu3 nonzero on a unit argument: " +
                    key_name(x2, x1) + ", " + mod_name(m));
  }
  for (int i = 0; i < kNumModGen; ++i) {
    ModGen m = static_cast<ModGen>(i);
    if (mod_test_index(m) != k) continue;
    if (evalM2(m2, unit_of(mod_target(m)), m) != std::optional<ModGen>(m))
      bad.push_back("unit action fails on " + mod_name(m));
  }
  return bad;
}

// Mixed relations with the module generator and innermost algebra
// argument fixed; the shard unit for the module verifiers.
std::vector<std::string> module_relations_for(const Mu2Table& t2,
                                              const Mu3Table& t3,
                                              const ModMu2Table& m2,
                                              const ModMu3Table& m3, ModGen m,
                                              Gen x1) {
  std::vector<std::string> bad;
  if (!mod_composable2(x1, m)) return bad;

  // One algebra input on each side of the mixed associativity relation.
  for (int i2 = 0; i2 < kNumGen; ++i2) {
    Gen x2 = static_cast<Gen>(i2);
    if (!composable2(x2, x1)) continue;
    uint16_t sum = 0;
    if (auto t = eval2(t2, x2, x1)) sum ^= mmask(evalM2(m2, *t, m));
    if (auto t = evalM2(m2, x1, m)) sum ^= mmask(evalM2(m2, x2, *t));
    if (sum)
      bad.push_back("module arity-3 relation fails at (" + key_name(x2, x1) +
                    ", " + mod_name(m) + ")");
  }

  // Three algebra inputs.
  for (int i2 = 0; i2 < kNumGen; ++i2) {
    Gen x2 = static_cast<Gen>(i2);
    if (!composable2(x2, x1)) continue;
    for (int i3 = 0; i3 < kNumGen; ++i3) {
      Gen x3 = static_cast<Gen>(i3);
      if (!composable2(x3, x2)) continue;
      uint16_t sum = 0;
      if (auto t = eval3(t3, x3, x2, x1)) sum ^= mmask(evalM2(m2, *t, m));
      if (auto t = evalM3(m3, x2, x1, m)) sum ^= mmask(evalM2(m2, x3, *t));
      if (auto t = eval2(t2, x3, x2)) sum ^= mmask(evalM3(m3, *t, x1, m));
      if (auto t = eval2(t2, x2, x1)) sum ^= mmask(evalM3(m3, x3, *t, m));
      if (auto t = evalM2(m2, x1, m)) sum ^= mmask(evalM3(m3, x3, x2, *t));
      if (sum)
        bad.push_back("module arity-4 relation fails at (" +
                      key_name(x3, x2, x1) + ", " + mod_name(m) + ")");
    }
  }

  // Four algebra inputs: only mu3-against-mu3 terms survive.
  for (int i2 = 0; i2 < kNumGen; ++i2) {
    Gen x2 = static_cast<Gen>(i2);
    if (!composable2(x2, x1)) continue;
    for (int i3 = 0; i3 < kNumGen; ++i3) {
      Gen x3 = static_cast<Gen>(i3);
      if (!composable2(x3, x2)) continue;
      for (int i4 = 0; i4 < kNumGen; ++i4) {
        Gen x4 = static_cast<Gen>(i4);
        if (!composable2(x4, x3)) continue;
        uint16_t sum = 0;
        if (auto t = eval3(t3, x4, x3, x2)) sum ^= mmask(evalM3(m3, *t, x1, m));
        if (auto t = eval3(t3, x3, x2, x1)) sum ^= mmask(evalM3(m3, x4, *t, m));
        if (auto t = evalM3(m3, x2, x1, m)) sum ^= mmask(evalM3(m3, x4, x3, *t));
        if (sum)
          bad.push_back("module arity-5 relation fails at (" +
                        key_name(x4, x3, x2) + ", " + gen_name(x1) + ", " +
                        mod_name(m) + ")");
      }
    }
  }

  return bad;
}

std::vector<ModGen> module_gens_for(int k) {
  if (k != 0 && k != 1)
    throw std::invalid_argument("verify_module_relations: k must be 0 or 1");
  std::vector<ModGen> mods;
  for (int i = 0; i < kNumModGen; ++i)
    if (mod_test_index(static_cast<ModGen>(i)) == k)
      mods.push_back(static_cast<ModGen>(i));
  return mods;
}

void append(std::vector<std::string>& bad,
            const std::vector<std::vector<std::string>>& parts) {
  for (const auto& part : parts) bad.insert(bad.end(), part.begin(), part.end());
}

}  // namespace

std::vector<std::string> verify_ainfty() {
  return verify_ainfty(mu2_table(), mu3_table());
}

std::vector<std::string> verify_ainfty(const Mu2Table& t2, const Mu3Table& t3) {
  std::vector<std::string> bad = ainfty_table_checks(t2, t3);
  std::vector<std::vector<std::string>> parts(kNumGen);
#pragma omp parallel for schedule(dynamic)
  for (int iz = 0; iz < kNumGen; ++iz)
    parts[iz] = ainfty_relations_for(t2, t3, iz);
  append(bad, parts);
  return bad;
}

std::vector<std::string> verify_ainfty_serial() {
  return verify_ainfty_serial(mu2_table(), mu3_table());
}

std::vector<std::string> verify_ainfty_serial(const Mu2Table& t2,
                                              const Mu3Table& t3) {
  std::vector<std::string> bad = ainfty_table_checks(t2, t3);
  for (int iz = 0; iz < kNumGen; ++iz) {
    auto part = ainfty_relations_for(t2, t3, iz);
    bad.insert(bad.end(), part.begin(), part.end());
  }
  return bad;
}

std::vector<std::string> verify_module_relations(int k) {
  return verify_module_relations(k, mu2_table(), mu3_table(),
                                 module_mu2_table(), module_mu3_table());
}

std::vector<std::string> verify_module_relations(int k, const Mu2Table& t2,
                                                 const Mu3Table& t3,
                                                 const ModMu2Table& m2,
                                                 const ModMu3Table& m3) {
  std::vector<ModGen> mods = module_gens_for(k);
  std::vector<std::string> bad = module_table_checks(k, m2, m3);
  int shards = static_cast<int>(mods.size()) * kNumGen;
  std::vector<std::vector<std::string>> parts(shards);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < shards; ++s)
    parts[s] = module_relations_for(t2, t3, m2, m3, mods[s / kNumGen],
                                    static_cast<Gen>(s % kNumGen));
  append(bad, parts);
  return bad;
}

std::vector<std::string> verify_module_relations_serial(int k) {
  return verify_module_relations_serial(k, mu2_table(), mu3_table(),
                                        module_mu2_table(),
                                        module_mu3_table());
}

std::vector<std::string> verify_module_relations_serial(
    int k, const Mu2Table& t2, const Mu3Table& t3, const ModMu2Table& m2,
    const ModMu3Table& m3) {
  std::vector<ModGen> mods = module_gens_for(k);
  std::vector<std::string> bad = module_table_checks(k, m2, m3);
  for (ModGen m : mods)
    for (int i1 = 0; i1 < kNumGen; ++i1) {
      auto part = module_relations_for(t2, t3, m2, m3, m,
                                       static_cast<Gen>(i1));
      bad.insert(bad.end(), part.begin(), part.end());
    }
  return bad;
}


namespace {

// Bilinear extension of mu2 to sums of generators.  Only defined when
// all terms on each side live in one hom space, which holds for every
// comparison below.
uint16_t mu2_mask(uint16_t xs, uint16_t ys) {
  uint16_t out = 0;
  for (int i = 0; i < kNumGen; ++i) {
    if (!((xs >> i) & 1)) continue;
    for (int j = 0; j < kNumGen; ++j) {
      if (!((ys >> j) & 1)) continue;
      Gen x = static_cast<Gen>(i), y = static_cast<Gen>(j);
      if (!composable2(x, y)) continue;
      out ^= gmask(eval2(mu2_table(), x, y));
    }
  }
  return out;
}

std::string mask_name(uint16_t m) {
  if (!m) return "0";
  std::string s;
  for (int i = 0; i < kNumGen; ++i)
    if ((m >> i) & 1) {
      if (!s.empty()) s += "+";
      s += gen_name(static_cast<Gen>(i));
    }
  return s;
}

}  // namespace

std::vector<std::string> verify_algebra_comparisons() {
  std::vector<std::string> bad;

  // Six-generator algebra: units A_l, nilpotents C_l, crossing morphisms
  // S_10 in (L0, L1) and S_01 in (L1, L0), with S_01 S_10 = C_0 and
  // S_10 S_01 = C_1.  Its image in the category is spanned by the six
  // generators a, c, p01, q10.
  enum D6 { A0, C0, A1, C1, S10, S01 };
  struct D6Info {
    Lag src, tgt;
    int deg;
    Gen image;
  };
  const D6Info d6[6] = {
      {Lag::L0, Lag::L0, 0, Gen::a0},  {Lag::L0, Lag::L0, -2, Gen::c0},
      {Lag::L1, Lag::L1, 0, Gen::a1},  {Lag::L1, Lag::L1, -2, Gen::c1},
      {Lag::L0, Lag::L1, -1, Gen::q10}, {Lag::L1, Lag::L0, -1, Gen::p01},
  };
  auto d6_product = [&](int u, int v) -> uint16_t {
    // u after v; callers guarantee composability.
    if (u == A0 || u == A1) return 1u << static_cast<int>(d6[v].image);
    if (v == A0 || v == A1) return 1u << static_cast<int>(d6[u].image);
    if (u == S01 && v == S10) return 1u << static_cast<int>(Gen::c0);
    if (u == S10 && v == S01) return 1u << static_cast<int>(Gen::c1);
    return 0;  // products involving C vanish, as do C.C and S'.S' patterns
  };
  for (int u = 0; u < 6; ++u) {
    if (d6[u].deg != gen_degree(d6[u].image))
      bad.push_back("six-dim algebra: degree mismatch on generator " +
                    std::to_string(u));
    for (int v = 0; v < 6; ++v) {
      if (d6[v].tgt != d6[u].src) continue;
      uint16_t expect = d6_product(u, v);
      uint16_t got = mu2_mask(1u << static_cast<int>(d6[u].image),
                              1u << static_cast<int>(d6[v].image));
      if (expect != got)
        bad.push_back("six-dim algebra map is not multiplicative at (" +
                      gen_name(d6[u].image) + ", " + gen_name(d6[v].image) +
                      "): " + mask_name(got));
    }
  }
  {
    uint16_t image = 0;
    for (const auto& g : d6) image |= 1u << static_cast<int>(g.image);
    if (std::popcount(static_cast<unsigned>(image)) != 6)
      bad.push_back("six-dim algebra map is not injective");
    if (image == (1u << kNumGen) - 1)
      bad.push_back("six-dim algebra map unexpectedly surjective");
  }

  // Twelve-generator algebra: B, a second nilpotent Ct with B.Ct = D,
  // and crossing morphisms S, S' satisfying S_01 S_10 = B_0 + Ct_0.
  // The assignment below is an isomorphism of ungraded algebras.
  enum D12 {
    TA0, TB0, TC0, TD0, TA1, TB1, TC1, TD1, TS10, TS01, TSp10, TSp01
  };
  struct D12Info {
    Lag src, tgt;
    int deg;
    uint16_t image;
  };
  auto bit = [](Gen g) -> uint16_t { return 1u << static_cast<int>(g); };
  const D12Info d12[12] = {
      {Lag::L0, Lag::L0, 0, bit(Gen::a0)},
      {Lag::L0, Lag::L0, -2, bit(Gen::b0)},
      {Lag::L0, Lag::L0, -2, static_cast<uint16_t>(bit(Gen::b0) | bit(Gen::c0))},
      {Lag::L0, Lag::L0, -4, bit(Gen::d0)},
      {Lag::L1, Lag::L1, 0, bit(Gen::a1)},
      {Lag::L1, Lag::L1, -2, bit(Gen::b1)},
      {Lag::L1, Lag::L1, -2, static_cast<uint16_t>(bit(Gen::b1) | bit(Gen::c1))},
      {Lag::L1, Lag::L1, -4, bit(Gen::d1)},
      {Lag::L0, Lag::L1, -1, bit(Gen::q10)},
      {Lag::L1, Lag::L0, -1, bit(Gen::p01)},
      {Lag::L0, Lag::L1, -3, bit(Gen::p10)},
      {Lag::L1, Lag::L0, -3, bit(Gen::q01)},
  };
  auto is12 = [](int g, D12 l0, D12 l1) { return g == l0 || g == l1; };
  auto d12_product = [&](int u, int v) -> int {
    // Returns the index of the product generator, -2 for B + Ct, or -1
    // for zero.  u after v; composability guaranteed by the caller.
    auto isA = [&](int g) { return is12(g, TA0, TA1); };
    auto isB = [&](int g) { return is12(g, TB0, TB1); };
    auto isC = [&](int g) { return is12(g, TC0, TC1); };
    auto isS = [&](int g) { return is12(g, TS10, TS01); };
    auto isSp = [&](int g) { return is12(g, TSp10, TSp01); };
    if (isA(u)) return v;
    if (isA(v)) return u;
    bool same_l0 = d12[v].src == Lag::L0;
    if ((isB(u) || isC(u)) && (isB(v) || isC(v)))
      return (u == v || (isB(u) && isB(v)) || (isC(u) && isC(v)))
                 ? -1
                 : (same_l0 ? TD0 : TD1);
    if (isS(u) && (isB(v) || isC(v))) return same_l0 ? TSp10 : TSp01;
    if ((isB(u) || isC(u)) && isS(v)) return same_l0 ? TSp10 : TSp01;
    if (isS(u) && isS(v)) return -2;  // B + Ct on the source side
    if (isSp(u) && isS(v)) return same_l0 ? TD0 : TD1;
    if (isS(u) && isSp(v)) return same_l0 ? TD0 : TD1;
    return -1;  // everything through D or two primed morphisms dies
  };
  for (int u = 0; u < 12; ++u)
    for (int v = 0; v < 12; ++v) {
      if (d12[v].tgt != d12[u].src) continue;
      int p = d12_product(u, v);
      uint16_t expect;
      if (p == -1)
        expect = 0;
      else if (p == -2)
        // phi(B + Ct) = b + (b + c) = c over F_2.
        expect = d12[v].src == Lag::L0 ? bit(Gen::c0) : bit(Gen::c1);
      else
        expect = d12[p].image;
      uint16_t got = mu2_mask(d12[u].image, d12[v].image);
      if (expect != got)
        bad.push_back("twelve-dim algebra map is not multiplicative at (" +
                      std::to_string(u) + ", " + std::to_string(v) +
                      "): got " + mask_name(got) + ", expected " +
                      mask_name(expect));
    }
  {
    // The twelve images must be linearly independent (ungraded iso).
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < 12; ++u)
      for (int i = 0; i < kNumGen; ++i)
        if ((d12[u].image >> i) & 1) es.emplace_back(i, u);
    F2Matrix images = F2Matrix::from_entries(kNumGen, 12, std::move(es));
    if (rank(images) != 12)
      bad.push_back("twelve-dim algebra map is not bijective");
  }
  {
    // No graded isomorphism: the per-degree dimension counts disagree.
    std::map<int, int> cat_dims, d12_dims;
    for (int i = 0; i < kNumGen; ++i)
      ++cat_dims[gen_degree(static_cast<Gen>(i))];
    for (const auto& g : d12) ++d12_dims[g.deg];
    if (cat_dims == d12_dims)
      bad.push_back(
          "twelve-dim algebra unexpectedly matches the category's graded "
          "dimensions");
  }

  return bad;
}

nlohmann::json tables_json() {
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  for (int i = 0; i < kNumGen; ++i) {
    Gen g = static_cast<Gen>(i);
    j["generators"].push_back({{"name", gen_name(g)},
                               {"source", static_cast<int>(gen_source(g))},
                               {"target", static_cast<int>(gen_target(g))},
                               {"degree", gen_degree(g)}});
  }
  j["module_generators"] = nlohmann::json::array();
  for (int i = 0; i < kNumModGen; ++i) {
    ModGen m = static_cast<ModGen>(i);
    j["module_generators"].push_back(
        {{"name", mod_name(m)},
         {"test", mod_test_index(m)},
         {"target", static_cast<int>(mod_target(m))},
         {"degree", mod_degree(m)}});
  }
  j["mu2"] = nlohmann::json::array();
  for (const auto& [key, res] : mu2_table())
    j["mu2"].push_back({gen_name(key.first), gen_name(key.second),
                        gen_name(res)});
  j["mu3"] = nlohmann::json::array();
  for (const auto& [key, res] : mu3_table())
    j["mu3"].push_back({gen_name(std::get<0>(key)), gen_name(std::get<1>(key)),
                        gen_name(std::get<2>(key)), gen_name(res)});
  j["module_mu2"] = nlohmann::json::array();
  for (const auto& [key, res] : module_mu2_table())
    j["module_mu2"].push_back(
        {gen_name(key.first), mod_name(key.second), mod_name(res)});
  j["module_mu3"] = nlohmann::json::array();
  for (const auto& [key, res] : module_mu3_table())
    j["module_mu3"].push_back({gen_name(std::get<0>(key)),
                               gen_name(std::get<1>(key)),
                               mod_name(std::get<2>(key)), mod_name(res)});
  return j;
}

}  // namespace pkh
