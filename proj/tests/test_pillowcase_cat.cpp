#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pkh/pillowcase_cat.hpp"

using namespace pkh;

namespace {

// Number of composable generator chains of the given length, counted
// directly from the hom types.
long count_chains(int n) {
  // chains[l] = number of composable chains ending at an object of type l
  long chains[2] = {1, 1};
  long total = 0;
  // dim hom(L_i -> L_j)
  const long dim[2][2] = {{4, 2}, {2, 4}};
  long cur[2] = {1, 1};
  for (int step = 0; step < n; ++step) {
    long next[2] = {0, 0};
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2; ++i) next[j] += cur[i] * dim[i][j];
    cur[0] = next[0];
    cur[1] = next[1];
  }
  total = cur[0] + cur[1];
  (void)chains;
  return total;
}

long enumerate_chains(int n) {
  std::vector<int> idx(n, 0);
  long count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i)
      ok = gen_source(static_cast<Gen>(idx[i])) ==
           gen_target(static_cast<Gen>(idx[i + 1]));
    if (ok) ++count;
    int p = n - 1;
    while (p >= 0 && idx[p] == kNumGen - 1) idx[p--] = 0;
    if (p < 0) break;
    ++idx[p];
  }
  return count;
}

}  // namespace

TEST_CASE("generator bookkeeping") {
  CHECK(gen_source(Gen::p01) == Lag::L1);
  CHECK(gen_target(Gen::p01) == Lag::L0);
  CHECK(gen_source(Gen::q10) == Lag::L0);
  CHECK(gen_target(Gen::q10) == Lag::L1);
  CHECK(gen_degree(Gen::b0) == 3);
  CHECK(gen_degree(Gen::c1) == -2);
  CHECK(gen_degree(Gen::d0) == 1);
  CHECK(gen_degree(Gen::q01) == 2);
  CHECK(gen_degree(Gen::p10) == 2);
  CHECK(gen_degree(Gen::q10) == -1);
  for (int i = 0; i < kNumGen; ++i) {
    Gen g = static_cast<Gen>(i);
    CHECK(gen_from_name(gen_name(g)) == g);
  }
  for (int i = 0; i < kNumModGen; ++i) {
    ModGen m = static_cast<ModGen>(i);
    CHECK(mod_from_name(mod_name(m)) == m);
  }
  CHECK_THROWS_AS(gen_from_name("zz"), std::invalid_argument);

  // Each graded piece of the endomorphism algebra has dimension two.
  std::map<int, int> dims;
  for (int i = 0; i < kNumGen; ++i) ++dims[gen_degree(static_cast<Gen>(i))];
  CHECK(dims == std::map<int, int>{{-2, 2}, {-1, 2}, {0, 2},
                                   {1, 2},  {2, 2},  {3, 2}});
}

TEST_CASE("composition spot values") {
  CHECK(mu2(Gen::b0, Gen::c0) == Gen::d0);
  CHECK(mu2(Gen::b0, Gen::b0) == std::nullopt);
  CHECK(mu2(Gen::p01, Gen::q10) == Gen::c0);
  CHECK(mu2(Gen::q10, Gen::p01) == Gen::c1);
  CHECK(mu2(Gen::q01, Gen::q10) == Gen::d0);
  CHECK(mu2(Gen::a0, Gen::d0) == Gen::d0);
  CHECK(mu2(Gen::p01, Gen::a1) == Gen::p01);
  CHECK(mu3(Gen::q10, Gen::b0, Gen::p01) == Gen::a1);
  CHECK(mu3(Gen::p01, Gen::q10, Gen::b0) == Gen::a0);
  CHECK(mu3(Gen::c0, Gen::b0, Gen::c0) == Gen::c0);
  CHECK(mu3(Gen::b0, Gen::c0, Gen::b0) == std::nullopt);
  CHECK(module_mu2(Gen::c0, ModGen::alpha) == ModGen::beta);
  CHECK(module_mu2(Gen::q10, ModGen::alpha) == ModGen::gamma);
  CHECK(module_mu2(Gen::b0, ModGen::alpha) == std::nullopt);
  CHECK(module_mu3(Gen::b0, Gen::p01, ModGen::gamma) == ModGen::alpha);
  CHECK(module_mu3(Gen::p01, Gen::p10, ModGen::tau) == ModGen::tau);
}

TEST_CASE("non-composable arguments are a typed error") {
  CHECK_THROWS_AS(mu2(Gen::b0, Gen::b1), NonComposableError);
  CHECK_THROWS_AS(mu2(Gen::p01, Gen::p01), NonComposableError);
  CHECK_THROWS_AS(mu3(Gen::b0, Gen::b0, Gen::b1), NonComposableError);
  CHECK_THROWS_AS(module_mu2(Gen::b1, ModGen::alpha), NonComposableError);
  CHECK_THROWS_AS(module_mu3(Gen::q10, Gen::q10, ModGen::alpha),
                  NonComposableError);
}

TEST_CASE("table builders reject malformed entries") {
  CHECK_THROWS_AS(make_mu2_table({{Gen::b0, Gen::b1, Gen::d0}}),
                  NonComposableError);
  // Composable key but a value in the wrong hom space.
  CHECK_THROWS_AS(make_mu2_table({{Gen::b0, Gen::p01, Gen::d0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_mu2_table({{Gen::b0, Gen::c0, Gen::d0},
                                  {Gen::b0, Gen::c0, Gen::a0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_mu3_table({{Gen::b0, Gen::b1, Gen::b0, Gen::d0}}),
                  NonComposableError);
}

TEST_CASE("composable chain counts match the transfer matrix") {
  CHECK(enumerate_chains(2) == count_chains(2));
  CHECK(enumerate_chains(3) == 432);
  CHECK(enumerate_chains(4) == 2592);
  CHECK(enumerate_chains(5) == 15552);
  CHECK(count_chains(3) == 432);
  CHECK(count_chains(4) == 2592);
  CHECK(count_chains(5) == 15552);
}

TEST_CASE("the category satisfies the A-infinity relations") {
  std::vector<std::string> bad = verify_ainfty();
  for (const auto& b : bad) MESSAGE(b);
  CHECK(bad.empty());
}

TEST_CASE("both test modules satisfy their relations") {
  for (int k = 0; k < 2; ++k) {
    std::vector<std::string> bad = verify_module_relations(k);
    for (const auto& b : bad) MESSAGE(b);
    CHECK(bad.empty());
  }
  CHECK_THROWS_AS(verify_module_relations(2), std::invalid_argument);
}

TEST_CASE("mixed arity-4 relation at a known nontrivial chain") {
  // The two surviving terms cancel: mu2(mu3(q10, b0, p01), gamma) and
  // mu2(q10, mu3(b0, p01, gamma)) are both gamma.
  auto t1 = mu3(Gen::q10, Gen::b0, Gen::p01);
  REQUIRE(t1.has_value());
  CHECK(module_mu2(*t1, ModGen::gamma) == ModGen::gamma);
  auto t2 = module_mu3(Gen::b0, Gen::p01, ModGen::gamma);
  REQUIRE(t2.has_value());
  CHECK(module_mu2(Gen::q10, *t2) == ModGen::gamma);
  CHECK(module_mu3(mu2(Gen::q10, Gen::b0).value(), Gen::p01, ModGen::gamma) ==
        std::nullopt);
  CHECK(module_mu3(Gen::q10, mu2(Gen::b0, Gen::p01).value(), ModGen::gamma) ==
        std::nullopt);
  CHECK(module_mu3(Gen::q10, Gen::b0,
                   module_mu2(Gen::p01, ModGen::gamma).value()) ==
        std::nullopt);
}

TEST_CASE("a corrupted composition table is detected") {
  Mu2Table t2 = mu2_table();
  t2[{Gen::p01, Gen::q10}] = Gen::d0;
  std::vector<std::string> bad = verify_ainfty(t2, mu3_table());
  CHECK(!bad.empty());

  Mu3Table t3 = mu3_table();
  t3.erase(std::make_tuple(Gen::c0, Gen::b0, Gen::c0));
  CHECK(!verify_ainfty(mu2_table(), t3).empty());

  // Nonzero mu3 on a unit argument violates strict unitality.
  Mu3Table t3u = mu3_table();
  t3u[std::make_tuple(Gen::a0, Gen::b0, Gen::c0)] = Gen::d0;
  CHECK(!verify_ainfty(mu2_table(), t3u).empty());

  ModMu2Table m2 = module_mu2_table();
  m2[{Gen::c0, ModGen::alpha}] = ModGen::alpha;
  CHECK(!verify_module_relations(0, mu2_table(), mu3_table(), m2,
                                 module_mu3_table())
             .empty());
  // The corruption sits in the W_0 column only.
  CHECK(verify_module_relations(1, mu2_table(), mu3_table(), m2,
                                module_mu3_table())
            .empty());

  ModMu3Table m3 = module_mu3_table();
  m3.erase(std::make_tuple(Gen::b0, Gen::p01, ModGen::gamma));
  CHECK(!verify_module_relations(0, mu2_table(), mu3_table(),
                                 module_mu2_table(), m3)
             .empty());
}

TEST_CASE("algebra comparisons hold") {
  std::vector<std::string> bad = verify_algebra_comparisons();
  for (const auto& b : bad) MESSAGE(b);
  CHECK(bad.empty());
}

TEST_CASE("table export is complete") {
  nlohmann::json j = tables_json();
  CHECK(j["generators"].size() == 12);
  CHECK(j["module_generators"].size() == 6);
  // 14 structural products plus 22 unit entries.
  CHECK(j["mu2"].size() == 36);
  CHECK(j["mu3"].size() == 24);
  // 6 structural module products plus 6 unit actions.
  CHECK(j["module_mu2"].size() == 12);
  CHECK(j["module_mu3"].size() == 9);
}
