#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "pkh/functor_f.hpp"
#include "pkh/khovanov_oracle.hpp"
#include "test_diagrams.hpp"

using namespace pkh;
using namespace pkh::testing;

namespace {

RankTable table(std::initializer_list<std::pair<std::pair<int, int>, int>> xs) {
  RankTable rt;
  rt.absolute = true;
  for (const auto& [rs, rk] : xs) rt.ranks[rs] = rk;
  return rt;
}

RankTable paired_table(const TangleDiagram& t, int k) {
  TwistedComplex tc = build_delta(build_cube(t), tangle_writhe_counts(t));
  return cohomology(pair(tc, k));
}

// |J(i)|: the knot determinant.  J is evaluated at q = i as a Gaussian
// integer; for a knot one component vanishes and the other carries it.
long long determinant(const Laurent& j) {
  long long re = 0, im = 0;
  for (const auto& [e, c] : j) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      case 3: im -= c; break;
    }
  }
  REQUIRE((re == 0 || im == 0));
  return std::llabs(re) + std::llabs(im);
}

}  // namespace

TEST_CASE("oracle reproduces the published trefoil tables") {
  LinkDiagram right = close_tangle(twist_tangle(3, true), 1);
  CHECK(reduced_khovanov(right) ==
        table({{{1, 0}, 1}, {{7, 2}, 1}, {{10, 3}, 1}}));
  CHECK(laurent_string(kauffman_jones(right)) == "q + q^5 - q^7");

  LinkDiagram left = close_tangle(twist_tangle(3, false), 1);
  CHECK(reduced_khovanov(left) ==
        table({{{-12, -3}, 1}, {{-9, -2}, 1}, {{-3, 0}, 1}}));
  CHECK(laurent_string(kauffman_jones(left)) == "-q^-9 + q^-7 + q^-3");

  CHECK(determinant(kauffman_jones(right)) == 3);
  CHECK(determinant(kauffman_jones(left)) == 3);
}

TEST_CASE("oracle reproduces the figure-eight knot invariants") {
  // Closure 0 of the four-crossing tangle is the figure-eight knot.
  LinkDiagram d = close_tangle(figure8_tangle(), 0);
  RankTable rt = reduced_khovanov(d);
  CHECK(rt == table({{{-7, -2}, 1},
                     {{-4, -1}, 1},
                     {{-1, 0}, 1},
                     {{2, 1}, 1},
                     {{5, 2}, 1}}));
  Laurent j = kauffman_jones(d);
  CHECK(laurent_string(j) == "q^-5 - q^-3 + q^-1 - q + q^3");
  CHECK(j == jones(rt));
  CHECK(determinant(j) == 5);

  // The amphichirality signature: the exponent multiset is preserved by
  // the mirror map e -> -e - 2.
  Laurent mirrored;
  for (const auto& [e, c] : j) mirrored[-e - 2] = c;
  CHECK(mirrored == j);

  // The other closure undoes two crossings and leaves a positive clasp.
  CHECK(reduced_khovanov(close_tangle(figure8_tangle(), 1)) ==
        reduced_khovanov(close_tangle(twist_tangle(2, true), 1)));
}

TEST_CASE("oracle normalizes unknots and unlinks at q^-1") {
  RankTable unknot = table({{{-1, 0}, 1}});
  CHECK(reduced_khovanov(close_tangle(cross_tangle(), 0)) == unknot);
  CHECK(reduced_khovanov(close_tangle(trivial_tangle(0), 1)) == unknot);
  CHECK(reduced_khovanov(close_tangle(trivial_tangle(1), 0)) == unknot);

  CHECK(reduced_khovanov(close_tangle(trivial_tangle(0), 0)) ==
        table({{{0, 0}, 1}, {{-2, 0}, 1}}));

  // Crossingless three-component unlink, basepoint on a middle circle.
  LinkDiagram unlink;
  unlink.loops = {1, 2, 3};
  unlink.basepoint = 2;
  CHECK(reduced_khovanov(unlink) ==
        table({{{1, 0}, 1}, {{-1, 0}, 2}, {{-3, 0}, 1}}));
}

TEST_CASE("oracle agrees with the pairing pipeline on orientable closures") {
  struct Probe {
    TangleDiagram t;
    int k;
  };
  std::vector<Probe> probes = {
      {trivial_tangle(0), 0}, {trivial_tangle(0), 1},
      {trivial_tangle(1), 0}, {trivial_tangle(1), 1},
      {cross_tangle(), 0},    {figure8_tangle(), 0},
      {figure8_tangle(), 1},
  };
  for (int n = 2; n <= 5; ++n)
    for (bool pos : {true, false})
      probes.push_back({twist_tangle(n, pos), 1});
  TangleDiagram looped = trivial_tangle(0);
  looped.loops = {7};
  probes.push_back({looped, 0});
  probes.push_back({looped, 1});

  for (const auto& [t, k] : probes) {
    CAPTURE(k);
    REQUIRE(writhe_counts(t, k).has_value());
    RankTable ours = paired_table(t, k);
    RankTable oracle = reduced_khovanov(close_tangle(t, k));
    CHECK(compare_tables(ours, oracle).empty());
    CHECK(ours == oracle);
  }
}

TEST_CASE("oracle state sum equals the graded Euler characteristic") {
  for (int n = 2; n <= 6; ++n)
    for (bool pos : {true, false}) {
      LinkDiagram d = close_tangle(twist_tangle(n, pos), 1);
      CHECK(jones(reduced_khovanov(d)) == kauffman_jones(d));
    }
  LinkDiagram f8 = close_tangle(figure8_tangle(), 0);
  CHECK(jones(reduced_khovanov(f8)) == kauffman_jones(f8));
}

TEST_CASE("table comparison flags shifts and refuses relative tables") {
  RankTable rt = reduced_khovanov(close_tangle(twist_tangle(3, true), 1));
  CHECK(compare_tables(rt, rt).empty());

  RankTable shifted;
  shifted.absolute = true;
  for (const auto& [rs, rk] : rt.ranks)
    shifted.ranks[{rs.first + 2, rs.second}] = rk;
  CHECK(compare_tables(rt, shifted).size() == 6);

  RankTable relative = rt;
  relative.absolute = false;
  auto msgs = compare_tables(rt, relative);
  REQUIRE(msgs.size() == 1);
  CHECK(msgs[0].find("absolute") != std::string::npos);
}

TEST_CASE("oracle rejects unusable diagrams") {
  // Orientation does not extend over this closure's arcs.
  CHECK_THROWS_AS(reduced_khovanov(close_tangle(cross_tangle(), 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(kauffman_jones(close_tangle(cross_tangle(), 1)),
                  std::invalid_argument);
  // No orientation data at all.
  CHECK_THROWS_AS(reduced_khovanov(close_tangle(cross_tangle(false), 0)),
                  std::invalid_argument);
  // Past the state-space cap.
  CHECK_THROWS_AS(reduced_khovanov(close_tangle(twist_tangle(17, true), 1)),
                  std::invalid_argument);
}
