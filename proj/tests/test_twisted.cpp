#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "pkh/pairing.hpp"
#include "pkh/twisted.hpp"
#include "test_diagrams.hpp"

using namespace pkh;
using namespace pkh::testing;

namespace {

TwistedComplex complex_of(const TangleDiagram& t) {
  return build_delta(build_cube(t), tangle_writhe_counts(t));
}

// Two objects of the same shape joined by an invertible unit entry;
// contributes nothing to cohomology.
TwistedComplex unit_pair(Lag l, int m, int sigma, int h) {
  TwistedComplex tc;
  tc.objects = {{l, m, sigma, h}, {l, m, sigma - 1, h + 1}};
  tc.delta[{0, 1}] = normalized({{F2Matrix::identity(1 << m), unit_of(l)}});
  return tc;
}

TwistedComplex direct_sum(const TwistedComplex& a, const TwistedComplex& b) {
  TwistedComplex out = a;
  int base = static_cast<int>(a.objects.size());
  out.objects.insert(out.objects.end(), b.objects.begin(), b.objects.end());
  for (const auto& [key, mor] : b.delta)
    out.delta[{key.first + base, key.second + base}] = mor;
  return out;
}

bool contains(const std::vector<std::string>& report,
              const std::string& needle) {
  for (const std::string& line : report)
    if (line.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("freshly built complexes verify clean") {
  for (const TangleDiagram& t :
       {trivial_tangle(0), trivial_tangle(1), cross_tangle(),
        twist_tangle(3, true), twist_tangle(3, false), twist_tangle(4, true),
        figure8_tangle()}) {
    TwistedComplex tc = complex_of(t);
    CHECK(verify_twisted(tc).empty());
    CHECK(verify_twisted_serial(tc).empty());
  }
}

TEST_CASE("a dropped cube edge is caught as a nonvanishing square") {
  TwistedComplex tc = complex_of(twist_tangle(2, true));
  REQUIRE(tc.delta.count({0, 1}) == 1);
  tc.delta.erase({0, 1});
  auto report = verify_twisted(tc);
  REQUIRE_FALSE(report.empty());
  CHECK(contains(report, "delta squared"));
  CHECK(contains(report, "(0 -> 3)"));
  CHECK(verify_twisted_serial(tc) == report);
}

TEST_CASE("structural mutations are reported with the offending edge") {
  TwistedComplex base = complex_of(cross_tangle());

  SUBCASE("homological grading gap") {
    TwistedComplex tc = base;
    tc.objects[1].h = 2;
    auto report = verify_twisted(tc);
    REQUIRE_FALSE(report.empty());
    CHECK(contains(report, "does not raise h by one"));
    CHECK(contains(report, "(0 -> 1)"));
  }

  SUBCASE("internal grading slip") {
    TwistedComplex tc = base;
    tc.objects[1].sigma += 2;
    auto report = verify_twisted(tc);
    REQUIRE_FALSE(report.empty());
    CHECK(contains(report, "not of degree one"));
  }

  SUBCASE("generator between the wrong arc types") {
    TwistedComplex tc = base;
    tc.delta[{0, 1}] = normalized({{F2Matrix::identity(1), Gen::p01}});
    auto report = verify_twisted(tc);
    REQUIRE_FALSE(report.empty());
    CHECK(contains(report, "endpoint arc types"));
    CHECK(contains(report, "p01"));
  }

  SUBCASE("matrix shape mismatch") {
    TwistedComplex tc = base;
    tc.delta[{0, 1}] =
        normalized({{F2Matrix::from_entries(2, 2, {{0, 0}}), Gen::q10}});
    auto report = verify_twisted(tc);
    REQUIRE_FALSE(report.empty());
    CHECK(contains(report, "wrong matrix shape"));
  }

  SUBCASE("stored zero morphism") {
    TwistedComplex tc = base;
    tc.delta[{0, 1}] = SigmaMorphism{};
    auto report = verify_twisted(tc);
    REQUIRE_FALSE(report.empty());
    CHECK(contains(report, "zero morphism"));
  }

  SUBCASE("self-map and missing endpoint") {
    TwistedComplex tc = base;
    SigmaMorphism mor = tc.delta.at({0, 1});
    tc.delta.erase({0, 1});
    tc.delta[{1, 1}] = mor;
    tc.delta[{0, 7}] = mor;
    auto report = verify_twisted(tc);
    CHECK(contains(report, "self-map"));
    CHECK(contains(report, "missing object"));
  }
}

TEST_CASE("cancelling a unit pair leaves the empty complex") {
  TwistedComplex tc = unit_pair(Lag::L0, 0, 0, 0);
  REQUIRE(verify_twisted(tc).empty());
  TwistedComplex out = eliminate(tc, {0, 1});
  CHECK(out.objects.empty());
  CHECK(out.delta.empty());
  CHECK(eliminate_all(tc) == out);
}

TEST_CASE("cancellation handles a nilpotent off-diagonal summand") {
  // Pivot id (x) a0 + E01 (x) c0 between one-circle objects; the
  // inverse needs the conjugated c-term.
  TwistedComplex tc;
  tc.objects = {{Lag::L0, 1, 0, 0}, {Lag::L0, 1, -1, 1}};
  tc.delta[{0, 1}] =
      normalized({{F2Matrix::identity(2), Gen::a0},
                  {F2Matrix::from_entries(2, 2, {{0, 1}}), Gen::c0}});
  REQUIRE(verify_twisted(tc).empty());
  TwistedComplex out = eliminate(tc, {0, 1});
  CHECK(out.objects.empty());
}

TEST_CASE("cancellation corrects through the zig-zag") {
  // Complete bipartite differential between {0, 1} and {2, 3} with
  // identity entries.  Cancelling (1, 2) reroutes 0 -> 3 through the
  // zig-zag 0 -> 2 -> 1 -> 3, which cancels the direct entry, so the
  // survivors end up with no differential at all.
  TwistedComplex tc;
  tc.objects = {{Lag::L0, 0, 0, 0},
                {Lag::L0, 0, 0, 0},
                {Lag::L0, 0, -1, 1},
                {Lag::L0, 0, -1, 1}};
  F2Matrix one = F2Matrix::identity(1);
  for (int i : {0, 1})
    for (int j : {2, 3}) tc.delta[{i, j}] = normalized({{one, Gen::a0}});
  REQUIRE(verify_twisted(tc).empty());

  TwistedComplex out = eliminate(tc, {1, 2});
  REQUIRE(out.objects.size() == 2);
  CHECK(out.delta.empty());
  CHECK(cohomology(pair(out, 0)) == cohomology(pair(tc, 0)));
  TwistedComplex all = eliminate_all(tc);
  CHECK(all.objects.size() == 2);
  CHECK(all.delta.empty());
}

TEST_CASE("fresh complexes expose no unit pivots") {
  for (const TangleDiagram& t :
       {cross_tangle(), twist_tangle(3, true), figure8_tangle()}) {
    TwistedComplex tc = complex_of(t);
    CHECK(eliminate_all(tc) == tc);
  }
}

TEST_CASE("cancelling a summed-in unit pair recovers the original") {
  TwistedComplex base = complex_of(twist_tangle(2, true));
  TwistedComplex padded = direct_sum(base, unit_pair(Lag::L1, 1, 5, -3));
  REQUIRE(verify_twisted(padded).empty());
  TwistedComplex out = eliminate_all(padded);
  CHECK(out == base);
  for (int k = 0; k < 2; ++k)
    CHECK(cohomology(pair(out, k)) == cohomology(pair(padded, k)));
}

TEST_CASE("invalid pivots are refused") {
  TwistedComplex cross = complex_of(cross_tangle());
  CHECK_THROWS_AS(eliminate(cross, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(eliminate(cross, {0, 5}), std::invalid_argument);

  TwistedComplex tc;
  tc.objects = {{Lag::L0, 1, 0, 0}, {Lag::L0, 1, -1, 1}};
  tc.delta[{0, 1}] =
      normalized({{F2Matrix::from_entries(2, 2, {{0, 0}}), Gen::a0}});
  REQUIRE(verify_twisted(tc).empty());
  CHECK_THROWS_AS(eliminate(tc, {0, 1}), std::invalid_argument);
  CHECK(eliminate_all(tc) == tc);
}

TEST_CASE("twisted complexes round-trip through json") {
  for (const TangleDiagram& t : {cross_tangle(), twist_tangle(3, true)}) {
    TwistedComplex tc = complex_of(t);
    CHECK(parse_twisted(twisted_json(tc)) == tc);
  }
  TwistedComplex rel = build_delta(build_cube(cross_tangle()), std::nullopt);
  CHECK(parse_twisted(twisted_json(rel)) == rel);
}

TEST_CASE("malformed complex json is refused") {
  nlohmann::json good = twisted_json(complex_of(cross_tangle()));

  nlohmann::json bad = good;
  bad["mode"] = "shifted";
  CHECK_THROWS_AS(parse_twisted(bad), std::invalid_argument);

  bad = good;
  bad["objects"][0]["l"] = 2;
  CHECK_THROWS_AS(parse_twisted(bad), std::invalid_argument);

  bad = good;
  bad["objects"][0]["m"] = -1;
  CHECK_THROWS_AS(parse_twisted(bad), std::invalid_argument);

  bad = good;
  bad["delta"].push_back(bad["delta"][0]);
  CHECK_THROWS_AS(parse_twisted(bad), std::invalid_argument);

  bad = good;
  bad["delta"][0]["to"] = 9;
  CHECK_THROWS_AS(parse_twisted(bad), std::invalid_argument);

  bad = good;
  bad["delta"][0]["summands"][0]["gen"] = "z9";
  CHECK_THROWS_AS(parse_twisted(bad), std::invalid_argument);
}
