// Command-line front end for the pillowcase homology pipeline.
//
//   verify      structural checks on the twisted complex of a tangle
//   build       twisted complex of a tangle as JSON
//   pair        rank table of the pairing with one test Lagrangian
//   jones       Jones polynomial read off the pairing
//   khovanov    independent reduced-Khovanov table of a closed diagram
//   compare     pipeline table against the oracle table
//   invariance  Reidemeister pairs must give identical tables
//
// Output is JSON by default (--format table for aligned text).  Every
// failure is reported as {"error": ...} with a nonzero exit status.
// PKH_THREADS caps the OpenMP worker count.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pkh/functor_f.hpp"
#include "pkh/khovanov_oracle.hpp"
#include "pkh/pairing.hpp"
#include "pkh/tangle.hpp"
#include "pkh/twisted.hpp"
#ifdef PKH_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

using namespace pkh;
using nlohmann::json;

json load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  json j;
  f >> j;
  return j;
}

TwistedComplex complex_of(const TangleDiagram& t, bool relative) {
  return build_delta(build_cube(t),
                     relative ? std::optional<std::pair<int, int>>()
                              : tangle_writhe_counts(t));
}

std::string table_text(const RankTable& rt) {
  std::ostringstream os;
  if (!rt.absolute) os << "(relative normalization)\n";
  os << std::setw(5) << "r" << std::setw(5) << "s" << std::setw(6) << "rank"
     << "\n";
  for (const auto& [rs, rk] : rt.ranks)
    os << std::setw(5) << rs.first << std::setw(5) << rs.second
       << std::setw(6) << rk << "\n";
  return os.str();
}

void emit(const json& j, const std::string& format,
          const std::string& as_text) {
  if (format == "table")
    std::cout << as_text;
  else
    std::cout << j.dump(2) << "\n";
}

int cmd_verify(const std::string& input, bool relative,
               const std::string& format) {
  TangleDiagram t = parse_tangle(load(input));
  TwistedComplex tc = complex_of(t, relative);
  std::vector<std::string> bad = verify_twisted(tc);
  json out = {{"mode", tc.absolute ? "absolute" : "relative"},
              {"objects", tc.objects.size()},
              {"edges", tc.delta.size()},
              {"violations", bad}};
  std::ostringstream os;
  os << tc.objects.size() << " objects, " << tc.delta.size() << " edges, "
     << (bad.empty() ? "all checks pass" : "violations:") << "\n";
  for (const auto& b : bad) os << "  " << b << "\n";
  emit(out, format, os.str());
  return bad.empty() ? 0 : 1;
}

int cmd_build(const std::string& input, bool relative) {
  TangleDiagram t = parse_tangle(load(input));
  std::cout << twisted_json(complex_of(t, relative)).dump(2) << "\n";
  return 0;
}

int cmd_pair(const std::string& input, int closure, bool relative,
             const std::string& format) {
  TangleDiagram t = parse_tangle(load(input));
  RankTable rt = cohomology(pair(complex_of(t, relative), closure));
  json out = rank_table_json(rt);
  out["closure"] = closure;
  emit(out, format, table_text(rt));
  return 0;
}

int cmd_jones(const std::string& input, int closure,
              const std::string& format) {
  TangleDiagram t = parse_tangle(load(input));
  if (!writhe_counts(t, closure))
    throw std::runtime_error(
        "orientation does not extend over closure " + std::to_string(closure) +
        "; the polynomial would not be normalized as a link invariant");
  Laurent p = jones(cohomology(pair(complex_of(t, false), closure)));
  std::string s = laurent_string(p);
  emit(json{{"closure", closure}, {"jones", s}}, format, s + "\n");
  return 0;
}

int cmd_khovanov(const std::string& input, int closure,
                 const std::string& format) {
  json j = load(input);
  LinkDiagram d = j.contains("endpoints") ? close_tangle(parse_tangle(j), closure)
                                          : parse_link(j);
  RankTable rt = reduced_khovanov(d);
  json out = rank_table_json(rt);
  out["jones"] = laurent_string(kauffman_jones(d));
  emit(out, format, table_text(rt));
  return 0;
}

int cmd_compare(const std::string& input, int closure,
                const std::string& format) {
  TangleDiagram t = parse_tangle(load(input));
  RankTable ours = cohomology(pair(complex_of(t, false), closure));
  if (!writhe_counts(t, closure)) {
    json out = {{"closure", closure},
                {"pipeline", rank_table_json(ours)},
                {"oracle", nullptr},
                {"error",
                 "orientation does not extend over closure " +
                     std::to_string(closure) +
                     "; the oracle needs an oriented link diagram"}};
    emit(out, format,
         "pipeline table:\n" + table_text(ours) +
             "oracle unavailable: orientation does not extend over closure " +
             std::to_string(closure) + "\n");
    return 1;
  }
  RankTable oracle = reduced_khovanov(close_tangle(t, closure));
  std::vector<std::string> bad = compare_tables(ours, oracle);
  json out = {{"closure", closure},
              {"pipeline", rank_table_json(ours)},
              {"oracle", rank_table_json(oracle)},
              {"mismatches", bad},
              {"equal", bad.empty()}};
  std::ostringstream os;
  os << "pipeline table:\n"
     << table_text(ours) << "oracle table:\n"
     << table_text(oracle)
     << (bad.empty() ? "tables agree\n" : "mismatches:\n");
  for (const auto& b : bad) os << "  " << b << "\n";
  emit(out, format, os.str());
  return bad.empty() ? 0 : 1;
}

int cmd_invariance(const std::string& dir, const std::string& format) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no pair files in " + dir);

  json rows = json::array();
  std::ostringstream os;
  bool all = true;
  for (const auto& f : files) {
    json j = load(f.string());
    TangleDiagram a = parse_tangle(j.at("first"));
    TangleDiagram b = parse_tangle(j.at("second"));
    bool equal = true;
    for (int k = 0; k < 2 && equal; ++k)
      equal = cohomology(pair(complex_of(a, false), k)) ==
              cohomology(pair(complex_of(b, false), k));
    all = all && equal;
    std::string move = j.value("move", "?");
    rows.push_back({{"file", f.filename().string()},
                    {"move", move},
                    {"equal", equal}});
    os << std::left << std::setw(24) << f.filename().string() << std::setw(5)
       << move << (equal ? "ok" : "TABLES DIFFER") << "\n";
  }
  emit(json{{"pairs", rows}, {"all_equal", all}}, format, os.str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef PKH_HAVE_OPENMP
  if (const char* env = std::getenv("PKH_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#endif

  CLI::App app{"pillowcase homology of 2-tangle closures"};
  app.require_subcommand(1);

  std::string input, format = "json";
  std::string pairs_dir = std::string(PKH_SOURCE_DIR) + "/corpus/pairs";
  int closure = 0;
  bool relative = false;

  auto common = [&](CLI::App* sub, bool takes_closure, bool takes_relative) {
    sub->add_option("input", input, "diagram JSON file")->required();
    sub->add_option("-f,--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    if (takes_closure)
      sub->add_option("-k,--closure", closure, "closure / test Lagrangian")
          ->check(CLI::IsMember({0, 1}));
    if (takes_relative)
      sub->add_flag("--relative", relative, "ignore the orientation");
  };

  CLI::App* verify = app.add_subcommand("verify", "structural checks");
  common(verify, false, true);
  CLI::App* build = app.add_subcommand("build", "twisted complex JSON");
  common(build, false, true);
  CLI::App* pair_ = app.add_subcommand("pair", "rank table of the pairing");
  common(pair_, true, true);
  CLI::App* jones_ = app.add_subcommand("jones", "Jones polynomial");
  common(jones_, true, false);
  CLI::App* khovanov =
      app.add_subcommand("khovanov", "independent reduced-Khovanov table");
  common(khovanov, true, false);
  CLI::App* compare =
      app.add_subcommand("compare", "pipeline table against the oracle");
  common(compare, true, false);
  CLI::App* invariance =
      app.add_subcommand("invariance", "check Reidemeister pair tables");
  invariance->add_option("pairs-dir", pairs_dir, "directory of pair files");
  invariance->add_option("-f,--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(input, relative, format);
    if (build->parsed()) return cmd_build(input, relative);
    if (pair_->parsed()) return cmd_pair(input, closure, relative, format);
    if (jones_->parsed()) return cmd_jones(input, closure, format);
    if (khovanov->parsed()) return cmd_khovanov(input, closure, format);
    if (compare->parsed()) return cmd_compare(input, closure, format);
    if (invariance->parsed()) return cmd_invariance(pairs_dir, format);
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 1;
}
