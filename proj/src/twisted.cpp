#include "pkh/twisted.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pkh/pairing.hpp"

namespace pkh {
namespace {

std::string edge_tag(int i, int j) {
  return "(" + std::to_string(i) + " -> " + std::to_string(j) + ")";
}

// Structural checks on a single entry; composition checks presuppose
// a clean report here.
void check_entry(const TwistedComplex& tc, int i, int j,
                 const SigmaMorphism& mor, std::vector<std::string>& bad) {
  int n = static_cast<int>(tc.objects.size());
  if (i < 0 || i >= n || j < 0 || j >= n) {
    bad.push_back("entry " + edge_tag(i, j) + " references a missing object");
    return;
  }
  if (i == j) {
    bad.push_back("entry " + edge_tag(i, j) + " is a self-map");
    return;
  }
  const SigmaObject& src = tc.objects[i];
  const SigmaObject& tgt = tc.objects[j];
  if (tgt.h != src.h + 1) {
    bad.push_back("entry " + edge_tag(i, j) + " does not raise h by one");
    return;
  }
  if (mor.summands.empty())
    bad.push_back("entry " + edge_tag(i, j) + " stores the zero morphism");
  for (const Summand& s : mor.summands) {
    if (gen_source(s.g) != src.l || gen_target(s.g) != tgt.l) {
      bad.push_back("entry " + edge_tag(i, j) + " summand " + gen_name(s.g) +
                    " is not a morphism between the endpoint arc types");
      continue;
    }
    if (s.phi.rows != (1 << tgt.m) || s.phi.cols != (1 << src.m)) {
      bad.push_back("entry " + edge_tag(i, j) + " summand " + gen_name(s.g) +
                    " has the wrong matrix shape");
      continue;
    }
    auto deg = summand_degree(s, src, tgt);
    if (!deg || *deg != 1)
      bad.push_back("entry " + edge_tag(i, j) + " summand " + gen_name(s.g) +
                    " is not of degree one");
  }
}

// Squared and cubed differentials out of one source vertex; grading
// separates the two, so each must vanish on its own.
std::vector<std::string> compositions_from(
    const TwistedComplex& tc, const std::map<int, std::vector<int>>& out,
    int i) {
  std::vector<std::string> bad;
  static const std::vector<int> kNone;
  auto targets = [&](int v) -> const std::vector<int>& {
    auto it = out.find(v);
    return it == out.end() ? kNone : it->second;
  };

  std::map<int, SigmaMorphism> square;
  for (int j : targets(i))
    for (int k : targets(j))
      square[k] = add(square[k],
                      mu2_sigma(tc.delta.at({j, k}), tc.delta.at({i, j})));
  for (const auto& [k, m] : square)
    if (!m.summands.empty())
      bad.push_back("delta squared does not vanish along " + edge_tag(i, k));

  std::map<int, SigmaMorphism> cube;
  for (int j : targets(i))
    for (int k : targets(j))
      for (int l : targets(k))
        cube[l] = add(cube[l],
                      mu3_sigma(tc.delta.at({k, l}), tc.delta.at({j, k}),
                                tc.delta.at({i, j})));
  for (const auto& [l, m] : cube)
    if (!m.summands.empty())
      bad.push_back("delta cubed does not vanish along " + edge_tag(i, l));
  return bad;
}

std::vector<std::string> structural_pass(const TwistedComplex& tc) {
  std::vector<std::string> bad;
  for (const auto& [key, mor] : tc.delta)
    check_entry(tc, key.first, key.second, mor, bad);
  return bad;
}

std::map<int, std::vector<int>> out_edges(const TwistedComplex& tc) {
  std::map<int, std::vector<int>> out;
  for (const auto& [key, mor] : tc.delta) out[key.first].push_back(key.second);
  return out;
}

// Pivot candidates: entries carrying an invertible unit summand.
std::optional<std::pair<int, int>> find_pivot(const TwistedComplex& tc) {
  for (const auto& [key, mor] : tc.delta)
    for (const Summand& s : mor.summands)
      if (is_unit(s.g) && inverse(s.phi)) return key;
  return std::nullopt;
}

std::string rank_table_text(const RankTable& rt) {
  std::ostringstream os;
  for (const auto& [rs, rk] : rt.ranks)
    os << " (" << rs.first << "," << rs.second << "):" << rk;
  return os.str();
}

}  // namespace

std::vector<std::string> verify_twisted(const TwistedComplex& tc) {
  std::vector<std::string> bad = structural_pass(tc);
  if (!bad.empty()) return bad;
  auto out = out_edges(tc);
  std::vector<int> sources;
  for (const auto& [v, ts] : out) sources.push_back(v);
  std::vector<std::vector<std::string>> parts(sources.size());
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < static_cast<int>(sources.size()); ++idx)
    parts[idx] = compositions_from(tc, out, sources[idx]);
  for (const auto& part : parts) bad.insert(bad.end(), part.begin(), part.end());
  return bad;
}

std::vector<std::string> verify_twisted_serial(const TwistedComplex& tc) {
  std::vector<std::string> bad = structural_pass(tc);
  if (!bad.empty()) return bad;
  auto out = out_edges(tc);
  for (const auto& [v, ts] : out) {
    auto part = compositions_from(tc, out, v);
    bad.insert(bad.end(), part.begin(), part.end());
  }
  return bad;
}

TwistedComplex eliminate(const TwistedComplex& tc, std::pair<int, int> pivot) {
  auto [a, b] = pivot;
  auto pit = tc.delta.find(pivot);
  if (pit == tc.delta.end())
    throw std::invalid_argument("no delta entry at the requested pivot");

  std::optional<F2Matrix> psi_inv;
  const F2Matrix* offdiag = nullptr;  // c-generator summand, if any
  for (const Summand& s : pit->second.summands) {
    if (is_unit(s.g))
      psi_inv = inverse(s.phi);
    else if (s.g == Gen::c0 || s.g == Gen::c1)
      offdiag = &s.phi;
  }
  if (!psi_inv)
    throw std::invalid_argument(
        "pivot entry has no invertible unit summand");

  // Inverse morphism b -> a.  Degree parity confines unit-carrying
  // entries between equal tensor powers to unit and c summands, and
  // the only c-products are mu^2(c, unit) and mu^2(unit, c), so the
  // two-term formula below is a two-sided inverse; assert it anyway.
  Lag l = tc.objects[a].l;
  std::vector<Summand> inv_terms;
  inv_terms.push_back({*psi_inv, unit_of(l)});
  if (offdiag)
    inv_terms.push_back({mul(*psi_inv, mul(*offdiag, *psi_inv)),
                         l == Lag::L0 ? Gen::c0 : Gen::c1});
  SigmaMorphism inv = normalized(std::move(inv_terms));
  SigmaMorphism ident = normalized(
      {{F2Matrix::identity(1 << tc.objects[a].m), unit_of(l)}});
  if (!(mu2_sigma(inv, pit->second) == ident) ||
      !(mu2_sigma(pit->second, inv) == ident))
    throw std::invalid_argument("pivot entry is not invertible");

  TwistedComplex out;
  out.absolute = tc.absolute;
  std::vector<int> remap(tc.objects.size(), -1);
  for (size_t v = 0; v < tc.objects.size(); ++v) {
    if (static_cast<int>(v) == a || static_cast<int>(v) == b) continue;
    remap[v] = static_cast<int>(out.objects.size());
    out.objects.push_back(tc.objects[v]);
  }

  // Candidate edges between survivors: original entries plus pairs
  // joined by a zig-zag through the cancelled objects.
  std::set<std::pair<int, int>> edges;
  for (const auto& [key, mor] : tc.delta)
    if (key.first != a && key.first != b && key.second != a && key.second != b)
      edges.insert(key);
  for (const auto& [key_in, mor_in] : tc.delta) {
    if (key_in.second != b || key_in.first == a) continue;
    for (const auto& [key_out, mor_out] : tc.delta)
      if (key_out.first == a && key_out.second != b)
        edges.insert({key_in.first, key_out.second});
  }
  for (const auto& [i, j] : edges) {
    SigmaMorphism corrected;
    if (auto it = tc.delta.find({i, j}); it != tc.delta.end())
      corrected = it->second;
    auto in_leg = tc.delta.find({i, b});
    auto out_leg = tc.delta.find({a, j});
    if (in_leg != tc.delta.end() && out_leg != tc.delta.end())
      corrected = add(corrected,
                      mu2_sigma(out_leg->second,
                                mu2_sigma(inv, in_leg->second)));
    if (!corrected.summands.empty())
      out.delta[{remap[i], remap[j]}] = std::move(corrected);
  }

  auto report = verify_twisted(out);
  if (!report.empty())
    throw std::logic_error("cancellation broke the complex: " +
                           report.front());
  for (int k = 0; k < 2; ++k) {
    RankTable before = cohomology(pair(tc, k));
    RankTable after = cohomology(pair(out, k));
    if (!(before == after))
      throw std::logic_error(
          "cancellation changed the pairing with test curve " +
          std::to_string(k) + ": before" + rank_table_text(before) +
          " after" + rank_table_text(after));
  }
  return out;
}

TwistedComplex eliminate_all(const TwistedComplex& tc) {
  TwistedComplex cur = tc;
  while (auto pivot = find_pivot(cur)) cur = eliminate(cur, *pivot);
  return cur;
}

nlohmann::json twisted_json(const TwistedComplex& tc) {
  nlohmann::json j;
  j["mode"] = tc.absolute ? "absolute" : "relative";
  j["objects"] = nlohmann::json::array();
  for (const SigmaObject& ob : tc.objects)
    j["objects"].push_back({{"l", ob.l == Lag::L0 ? 0 : 1},
                            {"m", ob.m},
                            {"sigma", ob.sigma},
                            {"h", ob.h}});
  j["delta"] = nlohmann::json::array();
  for (const auto& [key, mor] : tc.delta) {
    nlohmann::json summands = nlohmann::json::array();
    for (const Summand& s : mor.summands) {
      nlohmann::json entries = nlohmann::json::array();
      for (const auto& [r, c] : s.phi.entries) entries.push_back({r, c});
      summands.push_back({{"gen", gen_name(s.g)},
                          {"phi",
                           {{"rows", s.phi.rows},
                            {"cols", s.phi.cols},
                            {"entries", entries}}}});
    }
    j["delta"].push_back(
        {{"from", key.first}, {"to", key.second}, {"summands", summands}});
  }
  return j;
}

TwistedComplex parse_twisted(const nlohmann::json& j) {
  TwistedComplex tc;
  std::string mode = j.at("mode").get<std::string>();
  if (mode != "absolute" && mode != "relative")
    throw std::invalid_argument("mode must be absolute or relative");
  tc.absolute = mode == "absolute";
  for (const auto& ob : j.at("objects")) {
    int l = ob.at("l").get<int>();
    if (l != 0 && l != 1) throw std::invalid_argument("arc type must be 0 or 1");
    int m = ob.at("m").get<int>();
    if (m < 0 || m > 30) throw std::invalid_argument("circle count out of range");
    tc.objects.push_back({l == 0 ? Lag::L0 : Lag::L1, m,
                          ob.at("sigma").get<int>(), ob.at("h").get<int>()});
  }
  int n = static_cast<int>(tc.objects.size());
  for (const auto& e : j.at("delta")) {
    int from = e.at("from").get<int>();
    int to = e.at("to").get<int>();
    if (from < 0 || from >= n || to < 0 || to >= n)
      throw std::invalid_argument("delta entry references a missing object");
    if (tc.delta.count({from, to}))
      throw std::invalid_argument("duplicate delta entry");
    std::vector<Summand> summands;
    for (const auto& s : e.at("summands")) {
      const auto& phi = s.at("phi");
      std::vector<std::pair<int, int>> entries;
      for (const auto& rc : phi.at("entries")) {
        if (!rc.is_array() || rc.size() != 2)
          throw std::invalid_argument("matrix entries are [row, col] pairs");
        entries.emplace_back(rc[0].get<int>(), rc[1].get<int>());
      }
      summands.push_back(
          {F2Matrix::from_entries(phi.at("rows").get<int>(),
                                  phi.at("cols").get<int>(), entries),
           gen_from_name(s.at("gen").get<std::string>())});
    }
    SigmaMorphism mor = normalized(std::move(summands));
    if (!mor.summands.empty()) tc.delta[{from, to}] = std::move(mor);
  }
  return tc;
}

}  // namespace pkh
