#include "pkh/pairing.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace pkh {
namespace {

// Module generators pairing with (W_k, L_l), in enum order.
std::vector<ModGen> module_gens(int k, Lag l) {
  std::vector<ModGen> out;
  for (int w = 0; w < kNumModGen; ++w) {
    ModGen mg = static_cast<ModGen>(w);
    if (mod_test_index(mg) == k && mod_target(mg) == l) out.push_back(mg);
  }
  return out;
}

// Ranks of one r - s diagonal; `members` lists its generator indices
// and `entries` its differential entries, both precomputed.
std::vector<std::pair<std::pair<int, int>, int>> one_diagonal(
    const BigradedChainComplex& c, const std::vector<int>& members,
    const std::vector<std::pair<int, int>>& entries) {
  std::map<int, std::vector<int>> levels;
  for (int g : members) levels[c.generators[g].s].push_back(g);
  std::map<int, int> pos;
  for (const auto& [s, gs] : levels)
    for (size_t p = 0; p < gs.size(); ++p) pos[gs[p]] = static_cast<int>(p);

  std::map<int, std::vector<std::pair<int, int>>> blocks;  // source s
  for (const auto& [row, col] : entries)
    blocks[c.generators[col].s].push_back({pos.at(row), pos.at(col)});

  std::map<int, int> bd_rank;
  for (const auto& [s, es] : blocks) {
    auto up = levels.find(s + 1);
    bd_rank[s] = rank(F2Matrix::from_entries(
        up == levels.end() ? 0 : static_cast<int>(up->second.size()),
        static_cast<int>(levels.at(s).size()), es));
  }

  std::vector<std::pair<std::pair<int, int>, int>> out;
  for (const auto& [s, gs] : levels) {
    auto outgoing = bd_rank.count(s) ? bd_rank.at(s) : 0;
    auto incoming = bd_rank.count(s - 1) ? bd_rank.at(s - 1) : 0;
    int h = static_cast<int>(gs.size()) - outgoing - incoming;
    if (h > 0) out.push_back({{c.generators[gs.front()].r, s}, h});
  }
  return out;
}

struct DiagonalSplit {
  std::vector<int> diags;  // distinct r - s values, ascending
  std::map<int, std::vector<int>> members;
  std::map<int, std::vector<std::pair<int, int>>> entries;
};

DiagonalSplit split_diagonals(const BigradedChainComplex& c) {
  DiagonalSplit ds;
  for (size_t g = 0; g < c.generators.size(); ++g)
    ds.members[c.generators[g].r - c.generators[g].s].push_back(
        static_cast<int>(g));
  for (const auto& [row, col] : c.differential.entries) {
    const BigradedGenerator& src = c.generators[col];
    const BigradedGenerator& tgt = c.generators[row];
    if (tgt.r - tgt.s != src.r - src.s || tgt.s != src.s + 1)
      throw std::invalid_argument("differential entry is not of bidegree (1,1)");
    ds.entries[src.r - src.s].push_back({row, col});
  }
  if (!mul(c.differential, c.differential).is_zero())
    throw std::invalid_argument("differential does not square to zero");
  for (const auto& [d, ms] : ds.members) ds.diags.push_back(d);
  return ds;
}

RankTable assemble(const BigradedChainComplex& c,
                   const std::vector<std::vector<std::pair<std::pair<int, int>, int>>>& parts) {
  RankTable rt;
  rt.absolute = c.absolute;
  for (const auto& part : parts)
    for (const auto& [rs, rk] : part) rt.ranks[rs] += rk;
  return rt;
}

}  // namespace

BigradedChainComplex pair(const TwistedComplex& tc, int k) {
  if (k != 0 && k != 1)
    throw std::invalid_argument("test curve index must be 0 or 1");
  BigradedChainComplex c;
  c.k = k;
  c.absolute = tc.absolute;

  std::map<std::tuple<int, int, int>, int> index;
  for (size_t i = 0; i < tc.objects.size(); ++i) {
    const SigmaObject& ob = tc.objects[i];
    for (ModGen mg : module_gens(k, ob.l)) {
      for (int t = 0; t < (1 << ob.m); ++t) {
        index[{static_cast<int>(i), t, static_cast<int>(mg)}] =
            static_cast<int>(c.generators.size());
        c.generators.push_back({static_cast<int>(i), t, mg,
                                tensor_degree_A(ob.m, t) - ob.sigma + mod_degree(mg),
                                ob.h});
      }
    }
  }

  std::vector<std::pair<int, int>> entries;
  for (const auto& [key, mor] : tc.delta) {
    const auto& [i, j] = key;
    for (ModGen mg : module_gens(k, tc.objects[i].l)) {
      for (const Summand& s : mor.summands) {
        auto wp = module_mu2(s.g, mg);
        if (!wp) continue;
        for (const auto& [row, col] : s.phi.entries)
          entries.push_back(
              {index.at({j, row, static_cast<int>(*wp)}),
               index.at({i, col, static_cast<int>(mg)})});
      }
    }
  }
  int n = static_cast<int>(c.generators.size());
  c.differential = F2Matrix::from_entries(n, n, entries);

  // The three-input module action must vanish on every composable pair
  // of delta entries; a violation means the tables and the saddle maps
  // disagree, so fail loudly rather than produce a wrong differential.
  for (const auto& [ij, dij] : tc.delta)
    for (const auto& [jl, djl] : tc.delta) {
      if (jl.first != ij.second) continue;
      for (const Summand& s1 : dij.summands)
        for (const Summand& s2 : djl.summands)
          for (ModGen mg : module_gens(k, tc.objects[ij.first].l))
            if (module_mu3(s2.g, s1.g, mg))
              throw std::logic_error(
                  "higher module action of " + std::string(gen_name(s2.g)) +
                  ", " + gen_name(s1.g) + " on " + mod_name(mg) +
                  " does not vanish");
    }

  for (const auto& [row, col] : c.differential.entries)
    if (c.generators[row].r != c.generators[col].r + 1 ||
        c.generators[row].s != c.generators[col].s + 1)
      throw std::logic_error("paired differential entry is not of bidegree (1,1)");
  if (!mul(c.differential, c.differential).is_zero())
    throw std::logic_error("paired differential does not square to zero");
  return c;
}

RankTable cohomology(const BigradedChainComplex& c) {
  DiagonalSplit ds = split_diagonals(c);
  std::vector<std::vector<std::pair<std::pair<int, int>, int>>> parts(
      ds.diags.size());
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < static_cast<int>(ds.diags.size()); ++idx) {
    int d = ds.diags[idx];
    static const std::vector<std::pair<int, int>> kNone;
    const auto& es = ds.entries.count(d) ? ds.entries.at(d) : kNone;
    parts[idx] = one_diagonal(c, ds.members.at(d), es);
  }
  return assemble(c, parts);
}

RankTable cohomology_serial(const BigradedChainComplex& c) {
  DiagonalSplit ds = split_diagonals(c);
  std::vector<std::vector<std::pair<std::pair<int, int>, int>>> parts;
  for (int d : ds.diags) {
    static const std::vector<std::pair<int, int>> kNone;
    const auto& es = ds.entries.count(d) ? ds.entries.at(d) : kNone;
    parts.push_back(one_diagonal(c, ds.members.at(d), es));
  }
  return assemble(c, parts);
}

BigradedChainComplex reduce(const BigradedChainComplex& c) {
  if (!mul(c.differential, c.differential).is_zero())
    throw std::invalid_argument("differential does not square to zero");
  int n = static_cast<int>(c.generators.size());
  std::vector<std::set<int>> col(n), row(n);
  for (const auto& [r, cl] : c.differential.entries) {
    col[cl].insert(r);
    row[r].insert(cl);
  }
  std::vector<char> dead(n, 0);
  std::queue<int> work;
  for (int a = 0; a < n; ++a) work.push(a);
  while (!work.empty()) {
    int a = work.front();
    work.pop();
    if (dead[a] || col[a].empty()) continue;
    int b = *col[a].begin();
    dead[a] = dead[b] = 1;
    std::vector<int> ins, outs;
    for (int i : row[b])
      if (!dead[i]) ins.push_back(i);
    for (int j : col[a])
      if (!dead[j]) outs.push_back(j);
    // Detach a and b before rerouting through them.
    for (int j : col[a]) row[j].erase(a);
    for (int i : row[a]) col[i].erase(a);
    for (int j : col[b]) row[j].erase(b);
    for (int i : row[b]) col[i].erase(b);
    col[a].clear();
    row[a].clear();
    col[b].clear();
    row[b].clear();
    for (int i : ins) {
      for (int j : outs) {
        if (col[i].count(j)) {
          col[i].erase(j);
          row[j].erase(i);
        } else {
          col[i].insert(j);
          row[j].insert(i);
        }
      }
      work.push(i);
    }
  }

  BigradedChainComplex out;
  out.k = c.k;
  out.absolute = c.absolute;
  std::vector<int> remap(n, -1);
  for (int g = 0; g < n; ++g) {
    if (dead[g]) continue;
    remap[g] = static_cast<int>(out.generators.size());
    out.generators.push_back(c.generators[g]);
    if (!col[g].empty())
      throw std::logic_error("cancellation left a differential entry behind");
  }
  out.differential =
      F2Matrix(static_cast<int>(out.generators.size()),
               static_cast<int>(out.generators.size()));
  return out;
}

Laurent jones(const RankTable& rt) {
  if (!rt.absolute)
    throw std::invalid_argument(
        "relative-mode table has no absolute polynomial");
  Laurent out;
  for (const auto& [rs, rk] : rt.ranks)
    out[rs.first - rs.second] += (rs.second & 1) ? -rk : rk;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::string laurent_string(const Laurent& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [e, coef] : p) {
    if (coef == 0) continue;
    long long a = coef < 0 ? -coef : coef;
    if (out.empty())
      out += coef < 0 ? "-" : "";
    else
      out += coef < 0 ? " - " : " + ";
    std::string body;
    if (e == 0)
      body = std::to_string(a);
    else {
      if (a != 1) body = std::to_string(a) + "*";
      body += e == 1 ? "q" : "q^" + std::to_string(e);
    }
    out += body;
  }
  return out.empty() ? "0" : out;
}

nlohmann::json rank_table_json(const RankTable& rt) {
  nlohmann::json ranks = nlohmann::json::array();
  for (const auto& [rs, rk] : rt.ranks)
    ranks.push_back({rs.first, rs.second, rk});
  return {{"mode", rt.absolute ? "absolute" : "relative"}, {"ranks", ranks}};
}

RankTable parse_rank_table(const nlohmann::json& j) {
  RankTable rt;
  std::string mode = j.at("mode").get<std::string>();
  if (mode != "absolute" && mode != "relative")
    throw std::invalid_argument("mode must be absolute or relative");
  rt.absolute = mode == "absolute";
  for (const auto& row : j.at("ranks")) {
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("rank rows are [r, s, rank] triples");
    int r = row[0].get<int>(), s = row[1].get<int>(), rk = row[2].get<int>();
    if (rk < 0) throw std::invalid_argument("ranks are non-negative");
    if (rk == 0) continue;
    if (rt.ranks.count({r, s}))
      throw std::invalid_argument("duplicate bigrading in rank table");
    rt.ranks[{r, s}] = rk;
  }
  return rt;
}

}  // namespace pkh
