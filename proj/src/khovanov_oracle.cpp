#include "pkh/khovanov_oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pkh {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

// Sorted distinct edge labels (strands and free loops) with dense ids.
std::vector<int> edge_labels(const LinkDiagram& d) {
  std::set<int> labels(d.loops.begin(), d.loops.end());
  for (const auto& c : d.crossings) labels.insert(c.begin(), c.end());
  return {labels.begin(), labels.end()};
}

int label_id(const std::vector<int>& labels, int label) {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label)
    throw std::logic_error("unknown edge label in oracle");
  return static_cast<int>(it - labels.begin());
}

// Circles of one smoothing as sorted label lists, ordered by smallest
// label with the basepoint circle moved last (so it is the low tensor
// bit).
std::vector<std::vector<int>> smooth(const LinkDiagram& d,
                                     const std::vector<int>& labels,
                                     unsigned state) {
  UnionFind uf(static_cast<int>(labels.size()));
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    bool zero = ((state >> c) & 1u) == 0;
    if (zero == kZeroSmoothingJoinsFirstPair) {
      uf.join(label_id(labels, x[0]), label_id(labels, x[1]));
      uf.join(label_id(labels, x[2]), label_id(labels, x[3]));
    } else {
      uf.join(label_id(labels, x[0]), label_id(labels, x[3]));
      uf.join(label_id(labels, x[1]), label_id(labels, x[2]));
    }
  }
  std::map<int, std::vector<int>> classes;
  for (size_t i = 0; i < labels.size(); ++i)
    classes[uf.find(static_cast<int>(i))].push_back(labels[i]);
  std::vector<std::vector<int>> out;
  for (auto& [root, ls] : classes) out.push_back(std::move(ls));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  auto base = std::find_if(out.begin(), out.end(), [&](const auto& ls) {
    return std::binary_search(ls.begin(), ls.end(), d.basepoint);
  });
  if (base == out.end())
    throw std::logic_error("basepoint circle missing in oracle smoothing");
  std::rotate(base, base + 1, out.end());
  return out;
}

// Merge or split map on the full tensor spaces of two smoothings,
// with unaffected circles matched by their exact label sets.
F2Matrix edge_matrix(const std::vector<std::vector<int>>& src,
                     const std::vector<std::vector<int>>& tgt) {
  int ms = static_cast<int>(src.size());
  int mt = static_cast<int>(tgt.size());
  std::map<std::vector<int>, int> tpos;
  for (int t = 0; t < mt; ++t) tpos[tgt[t]] = t;
  std::vector<int> perm_in, arranged, src_aff;
  std::vector<char> used(mt, 0);
  for (int s = 0; s < ms; ++s) {
    auto it = tpos.find(src[s]);
    if (it == tpos.end()) {
      src_aff.push_back(s);
    } else {
      perm_in.push_back(s);
      arranged.push_back(it->second);
      used[it->second] = 1;
    }
  }
  int unaffected = static_cast<int>(perm_in.size());
  for (int s : src_aff) perm_in.push_back(s);
  for (int t = 0; t < mt; ++t)
    if (!used[t]) arranged.push_back(t);

  const FrobeniusData& fr = frobenius_data();
  const F2Matrix* tmpl = nullptr;
  if (ms - unaffected == 2 && mt - unaffected == 1)
    tmpl = &fr.mult;
  else if (ms - unaffected == 1 && mt - unaffected == 2)
    tmpl = &fr.split;
  else
    throw std::logic_error("oracle edge is neither a merge nor a split");

  std::vector<int> perm_out(mt);
  for (int p = 0; p < mt; ++p) perm_out[arranged[p]] = p;
  F2Matrix mid = kron(F2Matrix::identity(1 << unaffected), *tmpl);
  return mul(tensor_permutation(mt, perm_out),
             mul(mid, tensor_permutation(ms, perm_in)));
}

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

RankTable reduced_khovanov(const LinkDiagram& d) {
  auto counts = link_writhe_counts(d);
  if (!counts)
    throw std::invalid_argument(
        "reduced Khovanov needs a consistently oriented diagram");
  auto [np, nm] = *counts;
  int n = static_cast<int>(d.crossings.size());
  if (n > 16) throw std::invalid_argument("oracle limited to 16 crossings");
  std::vector<int> labels = edge_labels(d);

  std::vector<std::vector<std::vector<int>>> circles(1u << n);
  std::vector<int> offset((1u << n) + 1, 0);
  for (unsigned i = 0; i < (1u << n); ++i) {
    circles[i] = smooth(d, labels, i);
    offset[i + 1] = offset[i] + (1 << (circles[i].size() - 1));
  }
  int total = offset[1u << n];

  // Reduced generators: basepoint factor carries x (low bit set); the
  // remaining bits index the generator within its smoothing.
  std::vector<std::pair<int, int>> entries;
  for (unsigned i = 0; i < (1u << n); ++i)
    for (int c = 0; c < n; ++c) {
      if ((i >> c) & 1u) continue;
      unsigned j = i | (1u << c);
      F2Matrix full = edge_matrix(circles[i], circles[j]);
      for (const auto& [row, col] : full.entries) {
        if ((col & 1) == 0) continue;
        if ((row & 1) == 0)
          throw std::logic_error(
              "oracle differential leaves the reduced subcomplex");
        entries.push_back({offset[j] + (row >> 1), offset[i] + (col >> 1)});
      }
    }
  F2Matrix diff = F2Matrix::from_entries(total, total, entries);
  if (!mul(diff, diff).is_zero())
    throw std::logic_error("oracle differential does not square to zero");

  // Gradings: h = |i| - n^- and q = deg + h + n^+ - n^-.
  std::vector<int> gen_q(total), gen_h(total);
  for (unsigned i = 0; i < (1u << n); ++i) {
    int m = static_cast<int>(circles[i].size());
    int h = static_cast<int>(std::popcount(i)) - nm;
    for (int t = 0; t < (1 << (m - 1)); ++t) {
      int q = tensor_degree_A(m, (t << 1) | 1) + h + np - nm;
      gen_q[offset[i] + t] = q;
      gen_h[offset[i] + t] = h;
    }
  }

  // Rank sweep, one quantum degree at a time.
  std::map<int, std::map<int, std::vector<int>>> by_q;  // q -> h -> gens
  for (int g = 0; g < total; ++g) by_q[gen_q[g]][gen_h[g]].push_back(g);
  std::map<int, std::vector<std::pair<int, int>>> entries_q;
  for (const auto& [row, col] : diff.entries) {
    if (gen_q[row] != gen_q[col] || gen_h[row] != gen_h[col] + 1)
      throw std::logic_error("oracle differential is not of bidegree (1, 1)");
    entries_q[gen_q[col]].push_back({row, col});
  }

  RankTable rt;
  for (const auto& [q, levels] : by_q) {
    std::map<int, int> pos;
    for (const auto& [h, gens] : levels)
      for (size_t p = 0; p < gens.size(); ++p)
        pos[gens[p]] = static_cast<int>(p);
    std::map<int, std::vector<std::pair<int, int>>> blocks;
    if (entries_q.count(q))
      for (const auto& [row, col] : entries_q.at(q))
        blocks[gen_h[col]].push_back({pos.at(row), pos.at(col)});
    std::map<int, int> bd_rank;
    for (const auto& [h, es] : blocks)
      bd_rank[h] = rank(F2Matrix::from_entries(
          static_cast<int>(levels.at(h + 1).size()),
          static_cast<int>(levels.at(h).size()), es));
    for (const auto& [h, gens] : levels) {
      int outgoing = bd_rank.count(h) ? bd_rank.at(h) : 0;
      int incoming = bd_rank.count(h - 1) ? bd_rank.at(h - 1) : 0;
      int betti = static_cast<int>(gens.size()) - outgoing - incoming;
      if (betti > 0) rt.ranks[{q + h, h}] = betti;
    }
  }
  rt.absolute = true;
  return rt;
}

Laurent kauffman_jones(const LinkDiagram& d) {
  auto counts = link_writhe_counts(d);
  if (!counts)
    throw std::invalid_argument(
        "state sum needs a consistently oriented diagram");
  auto [np, nm] = *counts;
  int n = static_cast<int>(d.crossings.size());
  if (n > 16) throw std::invalid_argument("oracle limited to 16 crossings");
  std::vector<int> labels = edge_labels(d);

  const Laurent ring = {{1, 1}, {-1, 1}};  // q + q^-1
  Laurent sum;
  for (unsigned i = 0; i < (1u << n); ++i) {
    int c = static_cast<int>(smooth(d, labels, i).size());
    Laurent term = {{0, 1}};
    for (int k = 0; k + 1 < c; ++k) term = laurent_mul(term, ring);
    int ones = static_cast<int>(std::popcount(i));
    long long sign = (ones & 1) ? -1 : 1;
    for (const auto& [e, coef] : term) sum[e + ones] += sign * coef;
  }
  Laurent pref = {{np - 2 * nm - 1, (nm & 1) ? -1LL : 1LL}};
  return laurent_mul(pref, sum);
}

std::vector<std::string> compare_tables(const RankTable& ours,
                                        const RankTable& oracle) {
  std::vector<std::string> bad;
  if (!ours.absolute || !oracle.absolute) {
    bad.push_back("comparison requires two absolute tables");
    return bad;
  }
  std::set<std::pair<int, int>> keys;
  for (const auto& [rs, rk] : ours.ranks) keys.insert(rs);
  for (const auto& [rs, rk] : oracle.ranks) keys.insert(rs);
  for (const auto& rs : keys) {
    int a = ours.ranks.count(rs) ? ours.ranks.at(rs) : 0;
    int b = oracle.ranks.count(rs) ? oracle.ranks.at(rs) : 0;
    if (a != b)
      bad.push_back("rank mismatch at (" + std::to_string(rs.first) + ", " +
                    std::to_string(rs.second) + "): pipeline " +
                    std::to_string(a) + ", oracle " + std::to_string(b));
  }
  return bad;
}

}  // namespace pkh
