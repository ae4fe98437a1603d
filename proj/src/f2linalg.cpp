#include "pkh/f2linalg.hpp"

#include <algorithm>
#include <bit>

namespace pkh {

F2Matrix F2Matrix::identity(int n) {
  F2Matrix m(n, n);
  m.entries.reserve(n);
  for (int i = 0; i < n; ++i) m.entries.emplace_back(i, i);
  return m;
}

F2Matrix F2Matrix::from_entries(int r, int c,
                                std::vector<std::pair<int, int>> es) {
  for (const auto& [i, j] : es)
    if (i < 0 || i >= r || j < 0 || j >= c)
      throw std::invalid_argument("F2Matrix: entry out of range");
  std::sort(es.begin(), es.end());
  F2Matrix m(r, c);
  // Entries appearing an even number of times cancel over F_2.
  for (size_t k = 0; k < es.size();) {
    size_t e = k;
    while (e < es.size() && es[e] == es[k]) ++e;
    if ((e - k) % 2) m.entries.push_back(es[k]);
    k = e;
  }
  return m;
}

bool F2Matrix::get(int r, int c) const {
  return std::binary_search(entries.begin(), entries.end(),
                            std::make_pair(r, c));
}

void F2Matrix::flip(int r, int c) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::invalid_argument("F2Matrix::flip: position out of range");
  auto it = std::lower_bound(entries.begin(), entries.end(),
                             std::make_pair(r, c));
  if (it != entries.end() && *it == std::make_pair(r, c))
    entries.erase(it);
  else
    entries.insert(it, {r, c});
}

F2Matrix add(const F2Matrix& a, const F2Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("add: dimension mismatch");
  F2Matrix out(a.rows, a.cols);
  // Symmetric difference of the two sorted supports.
  std::set_symmetric_difference(a.entries.begin(), a.entries.end(),
                                b.entries.begin(), b.entries.end(),
                                std::back_inserter(out.entries));
  return out;
}

F2Matrix mul(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mul: dimension mismatch");
  std::vector<std::vector<int>> brow(b.rows);
  for (const auto& [r, c] : b.entries) brow[r].push_back(c);
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : a.entries)
    for (int k : brow[j]) out.emplace_back(i, k);
  return F2Matrix::from_entries(a.rows, b.cols, std::move(out));
}

F2Matrix kron(const F2Matrix& a, const F2Matrix& b) {
  F2Matrix out(a.rows * b.rows, a.cols * b.cols);
  out.entries.reserve(a.entries.size() * b.entries.size());
  for (const auto& [ia, ja] : a.entries)
    for (const auto& [ib, jb] : b.entries)
      out.entries.emplace_back(ia * b.rows + ib, ja * b.cols + jb);
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

F2Matrix transpose(const F2Matrix& a) {
  F2Matrix out(a.cols, a.rows);
  out.entries.reserve(a.entries.size());
  for (const auto& [r, c] : a.entries) out.entries.emplace_back(c, r);
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

std::vector<uint8_t> mul_vec(const F2Matrix& a, const std::vector<uint8_t>& v) {
  if (static_cast<int>(v.size()) != a.cols)
    throw std::invalid_argument("apply: vector length mismatch");
  std::vector<uint8_t> out(a.rows, 0);
  for (const auto& [r, c] : a.entries) out[r] ^= (v[c] & 1);
  return out;
}

RankKernel rank_and_kernel(const F2Matrix& m) {
  const int R = m.rows, C = m.cols;
  const int words = (C + 63) / 64;
  // Dense bit rows for elimination; the sparse form is kept for storage only.
  std::vector<std::vector<uint64_t>> rows(R, std::vector<uint64_t>(words, 0));
  for (const auto& [r, c] : m.entries) rows[r][c >> 6] ^= 1ULL << (c & 63);

  auto bit = [&](int r, int c) -> uint64_t {
    return (rows[r][c >> 6] >> (c & 63)) & 1;
  };

  std::vector<int> pivot_cols;
  int rr = 0;
  for (int c = 0; c < C && rr < R; ++c) {
    int p = -1;
    for (int r = rr; r < R; ++r)
      if (bit(r, c)) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[rr], rows[p]);
    for (int r = 0; r < R; ++r)
      if (r != rr && bit(r, c))
        for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rr][w];
    pivot_cols.push_back(c);
    ++rr;
  }

  RankKernel out;
  out.rank = static_cast<int>(pivot_cols.size());
  // One kernel column per free column: set the free coordinate and read
  // the pivot coordinates off the reduced rows.
  std::vector<uint8_t> is_pivot(C, 0);
  for (int c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::pair<int, int>> kentries;
  int k = 0;
  for (int f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    kentries.emplace_back(f, k);
    for (int r = 0; r < out.rank; ++r)
      if (bit(r, f)) kentries.emplace_back(pivot_cols[r], k);
    ++k;
  }
  out.kernel = F2Matrix::from_entries(C, k, std::move(kentries));
  return out;
}

int rank(const F2Matrix& m) { return rank_and_kernel(m).rank; }

std::optional<F2Matrix> inverse(const F2Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  int words = (2 * n + 63) / 64;
  std::vector<std::vector<uint64_t>> rows(n, std::vector<uint64_t>(words, 0));
  auto bit = [](const std::vector<uint64_t>& r, int c) {
    return (r[c >> 6] >> (c & 63)) & 1;
  };
  for (const auto& [r, c] : m.entries) rows[r][c >> 6] ^= uint64_t(1) << (c & 63);
  for (int r = 0; r < n; ++r)
    rows[r][(n + r) >> 6] ^= uint64_t(1) << ((n + r) & 63);
  // Gauss-Jordan on [m | id]; a pivotless column means singular.
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (bit(rows[r], col)) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(rows[col], rows[piv]);
    for (int r = 0; r < n; ++r)
      if (r != col && bit(rows[r], col))
        for (int w = 0; w < words; ++w) rows[r][w] ^= rows[col][w];
  }
  std::vector<std::pair<int, int>> es;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (bit(rows[r], n + c)) es.emplace_back(r, c);
  return F2Matrix::from_entries(n, n, es);
}

std::map<int, int> GradedF2Space::dims() const {
  std::map<int, int> d;
  for (int deg : degrees) ++d[deg];
  return d;
}

GradedF2Space shift(const GradedF2Space& v, int sigma) {
  // (V{sigma})^d = V^{d + sigma}: stored degrees drop by sigma.
  GradedF2Space out = v;
  for (int& d : out.degrees) d -= sigma;
  return out;
}

GradedF2Space tensor(const GradedF2Space& a, const GradedF2Space& b) {
  GradedF2Space out;
  out.degrees.reserve(a.dim() * b.dim());
  const bool labeled = !a.labels.empty() && !b.labels.empty();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      out.degrees.push_back(a.degrees[i] + b.degrees[j]);
      if (labeled) out.labels.push_back(a.labels[i] + b.labels[j]);
    }
  return out;
}

int tensor_degree_A(int m, uint32_t t) {
  return m - 2 * std::popcount(t);
}

GradedF2Space tensor_power_A(int m) {
  if (m < 0 || m > 20)
    throw std::invalid_argument("tensor_power_A: unsupported power");
  GradedF2Space out;
  const uint32_t n = 1u << m;
  out.degrees.reserve(n);
  const bool labeled = m <= 16;
  for (uint32_t t = 0; t < n; ++t) {
    out.degrees.push_back(tensor_degree_A(m, t));
    if (labeled) {
      std::string s(m, '1');
      for (int j = 0; j < m; ++j)
        if ((t >> (m - 1 - j)) & 1) s[j] = 'x';
      out.labels.push_back(std::move(s));
    }
  }
  return out;
}

std::optional<int> map_degree(const F2Matrix& mat, const GradedF2Space& src,
                              const GradedF2Space& tgt) {
  if (mat.cols != src.dim() || mat.rows != tgt.dim())
    throw std::invalid_argument("map_degree: space dimensions mismatch");
  std::optional<int> d;
  for (const auto& [r, c] : mat.entries) {
    int e = tgt.degrees[r] - src.degrees[c];
    if (!d)
      d = e;
    else if (*d != e)
      return std::nullopt;
  }
  return d;
}

bool has_degree(const F2Matrix& mat, const GradedF2Space& src,
                const GradedF2Space& tgt, int d) {
  if (mat.cols != src.dim() || mat.rows != tgt.dim())
    throw std::invalid_argument("has_degree: space dimensions mismatch");
  for (const auto& [r, c] : mat.entries)
    if (tgt.degrees[r] - src.degrees[c] != d) return false;
  return true;
}

F2Matrix tensor_permutation(int m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m)
    throw std::invalid_argument("tensor_permutation: arity mismatch");
  std::vector<uint8_t> seen(m, 0);
  for (int p : perm) {
    if (p < 0 || p >= m || seen[p])
      throw std::invalid_argument("tensor_permutation: not a bijection");
    seen[p] = 1;
  }
  if (m > 20) throw std::invalid_argument("tensor_permutation: power too large");
  const uint32_t n = 1u << m;
  F2Matrix out(n, n);
  out.entries.reserve(n);
  for (uint32_t t = 0; t < n; ++t) {
    uint32_t s = 0;
    // Output factor j receives input factor perm[j]; factor 0 is the
    // most significant bit.
    for (int j = 0; j < m; ++j)
      if ((t >> (m - 1 - perm[j])) & 1) s |= 1u << (m - 1 - j);
    out.entries.emplace_back(static_cast<int>(s), static_cast<int>(t));
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

const FrobeniusData& frobenius_data() {
  static const FrobeniusData data = [] {
    FrobeniusData d;
    d.A = tensor_power_A(1);
    d.eps = F2Matrix::from_entries(1, 2, {{0, 1}});
    d.eps_dot = F2Matrix::from_entries(1, 2, {{0, 0}});
    d.eta = F2Matrix::from_entries(2, 1, {{0, 0}});
    d.eta_dot = F2Matrix::from_entries(2, 1, {{1, 0}});
    // Basis order 1&1, 1&x, x&1, x&x.
    d.mult = F2Matrix::from_entries(2, 4, {{0, 0}, {1, 1}, {1, 2}});
    d.split = F2Matrix::from_entries(4, 2, {{1, 0}, {2, 0}, {3, 1}});
    d.xmul = F2Matrix::from_entries(2, 2, {{1, 0}});
    return d;
  }();
  return data;
}

std::vector<std::string> frobenius_identities() {
  const FrobeniusData& F = frobenius_data();
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const F2Matrix id1 = F2Matrix::identity(1);
  const F2Matrix id2 = F2Matrix::identity(2);
  const GradedF2Space ground = shift(tensor_power_A(0), 0);
  const GradedF2Space AA = tensor(F.A, F.A);

  expect(mul(F.eps, F.eta).is_zero(), "eps . eta != 0");
  expect(mul(F.eps_dot, F.eta_dot).is_zero(), "eps_dot . eta_dot != 0");
  expect(mul(F.eps, F.eta_dot) == id1, "eps . eta_dot != id");
  expect(mul(F.eps_dot, F.eta) == id1, "eps_dot . eta != id");
  expect(add(mul(F.eta, F.eps_dot), mul(F.eta_dot, F.eps)) == id2,
         "eta.eps_dot + eta_dot.eps != id");

  // Multiplication and comultiplication expand through the (co)units.
  F2Matrix mult_expanded =
      add(add(mul(F.eta, kron(F.eps_dot, F.eps_dot)),
              mul(F.eta_dot, kron(F.eps, F.eps_dot))),
          mul(F.eta_dot, kron(F.eps_dot, F.eps)));
  expect(mult_expanded == F.mult, "mult (co)unit expansion mismatch");
  F2Matrix split_expanded =
      add(add(mul(kron(F.eta, F.eta_dot), F.eps_dot),
              mul(kron(F.eta_dot, F.eta), F.eps_dot)),
          mul(kron(F.eta_dot, F.eta_dot), F.eps));
  expect(split_expanded == F.split, "split (co)unit expansion mismatch");

  expect(mul(F.mult, F.split).is_zero(), "mult . split != 0");
  expect(mul(kron(F.eps, id2), F.split) == id2, "(eps x id) . split != id");
  expect(mul(F.split, F.mult) ==
             mul(kron(id2, F.mult), kron(F.split, id2)),
         "Frobenius compatibility fails");
  expect(F.xmul == mul(F.mult, kron(F.eta_dot, id2)),
         "xmul disagrees with multiplication by x");

  const F2Matrix swap = tensor_permutation(2, {1, 0});
  expect(mul(F.mult, swap) == F.mult, "mult not commutative");
  expect(mul(swap, F.split) == F.split, "split not cocommutative");

  expect(has_degree(F.mult, AA, F.A, -1), "mult degree != -1");
  expect(has_degree(F.split, F.A, AA, -1), "split degree != -1");
  expect(has_degree(F.xmul, F.A, F.A, -2), "xmul degree != -2");
  expect(has_degree(F.eps, F.A, ground, 1), "eps degree != +1");
  expect(has_degree(F.eps_dot, F.A, ground, -1), "eps_dot degree != -1");
  expect(has_degree(F.eta, ground, F.A, 1), "eta degree != +1");
  expect(has_degree(F.eta_dot, ground, F.A, -1), "eta_dot degree != -1");
  return bad;
}

}  // namespace pkh
