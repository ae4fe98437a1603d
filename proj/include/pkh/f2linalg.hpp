#pragma once

// Linear algebra over F_2 together with the graded bookkeeping used
// throughout the pipeline.  Matrices are stored sparsely as coordinate
// sets; addition is symmetric difference of the supports.  Graded
// spaces record one integer degree per basis vector and an optional
// human-readable label.  The Frobenius algebra A = F[x]/(x^2) and its
// structure maps (unit, counit, dotted variants, multiplication,
// comultiplication) live here as fixed matrices in the basis {1, x}.
//
// Tensor conventions: factor 0 is the leftmost tensor slot and the
// most significant bit of the basis index, so the basis of A^{otimes m}
// is ordered lexicographically with 1 < x.  kron(P, Q) then acts on a
// tensor product with P on the leading factors and Q on the trailing
// ones.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pkh {

struct F2Matrix {
  int rows = 0;
  int cols = 0;
  // Sorted, duplicate-free list of (row, col) positions holding a 1.
  std::vector<std::pair<int, int>> entries;

  F2Matrix() = default;
  F2Matrix(int r, int c) : rows(r), cols(c) {}

  static F2Matrix identity(int n);
  // Builds a matrix from an explicit entry list; duplicates cancel mod 2.
  static F2Matrix from_entries(int r, int c,
                               std::vector<std::pair<int, int>> es);

  bool get(int r, int c) const;
  void flip(int r, int c);
  bool is_zero() const { return entries.empty(); }

  bool operator==(const F2Matrix& o) const = default;
};

F2Matrix add(const F2Matrix& a, const F2Matrix& b);
F2Matrix mul(const F2Matrix& a, const F2Matrix& b);
F2Matrix kron(const F2Matrix& a, const F2Matrix& b);
F2Matrix transpose(const F2Matrix& a);

// Column vector image under a: convenience for single-vector products.
std::vector<uint8_t> mul_vec(const F2Matrix& a, const std::vector<uint8_t>& v);

struct RankKernel {
  int rank = 0;
  // Columns form a basis of the null space {v : Mv = 0}.
  F2Matrix kernel;
};

RankKernel rank_and_kernel(const F2Matrix& m);
int rank(const F2Matrix& m);

// Inverse over F_2; nullopt when m is singular or not square.
std::optional<F2Matrix> inverse(const F2Matrix& m);

// Graded F_2 vector space: degrees[i] is the degree of basis vector i.
// Labels are optional (empty vector means unnamed basis).
struct GradedF2Space {
  std::vector<int> degrees;
  std::vector<std::string> labels;

  int dim() const { return static_cast<int>(degrees.size()); }
  std::map<int, int> dims() const;

  bool operator==(const GradedF2Space& o) const = default;
};

// Degree shift {sigma}: a vector stored in degree d lands in degree
// d - sigma, so the shifted space's degree-d piece is the old d + sigma.
GradedF2Space shift(const GradedF2Space& v, int sigma);
GradedF2Space tensor(const GradedF2Space& a, const GradedF2Space& b);

// A^{otimes m} with basis indexed by bitmasks (bit set = factor is x),
// factor 0 most significant.  Degree of a basis tensor is
// (#factors equal to 1) - (#factors equal to x).
GradedF2Space tensor_power_A(int m);

// Degree of basis vector t of A^{otimes m} without building the space.
int tensor_degree_A(int m, uint32_t t);

// Checks that every entry of mat maps src degree c to tgt degree
// tgt = c + d for one fixed d; returns that d, or nullopt if entries
// disagree or the matrix is zero.
std::optional<int> map_degree(const F2Matrix& mat, const GradedF2Space& src,
                              const GradedF2Space& tgt);
// True when every entry shifts degree by exactly d (zero matrix passes).
bool has_degree(const F2Matrix& mat, const GradedF2Space& src,
                const GradedF2Space& tgt, int d);

// Permutation action on A^{otimes m}: factor j of the output is factor
// perm[j] of the input.  perm must be a bijection on {0, ..., m-1}.
F2Matrix tensor_permutation(int m, const std::vector<int>& perm);

// Structure maps of A = F[x]/(x^2) in the ordered basis [1, x]
// (and [1&1, 1&x, x&1, x&x] for A tensor A).
struct FrobeniusData {
  GradedF2Space A;       // degrees +1 (basis 1), -1 (basis x)
  F2Matrix eps;          // counit: 1 -> 0, x -> 1
  F2Matrix eps_dot;      // dotted counit: 1 -> 1, x -> 0
  F2Matrix eta;          // unit: 1 in F -> 1 in A
  F2Matrix eta_dot;      // dotted unit: 1 in F -> x
  F2Matrix mult;         // multiplication A tensor A -> A
  F2Matrix split;        // comultiplication A -> A tensor A
  F2Matrix xmul;         // multiplication by x on A
};

const FrobeniusData& frobenius_data();

// Verifies the algebraic identities tying the structure maps together;
// returns a list of human-readable violation descriptions (empty = pass).
std::vector<std::string> frobenius_identities();

}  // namespace pkh
