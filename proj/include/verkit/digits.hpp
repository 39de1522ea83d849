#pragma once

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "verkit/integer.hpp"
#include "verkit/matrix.hpp"

namespace verkit {

/// Highest weight s of an indecomposable projective/tilting T_s,
/// s in [p^{n-1}-1, p^n-2].
struct ProjIndex {
  long v;
  friend auto operator<=>(const ProjIndex&, const ProjIndex&) = default;
};

/// Label i of a simple object L_i of Ver_{p^n}, i in [0, p^{n-1}(p-1)-1].
struct SimpleLabel {
  long v;
  friend auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;
};

/// Base-p digits of x padded to n places, most significant first.
std::vector<int> to_digits(long x, long p, int n);
long from_digits(const std::vector<int>& d, long p);

long num_simples(long p, int n);
/// First and last projective index, p^{n-1}-1 and p^n-2.
long proj_begin(long p, int n);
long proj_end(long p, int n);

/// All a1 p^{n-1} +- a2 p^{n-2} +- ... +- an. Requires a to have exactly n digits.
std::set<long> descendants(long a, long p, int n);

/// Rows: projective index i (row r is i = proj_begin + r); columns j = 0..p^n-2.
IntMatrix decomposition_matrix(long p, int n);

/// Weyl multiplicities of T_i read off its character; any 0 <= i <= p^n-2.
std::map<long, Integer> extended_decomposition_row(long p, int n, long i);

/// Same shape as decomposition_matrix but every row from the characters.
IntMatrix decomposition_matrix_from_characters(long p, int n);

/// Cartan matrix on projective indices (row r is proj_begin + r), by counting
/// common descendants.
IntMatrix cartan_descendant(long p, int n);

/// D D^T with D built from tilting characters.
IntMatrix cartan_dddt(long p, int n);

/// hom_dim(p, i, j) on projective indices.
IntMatrix cartan_hom(long p, int n);

/// Cartan matrix as produced by the Kronecker recursion, in its own order.
IntMatrix cartan_kronecker_raw(long p, int n);

/// Position of projective index i inside cartan_kronecker_raw.
std::size_t kronecker_position(long p, int n, long i);

/// cartan_kronecker_raw permuted back to projective-index order.
IntMatrix cartan_kronecker(long p, int n);

struct Block {
  std::vector<long> members;  // projective indices, ascending
  int level = 0;              // 0 for simple projectives, else m with size p^{m-1}(p-1)
};

/// Blocks ordered by level then smallest member.
std::vector<Block> block_partition(long p, int n);

/// Block membership keyed by projective index: same block iff equal keys.
std::tuple<int, int, int> block_key(long p, int n, long i);

ProjIndex steinberg_label(long p, int n, SimpleLabel i);
SimpleLabel simple_of_projective(long p, int n, ProjIndex s);

/// dim Ext^1(L_a, L_b), p odd. Closed digit rule.
int ext1(long p, int n, long a, long b);
/// Same value by peeling last digits.
int ext1_recursive(long p, int n, long a, long b);

/// nullopt means the Frobenius functor kills L_i; otherwise (label in
/// Ver_{p^{n-1}}, label in Ver_p). p odd, n >= 2.
std::optional<std::pair<long, long>> frobenius_on_simple(long p, int n, long i);

}  // namespace verkit
