#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "octavo/index_set.hpp"
#include "octavo/polynomial.hpp"
#include "octavo/signed_permutation.hpp"

namespace octavo {

struct ClassQuery {
  int rank = 1;
  // Elements satisfy D(w) subset of descent_bound.
  IndexSet descent_bound;
  bool chessboard_only = false;
  // w(k) = n or w(k+1) = -n; k in [0, n].
  std::optional<int> pinned_column;

  static ClassQuery descent_class(const IndexSet& I) { return {I.rank(), I, false, std::nullopt}; }
  static ClassQuery chessboard_class(const IndexSet& I) { return {I.rank(), I, true, std::nullopt}; }
  static ClassQuery pinned(const IndexSet& I, int k) { return {I.rank(), I, true, k}; }
};

enum class EnumerationMode {
  // Backtracking over window prefixes with descent and chessboard pruning.
  pruned,
  // Generates all of B_n and filters; slow, kept for cross-checking.
  whole_group_filter,
};

using Visitor = std::function<void(const SignedPermutation&)>;

// Visits every element of the class once, in lexicographic window order.
// Throws RankCapError beyond the configured cap and std::invalid_argument
// for a malformed query.
void enumerate(const ClassQuery& q, const Visitor& visit, EnumerationMode mode = EnumerationMode::pruned);
std::vector<SignedPermutation> collect(const ClassQuery& q, EnumerationMode mode = EnumerationMode::pruned);
bool satisfies(const ClassQuery& q, const SignedPermutation& w);

// sum of (-1)^{l(w)} X^{L(w)} over the query's elements.
UniPoly signed_sum(const ClassQuery& q, EnumerationMode mode = EnumerationMode::pruned);

UniPoly s_poly(int n, const IndexSet& I, EnumerationMode mode = EnumerationMode::pruned);
UniPoly s_poly_chessboard(int n, const IndexSet& I, EnumerationMode mode = EnumerationMode::pruned);
UniPoly s_poly_pinned(int n, const IndexSet& I, int k, EnumerationMode mode = EnumerationMode::pruned);
// sum of t^{l(w)} X^{L(w)} over the descent class.
BiPoly s_bipoly(int n, const IndexSet& I, EnumerationMode mode = EnumerationMode::pruned);

// The chessboard class sum split by pinned column; every k in [0, n]
// appears, most with the zero polynomial.
std::map<int, UniPoly> decompose_by_pinned_column(int n, const IndexSet& I,
                                                  EnumerationMode mode = EnumerationMode::pruned);

}  // namespace octavo
