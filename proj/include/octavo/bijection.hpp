#pragma once

#include <string>
#include <vector>

#include "octavo/index_set.hpp"
#include "octavo/signed_permutation.hpp"
#include "octavo/swaps.hpp"

namespace octavo {

struct TraceStage {
  std::string name;
  SignedPermutation window;
  // Generators applied to reach this stage from the previous one. For a
  // left product the stage is s_{word[0]} ... s_{word[m-1]} * previous; for
  // a right product it is previous * s_{word[0]} ... s_{word[m-1]}.
  std::vector<int> word;
  bool right_product = false;
  // Column the block structure is taken relative to.
  BlockDecomposition blocks;
  int big_l = 0;
  int sign = 1;
};

struct MapTrace {
  int reference_column = 0;
  std::vector<TraceStage> stages;
};

struct MapResult {
  SignedPermutation image;
  MapTrace trace;
};

// Lowering map on an initially uncanceled w with w(j) = n:
//   1. w * s_j ... s_{n-1} moves column j to the end; drop row and column n.
//   2. each block of ones P_{r,t} (relative to j-1) moves down: s_r ... s_t.
//   3. if row 1 alone is a block of minus ones, apply s_0.
//   4. each block of minus ones N_{r,t} moves up: s_{t-1} ... s_{r-1}.
// Throws PreconditionError for inputs that are not initially uncanceled.
MapResult lower(const SignedPermutation& w, int j);

// The same map computed by moving rows: cross out column j and row n,
// sweep bottom to top pushing each +1 row right of j-1 down one row, then
// sweep top to bottom pushing each -1 row up one row (negating it at the
// top).
SignedPermutation lower_by_rows(const SignedPermutation& w, int j);

bool both_implementations_agree(const SignedPermutation& w, int j);

// Inverse of lower: v of rank n-1 finally uncanceled at j-1, result of
// rank n. Throws PreconditionError otherwise.
MapResult raise(const SignedPermutation& v, int j);

// Columns j in I u {n}, j >= 1, with every element of I u {n} above j
// congruent to j.
std::vector<int> valid_lowering_columns(const IndexSet& I);

// Descent bound of the image class: I^{(r)} when j = i_r, I itself when
// j = n. Position n-1 is dropped since it is not a descent position at
// rank n-1.
IndexSet lowered_index_set(const IndexSet& I, int j);

// Initially uncanceled elements of the chessboard class of I with
// w(j) = n.
std::vector<SignedPermutation> lowering_domain(const IndexSet& I, int j);
// Finally uncanceled elements of the rank n-1 chessboard class of J at
// column k.
std::vector<SignedPermutation> raising_domain(const IndexSet& J, int k);

}  // namespace octavo
