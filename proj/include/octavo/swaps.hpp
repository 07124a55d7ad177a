#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octavo/signed_permutation.hpp"

namespace octavo {

// Rows first..last inclusive. Odd when first and last have equal parity.
struct RowInterval {
  int first = 0;
  int last = 0;
  bool odd() const { return (last - first) % 2 == 0; }
  bool contains(int row) const { return first <= row && row <= last; }
  friend bool operator==(const RowInterval&, const RowInterval&) = default;
};

// Maximal runs of adjacent rows whose entry lies strictly right of the
// reference column, and their maximal constant-sign sub-runs. All lists
// run top to bottom.
struct BlockDecomposition {
  int reference_column = 0;
  std::vector<RowInterval> blocks;
  std::vector<RowInterval> ones_blocks;
  std::vector<RowInterval> minus_blocks;
  // Index into the lists above for each row (slot 0 unused), -1 if none.
  std::vector<int> block_of_row;
  std::vector<int> ones_block_of_row;
  std::vector<int> minus_block_of_row;

  bool right_of_reference(int row) const { return block_of_row[row] >= 0; }
};

// k may be 0, meaning every row is right of the reference column.
BlockDecomposition decompose_blocks(const SignedPermutation& w, int k);

enum class SwapKind { sign, left, single_minus, double_minus, single_plus, double_plus };
enum class SwapFamily { all, general_left, general_minus, general_plus };

std::string to_string(SwapKind kind);
std::string to_string(SwapFamily family);
bool in_family(SwapKind kind, SwapFamily family);

struct SwapMove {
  SwapKind kind = SwapKind::sign;
  int reference_column = 0;
  // Unused (0) for a sign swap.
  int left_column = 0;
  int right_column = 0;

  std::string to_string() const;
  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

// Every swap of w relative to column k, sign swaps first, then two swaps
// by (b, t).
std::vector<SwapMove> find_swaps(const SignedPermutation& w, int k, SwapFamily family = SwapFamily::all);

// Position of a swap in the total order: sign swaps by the row of their
// column, then two swaps by (smaller row, larger row).
std::array<int, 3> swap_order_key(const SignedPermutation& w, const SwapMove& x);

std::optional<SwapMove> least_swap(const SignedPermutation& w, int k, SwapFamily family);

// Throws std::invalid_argument unless x is a swap of w at x.reference_column.
SignedPermutation apply_swap(const SignedPermutation& w, const SwapMove& x);

enum class Side { initial, final };

// Two places where the seven-property definitions can be read in more
// than one way. The consistent reading exempts blocks starting in row 1
// from property 7 and reads "left of k" in the final property 1 as
// "column <= k". as_written takes both literally.
enum class Reading { consistent, as_written };

struct UncanceledReport {
  Side side = Side::initial;
  Reading reading = Reading::consistent;
  int reference_column = 0;
  std::array<bool, 7> properties{};
  bool overall = false;
};

// w chessboard with w(j) = n, and every descent of w above j congruent to
// j. Throws PreconditionError otherwise.
UncanceledReport classify_initially_uncanceled(const SignedPermutation& w, int j,
                                               Reading reading = Reading::consistent);
// w chessboard, n congruent to k, and every descent of w above k
// congruent to k. Throws PreconditionError otherwise.
UncanceledReport classify_finally_uncanceled(const SignedPermutation& w, int k,
                                             Reading reading = Reading::consistent);

}  // namespace octavo
