#include "octavo/swaps.hpp"

#include <algorithm>
#include <stdexcept>

#include "octavo/errors.hpp"

namespace octavo {

namespace {

// Maximal runs of rows satisfying `keep`, recorded with their index per row.
template <class Pred>
void collect_runs(int n, Pred keep, std::vector<RowInterval>& runs, std::vector<int>& index_of_row) {
  index_of_row.assign(n + 1, -1);
  int r = 1;
  while (r <= n) {
    if (!keep(r)) {
      ++r;
      continue;
    }
    int s = r;
    while (s + 1 <= n && keep(s + 1)) ++s;
    for (int x = r; x <= s; ++x) index_of_row[x] = static_cast<int>(runs.size());
    runs.push_back({r, s});
    r = s + 1;
  }
}

// Rows strictly between lo and hi all lie in the same run of `index`.
bool between_in_one_run(const std::vector<int>& index, int lo, int hi) {
  if (hi - lo <= 1) return true;
  return index[lo + 1] >= 0 && index[lo + 1] == index[hi - 1];
}

}  // namespace

BlockDecomposition decompose_blocks(const SignedPermutation& w, int k) {
  const int n = w.rank();
  if (k < 0 || k > n) throw std::invalid_argument("reference column outside [0, n]");
  BlockDecomposition d;
  d.reference_column = k;
  auto right = [&](int r) { return w.column_of(r) > k; };
  collect_runs(n, right, d.blocks, d.block_of_row);
  collect_runs(n, [&](int r) { return right(r) && w.sign_in_row(r) > 0; }, d.ones_blocks, d.ones_block_of_row);
  collect_runs(n, [&](int r) { return right(r) && w.sign_in_row(r) < 0; }, d.minus_blocks, d.minus_block_of_row);
  return d;
}

std::string to_string(SwapKind kind) {
  switch (kind) {
    case SwapKind::sign: return "sign";
    case SwapKind::left: return "left";
    case SwapKind::single_minus: return "single-minus";
    case SwapKind::double_minus: return "double-minus";
    case SwapKind::single_plus: return "single-plus";
    case SwapKind::double_plus: return "double-plus";
  }
  return "?";
}

std::string to_string(SwapFamily family) {
  switch (family) {
    case SwapFamily::all: return "all";
    case SwapFamily::general_left: return "general-left";
    case SwapFamily::general_minus: return "general-minus";
    case SwapFamily::general_plus: return "general-plus";
  }
  return "?";
}

bool in_family(SwapKind kind, SwapFamily family) {
  switch (family) {
    case SwapFamily::all: return true;
    case SwapFamily::general_left: return kind == SwapKind::sign || kind == SwapKind::left;
    case SwapFamily::general_minus: return kind != SwapKind::single_plus;
    case SwapFamily::general_plus: return kind != SwapKind::single_minus;
  }
  return false;
}

std::string SwapMove::to_string() const {
  if (kind == SwapKind::sign) return "(" + std::to_string(right_column) + ")";
  return "(" + std::to_string(left_column) + "," + std::to_string(right_column) + ")";
}

std::vector<SwapMove> find_swaps(const SignedPermutation& w, int k, SwapFamily family) {
  const int n = w.rank();
  const auto d = decompose_blocks(w, k);
  std::vector<SwapMove> out;

  // Sign swap (t): t even, t <= k, every row above i(t) lies right of k.
  if (in_family(SwapKind::sign, family)) {
    for (int t = 2; t <= k; t += 2) {
      const int row = w.row_of(t);
      if (row == 1 || (d.block_of_row[1] >= 0 && d.block_of_row[1] == d.block_of_row[row - 1]))
        out.push_back({SwapKind::sign, k, 0, t});
    }
  }

  // Two swap (b, t): b < t, b = t mod 2, and every row strictly between
  // i(b) and i(t) lies right of k.
  for (int b = 1; b <= n; ++b) {
    for (int t = b + 2; t <= n; t += 2) {
      const int lo = std::min(w.row_of(b), w.row_of(t));
      const int hi = std::max(w.row_of(b), w.row_of(t));
      if (!between_in_one_run(d.block_of_row, lo, hi)) continue;
      auto emit = [&](SwapKind kind) {
        if (in_family(kind, family)) out.push_back({kind, k, b, t});
      };
      if (t <= k) {
        emit(SwapKind::left);
        continue;
      }
      const bool between_plus = between_in_one_run(d.ones_block_of_row, lo, hi);
      const bool between_minus = between_in_one_run(d.minus_block_of_row, lo, hi);
      const int sb = w.sign_in_column(b);
      const int st = w.sign_in_column(t);
      if (k < b) {
        if (sb < 0 && st < 0 && between_plus) emit(SwapKind::double_minus);
        if (sb > 0 && st > 0 && between_minus) emit(SwapKind::double_plus);
      } else {
        if (st < 0 && between_plus) emit(SwapKind::single_minus);
        if (st > 0 && between_minus) emit(SwapKind::single_plus);
      }
    }
  }
  return out;
}

std::array<int, 3> swap_order_key(const SignedPermutation& w, const SwapMove& x) {
  if (x.kind == SwapKind::sign) return {0, w.row_of(x.right_column), 0};
  const int a = w.row_of(x.left_column);
  const int b = w.row_of(x.right_column);
  return {1, std::min(a, b), std::max(a, b)};
}

std::optional<SwapMove> least_swap(const SignedPermutation& w, int k, SwapFamily family) {
  auto moves = find_swaps(w, k, family);
  if (moves.empty()) return std::nullopt;
  return *std::min_element(moves.begin(), moves.end(), [&](const SwapMove& a, const SwapMove& b) {
    return swap_order_key(w, a) < swap_order_key(w, b);
  });
}

SignedPermutation apply_swap(const SignedPermutation& w, const SwapMove& x) {
  auto valid = find_swaps(w, x.reference_column, SwapFamily::all);
  if (std::find(valid.begin(), valid.end(), x) == valid.end())
    throw std::invalid_argument(to_string(x.kind) + " swap " + x.to_string() + " is not valid for " + w.to_text() +
                                " at column " + std::to_string(x.reference_column));
  WindowBuilder b(w);
  if (x.kind == SwapKind::sign) {
    b.set(x.right_column, -w(x.right_column));
  } else {
    // Exchange rows i(b) and i(t); each column keeps its own sign.
    const int vb = w(x.left_column);
    const int vt = w(x.right_column);
    b.set(x.left_column, (vb > 0 ? 1 : -1) * std::abs(vt));
    b.set(x.right_column, (vt > 0 ? 1 : -1) * std::abs(vb));
  }
  return b.build();
}

namespace {

// The seven properties with the sign e playing the role of "+1" (e = 1 on
// the initial side, e = -1 on the final side).
UncanceledReport evaluate(const SignedPermutation& w, int k, Side side, Reading reading) {
  const int n = w.rank();
  const int e = side == Side::initial ? 1 : -1;
  const auto d = decompose_blocks(w, k);
  const auto& same_blocks = e > 0 ? d.ones_blocks : d.minus_blocks;
  const auto& other_blocks = e > 0 ? d.minus_blocks : d.ones_blocks;
  const auto& same_of_row = e > 0 ? d.ones_block_of_row : d.minus_block_of_row;
  auto right_with = [&](int row, int s) { return d.right_of_reference(row) && w.sign_in_row(row) == s; };
  // Rows 1..last all right of k with sign s.
  auto prefix_right_with = [&](int last, int s) {
    for (int r = 1; r <= last; ++r)
      if (!right_with(r, s)) return false;
    return true;
  };
  // Columns t in (k, n) with t and n of opposite parity whose pair of signs
  // is (s1, s2).
  auto pairs = [&](int s1, int s2) {
    std::vector<int> out;
    for (int t = k + 1; t < n; ++t)
      if ((n - t) % 2 != 0 && w.sign_in_column(t) == s1 && w.sign_in_column(t + 1) == s2) out.push_back(t);
    return out;
  };

  UncanceledReport rep;
  rep.side = side;
  rep.reading = reading;
  rep.reference_column = k;
  auto& p = rep.properties;

  // 1. Initial: row n-1 left of j or carrying -1. Final: row n left of k or
  // carrying +1.
  {
    const int row = side == Side::initial ? n - 1 : n;
    if (row < 1) {
      p[0] = true;
    } else {
      const int col = w.column_of(row);
      const bool weak = side == Side::final && reading == Reading::consistent;
      const bool left = col < k || (weak && col == k);
      p[0] = left || w.sign_in_row(row) == -e;
    }
  }

  // 2. No odd blocks.
  p[1] = std::none_of(d.blocks.begin(), d.blocks.end(), [](const RowInterval& b) { return b.odd(); });

  // 3. Each row right of k with sign e lies in an even same-sign block,
  // unless every row above it is right of k with sign e.
  p[2] = true;
  for (int r = 1; r <= n && p[2]; ++r) {
    if (!right_with(r, e)) continue;
    if (!same_blocks[same_of_row[r]].odd()) continue;
    if (prefix_right_with(r - 1, e)) continue;
    p[2] = false;
  }

  // 4. (-1, 1) pairs.
  {
    auto mixed = pairs(-1, 1);
    const bool single_allowed = side == Side::initial ? n % 2 == 1 : n % 2 == 0;
    if (!single_allowed) {
      p[3] = mixed.empty();
    } else {
      p[3] = mixed.size() <= 1;
      for (int t : mixed) {
        // Initial: the +1 of the pair is in row 1 and every row above the
        // -1 is right of j with +1. Final: the mirror image.
        const int top_col = side == Side::initial ? t + 1 : t;
        const int other_col = side == Side::initial ? t : t + 1;
        if (w.row_of(top_col) != 1) p[3] = false;
        if (!prefix_right_with(w.row_of(other_col) - 1, e)) p[3] = false;
      }
    }
  }

  // 5. For each (-e, -e) pair, the rows strictly between are right of k
  // with sign e.
  p[4] = true;
  for (int t : pairs(-e, -e)) {
    const int lo = std::min(w.row_of(t), w.row_of(t + 1));
    const int hi = std::max(w.row_of(t), w.row_of(t + 1));
    for (int r = lo + 1; r < hi; ++r)
      if (!right_with(r, e)) p[4] = false;
  }

  // 6. A proper opposite-sign sub-block N_{p,q} of a block B_{r,s} is odd
  // exactly when it touches the boundary of B.
  p[5] = true;
  for (const auto& nb : other_blocks) {
    const auto& b = d.blocks[d.block_of_row[nb.first]];
    if (nb == b) continue;
    const bool touches = nb.first == b.first || nb.last == b.last;
    if (nb.odd() != touches) p[5] = false;
  }

  // 7. In an even block B_{r,s}, a same-sign block starting at r ends at s
  // and one ending at s starts at r.
  p[6] = true;
  for (const auto& b : d.blocks) {
    if (b.odd()) continue;
    if (reading == Reading::consistent && b.first == 1) continue;
    for (const auto& pb : same_blocks) {
      if (pb.first == b.first && pb.last != b.last) p[6] = false;
      if (pb.last == b.last && pb.first != b.first) p[6] = false;
    }
  }

  rep.overall = std::all_of(p.begin(), p.end(), [](bool v) { return v; });
  return rep;
}

void require_parity_condition(const SignedPermutation& w, int k, const char* what) {
  const int n = w.rank();
  if (!is_chessboard(w)) throw PreconditionError(std::string(what) + ": " + w.to_text() + " is not a chessboard element");
  if (k < 0 || k > n) throw PreconditionError(std::string(what) + ": reference column outside [0, n]");
  if ((n - k) % 2 != 0) throw PreconditionError(std::string(what) + ": n and the reference column differ in parity");
  const IndexSet descents = descent_set(w);
  for (int i : descents.members())
    if (i > k && (i - k) % 2 != 0)
      throw PreconditionError(std::string(what) + ": descent " + std::to_string(i) + " above column " +
                              std::to_string(k) + " has the wrong parity");
}

}  // namespace

UncanceledReport classify_initially_uncanceled(const SignedPermutation& w, int j, Reading reading) {
  if (j < 1 || j > w.rank() || w(j) != w.rank())
    throw PreconditionError("initial classification: w(j) must equal n");
  require_parity_condition(w, j, "initial classification");
  return evaluate(w, j, Side::initial, reading);
}

UncanceledReport classify_finally_uncanceled(const SignedPermutation& w, int k, Reading reading) {
  require_parity_condition(w, k, "final classification");
  return evaluate(w, k, Side::final, reading);
}

}  // namespace octavo
