#include "octavo/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "octavo/enumeration.hpp"
#include "octavo/errors.hpp"
#include "octavo/q_analogs.hpp"
#include "octavo/statistics.hpp"

namespace octavo {

namespace {

TraceStage make_stage(std::string name, const SignedPermutation& w, int k, std::vector<int> word, bool right) {
  TraceStage s{std::move(name), w, std::move(word), right, decompose_blocks(w, k), big_l(w), sign(w)};
  return s;
}

// Word shifting every listed block one row down (s_r ... s_t) or up
// (s_{t-1} ... s_{r-1}), top block acting first. Written left to right,
// so the top block's generators end up rightmost.
std::vector<int> block_word(const std::vector<RowInterval>& blocks, bool down) {
  std::vector<int> word;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    if (down) {
      for (int i = it->first; i <= it->last; ++i) word.push_back(i);  // s_r ... s_t
    } else {
      for (int i = it->last - 1; i >= it->first - 1; --i) word.push_back(i);  // s_{t-1} ... s_{r-1}
    }
  }
  return word;
}

bool single_top_block(const std::vector<RowInterval>& blocks) {
  return std::find(blocks.begin(), blocks.end(), RowInterval{1, 1}) != blocks.end();
}

SignedPermutation drop_last(const SignedPermutation& w) {
  const int n = w.rank();
  if (w(n) != n) throw std::logic_error("drop_last: w(n) != n");
  auto window = w.window();
  window.pop_back();
  return SignedPermutation(window);
}

SignedPermutation append_top(const SignedPermutation& v) {
  auto window = v.window();
  window.push_back(v.rank() + 1);
  return SignedPermutation(window);
}

void require_initial(const SignedPermutation& w, int j) {
  if (w.rank() < 2) throw PreconditionError("lowering needs rank >= 2");
  auto rep = classify_initially_uncanceled(w, j);
  if (!rep.overall) throw PreconditionError(w.to_text() + " is not initially uncanceled at column " + std::to_string(j));
}

}  // namespace

MapResult lower(const SignedPermutation& w, int j) {
  require_initial(w, j);
  const int n = w.rank();
  const int k = j - 1;
  MapTrace trace;
  trace.reference_column = k;
  trace.stages.push_back(make_stage("w", w, j, {}, false));

  std::vector<int> word1;
  SignedPermutation y = w;
  for (int i = j; i <= n - 1; ++i) {
    y = right_multiply(y, i);
    word1.push_back(i);
  }
  const SignedPermutation w1 = drop_last(y);
  trace.stages.push_back(make_stage("w1", w1, k, word1, true));

  auto word2 = block_word(decompose_blocks(w1, k).ones_blocks, true);
  const SignedPermutation w2 = left_multiply_word(word2, w1);
  trace.stages.push_back(make_stage("w2", w2, k, word2, false));

  std::vector<int> word3;
  if (single_top_block(decompose_blocks(w2, k).minus_blocks)) word3.push_back(0);
  const SignedPermutation w3 = left_multiply_word(word3, w2);
  trace.stages.push_back(make_stage("w3", w3, k, word3, false));

  auto word4 = block_word(decompose_blocks(w3, k).minus_blocks, false);
  const SignedPermutation w4 = left_multiply_word(word4, w3);
  trace.stages.push_back(make_stage("w4", w4, k, word4, false));
  return {w4, std::move(trace)};
}

SignedPermutation lower_by_rows(const SignedPermutation& w, int j) {
  require_initial(w, j);
  const int n = w.rank();
  const int m = n - 1;
  const int k = j - 1;
  // Row r holds (column, sign) after crossing out column j and row n.
  struct Entry {
    int column;
    int sign;
  };
  std::vector<Entry> rows(m + 1);
  for (int c = 1, nc = 1; c <= n; ++c) {
    if (c == j) continue;
    rows[std::abs(w(c))] = {nc++, w(c) > 0 ? 1 : -1};
  }
  for (int t = m; t >= 1; --t)
    if (rows[t].column > k && rows[t].sign > 0 && t < m) std::swap(rows[t], rows[t + 1]);
  for (int t = 1; t <= m; ++t) {
    if (rows[t].column <= k || rows[t].sign > 0) continue;
    if (t == 1)
      rows[1].sign = -rows[1].sign;
    else
      std::swap(rows[t], rows[t - 1]);
  }
  std::vector<int> window(m);
  for (int r = 1; r <= m; ++r) window[rows[r].column - 1] = rows[r].sign * r;
  return SignedPermutation(window);
}

bool both_implementations_agree(const SignedPermutation& w, int j) { return lower(w, j).image == lower_by_rows(w, j); }

MapResult raise(const SignedPermutation& v, int j) {
  const int n = v.rank() + 1;
  const int k = j - 1;
  if (j < 1 || j > n) throw PreconditionError("raising column outside [1, n]");
  if (!classify_finally_uncanceled(v, k).overall)
    throw PreconditionError(v.to_text() + " is not finally uncanceled at column " + std::to_string(k));
  MapTrace trace;
  trace.reference_column = k;
  trace.stages.push_back(make_stage("v", v, k, {}, false));

  auto word1 = block_word(decompose_blocks(v, k).minus_blocks, true);
  const SignedPermutation v1 = left_multiply_word(word1, v);
  trace.stages.push_back(make_stage("v1", v1, k, word1, false));

  std::vector<int> word2;
  if (single_top_block(decompose_blocks(v1, k).ones_blocks)) word2.push_back(0);
  const SignedPermutation v2 = left_multiply_word(word2, v1);
  trace.stages.push_back(make_stage("v2", v2, k, word2, false));

  auto word3 = block_word(decompose_blocks(v2, k).ones_blocks, false);
  const SignedPermutation v3 = left_multiply_word(word3, v2);
  trace.stages.push_back(make_stage("v3", v3, k, word3, false));

  const SignedPermutation v4 = append_top(v3);
  trace.stages.push_back(make_stage("v4", v4, k, {}, false));

  std::vector<int> word5;
  SignedPermutation y = v4;
  for (int i = n - 1; i >= j; --i) {
    y = right_multiply(y, i);
    word5.push_back(i);
  }
  trace.stages.push_back(make_stage("v5", y, j, word5, true));
  return {y, std::move(trace)};
}

std::vector<int> valid_lowering_columns(const IndexSet& I) {
  const int n = I.rank();
  std::vector<int> tops = I.members();
  tops.push_back(n);
  std::vector<int> out;
  for (int j : tops) {
    if (j < 1) continue;
    bool ok = std::all_of(tops.begin(), tops.end(), [&](int i) { return i <= j || (i - j) % 2 == 0; });
    if (ok) out.push_back(j);
  }
  return out;
}

IndexSet lowered_index_set(const IndexSet& I, int j) {
  const int n = I.rank();
  if (n < 2) throw std::invalid_argument("lowered_index_set needs rank >= 2");
  std::vector<int> entries;
  if (j == n) {
    entries = I.members();
  } else {
    const auto& members = I.members();
    auto it = std::find(members.begin(), members.end(), j);
    if (it == members.end()) throw std::invalid_argument("column " + std::to_string(j) + " is not in I u {n}");
    entries = i_shift(I, static_cast<int>(it - members.begin()) + 1);
  }
  std::erase_if(entries, [&](int i) { return i >= n - 1; });
  return IndexSet(n - 1, entries);
}

std::vector<SignedPermutation> lowering_domain(const IndexSet& I, int j) {
  std::vector<SignedPermutation> out;
  enumerate(ClassQuery::pinned(I, j), [&](const SignedPermutation& w) {
    if (w(j) == w.rank() && classify_initially_uncanceled(w, j).overall) out.push_back(w);
  });
  return out;
}

std::vector<SignedPermutation> raising_domain(const IndexSet& J, int k) {
  std::vector<SignedPermutation> out;
  enumerate(ClassQuery::chessboard_class(J), [&](const SignedPermutation& v) {
    if (classify_finally_uncanceled(v, k).overall) out.push_back(v);
  });
  return out;
}

}  // namespace octavo
