#include "octavo/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "octavo/config.hpp"
#include "octavo/statistics.hpp"

namespace octavo {

namespace {

void validate(const ClassQuery& q) {
  require_rank_within_cap(q.rank);
  if (q.descent_bound.rank() != q.rank) throw std::invalid_argument("descent bound has the wrong rank");
  if (q.pinned_column && (*q.pinned_column < 0 || *q.pinned_column > q.rank))
    throw std::invalid_argument("pinned column outside [0, n]");
}

class Backtracker {
public:
  Backtracker(const ClassQuery& q, const Visitor& visit)
      : q_(q), visit_(visit), n_(q.rank), builder_(q.rank), allowed_(q.descent_bound.mask()) {}

  void run() { place(1, 0); }

private:
  void place(int t, int previous) {
    if (t > n_) {
      visit_(builder_.build());
      return;
    }
    const bool descent_ok = allowed_ >> (t - 1) & 1u;
    for (int v = -n_; v <= n_; ++v) {
      if (v == 0) continue;
      const int a = std::abs(v);
      if (used_ >> a & 1u) continue;
      if (!descent_ok && previous > v) continue;
      if (q_.chessboard_only && (a - t) % 2 != 0) continue;
      if (q_.pinned_column && a == n_) {
        const int k = v > 0 ? t : t - 1;
        if (k != *q_.pinned_column) continue;
      }
      used_ |= 1u << a;
      builder_.set(t, v);
      place(t + 1, v);
      used_ &= ~(1u << a);
    }
  }

  const ClassQuery& q_;
  const Visitor& visit_;
  int n_;
  WindowBuilder builder_;
  std::uint32_t allowed_;
  std::uint32_t used_ = 0;
};

void filter_whole_group(const ClassQuery& q, const Visitor& visit) {
  const int n = q.rank;
  std::vector<SignedPermutation> all;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> window(n);
  do {
    for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
      for (int t = 0; t < n; ++t) window[t] = (signs >> t & 1u) ? -perm[t] : perm[t];
      all.emplace_back(window);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(all.begin(), all.end());
  for (const auto& w : all)
    if (satisfies(q, w)) visit(w);
}

}  // namespace

bool satisfies(const ClassQuery& q, const SignedPermutation& w) {
  if (w.rank() != q.rank) return false;
  if (!descent_set(w).is_subset_of(q.descent_bound)) return false;
  if (q.chessboard_only && !is_chessboard(w)) return false;
  if (q.pinned_column && pinned_column(w) != *q.pinned_column) return false;
  return true;
}

void enumerate(const ClassQuery& q, const Visitor& visit, EnumerationMode mode) {
  validate(q);
  if (mode == EnumerationMode::whole_group_filter) {
    filter_whole_group(q, visit);
    return;
  }
  Backtracker(q, visit).run();
}

std::vector<SignedPermutation> collect(const ClassQuery& q, EnumerationMode mode) {
  std::vector<SignedPermutation> out;
  enumerate(q, [&](const SignedPermutation& w) { out.push_back(w); }, mode);
  return out;
}

namespace {

// Signed coefficient accumulator indexed by L.
struct Tally {
  std::vector<std::int64_t> counts;
  void add(int degree, std::int64_t delta) {
    if (degree >= static_cast<int>(counts.size())) counts.resize(degree + 1, 0);
    counts[degree] += delta;
  }
};

}  // namespace

UniPoly signed_sum(const ClassQuery& q, EnumerationMode mode) {
  Tally tally;
  enumerate(q, [&](const SignedPermutation& w) { tally.add(big_l(w), sign(w)); }, mode);
  return UniPoly::from_counts(tally.counts);
}

UniPoly s_poly(int n, const IndexSet& I, EnumerationMode mode) {
  if (I.rank() != n) throw std::invalid_argument("index set rank differs from n");
  return signed_sum(ClassQuery::descent_class(I), mode);
}

UniPoly s_poly_chessboard(int n, const IndexSet& I, EnumerationMode mode) {
  if (I.rank() != n) throw std::invalid_argument("index set rank differs from n");
  return signed_sum(ClassQuery::chessboard_class(I), mode);
}

UniPoly s_poly_pinned(int n, const IndexSet& I, int k, EnumerationMode mode) {
  if (I.rank() != n) throw std::invalid_argument("index set rank differs from n");
  return signed_sum(ClassQuery::pinned(I, k), mode);
}

BiPoly s_bipoly(int n, const IndexSet& I, EnumerationMode mode) {
  if (I.rank() != n) throw std::invalid_argument("index set rank differs from n");
  std::vector<Tally> by_length;
  enumerate(
      ClassQuery::descent_class(I),
      [&](const SignedPermutation& w) {
        const int l = length(w);
        if (l >= static_cast<int>(by_length.size())) by_length.resize(l + 1);
        by_length[l].add(big_l(w), 1);
      },
      mode);
  std::vector<UniPoly> terms;
  for (const auto& t : by_length) terms.push_back(UniPoly::from_counts(t.counts));
  return BiPoly(std::move(terms));
}

std::map<int, UniPoly> decompose_by_pinned_column(int n, const IndexSet& I, EnumerationMode mode) {
  if (I.rank() != n) throw std::invalid_argument("index set rank differs from n");
  std::vector<Tally> by_pin(n + 1);
  enumerate(
      ClassQuery::chessboard_class(I),
      [&](const SignedPermutation& w) { by_pin[pinned_column(w)].add(big_l(w), sign(w)); }, mode);
  std::map<int, UniPoly> out;
  for (int k = 0; k <= n; ++k) out[k] = UniPoly::from_counts(by_pin[k].counts);
  return out;
}

}  // namespace octavo
