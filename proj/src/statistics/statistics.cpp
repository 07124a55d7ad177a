#include "octavo/statistics.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace octavo {

int big_l(const SignedPermutation& w) {
  const int n = w.rank();
  int pairs = 0;
  for (int i = -n; i <= n; ++i) {
    const int wi = w(i);
    // j runs over the opposite parity only.
    for (int j = i + 1; j <= n; j += 2)
      if (wi > w(j)) ++pairs;
  }
  if (pairs % 2 != 0) {
    std::fprintf(stderr, "big_l: odd pair count %d for window %s\n", pairs, w.to_text().c_str());
    std::abort();
  }
  return pairs / 2;
}

AbcBreakdown abc(const SignedPermutation& w) {
  const int n = w.rank();
  AbcBreakdown out;
  out.per_column_b.assign(n + 1, 0);
  out.per_column_c.assign(n + 1, 0);
  for (int j = 1; j <= n; j += 2)
    if (w.sign_in_column(j) < 0) ++out.a;
  for (int jp = 1; jp <= n; ++jp) {
    const int row_jp = w.row_of(jp);
    const bool minus = w.sign_in_column(jp) < 0;
    for (int j = jp - 1; j >= 1; j -= 2) {
      const int row_j = w.row_of(j);
      if (row_j > row_jp) ++out.per_column_b[jp];
      if (minus && row_j < row_jp) ++out.per_column_c[jp];
    }
    out.b += out.per_column_b[jp];
    out.c += out.per_column_c[jp];
  }
  return out;
}

namespace {
int count_common(const std::vector<int>& a, const std::vector<int>& b) {
  int n = 0;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) ++n;
  return n;
}
}  // namespace

int UsCounts::u_even_s_even() const { return count_common(u_even, s_even); }
int UsCounts::u_even_s_odd() const { return count_common(u_even, s_odd); }
int UsCounts::u_odd_s_even() const { return count_common(u_odd, s_even); }
int UsCounts::u_odd_s_odd() const { return count_common(u_odd, s_odd); }

UsCounts us_counts(const SignedPermutation& w, int j) {
  const int n = w.rank();
  if (j < 1 || j > n) throw std::invalid_argument("us_counts: column outside [1, n]");
  UsCounts out;
  out.reference_column = j;
  for (int k = j + 1; k <= n; ++k) {
    if (w.sign_in_column(k) > 0) continue;
    (k % 2 == 0 ? out.s_even : out.s_odd).push_back(k);
    int up = 0;
    for (int t = 1; t < j; ++t)
      if (w.row_of(t) < w.row_of(k)) ++up;
    out.up_per_column[k] = up;
    (up % 2 == 0 ? out.u_even : out.u_odd).push_back(k);
  }
  return out;
}

}  // namespace octavo
