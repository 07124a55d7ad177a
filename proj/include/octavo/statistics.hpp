#pragma once

#include <map>
#include <vector>

#include "octavo/signed_permutation.hpp"

namespace octavo {

// Half the number of pairs i < j in [-n, n] with w(i) > w(j) and i, j of
// opposite parity.
int big_l(const SignedPermutation& w);

struct AbcBreakdown {
  int a = 0;
  int b = 0;
  int c = 0;
  // Indexed by column j' in [1, n]; slot 0 unused.
  std::vector<int> per_column_b;
  std::vector<int> per_column_c;

  int total() const { return a + b + 2 * c; }
};

// a: odd columns holding -1.
// b_{j,j'}: j < j', i(j) > i(j'), j and j' of opposite parity.
// c_{j,j'}: j < j', column j' holds -1, i(j) < i(j'), opposite parity.
AbcBreakdown abc(const SignedPermutation& w);

struct UsCounts {
  int reference_column = 0;
  // Columns k > j holding -1, split by the parity of k ...
  std::vector<int> s_even, s_odd;
  // ... and by the parity of up_k = #{t in [1, j-1] : i(t) < i(k)}.
  std::vector<int> u_even, u_odd;
  std::map<int, int> up_per_column;

  int u_even_s_even() const;
  int u_even_s_odd() const;
  int u_odd_s_even() const;
  int u_odd_s_odd() const;
};

UsCounts us_counts(const SignedPermutation& w, int j);

}  // namespace octavo
