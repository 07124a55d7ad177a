#pragma once

#include <span>
#include <vector>

#include "octavo/index_set.hpp"
#include "octavo/polynomial.hpp"

namespace octavo {

// (m) = 1 - X^m, with (0) = 1.
UniPoly q_bracket(int m);
// (m)! = (m)(m-1)...(1).
UniPoly q_factorial(int m);
// (m)!! = product of (i) over even i with 2 <= i <= m.
UniPoly q_double_factorial(int m);
// (n)! / prod_k (parts_k)!; parts must sum to n.
UniPoly gaussian_multinomial(int n, std::span<const int> parts);

// f_{n,I} from a raw entry list. Entries are sorted and deduplicated
// first; any negative entry gives the zero polynomial. An entry equal to n
// coincides with the terminal n of I u {n}. Throws std::invalid_argument
// for entries above n.
UniPoly f_poly(int n, std::span<const int> entries);
UniPoly f_poly(int n, const IndexSet& I);

// The same value as a Gaussian multinomial over (i_1, j_1, ..., j_l) times
// the odd-bracket products of each j_k.
UniPoly f_poly_alternate(int n, std::span<const int> entries);
UniPoly f_poly_alternate(int n, const IndexSet& I);

// I^{(k)} for k in [1, l+1], on raw sorted entries. For k <= l the entries
// i_k, ..., i_l drop by one and a resulting duplicate of i_{k-1} is removed.
std::vector<int> i_shift(std::span<const int> entries, int k);
std::vector<int> i_shift(const IndexSet& I, int k);

// Largest m in [1, l] with j_m odd; 0 when every j_1, ..., j_l is even.
int last_odd_gap_index(const IndexSet& I);

// The right-hand side of the rank-n recursion, built from rank n-1 values.
UniPoly f_recursion_rhs(int n, const IndexSet& I);
bool f_recursion_check(int n, const IndexSet& I);

}  // namespace octavo
