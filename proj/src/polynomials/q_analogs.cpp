#include "octavo/q_analogs.hpp"

#include <algorithm>
#include <stdexcept>

namespace octavo {

UniPoly q_bracket(int m) {
  if (m < 0) throw std::invalid_argument("q_bracket of a negative integer");
  if (m == 0) return UniPoly{1};
  return UniPoly{1} - UniPoly::monomial(1, m);
}

UniPoly q_factorial(int m) {
  UniPoly out{1};
  for (int i = 1; i <= m; ++i) out *= q_bracket(i);
  return out;
}

UniPoly q_double_factorial(int m) {
  if (m < 0) throw std::invalid_argument("q_double_factorial of a negative integer");
  UniPoly out{1};
  for (int i = 2; i <= m; i += 2) out *= q_bracket(i);
  return out;
}

UniPoly gaussian_multinomial(int n, std::span<const int> parts) {
  int total = 0;
  UniPoly den{1};
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative multinomial part");
    total += p;
    den *= q_factorial(p);
  }
  if (total != n) throw std::invalid_argument("multinomial parts do not sum to n");
  return exact_divide(q_factorial(n), den);
}

namespace {

struct Normalized {
  bool negative = false;
  std::vector<int> seq;  // i_1 < ... < i_l < n, then n
};

Normalized normalize_entries(int n, std::span<const int> entries) {
  if (n < 1) throw std::invalid_argument("f_poly needs n >= 1");
  Normalized out;
  out.seq.assign(entries.begin(), entries.end());
  std::sort(out.seq.begin(), out.seq.end());
  out.seq.erase(std::unique(out.seq.begin(), out.seq.end()), out.seq.end());
  for (int i : out.seq) {
    if (i < 0) out.negative = true;
    if (i > n) throw std::invalid_argument("f_poly entry " + std::to_string(i) + " exceeds n = " + std::to_string(n));
  }
  if (out.seq.empty() || out.seq.back() != n) out.seq.push_back(n);
  return out;
}

}  // namespace

UniPoly f_poly(int n, std::span<const int> entries) {
  auto norm = normalize_entries(n, entries);
  if (norm.negative) return {};
  const auto& seq = norm.seq;
  UniPoly den = q_factorial(seq.front());
  for (std::size_t k = 1; k < seq.size(); ++k) den *= q_double_factorial(seq[k] - seq[k - 1]);
  return exact_divide(q_factorial(n), den);
}

UniPoly f_poly(int n, const IndexSet& I) { return f_poly(n, std::span<const int>(I.members())); }

UniPoly f_poly_alternate(int n, std::span<const int> entries) {
  auto norm = normalize_entries(n, entries);
  if (norm.negative) return {};
  const auto& seq = norm.seq;
  std::vector<int> parts{seq.front()};
  UniPoly odd_part{1};
  for (std::size_t k = 1; k < seq.size(); ++k) {
    int gap = seq[k] - seq[k - 1];
    parts.push_back(gap);
    for (int i = 1; i <= gap; i += 2) odd_part *= q_bracket(i);
  }
  return gaussian_multinomial(n, parts) * odd_part;
}

UniPoly f_poly_alternate(int n, const IndexSet& I) {
  return f_poly_alternate(n, std::span<const int>(I.members()));
}

std::vector<int> i_shift(std::span<const int> entries, int k) {
  const int l = static_cast<int>(entries.size());
  if (k < 1 || k > l + 1) throw std::invalid_argument("i_shift index outside [1, l+1]");
  std::vector<int> out(entries.begin(), entries.end());
  if (k == l + 1) return out;
  for (int t = k - 1; t < l; ++t) --out[t];
  if (k >= 2 && out[k - 1] == out[k - 2]) out.erase(out.begin() + (k - 2));
  return out;
}

std::vector<int> i_shift(const IndexSet& I, int k) { return i_shift(std::span<const int>(I.members()), k); }

int last_odd_gap_index(const IndexSet& I) {
  auto gaps = I.gaps();
  int m = 0;
  for (int k = 1; k < static_cast<int>(gaps.size()); ++k)
    if (gaps[k] % 2 != 0) m = k;
  return m;
}

UniPoly f_recursion_rhs(int n, const IndexSet& I) {
  if (n < 2) throw std::invalid_argument("the recursion needs n >= 2");
  const auto& members = I.members();
  const int l = I.size();
  auto upper = [&](int k) { return k <= l ? members[k - 1] : n; };  // i_k with i_{l+1} = n
  const int m = last_odd_gap_index(I);
  UniPoly rhs;
  int first = 0;
  if (m > 0) {
    rhs -= f_poly(n - 1, i_shift(I, m + 1)).shifted(n);
    first = m;
  }
  for (int t = first; t <= l; ++t) rhs += f_poly(n - 1, i_shift(I, t + 1)).shifted(n - upper(t + 1));
  return rhs;
}

bool f_recursion_check(int n, const IndexSet& I) { return f_recursion_rhs(n, I) == f_poly(n, I); }

}  // namespace octavo
