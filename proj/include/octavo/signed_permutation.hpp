#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "octavo/index_set.hpp"

namespace octavo {

// Hard ceiling on the inline window buffer. The configurable rank cap
// (see config.hpp) must stay at or below this.
inline constexpr int kWindowCapacity = 32;

// An element of B_n stored in window notation w(1), ..., w(n).
// The matrix is a view: entry (i, j) is +1 iff w(j) = i, -1 iff w(j) = -i.
class SignedPermutation {
public:
  SignedPermutation() = default;

  // Throws std::invalid_argument unless the absolute values are a
  // permutation of 1..n.
  explicit SignedPermutation(std::span<const int> window);
  SignedPermutation(std::initializer_list<int> window);

  static SignedPermutation from_text(std::string_view text);

  int rank() const { return rank_; }

  // w(t) for t in [-n, n], with w(0) = 0 and w(-t) = -w(t).
  int operator()(int t) const {
    if (t > 0) return slots_[t - 1];
    if (t < 0) return -slots_[-t - 1];
    return 0;
  }

  std::vector<int> window() const;
  std::string to_text() const;

  // Matrix view. row_of(column) = |w(column)|, column_of(row) = |w^{-1}(row)|.
  int row_of(int column) const;
  int column_of(int row) const;
  // Sign of the nonzero entry in the given column / row.
  int sign_in_column(int column) const;
  int sign_in_row(int row) const;
  // Entry w_{i,j} in {-1, 0, 1}.
  int entry(int row, int column) const;

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.rank_ == b.rank_ && a.slots_ == b.slots_;
  }
  friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.slots_ <=> b.slots_;
  }

private:
  struct Unchecked {};
  SignedPermutation(Unchecked, int rank) : rank_(rank) {}

  friend class WindowBuilder;
  friend SignedPermutation compose(const SignedPermutation&, const SignedPermutation&);
  friend SignedPermutation inverse(const SignedPermutation&);

  int rank_ = 0;
  std::array<std::int8_t, kWindowCapacity> slots_{};
};

// Assembles windows without per-slot validation; used by the enumerator
// and by moves that are permutations by construction.
class WindowBuilder {
public:
  explicit WindowBuilder(int rank) : value_(SignedPermutation::Unchecked{}, rank) {}
  explicit WindowBuilder(const SignedPermutation& start) : value_(start) {}
  void set(int position, int value) { value_.slots_[position - 1] = static_cast<std::int8_t>(value); }
  int get(int position) const { return value_.slots_[position - 1]; }
  int rank() const { return value_.rank_; }
  // Validates in debug builds.
  SignedPermutation build() const;

private:
  SignedPermutation value_;
};

SignedPermutation identity(int n);
SignedPermutation generator(int n, int i);
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);
SignedPermutation inverse(const SignedPermutation& w);

// s_i * w: acts on values (rows of the matrix).
SignedPermutation left_multiply(int i, const SignedPermutation& w);
// w * s_i: acts on positions (columns of the matrix).
SignedPermutation right_multiply(const SignedPermutation& w, int i);
// s_{word[0]} s_{word[1]} ... s_{word[m-1]} * w.
SignedPermutation left_multiply_word(std::span<const int> word, const SignedPermutation& w);

int sign(const SignedPermutation& w);
int length(const SignedPermutation& w);
int inversions(const SignedPermutation& w);
IndexSet descent_set(const SignedPermutation& w);
bool is_chessboard(const SignedPermutation& w);

// Column k with w(k) = n or w(k+1) = -n; lies in [0, n].
int pinned_column(const SignedPermutation& w);

}  // namespace octavo
