#include "octavo/signed_permutation.hpp"

#include <cassert>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace octavo {

namespace {

void validate(std::span<const int> window) {
  const int n = static_cast<int>(window.size());
  if (n < 1) throw std::invalid_argument("signed permutation needs rank >= 1");
  if (n > kWindowCapacity)
    throw std::invalid_argument("rank " + std::to_string(n) + " exceeds window capacity " +
                                std::to_string(kWindowCapacity));
  std::array<bool, kWindowCapacity + 1> seen{};
  for (int v : window) {
    int a = std::abs(v);
    if (a < 1 || a > n)
      throw std::invalid_argument("window entry " + std::to_string(v) + " outside [-" + std::to_string(n) +
                                  ", " + std::to_string(n) + "] or zero");
    if (seen[a]) throw std::invalid_argument("window repeats |" + std::to_string(a) + "|");
    seen[a] = true;
  }
}

void check_rank(const SignedPermutation& w, int index, const char* what) {
  if (index < 1 || index > w.rank())
    throw std::out_of_range(std::string(what) + " " + std::to_string(index) + " outside [1, " +
                            std::to_string(w.rank()) + "]");
}

}  // namespace

SignedPermutation::SignedPermutation(std::span<const int> window) : rank_(static_cast<int>(window.size())) {
  validate(window);
  for (int t = 0; t < rank_; ++t) slots_[t] = static_cast<std::int8_t>(window[t]);
}

SignedPermutation::SignedPermutation(std::initializer_list<int> window)
    : SignedPermutation(std::span<const int>(window.begin(), window.size())) {}

SignedPermutation SignedPermutation::from_text(std::string_view text) {
  std::vector<int> values;
  if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  while (true) {
    auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (!piece.empty() && piece.front() == '+') piece.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      throw std::invalid_argument("cannot parse window entry '" + std::string(piece) + "'");
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return SignedPermutation(values);
}

std::vector<int> SignedPermutation::window() const {
  std::vector<int> out(rank_);
  for (int t = 0; t < rank_; ++t) out[t] = slots_[t];
  return out;
}

std::string SignedPermutation::to_text() const {
  std::string out;
  for (int t = 0; t < rank_; ++t) {
    if (t) out += ',';
    out += std::to_string(int{slots_[t]});
  }
  return out;
}

int SignedPermutation::row_of(int column) const {
  check_rank(*this, column, "column");
  return std::abs(int{slots_[column - 1]});
}

int SignedPermutation::column_of(int row) const {
  check_rank(*this, row, "row");
  for (int t = 0; t < rank_; ++t)
    if (std::abs(int{slots_[t]}) == row) return t + 1;
  assert(false && "window is not a signed permutation");
  return 0;
}

int SignedPermutation::sign_in_column(int column) const {
  check_rank(*this, column, "column");
  return slots_[column - 1] > 0 ? 1 : -1;
}

int SignedPermutation::sign_in_row(int row) const { return sign_in_column(column_of(row)); }

int SignedPermutation::entry(int row, int column) const {
  check_rank(*this, row, "row");
  int v = (*this)(column);
  if (v == row) return 1;
  if (v == -row) return -1;
  return 0;
}

SignedPermutation WindowBuilder::build() const {
#ifndef NDEBUG
  validate(std::span<const int>(value_.window()));
#endif
  return value_;
}

SignedPermutation identity(int n) {
  if (n < 1 || n > kWindowCapacity) throw std::invalid_argument("identity needs 1 <= n <= capacity");
  WindowBuilder b(n);
  for (int t = 1; t <= n; ++t) b.set(t, t);
  return b.build();
}

SignedPermutation generator(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("generator index " + std::to_string(i) + " outside [0, n-1]");
  WindowBuilder b(identity(n));
  if (i == 0) {
    b.set(1, -1);
  } else {
    b.set(i, i + 1);
    b.set(i + 1, i);
  }
  return b.build();
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("compose: rank mismatch");
  SignedPermutation out(SignedPermutation::Unchecked{}, u.rank());
  for (int t = 1; t <= u.rank(); ++t) out.slots_[t - 1] = static_cast<std::int8_t>(u(v(t)));
  return out;
}

SignedPermutation inverse(const SignedPermutation& w) {
  SignedPermutation out(SignedPermutation::Unchecked{}, w.rank());
  for (int t = 1; t <= w.rank(); ++t) {
    int v = w(t);
    out.slots_[std::abs(v) - 1] = static_cast<std::int8_t>(v > 0 ? t : -t);
  }
  return out;
}

SignedPermutation left_multiply(int i, const SignedPermutation& w) {
  const int n = w.rank();
  if (i < 0 || i >= n) throw std::invalid_argument("generator index outside [0, n-1]");
  WindowBuilder b(w);
  for (int t = 1; t <= n; ++t) {
    int v = w(t);
    int a = std::abs(v);
    int s = v > 0 ? 1 : -1;
    if (i == 0) {
      if (a == 1) b.set(t, -v);
    } else if (a == i) {
      b.set(t, s * (i + 1));
    } else if (a == i + 1) {
      b.set(t, s * i);
    }
  }
  return b.build();
}

SignedPermutation right_multiply(const SignedPermutation& w, int i) {
  const int n = w.rank();
  if (i < 0 || i >= n) throw std::invalid_argument("generator index outside [0, n-1]");
  WindowBuilder b(w);
  if (i == 0) {
    b.set(1, -w(1));
  } else {
    b.set(i, w(i + 1));
    b.set(i + 1, w(i));
  }
  return b.build();
}

SignedPermutation left_multiply_word(std::span<const int> word, const SignedPermutation& w) {
  SignedPermutation x = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_multiply(*it, x);
  return x;
}

int inversions(const SignedPermutation& w) {
  int count = 0;
  for (int i = 1; i <= w.rank(); ++i)
    for (int j = i + 1; j <= w.rank(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

int length(const SignedPermutation& w) {
  int total = inversions(w);
  for (int t = 1; t <= w.rank(); ++t)
    if (w(t) < 0) total -= w(t);
  return total;
}

int sign(const SignedPermutation& w) { return length(w) % 2 == 0 ? 1 : -1; }

IndexSet descent_set(const SignedPermutation& w) {
  std::vector<int> members;
  for (int i = 0; i < w.rank(); ++i)
    if (w(i) > w(i + 1)) members.push_back(i);
  return IndexSet(w.rank(), std::move(members));
}

bool is_chessboard(const SignedPermutation& w) {
  for (int t = 1; t <= w.rank(); ++t)
    if ((std::abs(w(t)) - t) % 2 != 0) return false;
  return true;
}

int pinned_column(const SignedPermutation& w) {
  const int n = w.rank();
  for (int t = 1; t <= n; ++t) {
    if (w(t) == n) return t;
    if (w(t) == -n) return t - 1;
  }
  assert(false);
  return -1;
}

}  // namespace octavo
