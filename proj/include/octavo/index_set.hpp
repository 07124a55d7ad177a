#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace octavo {

// A subset of [0, n-1] kept sorted and duplicate-free.
class IndexSet {
public:
  IndexSet() = default;
  explicit IndexSet(int rank);
  // Throws std::invalid_argument on out-of-range or repeated members.
  IndexSet(int rank, std::vector<int> members);

  static IndexSet from_mask(int rank, std::uint32_t mask);
  static IndexSet full(int rank);
  // "0,4,7,9"; the empty string is the empty set.
  static IndexSet from_text(int rank, std::string_view text);

  int rank() const { return rank_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const;
  bool is_subset_of(const IndexSet& other) const;
  std::uint32_t mask() const;
  IndexSet complement() const;
  std::string to_text() const;

  // (j_0, ..., j_l) for the sequence I u {n}: j_0 = i_1, j_k = i_{k+1} - i_k,
  // and j_l = n - i_l.
  std::vector<int> gaps() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
  int rank_ = 0;
  std::vector<int> members_;
};

// Every subset of [0, n-1], in increasing mask order.
std::vector<IndexSet> all_subsets(int rank);

}  // namespace octavo
