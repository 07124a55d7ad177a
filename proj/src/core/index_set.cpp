#include "octavo/index_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace octavo {

IndexSet::IndexSet(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("index set rank must be positive");
}

IndexSet::IndexSet(int rank, std::vector<int> members) : rank_(rank), members_(std::move(members)) {
  if (rank < 1) throw std::invalid_argument("index set rank must be positive");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("index set has a repeated member");
  for (int i : members_)
    if (i < 0 || i >= rank)
      throw std::invalid_argument("index set member " + std::to_string(i) + " outside [0, " +
                                  std::to_string(rank - 1) + "]");
}

IndexSet IndexSet::from_mask(int rank, std::uint32_t mask) {
  std::vector<int> members;
  for (int i = 0; i < rank; ++i)
    if (mask >> i & 1u) members.push_back(i);
  return IndexSet(rank, std::move(members));
}

IndexSet IndexSet::full(int rank) {
  return from_mask(rank, rank >= 32 ? ~0u : (1u << rank) - 1u);
}

IndexSet IndexSet::from_text(int rank, std::string_view text) {
  std::vector<int> members;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "{}") return IndexSet(rank);
  if (text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  while (true) {
    auto comma = text.find(',');
    auto piece = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      throw std::invalid_argument("cannot parse index set member '" + std::string(piece) + "'");
    members.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return IndexSet(rank, std::move(members));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::uint32_t IndexSet::mask() const {
  std::uint32_t m = 0;
  for (int i : members_) m |= 1u << i;
  return m;
}

IndexSet IndexSet::complement() const {
  std::vector<int> rest;
  for (int i = 0; i < rank_; ++i)
    if (!contains(i)) rest.push_back(i);
  return IndexSet(rank_, std::move(rest));
}

std::string IndexSet::to_text() const {
  std::string out;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(members_[k]);
  }
  return out;
}

std::vector<int> IndexSet::gaps() const {
  std::vector<int> out;
  int previous = 0;
  for (int i : members_) {
    out.push_back(i - previous);
    previous = i;
  }
  out.push_back(rank_ - previous);
  return out;
}

std::vector<IndexSet> all_subsets(int rank) {
  std::vector<IndexSet> out;
  out.reserve(std::size_t{1} << rank);
  for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) out.push_back(IndexSet::from_mask(rank, mask));
  return out;
}

}  // namespace octavo
