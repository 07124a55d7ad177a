#include "octavo/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "octavo/errors.hpp"
#include "octavo/signed_permutation.hpp"

namespace octavo {

int rank_cap() {
  const char* text = std::getenv("OCTAVO_MAX_RANK");
  if (text == nullptr || *text == '\0') return kDefaultRankCap;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text, text + std::strlen(text), value);
  if (ec != std::errc() || *ptr != '\0' || value < 1) return kDefaultRankCap;
  return value > kWindowCapacity ? kWindowCapacity : value;
}

void require_rank_within_cap(int n) {
  int cap = rank_cap();
  if (n < 1 || n > cap)
    throw RankCapError("rank " + std::to_string(n) + " outside [1, " + std::to_string(cap) +
                       "] (raise OCTAVO_MAX_RANK to go higher)");
}

}  // namespace octavo
