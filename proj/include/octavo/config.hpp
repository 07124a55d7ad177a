#pragma once

namespace octavo {

inline constexpr int kDefaultRankCap = 12;

// The cap comes from OCTAVO_MAX_RANK when set and valid, else the default.
// Never exceeds kWindowCapacity.
int rank_cap();

// Throws RankCapError when n is outside [1, rank_cap()].
void require_rank_within_cap(int n);

}  // namespace octavo
