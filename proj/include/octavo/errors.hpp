#pragma once

#include <stdexcept>
#include <string>

namespace octavo {

// Input outside the domain an operation is defined on (as opposed to a
// property that was evaluated and found false).
class PreconditionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class RankCapError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

}  // namespace octavo
