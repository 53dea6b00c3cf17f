#pragma once

#include <cstdint>
#include <vector>

#include "boarding/types.hpp"

namespace boarding {

/// Number of balls that miss their assigned pit: |{i : seat(i) != i}|.
int wrong_count(const Placement& p);

/// Per-step trace of the single displaced seat when k = 1.
/// seat_after(i) is 1 if pit 1 is occupied after ball i was placed,
/// otherwise the unique occupied pit with number > i. Equivalently:
/// 1 if min(N_1..N_i) = 1, else max(N_1..N_i).
struct DisplacedSeatTrace {
  std::vector<std::int32_t> seats;  // entry i-1 holds the value after ball i

  std::int32_t seat_after(int ball) const { return seats[ball - 1]; }
};

/// Requires a k = 1 placement.
DisplacedSeatTrace displaced_seat_trace(const Placement& p);

/// Per-step trace of the k occupied pits outside the settled block, for
/// general k. For i in {k,..,n}, set_after(i) is the set of occupied pits
/// minus {k+1,..,i}; it always has exactly k elements and is contained in
/// {1,..,k} union {i+1,..,n}.
struct DisplacedSetTrace {
  int first_index = 0;                            // equals k
  std::vector<std::vector<std::int32_t>> sets;    // sorted ascending

  const std::vector<std::int32_t>& set_after(int ball) const {
    return sets[ball - first_index];
  }
};

DisplacedSetTrace displaced_set_trace(const Placement& p);

}  // namespace boarding
