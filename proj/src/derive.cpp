#include "boarding/derive.hpp"

#include <algorithm>

namespace boarding {

int wrong_count(const Placement& p) {
  int wrong = 0;
  for (int ball = 1; ball <= p.n(); ++ball) {
    if (p.seat(ball) != ball) ++wrong;
  }
  return wrong;
}

DisplacedSeatTrace displaced_seat_trace(const Placement& p) {
  if (p.config().k() != 1) {
    throw std::invalid_argument(
        "displaced_seat_trace: defined only for k = 1 placements");
  }
  const int n = p.n();
  DisplacedSeatTrace trace;
  trace.seats.resize(n);
  std::int32_t running_min = p.seat(1);
  std::int32_t running_max = p.seat(1);
  for (int ball = 1; ball <= n; ++ball) {
    running_min = std::min(running_min, p.seat(ball));
    running_max = std::max(running_max, p.seat(ball));
    trace.seats[ball - 1] = running_min == 1 ? 1 : running_max;
  }
  return trace;
}

DisplacedSetTrace displaced_set_trace(const Placement& p) {
  const int n = p.n();
  const int k = p.config().k();
  DisplacedSetTrace trace;
  trace.first_index = k;
  trace.sets.reserve(n - k + 1);

  std::vector<std::int32_t> current(p.seats().begin(),
                                    p.seats().begin() + k);
  std::sort(current.begin(), current.end());
  trace.sets.push_back(current);

  for (int ball = k + 1; ball <= n; ++ball) {
    // Occupied pits gain seat(ball); the settled block absorbs pit `ball`.
    const std::int32_t taken = p.seat(ball);
    if (taken != ball) {
      current.erase(std::find(current.begin(), current.end(), ball));
      current.insert(
          std::upper_bound(current.begin(), current.end(), taken), taken);
    }
    trace.sets.push_back(current);
  }
  return trace;
}

}  // namespace boarding
