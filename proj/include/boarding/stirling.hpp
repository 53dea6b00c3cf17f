#pragma once

#include <vector>

#include "boarding/rational.hpp"

namespace boarding {

/// Unsigned Stirling numbers of the first kind: c(n, j) counts the
/// permutations of {1..n} with exactly j cycles. Rows are built iteratively
/// with the triangular recurrence c(n,j) = c(n-1,j-1) + (n-1)*c(n-1,j) and
/// kept for reuse, which keeps a full-distribution query at n = 100 (about
/// 160-digit entries) to O(n^2) big-integer operations.
///
/// Instances are cheap and not synchronized; concurrent users should each
/// hold their own table.
class StirlingTable {
 public:
  explicit StirlingTable(int max_n = 0) { ensure(max_n); }

  void ensure(int n);

  /// c(n, j); out-of-range j yields 0.
  const BigInt& get(int n, int j);

  const std::vector<BigInt>& row(int n) {
    ensure(n);
    return rows_[n];
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
  static const BigInt kZero;
};

/// One-off convenience lookup.
BigInt stirling_first(int n, int j);

}  // namespace boarding
