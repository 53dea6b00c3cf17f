#include "boarding/stirling.hpp"

#include <stdexcept>

namespace boarding {

const BigInt StirlingTable::kZero = 0;

void StirlingTable::ensure(int n) {
  if (n < 0) throw std::invalid_argument("stirling: negative n");
  if (rows_.empty()) rows_.push_back({BigInt(1)});  // c(0, 0) = 1
  for (int m = static_cast<int>(rows_.size()); m <= n; ++m) {
    std::vector<BigInt> row(m + 1);
    row[0] = 0;
    const auto& prev = rows_[m - 1];
    for (int j = 1; j <= m; ++j) {
      row[j] = prev[j - 1];
      if (j < m) row[j] += BigInt(m - 1) * prev[j];
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& StirlingTable::get(int n, int j) {
  if (j < 0 || j > n) return kZero;
  ensure(n);
  return rows_[n][j];
}

BigInt stirling_first(int n, int j) {
  StirlingTable table;
  return table.get(n, j);
}

}  // namespace boarding
