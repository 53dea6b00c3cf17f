#pragma once

#include <map>

#include "boarding/rational.hpp"

namespace boarding {

struct MomentSummary {
  BigRational mean;
  BigRational variance;
};

/// A probability law on a finite set of nonnegative integers with exact
/// rational masses. Only strictly positive masses are stored; mass_at
/// returns 0 for values outside the support.
class ExactDistribution {
 public:
  void set(int value, BigRational probability);

  const std::map<int, BigRational>& pmf() const { return pmf_; }
  BigRational mass_at(int value) const;
  BigRational total_mass() const;
  bool is_normalized() const { return total_mass() == 1; }

  /// Exact mean and variance.
  MomentSummary moments() const;

  /// Smallest argmax of the pmf.
  int mode() const;

  friend bool operator==(const ExactDistribution&,
                         const ExactDistribution&) = default;

 private:
  std::map<int, BigRational> pmf_;
};

}  // namespace boarding
