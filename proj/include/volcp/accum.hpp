#pragma once

// Compensated (Kahan-Neumaier) accumulation for long sums of powers of
// increments, where terms span many orders of magnitude.

#include <cmath>

namespace volcp {

struct kahan_sum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace volcp
