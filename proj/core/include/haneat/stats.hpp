#pragma once

#include <span>

namespace haneat {

/// Linear-interpolation quantile of the sorted values at index (n - 1) * q.
double quantile(std::span<const double> values, double q);

double median(std::span<const double> values);

struct Quartiles {
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
};

Quartiles quartiles(std::span<const double> values);

}  // namespace haneat
