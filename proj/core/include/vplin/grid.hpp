#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vplin/errors.hpp"

namespace vplin {

/// Uniform grid "a:b:n" — n points from a to b inclusive (n >= 1).
struct GridSpec {
  double a = 0.0;
  double b = 0.0;
  int n = 0;

  static GridSpec parse(const std::string& s);
  std::vector<double> points() const;
};

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// Runs body(i) for i in [0, n) on up to `threads` workers. Work is
/// assigned by index so any result written to slot i is independent of
/// scheduling; pass threads <= 1 for serial execution.
void parallel_for(int n, int threads, const std::function<void(int)>& body);

}  // namespace vplin
