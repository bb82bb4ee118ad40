#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace acq {

// Counting bound for the barbell: an m-round strategy with k bridge swaps
// needs m + 1 >= 2k + (ceil(n/2) - k)(floor(n/2) - k) configurations.
struct BarbellBound {
  std::size_t n = 0;
  std::vector<std::uint64_t> per_k;  // k = 0 .. floor(n/2)
  std::size_t argmin_k = 0;
  std::uint64_t min_over_k = 0;
  std::uint64_t lower_bound = 0;     // min_over_k - 1, a bound on m
  // The same quadratic at the real minimizer k = n/2 - 1.
  double continuous_min = 0.0;
};

// Requires n >= 2. Throws std::logic_error if the integer minimum does not
// give exactly n - 2.
BarbellBound barbell_lower_bound(std::size_t n);

// 20 * max_degree * n.
std::size_t contour_bound(std::size_t n, std::size_t max_degree);

}  // namespace acq
