#include "acq/bounds.hpp"

#include <stdexcept>
#include <string>

#include "acq/error.hpp"

namespace acq {

BarbellBound barbell_lower_bound(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "barbell bound needs n >= 2");
  BarbellBound b;
  b.n = n;
  const std::uint64_t big = (n + 1) / 2;
  const std::uint64_t small = n / 2;
  b.per_k.reserve(small + 1);
  for (std::uint64_t k = 0; k <= small; ++k) {
    const std::uint64_t value = 2 * k + (big - k) * (small - k);
    if (b.per_k.empty() || value < b.min_over_k) {
      b.min_over_k = value;
      b.argmin_k = k;
    }
    b.per_k.push_back(value);
  }
  b.lower_bound = b.min_over_k - 1;

  const double k = static_cast<double>(n) / 2.0 - 1.0;
  const double nd = static_cast<double>(n);
  b.continuous_min = k * k - (nd - 2.0) * k + static_cast<double>(big * small);

  if (b.lower_bound != n - 2) {
    throw std::logic_error("barbell bound for n=" + std::to_string(n) + " gave " +
                           std::to_string(b.lower_bound) + ", expected n-2");
  }
  return b;
}

std::size_t contour_bound(std::size_t n, std::size_t max_degree) { return 20 * max_degree * n; }

}  // namespace acq
