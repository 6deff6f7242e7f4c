#pragma once

#include <cstddef>
#include <vector>

#include "lieweights/error.hpp"
#include "lieweights/series.hpp"

namespace lieweights {

/// p(0), ..., p(n) via Euler's pentagonal-number recurrence.
inline std::vector<BigInt> partition_counts(std::size_t n) {
  std::vector<BigInt> p(n + 1);
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      BigInt term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[m] = acc;
  }
  return p;
}

inline BigInt partition_count(std::size_t n) { return partition_counts(n)[n]; }

/// Number of ordered pairs of partitions of total size n.
inline BigInt bipartition_count(std::size_t n) {
  const auto p = partition_counts(n);
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += p[k] * p[n - k];
  return total;
}

/// Generating function of ell-core partitions, truncated after q^order:
/// prod_{k>=1} (1 - q^{ell k})^ell / (1 - q^k).
inline IntSeries core_count_series(unsigned ell, std::size_t order) {
  if (ell < 2) throw contract_error("core_count_series requires ell >= 2");
  std::vector<BigInt> c = partition_counts(order);
  for (std::size_t step = ell; step <= order; step += ell)
    for (unsigned rep = 0; rep < ell; ++rep)
      for (std::size_t i = order; i >= step; --i) c[i] -= c[i - step];
  return IntSeries(std::move(c));
}

}  // namespace lieweights
