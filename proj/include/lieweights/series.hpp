#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lieweights/error.hpp"

namespace lieweights {

using BigInt = boost::multiprecision::cpp_int;

/// A power series in q truncated after q^N, with exact nonnegative
/// coefficients.
///
/// Coefficient m of any result is exact for every m <= N; terms above the
/// truncation order are never stored.
class IntSeries {
 public:
  /// The zero series of order `order`.
  explicit IntSeries(std::size_t order) : coeffs_(order + 1) {}

  explicit IntSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("IntSeries needs at least one coefficient");
    for (const auto& c : coeffs_)
      if (c < 0) throw std::invalid_argument("IntSeries coefficients must be nonnegative");
  }

  static IntSeries one(std::size_t order) {
    IntSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  const BigInt& coefficient(std::size_t m) const {
    if (m > order())
      throw range_error("coefficient q^" + std::to_string(m) +
                        " beyond truncation order " + std::to_string(order()));
    return coeffs_[m];
  }

  /// Same series viewed at a lower truncation order.
  IntSeries truncated(std::size_t order) const {
    if (order > this->order())
      throw range_error("cannot extend a truncated series");
    return IntSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Sum; the result is truncated at the smaller of the two orders.
inline IntSeries series_add(const IntSeries& a, const IntSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<BigInt> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out[i] = a.coeffs()[i] + b.coeffs()[i];
  return IntSeries(std::move(out));
}

/// Product; the result is truncated at the smaller of the two orders.
inline IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<BigInt> out(order + 1);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i <= order; ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j)
      if (bc[j] != 0) out[i + j] += ac[i] * bc[j];
  }
  return IntSeries(std::move(out));
}

/// a^k by binary exponentiation; a^0 is the constant series 1.
inline IntSeries series_pow(const IntSeries& a, unsigned long k) {
  IntSeries result = IntSeries::one(a.order());
  IntSeries base = a;
  while (k > 0) {
    if (k & 1UL) result = series_mul(result, base);
    k >>= 1;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

/// a(q^k): coefficient m moves to index k*m; indices past the order drop.
inline IntSeries series_substitute(const IntSeries& a, std::size_t k) {
  if (k < 1) throw contract_error("series_substitute requires k >= 1");
  std::vector<BigInt> coeffs(a.order() + 1);
  for (std::size_t m = 0; m * k <= a.order(); ++m) coeffs[m * k] = a.coeffs()[m];
  return IntSeries(std::move(coeffs));
}

inline const BigInt& coefficient(const IntSeries& a, std::size_t m) {
  return a.coefficient(m);
}

}  // namespace lieweights
