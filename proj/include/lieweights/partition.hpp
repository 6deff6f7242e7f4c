#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieweights/error.hpp"

namespace lieweights {

/// Default cap on `partitions_of`; p(60) is just under a million.
inline constexpr unsigned kDefaultEnumerationBound = 60;

/// An integer partition stored largest part first.
///
/// The empty partition is the unique partition of 0. Construction rejects
/// zero parts and increasing sequences rather than silently normalising.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<unsigned> parts)
      : Partition(std::vector<unsigned>(parts)) {}

  std::span<const unsigned> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  unsigned operator[](std::size_t i) const { return parts_.at(i); }

  unsigned size() const noexcept {
    unsigned total = 0;
    for (unsigned p : parts_) total += p;
    return total;
  }

  Partition conjugate() const {
    std::vector<unsigned> cols(parts_.empty() ? 0 : parts_.front(), 0);
    for (unsigned p : parts_)
      for (unsigned j = 0; j < p; ++j) ++cols[j];
    return Partition(std::move(cols));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

inline std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << to_string(p);
}

namespace detail {

inline void partitions_rec(unsigned remaining, unsigned max_part,
                           std::vector<unsigned>& prefix,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Every partition of n, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(
    unsigned n, unsigned bound = kDefaultEnumerationBound) {
  if (n > bound)
    throw resource_error("partitions_of(" + std::to_string(n) +
                         ") exceeds enumeration bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  detail::partitions_rec(n, n, prefix, out);
  return out;
}

/// Hook lengths of every cell, as a multiset sorted in decreasing order.
inline std::vector<unsigned> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<unsigned> hooks;
  hooks.reserve(lambda.size());
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (std::size_t j = 0; j < lambda[i]; ++j)
      hooks.push_back(static_cast<unsigned>((lambda[i] - j) + (conj[j] - i) - 1));
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

inline bool is_ell_core(const Partition& lambda, unsigned ell) {
  if (ell < 2) throw contract_error("is_ell_core requires ell >= 2");
  for (unsigned h : hook_lengths(lambda))
    if (h % ell == 0) return false;
  return true;
}

/// The ell-core of lambda, computed on an ell-runner abacus.
///
/// Beads of the beta-set are pushed to the top of their runner; each unit a
/// bead moves up corresponds to removing one rim ell-hook.
inline Partition ell_core_of(const Partition& lambda, unsigned ell) {
  if (ell < 2) throw contract_error("ell_core_of requires ell >= 2");
  const std::size_t r = lambda.length();
  std::vector<std::size_t> per_runner(ell, 0);
  for (std::size_t i = 0; i < r; ++i)
    ++per_runner[(lambda[i] + (r - 1 - i)) % ell];

  std::vector<std::size_t> beads;
  beads.reserve(r);
  for (unsigned runner = 0; runner < ell; ++runner)
    for (std::size_t k = 0; k < per_runner[runner]; ++k)
      beads.push_back(runner + k * ell);
  std::sort(beads.begin(), beads.end(), std::greater<>());

  std::vector<unsigned> parts;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t part = beads[i] - (r - 1 - i);
    if (part == 0) break;
    parts.push_back(static_cast<unsigned>(part));
  }
  return Partition(std::move(parts));
}

/// All partitions obtained from lambda by removing a single rim hook of
/// length ell, one per cell whose hook length is exactly ell.
///
/// Works on the Young diagram directly (no beta-sets), so it serves as an
/// independent check of `ell_core_of`.
inline std::vector<Partition> rim_hook_removals(const Partition& lambda,
                                                unsigned ell) {
  if (ell < 1) throw contract_error("rim hook length must be positive");
  const Partition conj = lambda.conjugate();
  std::vector<Partition> out;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (std::size_t j = 0; j < lambda[i]; ++j) {
      const std::size_t arm = lambda[i] - j - 1;
      const std::size_t leg = conj[j] - i - 1;
      if (arm + leg + 1 != ell) continue;
      std::vector<unsigned> parts(lambda.parts().begin(), lambda.parts().end());
      for (std::size_t row = i; row < i + leg; ++row)
        parts[row] = lambda[row + 1] - 1;
      parts[i + leg] = static_cast<unsigned>(j);
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

}  // namespace lieweights
