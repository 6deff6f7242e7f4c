#pragma once

// Brute-force reference computations. Nothing in here touches the series
// code: cores come from filtering explicit partitions, and weight counts
// come from listing assignments and orbits one by one.

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "lieweights/lieweights.hpp"

namespace lieweights::oracle {

/// All ell-cores of size <= max_size, grouped by size, by hook filtering.
inline std::vector<std::vector<Partition>> cores_by_size(unsigned ell, unsigned max_size) {
  std::vector<std::vector<Partition>> out(max_size + 1);
  for (unsigned m = 0; m <= max_size; ++m)
    for (auto& p : partitions_of(m))
      if (is_ell_core(p, ell)) out[m].push_back(std::move(p));
  return out;
}

/// c_3(m) = d_1(3m+1) - d_2(3m+1), divisors counted by residue mod 3.
inline long three_core_count_by_divisors(unsigned m) {
  const unsigned n = 3 * m + 1;
  long d1 = 0, d2 = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    if (d % 3 == 1) ++d1;
    if (d % 3 == 2) ++d2;
  }
  return d1 - d2;
}

/// Number of defect-zero characters of the base of a wreath, listed
/// factor by factor.
inline unsigned long base_character_count(const Automizer& node, unsigned ell) {
  switch (node.kind()) {
    case Automizer::Kind::Atom: {
      const Atom& a = node.atom();
      switch (a.kind) {
        case AtomKind::FiniteSymplectic: return 1;
        case AtomKind::FiniteGeneralLinear: return ell - 1;
        case AtomKind::OrderTwo: return 2;
        case AtomKind::MinusOrthogonal: return a.param == 0 ? 1 : 0;
        case AtomKind::Named: break;
      }
      throw contract_error("oracle cannot evaluate named atoms");
    }
    case Automizer::Kind::Product: {
      unsigned long k = 1;
      for (const auto& c : node.children()) k *= base_character_count(c, ell);
      return k;
    }
    default: throw contract_error("oracle expects atom/product bases");
  }
}

using Assignment = std::vector<Partition>;

/// Every map {0..k-1} -> ell-cores with total size m, listed explicitly.
inline std::vector<Assignment> list_assignments(unsigned ell, unsigned long k, unsigned m) {
  const auto cores = cores_by_size(ell, m);
  std::vector<Assignment> out;
  Assignment current;
  std::function<void(unsigned long, unsigned)> rec = [&](unsigned long slot, unsigned left) {
    if (slot == k) {
      if (left == 0) out.push_back(current);
      return;
    }
    for (unsigned s = 0; s <= left; ++s)
      for (const auto& core : cores[s]) {
        current.push_back(core);
        rec(slot + 1, left - s);
        current.pop_back();
      }
  };
  rec(0, m);
  return out;
}

/// Weight contribution by explicit enumeration.
///
/// Wreath: count of listed assignments. Product: product of factors.
/// even_C2: every block has characters (x, phi) with x in {0, 1}; the
/// global assignments are listed, the swap x -> 1 - x applied to all blocks
/// at once, and orbits counted with weight |stabiliser|.
inline unsigned long brute_contribution(const Automizer& node, unsigned ell) {
  switch (node.kind()) {
    case Automizer::Kind::Atom: return base_character_count(node, ell);
    case Automizer::Kind::Product: {
      unsigned long acc = 1;
      for (const auto& c : node.children()) acc *= brute_contribution(c, ell);
      return acc;
    }
    case Automizer::Kind::Wreath:
      return list_assignments(ell, base_character_count(node.base(), ell), node.multiplicity())
          .size();
    case Automizer::Kind::EvenC2Diagonal: {
      // Per block, slots [0, half) carry x = 0 and [half, 2 half) carry x = 1.
      std::vector<std::vector<Assignment>> per_block;
      std::vector<unsigned long> halves;
      for (const auto& block : node.children()) {
        const unsigned long full = base_character_count(block.base(), ell);
        halves.push_back(full / 2);
        per_block.push_back(list_assignments(ell, full, block.multiplicity()));
      }
      auto swap_block = [](const Assignment& a, unsigned long half) {
        Assignment s(a.size());
        for (unsigned long i = 0; i < half; ++i) {
          s[i] = a[i + half];
          s[i + half] = a[i];
        }
        return s;
      };
      // Global assignment = one index per block.
      std::vector<std::map<Assignment, std::size_t>> index(per_block.size());
      for (std::size_t b = 0; b < per_block.size(); ++b)
        for (std::size_t i = 0; i < per_block[b].size(); ++i) index[b][per_block[b][i]] = i;

      unsigned long fixed = 0, moved = 0;
      std::vector<std::size_t> pick(per_block.size(), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == per_block.size()) {
          bool is_fixed = true;
          for (std::size_t j = 0; j < per_block.size(); ++j) {
            const Assignment& a = per_block[j][pick[j]];
            if (index[j].at(swap_block(a, halves[j])) != pick[j]) {
              is_fixed = false;
              break;
            }
          }
          (is_fixed ? fixed : moved) += 1;
          return;
        }
        for (std::size_t i = 0; i < per_block[b].size(); ++i) {
          pick[b] = i;
          rec(b + 1);
        }
      };
      rec(0);
      // Free orbits have two elements and contribute 1; fixed points 2.
      return moved / 2 + 2 * fixed;
    }
  }
  return 0;
}

inline bool is_triangular(unsigned v) {
  for (unsigned k = 0; k * (k + 1) / 2 <= v; ++k)
    if (k * (k + 1) / 2 == v) return true;
  return false;
}

/// Sp(n) at ell = 2: the number of pairs (f, f') with f supported on
/// alpha = 0, every value triangular, and sum of 2^(alpha+|c|) * value = n.
inline unsigned long symplectic_two_weights(unsigned n) {
  std::vector<unsigned long> weights;  // one entry per free slot
  const auto keys = block_keys(2, n);
  for (const auto& k : keys)
    if (k.alpha == 0) weights.push_back(k.weight(2));
  for (const auto& k : keys) weights.push_back(k.weight(2));
  std::function<unsigned long(std::size_t, unsigned long)> rec = [&](std::size_t i,
                                                                     unsigned long left) {
    if (i == weights.size()) return left == 0 ? 1UL : 0UL;
    unsigned long total = 0;
    for (unsigned v = 0; v * weights[i] <= left; ++v)
      if (is_triangular(v)) total += rec(i + 1, left - v * weights[i]);
    return total;
  };
  return rec(0, n);
}

}  // namespace lieweights::oracle
