#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieweights/automizer.hpp"
#include "lieweights/error.hpp"
#include "lieweights/rootdata.hpp"

namespace lieweights {

/// Index (alpha, c) of one irreducible stubborn building block: the block
/// lives in a unitary group of dimension ell^(alpha + |c|).
struct BlockKey {
  unsigned alpha = 0;
  std::vector<unsigned> comp;  // a composition; entries are positive

  unsigned comp_size() const noexcept {
    unsigned s = 0;
    for (unsigned c : comp) s += c;
    return s;
  }
  unsigned exponent() const noexcept { return alpha + comp_size(); }

  unsigned long weight(unsigned ell) const {
    unsigned long w = 1;
    for (unsigned i = 0; i < exponent(); ++i) w *= ell;
    return w;
  }

  bool is_trivial() const noexcept { return alpha == 0 && comp.empty(); }

  friend bool operator==(const BlockKey&, const BlockKey&) = default;
  /// alpha first, then the composition by length and then entries.
  friend std::strong_ordering operator<=>(const BlockKey& a, const BlockKey& b) {
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    if (auto c = a.comp.size() <=> b.comp.size(); c != 0) return c;
    return a.comp <=> b.comp;
  }
};

inline std::string to_string(const BlockKey& k) {
  std::string out = "(" + std::to_string(k.alpha) + "|";
  for (std::size_t i = 0; i < k.comp.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(k.comp[i]);
  }
  return out + ")";
}

using BlockMap = std::map<BlockKey, unsigned>;

/// One conjugacy class of ell-stubborn subgroups, encoded by the function f
/// (and f' for Sp(n) at ell = 2). Only keys with nonzero value are stored.
struct StubbornLabel {
  GroupSpec spec;
  unsigned ell;
  BlockMap primary;
  BlockMap secondary;

  unsigned long weighted_sum() const {
    unsigned long total = 0;
    for (const auto& [key, m] : primary) total += key.weight(ell) * m;
    for (const auto& [key, m] : secondary) total += key.weight(ell) * m;
    return total;
  }

  friend bool operator==(const StubbornLabel&, const StubbornLabel&) = default;
};

/// Canonical label order; both labels must belong to the same (group, prime).
inline bool canonical_less(const StubbornLabel& a, const StubbornLabel& b) {
  if (a.primary != b.primary) return a.primary < b.primary;
  return a.secondary < b.secondary;
}

/// `f[(a|c1,...,ct)]=m` segments joined by `;`; f' segments use `f'[...]`.
inline std::string to_string(const StubbornLabel& label) {
  std::string out;
  auto emit = [&](const BlockMap& map, std::string_view prefix) {
    for (const auto& [key, m] : map) {
      if (!out.empty()) out += ';';
      out += prefix;
      out += '[' + to_string(key) + "]=" + std::to_string(m);
    }
  };
  emit(label.primary, "f");
  emit(label.secondary, "f'");
  return out;
}

/// Inverse of `to_string(const StubbornLabel&)`.
inline StubbornLabel parse_label(std::string_view text, const GroupSpec& spec,
                                 unsigned ell) {
  StubbornLabel label{spec, ell, {}, {}};
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("bad label '" + std::string(text) + "': " + why);
  };
  auto read_uint = [&](std::string_view s) {
    if (s.empty()) throw fail("empty number");
    unsigned long v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw fail("not a number");
      v = v * 10 + static_cast<unsigned long>(ch - '0');
    }
    return static_cast<unsigned>(v);
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view seg = text.substr(pos, end - pos);
    pos = end + 1;

    BlockMap* target = &label.primary;
    if (seg.starts_with("f'[")) {
      target = &label.secondary;
      seg.remove_prefix(3);
    } else if (seg.starts_with("f[")) {
      seg.remove_prefix(2);
    } else {
      throw fail("segment must start with f[ or f'[");
    }
    const std::size_t close = seg.find(")]=");
    if (seg.empty() || seg.front() != '(' || close == std::string_view::npos)
      throw fail("malformed block key");
    std::string_view inner = seg.substr(1, close - 1);
    const std::size_t bar = inner.find('|');
    if (bar == std::string_view::npos) throw fail("missing '|'");

    BlockKey key;
    key.alpha = read_uint(inner.substr(0, bar));
    std::string_view comp = inner.substr(bar + 1);
    while (!comp.empty()) {
      std::size_t comma = comp.find(',');
      const unsigned c = read_uint(comp.substr(0, comma));
      if (c == 0) throw fail("composition entries must be positive");
      key.comp.push_back(c);
      if (comma == std::string_view::npos) break;
      comp.remove_prefix(comma + 1);
    }
    const unsigned m = read_uint(seg.substr(close + 3));
    if (m == 0) throw fail("zero multiplicities are not stored");
    if (!target->emplace(std::move(key), m).second) throw fail("duplicate key");
  }
  return label;
}

/// Options for `enumerate_labels`.
struct EnumOptions {
  /// Keep the classes that the f(0,()) restrictions would remove. Used to
  /// demonstrate that they contribute no weights.
  bool lift_exclusions = false;
};

/// True when stubborn subgroups of `spec` at `ell` have a classification.
inline bool classical_supported(const GroupSpec& spec, unsigned ell) {
  if (!spec.classical()) return false;
  switch (spec.family()) {
    case Family::Unitary:
    case Family::Symplectic: return true;
    default: return ell != 2;
  }
}

/// All block keys with ell^(alpha + |c|) <= n, in canonical order.
inline std::vector<BlockKey> block_keys(unsigned ell, unsigned n) {
  std::vector<BlockKey> keys;
  unsigned long w = 1;
  for (unsigned e = 0; w <= n; ++e, w *= ell) {
    for (unsigned alpha = 0; alpha <= e; ++alpha) {
      const unsigned s = e - alpha;
      if (s == 0) {
        keys.push_back({alpha, {}});
        continue;
      }
      // Compositions of s correspond to subsets of the s-1 cut points.
      for (unsigned long mask = 0; mask < (1UL << (s - 1)); ++mask) {
        BlockKey key{alpha, {}};
        unsigned run = 1;
        for (unsigned bit = 0; bit + 1 < s; ++bit) {
          if (mask & (1UL << bit)) {
            key.comp.push_back(run);
            run = 1;
          } else {
            ++run;
          }
        }
        key.comp.push_back(run);
        keys.push_back(std::move(key));
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

namespace detail {

inline bool excluded(const StubbornLabel& label) {
  const BlockKey trivial{};
  auto value_at = [&](const BlockMap& map) {
    auto it = map.find(trivial);
    return it == map.end() ? 0U : it->second;
  };
  if (label.spec.family() == Family::Unitary) {
    const unsigned v = value_at(label.primary);
    if (label.ell == 2 && (v == 2 || v == 4)) return true;
    if (label.ell == 3 && v == 3) return true;
  }
  if (label.spec.family() == Family::Symplectic && label.ell == 2) {
    const unsigned v = value_at(label.secondary);
    if (v == 2 || v == 4) return true;
  }
  return false;
}

struct Slot {
  const BlockKey* key;
  unsigned long weight;
  bool secondary;
};

inline void assign_slots(const std::vector<Slot>& slots, std::size_t index,
                         unsigned long remaining, StubbornLabel& current,
                         const EnumOptions& opts, std::vector<StubbornLabel>& out) {
  if (remaining == 0) {
    if (opts.lift_exclusions || !excluded(current)) out.push_back(current);
    return;
  }
  if (index == slots.size()) return;
  const Slot& slot = slots[index];
  BlockMap& map = slot.secondary ? current.secondary : current.primary;
  assign_slots(slots, index + 1, remaining, current, opts, out);
  for (unsigned long m = 1; m * slot.weight <= remaining; ++m) {
    map[*slot.key] = static_cast<unsigned>(m);
    assign_slots(slots, index + 1, remaining - m * slot.weight, current, opts, out);
  }
  map.erase(*slot.key);
}

}  // namespace detail

/// One label per conjugacy class of ell-stubborn subgroups of `spec`,
/// in canonical order. Classes contributing no weights are included.
inline std::vector<StubbornLabel> enumerate_labels(const GroupSpec& spec, unsigned ell,
                                                   const EnumOptions& opts = {}) {
  if (!is_prime(ell)) throw std::invalid_argument(std::to_string(ell) + " is not prime");
  if (!classical_supported(spec, ell))
    throw unsupported_error(std::to_string(ell) + "-stubborn subgroups of " +
                            display_name(spec) + " are not classified");

  const unsigned n = spec.rank();
  const std::vector<BlockKey> keys = block_keys(ell, n);
  const bool two_functions = spec.family() == Family::Symplectic && ell == 2;

  std::vector<detail::Slot> slots;
  for (const auto& key : keys) slots.push_back({&key, key.weight(ell), false});
  if (two_functions)
    for (const auto& key : keys) slots.push_back({&key, key.weight(ell), true});
  // Heaviest blocks first so the unit-weight slots absorb any remainder.
  std::stable_sort(slots.begin(), slots.end(),
                   [](const auto& a, const auto& b) { return a.weight > b.weight; });

  std::vector<StubbornLabel> out;
  StubbornLabel current{spec, ell, {}, {}};
  detail::assign_slots(slots, 0, n, current, opts, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline std::size_t class_count(const GroupSpec& spec, unsigned ell,
                               const EnumOptions& opts = {}) {
  return enumerate_labels(spec, ell, opts).size();
}

namespace detail {

inline std::vector<Automizer> general_linear_factors(const BlockKey& key, unsigned ell) {
  std::vector<Automizer> out;
  for (unsigned c : key.comp) out.push_back(Automizer::general_linear(c, ell));
  return out;
}

}  // namespace detail

/// N_G(P)/P for the class `label`, as a descriptor tree.
inline Automizer automizer_of(const StubbornLabel& label) {
  const unsigned ell = label.ell;
  const Family family = label.spec.family();
  std::vector<Automizer> wreaths;

  if (family == Family::Symplectic && ell == 2) {
    for (const auto& [key, m] : label.primary) {
      std::vector<Automizer> base{Automizer::minus_orthogonal(key.alpha)};
      for (auto& gl : detail::general_linear_factors(key, ell)) base.push_back(std::move(gl));
      wreaths.push_back(Automizer::wreath(Automizer::product(std::move(base)), m));
    }
    for (const auto& [key, m] : label.secondary) {
      std::vector<Automizer> base{Automizer::finite_symplectic(key.alpha, ell)};
      for (auto& gl : detail::general_linear_factors(key, ell)) base.push_back(std::move(gl));
      wreaths.push_back(Automizer::wreath(Automizer::product(std::move(base)), m));
    }
  } else {
    const bool with_c2 = family != Family::Unitary;
    for (const auto& [key, m] : label.primary) {
      std::vector<Automizer> base;
      if (with_c2) base.push_back(Automizer::order_two());
      base.push_back(Automizer::finite_symplectic(key.alpha, ell));
      for (auto& gl : detail::general_linear_factors(key, ell)) base.push_back(std::move(gl));
      wreaths.push_back(Automizer::wreath(Automizer::product(std::move(base)), m));
    }
    if (family == Family::SpecialOrthogonalEven)
      return Automizer::even_c2_diagonal(std::move(wreaths));
  }

  if (wreaths.size() == 1) return std::move(wreaths.front());
  return Automizer::product(std::move(wreaths));
}

}  // namespace lieweights
