#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieweights/automizer.hpp"
#include "lieweights/counting.hpp"
#include "lieweights/error.hpp"
#include "lieweights/rootdata.hpp"
#include "lieweights/series.hpp"
#include "lieweights/stubborn.hpp"

namespace lieweights {

enum class Method { Enumeration, GeneratingFunction, Table };
enum class Verdict { Equal, StrictlyLess, StrictlyGreater, Unsupported };

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Enumeration: return "Enumeration";
    case Method::GeneratingFunction: return "GeneratingFunction";
    case Method::Table: return "Table";
  }
  return "?";
}

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::StrictlyLess: return "StrictlyLess";
    case Verdict::StrictlyGreater: return "StrictlyGreater";
    case Verdict::Unsupported: return "Unsupported";
  }
  return "?";
}

/// One row of a per-class breakdown.
struct ClassContribution {
  std::string label;      // canonical label text or exceptional class name
  std::string automizer;  // rendered descriptor or automizer name
  BigInt contribution;
  std::string provenance;  // empty for enumerated classes
};

/// Result of a weight count for one (group, prime) pair.
struct WeightReport {
  WeightReport(GroupSpec spec_, unsigned ell_) : spec(spec_), ell(ell_) {}

  GroupSpec spec;
  unsigned ell;
  BigInt total_weights = 0;
  BigInt irr_w = 0;
  std::vector<ClassContribution> per_class;
  Method method = Method::Enumeration;
  Verdict verdict = Verdict::Unsupported;
  std::string reason;  // set when verdict is Unsupported

  /// Populated by `verify` when two independent totals were computed.
  std::optional<BigInt> enumeration_total;
  std::optional<BigInt> generating_function_total;

  bool methods_agree() const {
    return !enumeration_total || !generating_function_total ||
           *enumeration_total == *generating_function_total;
  }
};

inline Verdict compare_to_irr(const BigInt& total, const BigInt& irr) {
  if (total == irr) return Verdict::Equal;
  return total < irr ? Verdict::StrictlyLess : Verdict::StrictlyGreater;
}

/// Number of zero-defect irreducible characters of an atom at the prime ell.
///
/// Steinberg characters are the only defect-zero characters of Sp_{2a}(ell)
/// and GL_c(ell); the GL factor carries the ell-1 extensions of Steinberg
/// from SL_c(ell). GO^-_2(2) = S_3 has one 2-defect-zero character and
/// GO^-_{2a+2}(2) has none for a >= 1.
inline BigInt z_atom(const Atom& atom, unsigned ell) {
  switch (atom.kind) {
    case AtomKind::FiniteSymplectic:
    case AtomKind::FiniteGeneralLinear:
      if (atom.ell != ell)
        throw contract_error(to_string(atom) + " evaluated at prime " + std::to_string(ell));
      return atom.kind == AtomKind::FiniteSymplectic ? BigInt(1) : BigInt(ell - 1);
    case AtomKind::OrderTwo:
      if (ell == 2) throw contract_error("C2 has no 2-defect-zero accounting here");
      return 2;
    case AtomKind::MinusOrthogonal:
      if (ell != 2) throw contract_error("GO^-(2) atoms only occur at ell = 2");
      return atom.param == 0 ? 1 : 0;
    case AtomKind::Named:
      throw contract_error("named automizer '" + atom.name +
                           "' must be resolved through the exceptional tables");
  }
  return 0;
}

namespace detail {

inline unsigned long to_exponent(const BigInt& k) {
  if (k > BigInt(1UL << 20)) throw resource_error("base contribution too large to expand");
  return k.convert_to<unsigned long>();
}

/// Number of k-tuples of ell-cores with total size m.
inline BigInt core_tuples(unsigned ell, const BigInt& k, std::size_t m) {
  return series_pow(core_count_series(ell, m), to_exponent(k)).coefficient(m);
}

/// Splits the base of a type-D block into its C2 factor and the rest.
inline Automizer strip_order_two(const Automizer& block) {
  if (block.kind() != Automizer::Kind::Wreath)
    throw structure_error("even_C2 children must be wreath products");
  const Automizer& base = block.base();
  auto is_c2 = [](const Automizer& a) {
    return a.kind() == Automizer::Kind::Atom && a.atom().kind == AtomKind::OrderTwo;
  };
  if (is_c2(base)) return Automizer::product({});
  if (base.kind() != Automizer::Kind::Product)
    throw structure_error("even_C2 block base must contain exactly one C2");
  std::vector<Automizer> rest;
  std::size_t c2_count = 0;
  for (const auto& child : base.children()) {
    if (is_c2(child))
      ++c2_count;
    else
      rest.push_back(child);
  }
  if (c2_count != 1) throw structure_error("even_C2 block base must contain exactly one C2");
  return Automizer::product(std::move(rest));
}

}  // namespace detail

/// z(N_G(P)/P) for the class described by `desc`.
///
/// A wreath `B wr S_m` contributes the number of assignments of ell-cores to
/// the defect-zero characters of B with total size m. For the type D
/// subgroup, C2 acts by swapping the two halves of every block at once;
/// free orbits contribute 1 and fixed assignments 2, giving
/// (total + 3 * fixed) / 2.
inline BigInt weight_contribution(const Automizer& desc, unsigned ell) {
  switch (desc.kind()) {
    case Automizer::Kind::Atom: return z_atom(desc.atom(), ell);
    case Automizer::Kind::Product: {
      BigInt acc = 1;
      for (const auto& child : desc.children()) {
        acc *= weight_contribution(child, ell);
        if (acc == 0) break;
      }
      return acc;
    }
    case Automizer::Kind::Wreath: {
      const BigInt k = weight_contribution(desc.base(), ell);
      return detail::core_tuples(ell, k, desc.multiplicity());
    }
    case Automizer::Kind::EvenC2Diagonal: {
      BigInt total = 1;
      BigInt fixed = 1;
      for (const auto& block : desc.children()) {
        const Automizer half = detail::strip_order_two(block);
        const BigInt k_full = weight_contribution(block.base(), ell);
        const BigInt k_half = weight_contribution(half, ell);
        const unsigned m = block.multiplicity();
        total *= detail::core_tuples(ell, k_full, m);
        fixed *= (m % 2 == 0) ? detail::core_tuples(ell, k_half, m / 2) : BigInt(0);
      }
      const BigInt weighted = total + 3 * fixed;
      if (weighted % 2 != 0)
        throw structure_error("type D orbit count is not integral: total " +
                              total.str() + ", fixed " + fixed.str());
      return weighted / 2;
    }
  }
  return 0;
}

/// Weight count as a sum of per-class contributions.
inline WeightReport count_weights_enum(const GroupSpec& spec, unsigned ell,
                                       const EnumOptions& opts = {}) {
  WeightReport report{spec, ell};
  report.method = Method::Enumeration;
  report.irr_w = irr_weyl_count(spec);
  for (const auto& label : enumerate_labels(spec, ell, opts)) {
    const Automizer desc = automizer_of(label);
    BigInt z = weight_contribution(desc, ell);
    report.total_weights += z;
    report.per_class.push_back({to_string(label), to_string(desc), std::move(z), {}});
  }
  report.verdict = compare_to_irr(report.total_weights, report.irr_w);
  return report;
}

/// Sum over compositions c of s of (ell-1)^t(c); equals (ell-1) ell^(s-1).
inline BigInt composition_weight(unsigned ell, unsigned s) {
  if (s == 0) return 1;
  BigInt d = ell - 1;
  for (unsigned i = 1; i < s; ++i) d *= ell;
  return d;
}

namespace detail {

/// prod over ell^(alpha+s) <= bound of C(q^(ell^(alpha+s)))^(scale * d(s)),
/// optionally restricted to alpha = 0.
inline IntSeries block_product(unsigned ell, std::size_t order, unsigned long bound,
                               unsigned scale, bool alpha_zero_only) {
  const IntSeries cores = core_count_series(ell, order);
  IntSeries acc = IntSeries::one(order);
  unsigned long w = 1;
  for (unsigned e = 0; w <= bound; ++e, w *= ell) {
    BigInt exponent = 0;
    for (unsigned alpha = 0; alpha <= e; ++alpha) {
      if (alpha_zero_only && alpha != 0) continue;
      exponent += composition_weight(ell, e - alpha);
    }
    exponent *= scale;
    if (w > order) continue;
    acc = series_mul(acc, series_pow(series_substitute(cores, w), to_exponent(exponent)));
  }
  return acc;
}

}  // namespace detail

/// Weight count read off a single generating-function coefficient.
inline WeightReport count_weights_gf(const GroupSpec& spec, unsigned ell) {
  if (!is_prime(ell)) throw std::invalid_argument(std::to_string(ell) + " is not prime");
  if (!classical_supported(spec, ell))
    throw unsupported_error(std::to_string(ell) + "-stubborn subgroups of " +
                            display_name(spec) + " are not classified");
  const unsigned n = spec.rank();
  WeightReport report{spec, ell};
  report.method = Method::GeneratingFunction;
  report.irr_w = irr_weyl_count(spec);

  switch (spec.family()) {
    case Family::Unitary:
      report.total_weights = detail::block_product(ell, n, n, 1, false).coefficient(n);
      break;
    case Family::Symplectic:
      if (ell == 2) {
        const IntSeries f_part = detail::block_product(2, n, n, 1, true);
        const IntSeries f_prime_part = detail::block_product(2, n, n, 1, false);
        report.total_weights = series_mul(f_part, f_prime_part).coefficient(n);
        break;
      }
      [[fallthrough]];
    case Family::SpecialOrthogonalOdd:
      report.total_weights = detail::block_product(ell, n, n, 2, false).coefficient(n);
      break;
    case Family::SpecialOrthogonalEven: {
      const BigInt total = detail::block_product(ell, n, n, 2, false).coefficient(n);
      // A(q^2) at q^n is A at q^(n/2); the block bound stays n.
      const BigInt fixed =
          (n % 2 == 0) ? detail::block_product(ell, n / 2, n, 1, false).coefficient(n / 2)
                       : BigInt(0);
      const BigInt weighted = total + 3 * fixed;
      if (weighted % 2 != 0) throw structure_error("type D generating function not integral");
      report.total_weights = weighted / 2;
      break;
    }
    default:
      throw contract_error("count_weights_gf only handles classical groups");
  }
  report.verdict = compare_to_irr(report.total_weights, report.irr_w);
  return report;
}

}  // namespace lieweights
