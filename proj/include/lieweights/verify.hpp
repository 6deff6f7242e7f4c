#pragma once

#include <string>

#include "lieweights/exceptional.hpp"
#include "lieweights/rootdata.hpp"
#include "lieweights/stubborn.hpp"
#include "lieweights/weights.hpp"

namespace lieweights {

/// The verdict the known results predict for (spec, ell).
///
/// Good primes give equality. At bad primes only Sp(n) at 2 (equality for
/// n = 1, strict inequality after), G2 at 2 and 3 (equality) and F4 at 3
/// (strict inequality) are settled; everything else is Unsupported.
inline Verdict expected_verdict(const GroupSpec& spec, unsigned ell) {
  if (spec.classical()) {
    if (!classical_supported(spec, ell)) return Verdict::Unsupported;
    if (spec.family() == Family::Symplectic && ell == 2)
      return spec.rank() == 1 ? Verdict::Equal : Verdict::StrictlyLess;
    return Verdict::Equal;
  }
  if (is_good(spec, ell)) return Verdict::Equal;
  if (spec.family() == Family::G2 && (ell == 2 || ell == 3)) return Verdict::Equal;
  if (spec.family() == Family::F4 && ell == 3) return Verdict::StrictlyLess;
  return Verdict::Unsupported;
}

/// Computes w(F) by every available route and compares it with |Irr(W)|.
///
/// Classical groups are counted class by class and by generating function;
/// the enumeration report is returned with both totals attached, so
/// `methods_agree()` exposes any disagreement. Pairs without a
/// classification come back with verdict Unsupported and a reason.
inline WeightReport verify(const GroupSpec& spec, unsigned ell, const EnumOptions& opts = {}) {
  if (!is_prime(ell)) throw std::invalid_argument(std::to_string(ell) + " is not prime");
  if (!spec.classical()) return exceptional_weight_count(spec, ell);
  if (!classical_supported(spec, ell)) {
    WeightReport report{spec, ell};
    report.irr_w = irr_weyl_count(spec);
    report.verdict = Verdict::Unsupported;
    report.reason = std::to_string(ell) + "-stubborn subgroups of " + display_name(spec) +
                    " are not classified";
    return report;
  }
  WeightReport report = count_weights_enum(spec, ell, opts);
  report.enumeration_total = report.total_weights;
  report.generating_function_total = count_weights_gf(spec, ell).total_weights;
  return report;
}

}  // namespace lieweights
