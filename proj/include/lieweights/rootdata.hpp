#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lieweights/counting.hpp"
#include "lieweights/series.hpp"

namespace lieweights {

enum class Family {
  Unitary,
  Symplectic,
  SpecialOrthogonalOdd,
  SpecialOrthogonalEven,
  G2,
  F4,
  E6,
  E7,
  E8,
};

inline constexpr Family kAllFamilies[] = {
    Family::Unitary, Family::Symplectic, Family::SpecialOrthogonalOdd,
    Family::SpecialOrthogonalEven, Family::G2, Family::F4,
    Family::E6, Family::E7, Family::E8,
};

constexpr bool is_classical(Family f) noexcept {
  return f == Family::Unitary || f == Family::Symplectic ||
         f == Family::SpecialOrthogonalOdd || f == Family::SpecialOrthogonalEven;
}

/// Short tag used on the command line and in reports.
constexpr std::string_view family_tag(Family f) noexcept {
  switch (f) {
    case Family::Unitary: return "U";
    case Family::Symplectic: return "Sp";
    case Family::SpecialOrthogonalOdd: return "SOodd";
    case Family::SpecialOrthogonalEven: return "SOeven";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

/// Accepts the tags from `family_tag` case-insensitively, plus a few aliases.
inline std::optional<Family> parse_family(std::string_view text) {
  std::string key;
  for (char ch : text)
    if (ch != '-' && ch != '_' && ch != ' ')
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "u" || key == "unitary") return Family::Unitary;
  if (key == "sp" || key == "symplectic") return Family::Symplectic;
  if (key == "soodd" || key == "so2n+1") return Family::SpecialOrthogonalOdd;
  if (key == "soeven" || key == "so2n") return Family::SpecialOrthogonalEven;
  if (key == "g2") return Family::G2;
  if (key == "f4") return Family::F4;
  if (key == "e6") return Family::E6;
  if (key == "e7") return Family::E7;
  if (key == "e8") return Family::E8;
  return std::nullopt;
}

/// One compact connected Lie group, up to isogeny.
///
/// For the classical families `rank` is the n in U(n), Sp(n), SO(2n+1) and
/// SO(2n); it is always 0 for the exceptional families.
class GroupSpec {
 public:
  GroupSpec(Family family, unsigned rank) : family_(family), rank_(rank) {
    if (is_classical(family_)) {
      if (rank_ < 1) throw std::invalid_argument("classical groups need rank >= 1");
    } else {
      rank_ = 0;
    }
  }
  explicit GroupSpec(Family family) : GroupSpec(family, 0) {}

  static GroupSpec unitary(unsigned n) { return {Family::Unitary, n}; }
  static GroupSpec symplectic(unsigned n) { return {Family::Symplectic, n}; }
  static GroupSpec so_odd(unsigned n) { return {Family::SpecialOrthogonalOdd, n}; }
  static GroupSpec so_even(unsigned n) { return {Family::SpecialOrthogonalEven, n}; }

  Family family() const noexcept { return family_; }
  unsigned rank() const noexcept { return rank_; }
  bool classical() const noexcept { return is_classical(family_); }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;

 private:
  Family family_;
  unsigned rank_;
};

/// Conventional group name, e.g. "Sp(3)", "SO(9)", "SO(8)", "E7".
inline std::string display_name(const GroupSpec& g) {
  const std::string n = std::to_string(g.rank());
  switch (g.family()) {
    case Family::Unitary: return "U(" + n + ")";
    case Family::Symplectic: return "Sp(" + n + ")";
    case Family::SpecialOrthogonalOdd: return "SO(" + std::to_string(2 * g.rank() + 1) + ")";
    case Family::SpecialOrthogonalEven: return "SO(" + std::to_string(2 * g.rank()) + ")";
    default: return std::string(family_tag(g.family()));
  }
}

enum class PrimeClass { Good, Bad };

inline std::set<unsigned> bad_primes(const GroupSpec& g) {
  switch (g.family()) {
    case Family::Unitary: return {};
    case Family::Symplectic:
    case Family::SpecialOrthogonalOdd:
    case Family::SpecialOrthogonalEven: return {2};
    case Family::G2:
    case Family::F4:
    case Family::E6:
    case Family::E7: return {2, 3};
    case Family::E8: return {2, 3, 5};
  }
  return {};
}

inline bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline PrimeClass classify_prime(const GroupSpec& g, unsigned ell) {
  if (!is_prime(ell)) throw std::invalid_argument(std::to_string(ell) + " is not prime");
  return bad_primes(g).contains(ell) ? PrimeClass::Bad : PrimeClass::Good;
}

inline bool is_good(const GroupSpec& g, unsigned ell) {
  return classify_prime(g, ell) == PrimeClass::Good;
}

inline BigInt weyl_order(const GroupSpec& g) {
  BigInt factorial = 1;
  for (unsigned k = 2; k <= g.rank(); ++k) factorial *= k;
  const BigInt two_n = BigInt(1) << g.rank();
  switch (g.family()) {
    case Family::Unitary: return factorial;
    case Family::Symplectic:
    case Family::SpecialOrthogonalOdd: return two_n * factorial;
    case Family::SpecialOrthogonalEven: return (two_n / 2) * factorial;
    case Family::G2: return 12;
    case Family::F4: return 1152;
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
  }
  return 0;
}

/// |Irr(W)| for the Weyl group W of g.
///
/// Type D counts unordered bipartitions, with the pairs (a, a) counted twice:
/// (p2(n) + 3 p(n/2)) / 2, where p(n/2) = 0 for odd n.
inline BigInt irr_weyl_count(const GroupSpec& g) {
  const unsigned n = g.rank();
  switch (g.family()) {
    case Family::Unitary: return partition_count(n);
    case Family::Symplectic:
    case Family::SpecialOrthogonalOdd: return bipartition_count(n);
    case Family::SpecialOrthogonalEven: {
      const BigInt half = (n % 2 == 0) ? partition_count(n / 2) : BigInt(0);
      return (bipartition_count(n) + 3 * half) / 2;
    }
    case Family::G2: return 6;
    case Family::F4: return 25;
    case Family::E6: return 25;
    case Family::E7: return 60;
    case Family::E8: return 112;
  }
  return 0;
}

}  // namespace lieweights
