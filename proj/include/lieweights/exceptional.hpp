#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieweights/error.hpp"
#include "lieweights/rootdata.hpp"
#include "lieweights/series.hpp"
#include "lieweights/weights.hpp"

namespace lieweights {

struct ExceptionalClass {
  std::string name;
  std::string automizer;
  unsigned z;
  std::string provenance;
};

/// Stubborn classes of one exceptional group at one prime dividing |W|.
struct ExceptionalCase {
  GroupSpec spec;
  unsigned ell;
  std::vector<ExceptionalClass> classes;

  BigInt total() const {
    BigInt t = 0;
    for (const auto& c : classes) t += c.z;
    return t;
  }
};

/// The tabulated cases with ell | |W|: the E-series at good primes, G2 at 2
/// and 3, and F4 at 3.
inline const std::vector<ExceptionalCase>& exceptional_cases() {
  static const std::vector<ExceptionalCase> cases = [] {
    const std::string e_series = "Oliver-Ruiz fusion systems at l=5,7; Out(T) = W";
    const std::string g2_two = "Jackowski-McClure-Oliver 2-stubborn subgroups of G2";
    const std::string g2_three = "Jackowski-McClure-Oliver 3-stubborn subgroups of G2";
    const std::string f4_three = "Viruel 3-stubborn subgroups of F4";
    return std::vector<ExceptionalCase>{
        {GroupSpec(Family::E6), 5,
         {{"S", "C4 x C2", 8, e_series},
          {"T", "W(E6)", 15, e_series},
          {"E", "SL_2(5).2", 2, e_series}}},
        {GroupSpec(Family::E7), 5,
         {{"S", "C4 x C2 x S3", 24, e_series},
          {"T", "W(E7)", 30, e_series},
          {"E", "SL_2(5).2 x S3", 6, e_series}}},
        {GroupSpec(Family::E7), 7,
         {{"S", "C6 x C2", 12, e_series},
          {"T", "W(E7)", 46, e_series},
          {"E", "SL_2(7).2", 2, e_series}}},
        {GroupSpec(Family::E8), 7,
         {{"S", "C6 x C2 x C2", 24, e_series},
          {"T", "W(E8)", 84, e_series},
          {"E", "SL_2(7).2 x C2", 4, e_series}}},
        {GroupSpec(Family::G2), 2,
         {{"P1", "1", 1, g2_two},
          {"P2", "S3", 1, g2_two},
          {"P3", "S3", 1, g2_two},
          {"P4", "S3", 1, g2_two},
          {"P5", "S3 x S3", 1, g2_two},
          {"P6", "GL_3(2)", 1, g2_two}}},
        {GroupSpec(Family::G2), 3,
         {{"P1", "C2 x C2", 4, g2_three},
          {"P2", "GL_2(3)", 2, g2_three}}},
        {GroupSpec(Family::F4), 3,
         {{"P1", "D8", 5, f4_three},
          {"P2", "(C2 x Sp_2(3)).2", 4, f4_three},
          {"P3", "(C2 x Sp_2(3)).2", 4, f4_three},
          {"P4", "Sp_2(3) wr 2", 2, f4_three},
          {"P5", "GL_2(3)", 2, f4_three},
          {"P6", "SL_3(3)", 1, f4_three},
          {"P7", "W(F4)", 4, f4_three}}},
    };
  }();
  return cases;
}

inline std::string weyl_group_name(const GroupSpec& g) {
  return "W(" + std::string(family_tag(g.family())) + ")";
}

/// The class list used for (spec, ell), if the pair is covered: either the
/// single torus class when ell does not divide |W|, or a tabulated case.
inline std::optional<ExceptionalCase> exceptional_case(const GroupSpec& spec, unsigned ell) {
  if (spec.classical()) throw contract_error("exceptional tables need an exceptional group");
  if (!is_prime(ell)) throw std::invalid_argument(std::to_string(ell) + " is not prime");
  if (weyl_order(spec) % ell != 0) {
    // Every ell-toral subgroup lies in a torus; W is an ell'-group, so all
    // of its characters have defect zero.
    const unsigned z = irr_weyl_count(spec).convert_to<unsigned>();
    return ExceptionalCase{spec, ell,
                           {{"T", weyl_group_name(spec), z,
                             "maximal torus; W is an l'-group"}}};
  }
  for (const auto& c : exceptional_cases())
    if (c.spec == spec && c.ell == ell) return c;
  return std::nullopt;
}

inline WeightReport exceptional_weight_count(const GroupSpec& spec, unsigned ell) {
  WeightReport report{spec, ell};
  report.method = Method::Table;
  report.irr_w = irr_weyl_count(spec);
  const auto found = exceptional_case(spec, ell);
  if (!found) {
    report.verdict = Verdict::Unsupported;
    report.reason = std::to_string(ell) + "-stubborn subgroups of " + display_name(spec) +
                    " are not tabulated";
    return report;
  }
  for (const auto& c : found->classes) {
    report.per_class.push_back({c.name, c.automizer, BigInt(c.z), c.provenance});
    report.total_weights += c.z;
  }
  report.verdict = compare_to_irr(report.total_weights, report.irr_w);
  return report;
}

// Character degree data -----------------------------------------------------

/// Order and irreducible character degrees of a small finite group.
struct CharacterData {
  std::string group;
  BigInt order;
  std::size_t class_count;
  std::vector<unsigned long> degrees;

  bool sum_of_squares_ok() const {
    BigInt sum = 0;
    for (unsigned long d : degrees) sum += BigInt(d) * d;
    return sum == order;
  }
  bool class_count_ok() const { return degrees.size() == class_count; }
};

/// Degrees of A x B.
inline std::vector<unsigned long> product_degrees(const std::vector<unsigned long>& a,
                                                  const std::vector<unsigned long>& b) {
  std::vector<unsigned long> out;
  for (unsigned long x : a)
    for (unsigned long y : b) out.push_back(x * y);
  return out;
}

/// Degrees of A wr S_2: each unordered pair {i, j} with i != j induces to a
/// character of degree 2 d_i d_j, and each d_i^2 extends in two ways.
inline std::vector<unsigned long> wreath_two_degrees(const std::vector<unsigned long>& a) {
  std::vector<unsigned long> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(a[i] * a[i]);
    out.push_back(a[i] * a[i]);
    for (std::size_t j = i + 1; j < a.size(); ++j) out.push_back(2 * a[i] * a[j]);
  }
  return out;
}

inline const std::vector<CharacterData>& character_data() {
  static const std::vector<CharacterData> data = [] {
    const std::vector<unsigned long> s3{1, 1, 2};
    const std::vector<unsigned long> sl2_3{1, 1, 1, 2, 2, 2, 3};
    auto cyclic = [](unsigned long n) { return std::vector<unsigned long>(n, 1); };
    return std::vector<CharacterData>{
        {"1", 1, 1, {1}},
        {"S3", 6, 3, s3},
        {"S3 x S3", 36, 9, product_degrees(s3, s3)},
        {"GL_3(2)", 168, 6, {1, 3, 3, 6, 7, 8}},
        {"C2 x C2", 4, 4, cyclic(4)},
        {"GL_2(3)", 48, 8, {1, 1, 2, 2, 2, 3, 3, 4}},
        {"D8", 8, 5, {1, 1, 1, 1, 2}},
        {"SL_2(3)", 24, 7, sl2_3},
        {"Sp_2(3) wr 2", 1152, 35, wreath_two_degrees(sl2_3)},
        {"SL_3(3)", 5616, 12, {1, 12, 13, 16, 16, 16, 16, 26, 26, 26, 27, 39}},
        {"W(G2)", 12, 6, {1, 1, 1, 1, 2, 2}},
        {"W(F4)", 1152, 25,
         {1, 1, 1, 1, 2, 2, 2, 2, 4, 4, 4, 4, 4, 6, 6, 8, 8, 8, 8, 9, 9, 9, 9, 12, 16}},
        {"W(E6)", 51840, 25,
         {1, 1, 6, 6, 10, 15, 15, 15, 15, 20, 20, 20, 24,
          24, 30, 30, 60, 60, 60, 64, 64, 80, 81, 81, 90}},
        {"C4 x C2", 8, 8, cyclic(8)},
        {"C4 x C2 x S3", 48, 24, product_degrees(cyclic(8), s3)},
        {"C6 x C2", 12, 12, cyclic(12)},
        {"C6 x C2 x C2", 24, 24, cyclic(24)},
    };
  }();
  return data;
}

inline const CharacterData* find_character_data(std::string_view group) {
  for (const auto& d : character_data())
    if (d.group == group) return &d;
  return nullptr;
}

inline unsigned valuation(BigInt x, unsigned ell) {
  unsigned v = 0;
  while (x != 0 && x % ell == 0) {
    x /= ell;
    ++v;
  }
  return v;
}

/// z(G) from a degree list: characters whose degree carries the full
/// ell-part of |G|.
inline unsigned long defect_zero_count(const CharacterData& data, unsigned ell) {
  const unsigned target = valuation(data.order, ell);
  unsigned long z = 0;
  for (unsigned long d : data.degrees)
    if (valuation(BigInt(d), ell) == target) ++z;
  return z;
}

struct CaseId {
  GroupSpec spec;
  unsigned ell;
  std::size_t class_index;
};

struct CrosscheckResult {
  enum class Status { Verified, Mismatch, Unverified };
  Status status;
  std::string automizer;
  unsigned long stored_z;
  std::optional<unsigned long> recomputed_z;
  std::string note;
};

/// Recomputes the z-value of a table row from stored character degrees.
/// Rows without degree data come back Unverified, never silently passed.
inline CrosscheckResult automizer_z_crosscheck(const CaseId& id) {
  const auto found = exceptional_case(id.spec, id.ell);
  if (!found || id.class_index >= found->classes.size())
    throw std::invalid_argument("no such exceptional table row");
  const ExceptionalClass& row = found->classes[id.class_index];
  CrosscheckResult result{CrosscheckResult::Status::Unverified, row.automizer, row.z,
                          std::nullopt, {}};
  const CharacterData* data = find_character_data(row.automizer);
  if (!data) {
    result.note = "no stored degree list for " + row.automizer;
    return result;
  }
  if (!data->sum_of_squares_ok() || !data->class_count_ok()) {
    result.status = CrosscheckResult::Status::Mismatch;
    result.note = "stored degree list for " + row.automizer + " is inconsistent";
    return result;
  }
  result.recomputed_z = defect_zero_count(*data, id.ell);
  result.status = *result.recomputed_z == row.z ? CrosscheckResult::Status::Verified
                                                : CrosscheckResult::Status::Mismatch;
  return result;
}

}  // namespace lieweights
