#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lieweights/stubborn.hpp"

namespace lw = lieweights;
using lw::Automizer;
using lw::BlockKey;
using lw::GroupSpec;
using lw::StubbornLabel;

namespace {

std::vector<GroupSpec> classical_specs(unsigned n) {
  return {GroupSpec::unitary(n), GroupSpec::symplectic(n), GroupSpec::so_odd(n),
          GroupSpec::so_even(n)};
}

/// Number of functions keys -> N with weighted sum n (no exclusions),
/// by a plain knapsack count over the key weights.
unsigned long unrestricted_count(const std::vector<unsigned long>& weights, unsigned n) {
  std::vector<unsigned long> ways(n + 1, 0);
  ways[0] = 1;
  for (unsigned long w : weights)
    for (unsigned long s = w; s <= n; ++s) ways[s] += ways[s - w];
  return ways[n];
}

}  // namespace

TEST(BlockKeys, WeightsAndOrder) {
  const auto keys = lw::block_keys(2, 4);
  // weight 1: 1 key, weight 2: 2 keys, weight 4: 4 keys
  ASSERT_EQ(keys.size(), 7u);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_TRUE(keys.front().is_trivial());
  for (const auto& k : keys) EXPECT_LE(k.weight(2), 4u);
  EXPECT_EQ(lw::block_keys(3, 8).size(), 3u);
  EXPECT_EQ(lw::block_keys(3, 9).size(), 3u + 1 + 1 + 2);
}

TEST(BlockKeys, CanonicalComparison) {
  EXPECT_LT((BlockKey{0, {2}}), (BlockKey{0, {1, 1}}));
  EXPECT_LT((BlockKey{0, {1, 1}}), (BlockKey{1, {}}));
  EXPECT_LT((BlockKey{1, {1}}), (BlockKey{1, {2}}));
}

TEST(EnumerateLabels, UnitaryOneAnyPrime) {
  for (unsigned ell : {2u, 3u, 5u}) {
    const auto labels = lw::enumerate_labels(GroupSpec::unitary(1), ell);
    ASSERT_EQ(labels.size(), 1u);
    EXPECT_EQ(lw::to_string(labels[0]), "f[(0|)]=1");
  }
}

TEST(EnumerateLabels, UnitaryTwoAtTwo) {
  const auto labels = lw::enumerate_labels(GroupSpec::unitary(2), 2);
  std::vector<std::string> texts;
  for (const auto& l : labels) texts.push_back(lw::to_string(l));
  EXPECT_EQ(texts, (std::vector<std::string>{"f[(0|1)]=1", "f[(1|)]=1"}));
  EXPECT_EQ(lw::class_count(GroupSpec::unitary(2), 2), 2u);
}

TEST(EnumerateLabels, ClassCounts) {
  EXPECT_EQ(lw::class_count(GroupSpec::unitary(1), 5), 1u);
  // f(0,()) = 3 is excluded, leaving f(0,(1)) = 1 and f(1,()) = 1.
  EXPECT_EQ(lw::class_count(GroupSpec::unitary(3), 3), 2u);
}

TEST(EnumerateLabels, SymplecticTwoAtTwo) {
  const auto labels = lw::enumerate_labels(GroupSpec::symplectic(2), 2);
  std::set<std::string> texts;
  for (const auto& l : labels) texts.insert(lw::to_string(l));
  const std::set<std::string> expected{
      "f[(0|1)]=1",               // ((1); (0,())) with f = 1, f' = 0
      "f[(0|)]=1;f'[(0|)]=1",     // ((); (0,())) with f = f' = 1
      "f'[(1|)]=1",               // ((); (1,()))
      "f'[(0|1)]=1",              // ((); (0,(1)))
      "f[(0|)]=2",                // zero-weight classes
      "f[(1|)]=1",
  };
  EXPECT_EQ(texts, expected);
}

TEST(EnumerateLabels, UnsupportedCombinations) {
  EXPECT_THROW(lw::enumerate_labels(GroupSpec::so_odd(3), 2), lw::unsupported_error);
  EXPECT_THROW(lw::enumerate_labels(GroupSpec::so_even(3), 2), lw::unsupported_error);
  EXPECT_THROW(lw::enumerate_labels(GroupSpec(lw::Family::F4), 3), lw::unsupported_error);
  EXPECT_THROW(lw::enumerate_labels(GroupSpec::unitary(3), 4), std::invalid_argument);
}

TEST(EnumerateLabelsProperty, Invariants) {
  for (unsigned n = 1; n <= 10; ++n) {
    for (const GroupSpec& spec : classical_specs(n)) {
      for (unsigned ell : {2u, 3u, 5u, 7u}) {
        if (!lw::classical_supported(spec, ell)) continue;
        const auto labels = lw::enumerate_labels(spec, ell);
        std::set<std::string> seen;
        for (const auto& label : labels) {
          EXPECT_EQ(label.weighted_sum(), n);
          auto check_keys = [&](const lw::BlockMap& map) {
            for (const auto& [key, m] : map) {
              EXPECT_GE(m, 1u);
              EXPECT_LE(key.weight(ell), n);
              for (unsigned c : key.comp) EXPECT_GE(c, 1u);
            }
          };
          check_keys(label.primary);
          check_keys(label.secondary);
          const bool two = spec.family() == lw::Family::Symplectic && ell == 2;
          if (!two) {
            EXPECT_TRUE(label.secondary.empty());
          }

          const auto trivial_value = [](const lw::BlockMap& map) {
            auto it = map.find(BlockKey{});
            return it == map.end() ? 0u : it->second;
          };
          if (spec.family() == lw::Family::Unitary && ell == 2) {
            EXPECT_NE(trivial_value(label.primary), 2u);
            EXPECT_NE(trivial_value(label.primary), 4u);
          }
          if (spec.family() == lw::Family::Unitary && ell == 3) {
            EXPECT_NE(trivial_value(label.primary), 3u);
          }
          if (two) {
            EXPECT_NE(trivial_value(label.secondary), 2u);
            EXPECT_NE(trivial_value(label.secondary), 4u);
          }
          EXPECT_TRUE(seen.insert(lw::to_string(label)).second) << "duplicate";
        }
        EXPECT_TRUE(std::is_sorted(labels.begin(), labels.end(), lw::canonical_less));
      }
    }
  }
}

TEST(EnumerateLabelsProperty, CountsMatchKnapsackWithoutExclusions) {
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned ell : {2u, 3u, 5u}) {
      std::vector<unsigned long> weights;
      for (const auto& k : lw::block_keys(ell, n)) weights.push_back(k.weight(ell));
      const lw::EnumOptions lifted{true};
      EXPECT_EQ(lw::class_count(GroupSpec::unitary(n), ell, lifted),
                unrestricted_count(weights, n));
      if (ell == 2) {
        auto doubled = weights;
        doubled.insert(doubled.end(), weights.begin(), weights.end());
        EXPECT_EQ(lw::class_count(GroupSpec::symplectic(n), 2, lifted),
                  unrestricted_count(doubled, n));
      }
    }
  }
}

TEST(EnumerateLabels, ExclusionsOnlyRemoveTrivialBlockValues) {
  // U(4) at 2 without exclusions has the classes f(0,()) = 2 + ... and
  // f(0,()) = 4; with them, those disappear.
  const lw::EnumOptions lifted{true};
  const auto all = lw::enumerate_labels(GroupSpec::unitary(4), 2, lifted);
  const auto kept = lw::enumerate_labels(GroupSpec::unitary(4), 2);
  std::size_t removed = 0;
  for (const auto& l : all) {
    auto it = l.primary.find(BlockKey{});
    const unsigned v = it == l.primary.end() ? 0 : it->second;
    if (v == 2 || v == 4) ++removed;
  }
  EXPECT_EQ(all.size() - kept.size(), removed);
  EXPECT_GT(removed, 0u);
}

TEST(LabelText, RoundTrip) {
  for (unsigned n = 1; n <= 8; ++n)
    for (const GroupSpec& spec : classical_specs(n))
      for (unsigned ell : {2u, 3u}) {
        if (!lw::classical_supported(spec, ell)) continue;
        for (const auto& label : lw::enumerate_labels(spec, ell))
          EXPECT_EQ(lw::parse_label(lw::to_string(label), spec, ell), label);
      }
}

TEST(LabelText, RejectsGarbage) {
  const auto spec = GroupSpec::unitary(2);
  EXPECT_THROW(lw::parse_label("g[(0|)]=1", spec, 3), std::invalid_argument);
  EXPECT_THROW(lw::parse_label("f[(0|0)]=1", spec, 3), std::invalid_argument);
  EXPECT_THROW(lw::parse_label("f[(0|)]=0", spec, 3), std::invalid_argument);
  EXPECT_THROW(lw::parse_label("f[(0|)]=1;f[(0|)]=1", spec, 3), std::invalid_argument);
  EXPECT_THROW(lw::parse_label("f[0|)]=1", spec, 3), std::invalid_argument);
}

TEST(AutomizerOf, UnitaryBlock) {
  const auto label = lw::parse_label("f[(0|1)]=1", GroupSpec::unitary(2), 2);
  const Automizer expected = Automizer::wreath(
      Automizer::product({Automizer::finite_symplectic(0, 2), Automizer::general_linear(1, 2)}),
      1);
  EXPECT_EQ(lw::automizer_of(label), expected);
  EXPECT_EQ(lw::to_string(expected), "(Sp_0(2) x GL_1(2)) wr S_1");
}

TEST(AutomizerOf, SymplecticOddPrime) {
  const auto label = lw::parse_label("f[(0|)]=1", GroupSpec::symplectic(1), 3);
  const Automizer expected = Automizer::wreath(
      Automizer::product({Automizer::order_two(), Automizer::finite_symplectic(0, 3)}), 1);
  EXPECT_EQ(lw::automizer_of(label), expected);
  // SO(2n+1) shares the same descriptor.
  EXPECT_EQ(lw::automizer_of(lw::parse_label("f[(0|)]=1", GroupSpec::so_odd(1), 3)), expected);
}

TEST(AutomizerOf, EvenOrthogonal) {
  const auto label = lw::parse_label("f[(0|)]=2", GroupSpec::so_even(2), 3);
  const Automizer expected = Automizer::even_c2_diagonal({Automizer::wreath(
      Automizer::product({Automizer::order_two(), Automizer::finite_symplectic(0, 3)}), 2)});
  EXPECT_EQ(lw::automizer_of(label), expected);
}

TEST(AutomizerOf, SymplecticAtTwoUsesBothFunctions) {
  const auto label = lw::parse_label("f[(1|1)]=1;f'[(1|)]=2", GroupSpec::symplectic(8), 2);
  const Automizer got = lw::automizer_of(label);
  const Automizer expected = Automizer::product({
      Automizer::wreath(Automizer::product({Automizer::minus_orthogonal(1),
                                            Automizer::general_linear(1, 2)}),
                        1),
      Automizer::wreath(Automizer::product({Automizer::finite_symplectic(1, 2)}), 2),
  });
  EXPECT_EQ(got, expected);
  EXPECT_EQ(lw::to_string(got), "((GO-_4(2) x GL_1(2)) wr S_1) x (Sp_2(2) wr S_2)");
}

TEST(AutomizerOf, WreathMultiplicityMatchesLabel) {
  for (const auto& label : lw::enumerate_labels(GroupSpec::unitary(9), 3)) {
    const Automizer a = lw::automizer_of(label);
    std::vector<unsigned> ms;
    if (a.kind() == Automizer::Kind::Wreath)
      ms.push_back(a.multiplicity());
    else
      for (const auto& c : a.children()) ms.push_back(c.multiplicity());
    std::vector<unsigned> expected;
    for (const auto& [key, m] : label.primary) expected.push_back(m);
    EXPECT_EQ(ms, expected);
  }
}

TEST(AutomizerText, Rendering) {
  const Automizer a = Automizer::wreath(
      Automizer::product({Automizer::order_two(), Automizer::finite_symplectic(1, 3),
                          Automizer::general_linear(1, 3)}),
      2);
  EXPECT_EQ(lw::to_string(a), "(C2 x Sp_2(3) x GL_1(3)) wr S_2");
  EXPECT_EQ(lw::to_string(Automizer::product({})), "1");
}
