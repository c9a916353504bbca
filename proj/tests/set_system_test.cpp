// Copyright 2026 The CCSM Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "ccsm/errors.hpp"
#include "ccsm/generators.hpp"
#include "ccsm/number_theory.hpp"
#include "ccsm/set_system.hpp"
#include "ccsm/transforms.hpp"
#include "test_util.hpp"

namespace ccsm {
namespace {

using testing::labels;

SetSystem small_star() {
  return SetSystem::from_labels(labels({"1", "2", "3"}), {{"1"}, {"1", "2"}, {"1", "3"}});
}

TEST(SetSystem, RejectsDuplicatesAndWrongWidth) {
  const GroundSet g = labels({"a", "b"});
  EXPECT_THROW(SetSystem::from_labels(g, {{"a"}, {"a"}}), InputError);
  EXPECT_THROW(SetSystem(g, {Bitset(3)}), InputError);
  EXPECT_THROW(SetSystem::from_labels(g, {{"z"}}), InputError);
  EXPECT_EQ(SetSystem::deduplicated(g, {Bitset(2), Bitset(2)}).size(), 1u);
}

TEST(SetSystem, ContainsAndLabels) {
  const SetSystem h = small_star();
  EXPECT_TRUE(h.contains(h.from_indices({0, 2})));
  EXPECT_FALSE(h.contains(h.from_indices({1, 2})));
  EXPECT_EQ(h.labels_of(h.from_indices({0, 1})), (std::vector<std::string>{"1", "2"}));
}

TEST(CheckMdSystem, StarPassesAtDepthOne) {
  const SystemVerdict v = check_md_system(small_star(), 3, 1);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.failed, SystemProperty::kNone);
}

TEST(CheckMdSystem, StarIsNotTwoCovering) {
  const SetSystem h = small_star();
  const SystemVerdict v = check_md_system(h, 3, 2);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.failed, SystemProperty::kCovering);
  ASSERT_EQ(v.witness.size(), 1u);
  EXPECT_EQ(v.witness[0], h.from_indices({1, 2}));
}

TEST(CheckMdSystem, MissingIntersection) {
  const SetSystem h = SetSystem::from_labels(labels({"a", "b"}), {{"a"}, {"b"}});
  for (int m = 2; m <= 5; ++m) {
    const SystemVerdict v = check_md_system(h, m, 1);
    EXPECT_FALSE(v.pass);
    EXPECT_EQ(v.failed, SystemProperty::kIntersectionClosed);
    ASSERT_EQ(v.witness.size(), 2u);
    EXPECT_EQ(v.witness[0] & v.witness[1], h.empty_set());
  }
  EXPECT_EQ(property_name(SystemProperty::kIntersectionClosed), "intersection_closed");
}

TEST(CheckMdSystem, ResidueViolation) {
  // With m = 2, |{1}| = 1 ≡ |N| = 3.
  const SystemVerdict v = check_md_system(small_star(), 2, 1);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.failed, SystemProperty::kResidue);
  EXPECT_EQ(v.witness.at(0), small_star().from_indices({0}));
}

TEST(CheckMkdSystem, ResidueVectorMatch) {
  const SetSystem h = small_star();
  const std::vector<Bitset> sets{h.from_indices({0, 1}), h.from_indices({2})};
  // Modulo 1 every residue vector matches, so (ii) fails on the first member.
  const SystemVerdict v = check_mkd_system(h, 1, sets, 0);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.failed, SystemProperty::kResidue);
  EXPECT_EQ(v.witness.at(0), h.sets()[0]);
}

TEST(CheckMkdSystem, AgreesWithMdOnFullSet) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 8;
    const SetSystem h = trial % 2 ? random_set_system(n, rng) : random_closed_covering_system(n, rng);
    const int m = 2 + static_cast<int>(rng() % 4);
    const int d = static_cast<int>(rng() % 3);
    const SystemVerdict a = check_md_system(h, m, d);
    const SystemVerdict b = check_mkd_system(h, m, {h.full_set()}, d);
    ASSERT_EQ(a.pass, b.pass);
    ASSERT_EQ(a.failed, b.failed);
    ASSERT_EQ(a.witness, b.witness);
  }
}

TEST(Covering, DegreeAndFirstUncovered) {
  const SetSystem h = small_star();
  EXPECT_EQ(covering_degree(h), 1);
  EXPECT_FALSE(first_uncovered(h, 1).has_value());
  EXPECT_EQ(covering_degree(SetSystem(h.ground(), {})), -1);
  EXPECT_EQ(covering_degree(SetSystem(h.ground(), {h.full_set()})), 3);
}

TEST(ConstructMm2, SmallCases) {
  const SetSystem two = construct_mm2_system(2);
  EXPECT_EQ(two.ground().labels(), (std::vector<std::string>{"1", "2"}));
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two.labels_of(two.sets()[0]), (std::vector<std::string>{"1"}));

  const SetSystem three = construct_mm2_system(3);
  EXPECT_EQ(three.size(), 3u);
  const SetSystem star = small_star();
  for (const auto& s : star.sets()) EXPECT_TRUE(three.contains(s));

  const SetSystem four = construct_mm2_system(4);
  EXPECT_EQ(four.size(), 7u);
  EXPECT_TRUE(check_md_system(four, 4, 2).pass);
}

TEST(ConstructMm2, PassesForAllSmallModuli) {
  for (int m = 2; m <= 10; ++m) {
    const SetSystem h = construct_mm2_system(m);
    EXPECT_EQ(h.size(), (std::size_t{1} << (m - 1)) - 1) << m;
    EXPECT_TRUE(check_md_system(h, m, m - 2).pass) << m;
    // One more level of coverage is out of reach.
    EXPECT_FALSE(check_md_system(h, m, m - 1).pass) << m;
  }
}

TEST(ConstructMm2, RejectsTinyModulus) {
  EXPECT_THROW(construct_mm2_system(1), InputError);
  EXPECT_THROW(construct_mm2_system(0), InputError);
}

TEST(Atoms, Examples) {
  const GroundSet g = labels({"a", "b", "c"});
  const auto none = atoms(SetSystem(g, {}));
  ASSERT_EQ(none.size(), 1u);
  EXPECT_EQ(none[0], ~Bitset(3));

  const SetSystem one = SetSystem::from_labels(g, {{"a"}});
  const auto split = atoms(one);
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0], one.from_indices({0}));
  EXPECT_EQ(split[1], one.from_indices({1, 2}));
}

TEST(Atoms, PowerTwoImageOfFullPowerSet) {
  const int n = 3;
  std::vector<Bitset> all;
  for (std::uint64_t b = 0; b < (1u << n); ++b) all.emplace_back(n, b);
  const SetSystem full(GroundSet::numbered(n, 1), all);
  const SetSystem image = transform_system(TransformKind::power(2), full);
  const auto blocks = atoms(image);
  EXPECT_EQ(blocks.size(), 6u);
  EXPECT_LE(blocks.size(), 1u + 2u * n * n);
  int singles = 0;
  for (const auto& b : blocks) singles += b.count() == 1;
  EXPECT_EQ(singles, 3);
}

TEST(Atoms, FormAPartitionNotSeparatedByMembers) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const SetSystem h = random_set_system(1 + trial % 8, rng);
    const auto blocks = atoms(h);
    Bitset seen(h.ground_size());
    for (const auto& b : blocks) {
      ASSERT_TRUE(b.any());
      ASSERT_FALSE(b.intersects(seen));
      seen |= b;
      for (const auto& s : h.sets()) ASSERT_TRUE(b.is_subset_of(s) || !b.intersects(s));
    }
    ASSERT_TRUE(seen.all());
    // Maximality: members separate any two blocks.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        bool separated = false;
        for (const auto& s : h.sets()) separated |= blocks[i].is_subset_of(s) != blocks[j].is_subset_of(s);
        ASSERT_TRUE(separated);
      }
    }
  }
}

TEST(InclusionExclusion, StarFailsMemberResidue) {
  const HypothesisReport r = inclusion_exclusion_check(small_star(), 3, 1);
  EXPECT_TRUE(r.nonempty);
  EXPECT_TRUE(r.intersection_closed);
  EXPECT_TRUE(r.ground_residue);
  EXPECT_FALSE(r.member_residue);
  EXPECT_EQ(r.hypothesis, 2);
  EXPECT_EQ(r.first_failed, "member_residue");
}

TEST(InclusionExclusion, WholeGroundFailsGroundResidue) {
  for (int n = 1; n <= 5; ++n) {
    const GroundSet g = GroundSet::numbered(n, 1);
    const SetSystem h(g, {~Bitset(n)});
    const HypothesisReport r = inclusion_exclusion_check(h, 2, n % 2);
    EXPECT_FALSE(r.ground_residue);
    EXPECT_EQ(r.hypothesis, 1);
  }
}

TEST(InclusionExclusion, UncoveredElementFailsCovering) {
  // {1} and {1,2,3} on 4 elements: sizes 1 and 3 are ≡ 1 (mod 2), |N| = 4.
  const SetSystem h =
      SetSystem::from_labels(labels({"1", "2", "3", "4"}), {{"1"}, {"1", "2", "3"}});
  const HypothesisReport r = inclusion_exclusion_check(h, 2, 1);
  EXPECT_TRUE(r.member_residue);
  EXPECT_FALSE(r.covering);
  EXPECT_EQ(r.hypothesis, 3);
}

TEST(InclusionExclusion, RejectsBadArguments) {
  EXPECT_THROW(inclusion_exclusion_check(small_star(), 0, 0), InputError);
  EXPECT_THROW(inclusion_exclusion_check(small_star(), 3, 3), InputError);
}

TEST(InclusionExclusion, NeverAllSatisfiedOnRandomSystems) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const SetSystem h = random_closed_covering_system(1 + trial % 6, rng);
    for (int p = 1; p <= 5; ++p) {
      for (int r = 0; r < p; ++r) {
        HypothesisReport rep;
        ASSERT_NO_THROW(rep = inclusion_exclusion_check(h, p, r));
        ASSERT_NE(rep.hypothesis, 0);
      }
    }
  }
}

TEST(FranklWilson, Singletons) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Bitset> sets;
    for (int i = 0; i < n; ++i) {
      Bitset b(n);
      b.set(i);
      sets.push_back(b);
    }
    const SetSystem h(GroundSet::numbered(n, 1), sets);
    const FranklWilsonReport r = frankl_wilson_check(h, 2, 1, {1, 0});
    EXPECT_TRUE(r.hypotheses_hold);
    EXPECT_EQ(r.bound, std::to_string(n));
    EXPECT_EQ(r.size, static_cast<std::size_t>(n));
  }
}

TEST(FranklWilson, NonUniformSkipsBound) {
  const FranklWilsonReport r = frankl_wilson_check(small_star(), 2, 1, {1, 0});
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_EQ(r.failed, "uniform");
}

TEST(FranklWilson, RejectsBadResidues) {
  const SetSystem h = small_star();
  EXPECT_THROW(frankl_wilson_check(h, 4, 1, {1, 0}), InputError);  // 4 is not prime
  EXPECT_THROW(frankl_wilson_check(h, 3, 1, {1, 1}), InputError);  // repeated
  EXPECT_THROW(frankl_wilson_check(h, 3, 2, {1, 0}), InputError);  // wrong count
  EXPECT_THROW(frankl_wilson_check(h, 3, 1, {1, 3}), InputError);  // out of range
}

TEST(FranklWilson, BoundHoldsOnUniformImages) {
  // Binomial{2} images of the k-subsets of a small ground set are uniform.
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      std::vector<Bitset> ksets;
      for (std::uint64_t b = 0; b < (1u << n); ++b) {
        if (__builtin_popcountll(b) == k) ksets.emplace_back(n, b);
      }
      const SetSystem h(GroundSet::numbered(n, 1), ksets);
      const SetSystem image = transform_system(TransformKind::binomial(2), h);
      for (int p : {2, 3, 5}) {
        const int size = static_cast<int>(image.sets()[0].count());
        std::vector<int> mu{size % p};
        for (int r = 0; r < p && static_cast<int>(mu.size()) < p; ++r) {
          if (r != size % p) mu.push_back(r);
        }
        const int s = static_cast<int>(mu.size()) - 1;
        FranklWilsonReport r;
        ASSERT_NO_THROW(r = frankl_wilson_check(image, p, s, mu));
        if (r.hypotheses_hold) {
          ASSERT_LE(BigInt(r.size), BigInt(r.bound));
        }
      }
    }
  }
}

TEST(SearchMdSystem, NoTwoOneSystem) {
  for (int n = 1; n <= 6; ++n) {
    const SearchResult r = search_md_system(2, 1, n, 4);
    EXPECT_FALSE(r.system.has_value()) << n;
    EXPECT_GT(r.nodes, 0u);
  }
}

TEST(SearchMdSystem, FindsThreeOneOnThreeElements) {
  const SearchResult r = search_md_system(3, 1, 3, 3);
  ASSERT_TRUE(r.system.has_value());
  EXPECT_TRUE(check_md_system(*r.system, 3, 1).pass);
  EXPECT_LE(r.generators.size(), 3u);
}

TEST(SearchMdSystem, FindsFourTwo) {
  bool found = false;
  for (int n = 1; n <= 6 && !found; ++n) {
    const SearchResult r = search_md_system(4, 2, n, 4);
    if (r.system) {
      found = true;
      EXPECT_TRUE(check_md_system(*r.system, 4, 2).pass);
    }
  }
  EXPECT_TRUE(found);
}

TEST(SearchMdSystem, RejectsLargeGround) {
  EXPECT_THROW(search_md_system(2, 1, 9, 2), InputError);
}

TEST(BinomMod, Examples) {
  EXPECT_EQ(mod(binomial(7, 2), 2), mod(binomial(3, 2), 2));
  EXPECT_EQ(mod(binomial(7, 2), 2), 1);
  EXPECT_EQ(binomial(9, 0), 1);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(52, 5), 2598960);
  const ResidueReport r = binom_mod_check(3, 1, 200);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.checks, 201u * 3u);
  EXPECT_THROW(binom_mod_check(4, 1, 10), InputError);
  EXPECT_THROW(binom_mod_check(2, 0, 10), InputError);
}

TEST(BinomMod, MatchesBigIntArithmetic) {
  for (int p : {2, 3, 5}) {
    for (int alpha = 1; alpha <= 2; ++alpha) {
      int q = 1;
      for (int i = 0; i < alpha; ++i) q *= p;
      for (int a = 0; a <= 80; ++a) {
        for (int b = 0; b < q; ++b) {
          ASSERT_EQ(mod(binomial(a, b), p), mod(binomial(a % q, b), p));
        }
      }
      EXPECT_TRUE(binom_mod_check(p, alpha, 80).pass);
    }
  }
}

TEST(NumberTheory, ModIsNonnegative) {
  EXPECT_EQ(mod(std::int64_t{-1}, 3), 2);
  EXPECT_EQ(mod(BigInt(-7), 4), 1);
  EXPECT_EQ(mod(std::int64_t{9}, 1), 0);
}

}  // namespace
}  // namespace ccsm
