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

#include <algorithm>
#include <set>

#include "ccsm/enum_solver.hpp"
#include "ccsm/errors.hpp"
#include "ccsm/generators.hpp"
#include "ccsm/reference_oracle.hpp"
#include "test_util.hpp"

namespace ccsm {
namespace {

using testing::labels;
using testing::set_of;

struct Built {
  GroundSet ground;
  OraclePtr f;
  RingFamily ring;
  Constraint c;
};

Built tight(int m) {
  const InstanceDoc d = tight_depth_instance(m, m + 2);
  return {d.ground, make_oracle(d.function, d.ground), d.ring, std::get<CongruencyConstraint>(d.constraint)};
}

TEST(EnumSolve, TightInstanceAtGuaranteedDepth) {
  const Built b = tight(3);
  const EnumSolution s = enum_solve(*b.f, b.ring, b.c, 2);
  ASSERT_TRUE(s.value.has_value());
  EXPECT_EQ(*s.value, -1);
  EXPECT_EQ(s.best->size(), 3);
  EXPECT_TRUE(s.best->contains(0));
  EXPECT_EQ(*s.best, set_of(b.ground, {"0", "1", "2"}));  // first 3-set containing 0
  EXPECT_TRUE(s.guaranteed);
  EXPECT_TRUE(s.warnings.empty());
}

TEST(EnumSolve, TightInstanceOneBelow) {
  const Built b = tight(3);
  const EnumSolution s = enum_solve(*b.f, b.ring, b.c, 1);
  ASSERT_TRUE(s.value.has_value());
  EXPECT_EQ(*s.value, 0);
  EXPECT_EQ(*s.best, Subset());
  EXPECT_FALSE(s.guaranteed);
  EXPECT_FALSE(s.warnings.empty());
}

TEST(EnumSolve, FourCycleGeneralized) {
  const GroundSet g = labels({"a", "b", "c", "d"});
  const auto f = make_oracle(
      CutUndirectedSpec{{{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "a", 1}}}, g);
  const GeneralizedConstraint c{2, {{set_of(g, {"a", "b"}), 1}, {set_of(g, {"c", "d"}), 1}}};
  const EnumSolution s = enum_solve(*f, RingFamily(4), c, 2);
  ASSERT_TRUE(s.value.has_value());
  EXPECT_EQ(*s.value, 2);
  EXPECT_TRUE(satisfies(c, *s.best));
  EXPECT_EQ(f->eval(*s.best), 2);
  // Both {a,d} and {b,c} cost 2; {a,d} is first in lexicographic order.
  EXPECT_EQ(*s.best, set_of(g, {"a", "d"}));
}

TEST(CandidatePairs, SmallCounts) {
  const auto zero = candidate_pairs(2, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], std::make_pair(Subset(), Subset()));
  // (∅,∅), two (∅,{x}), two ({x},∅), two ({x},{y}).
  EXPECT_EQ(candidate_pairs(2, 1).size(), 7u);
  EXPECT_EQ(candidate_pairs(3, 3).size(), 27u);
}

TEST(CandidatePairs, DistinctDisjointAndOrdered) {
  const auto pairs = candidate_pairs(5, 2);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    ASSERT_FALSE(a.intersects(b));
    ASSERT_LE(a.size(), 2);
    ASSERT_LE(b.size(), 2);
    ASSERT_TRUE(seen.insert({a.bits(), b.bits()}).second);
    if (i) {
      const auto [pa, pb] = pairs[i - 1];
      const auto key = std::make_pair(a.size(), b.size());
      const auto prev = std::make_pair(pa.size(), pb.size());
      ASSERT_LE(prev, key);
      if (prev == key && pa == a) ASSERT_TRUE(cardinality_lex_less(pb, b));
      if (prev == key && pa != a) ASSERT_TRUE(cardinality_lex_less(pa, a));
    }
  }
  EXPECT_EQ(pairs.size(), pair_count(5, 2));
}

TEST(PairCount, FormulaValues) {
  EXPECT_EQ(pair_count(2, 1), 7u);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(pair_count(n, 0), 1u);
  EXPECT_EQ(pair_count(6, 2), 283u);  // 22 + 6·16 + 15·11
  EXPECT_EQ(pair_count(7, 7), 2187u);  // 3^7
  EXPECT_EQ(pair_count(4, 9), 81u);    // depth clamps to n
}

TEST(PairCount, MatchesDirectCount) {
  for (int n = 0; n <= 8; ++n) {
    for (int d = 0; d <= 4; ++d) {
      std::uint64_t direct = 0;
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t a = 0; a < limit; ++a) {
        for (std::uint64_t b = 0; b < limit; ++b) {
          direct += (a & b) == 0 && Subset(a).size() <= d && Subset(b).size() <= d;
        }
      }
      ASSERT_EQ(pair_count(n, d), direct) << n << "," << d;
    }
  }
}

TEST(EnumSolve, RejectsNegativeDepth) {
  const ModularOracle f({1});
  EXPECT_THROW(enum_solve(f, RingFamily(1), CongruencyConstraint{2, 0}, -1), InputError);
}

TEST(EnumSolve, NonPrimePowerModulusWarns) {
  const Built b = tight(3);
  const EnumSolution s = enum_solve(*b.f, b.ring, CongruencyConstraint{6, 0}, 5);
  EXPECT_FALSE(s.guaranteed);
  EXPECT_FALSE(s.warnings.empty());
}

TEST(EnumSolve, MembershipConstraintRunsWithoutGuarantee) {
  const Built b = tight(2);
  const MembershipConstraint c{[](Subset s) { return s.size() == 2; }, "pairs"};
  const EnumSolution s = enum_solve(*b.f, b.ring, c, 2);
  EXPECT_FALSE(s.guaranteed);
  ASSERT_TRUE(s.value.has_value());
  EXPECT_EQ(s.best->size(), 2);
}

TEST(EnumSolve, UnitModulusIsExactAtDepthZero) {
  Rng rng(4);
  const GroundSet g = GroundSet::numbered(7);
  const auto f = make_oracle(random_function(Family::kCut, g, rng), g);
  const EnumSolution s = enum_solve(*f, RingFamily(7), CongruencyConstraint{1, 0}, 0);
  EXPECT_TRUE(s.guaranteed);
  EXPECT_EQ(s.sfm_calls, 1u);
  EXPECT_EQ(*s.value, *testing::scan(*f, RingFamily(7)).best);
}

TEST(EnumSolve, NoFeasibleCandidateIsAValue) {
  // Lattice {∅, N} with |N| = 6 and |S| ≡ 3 (mod 7).
  std::vector<Implication> cycle;
  for (int i = 0; i < 6; ++i) cycle.push_back({i, (i + 1) % 6});
  const ModularOracle f(std::vector<std::int64_t>(6, 1));
  const EnumSolution s = enum_solve(f, RingFamily(6, {}, {}, cycle), CongruencyConstraint{7, 3}, 6);
  EXPECT_FALSE(s.best.has_value());
  EXPECT_FALSE(s.value.has_value());
}

TEST(EnumSolve, ThreadCountDoesNotChangeResults) {
  Rng rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 8 + trial % 3;
    const GroundSet g = GroundSet::numbered(n);
    const auto f = make_oracle(random_function(static_cast<Family>(trial % 5), g, rng), g);
    const RingFamily ring = random_ring(n, rng);
    const CongruencyConstraint c{3, static_cast<int>(rng() % 3)};
    EnumOptions one, many;
    one.threads = 1;
    many.threads = 3;
    const EnumSolution a = enum_solve(*f, ring, c, 2, one);
    const EnumSolution b = enum_solve(*f, ring, c, 2, many);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.candidate_family, b.candidate_family);
    EXPECT_EQ(a.sfm_calls, b.sfm_calls);
    EXPECT_EQ(a.evals, b.evals);
  }
}

TEST(EnumSolve, BackendsAgree) {
  Rng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 6 + trial % 3;
    const GroundSet g = GroundSet::numbered(n);
    const auto f = make_oracle(random_function(static_cast<Family>(trial % 5), g, rng), g);
    const RingFamily ring = random_ring(n, rng);
    const CongruencyConstraint c{2, static_cast<int>(rng() % 2)};
    EnumOptions brute, mnp;
    brute.sfm.backend = BackendChoice::kBruteForce;
    mnp.sfm.backend = BackendChoice::kMinNormPoint;
    mnp.tabulate_up_to = 0;
    const EnumSolution a = enum_solve(*f, ring, c, 1, brute);
    const EnumSolution b = enum_solve(*f, ring, c, 1, mnp);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.candidate_family, b.candidate_family);
  }
}

// Randomized invariants: exactness at the guaranteed depth, result validity,
// the call-count identity, monotonicity in d, and coverage of all minimal
// optima by the candidate family.
class EnumInvariants : public ::testing::TestWithParam<int> {};

TEST_P(EnumInvariants, HoldOnRandomInstances) {
  const int m = GetParam();
  Rng rng(500 + m);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4 + trial % 6;
    const GroundSet g = GroundSet::numbered(n);
    const auto f = make_oracle(random_function(static_cast<Family>(trial % 5), g, rng), g);
    const RingFamily ring = trial % 3 ? RingFamily(n) : random_ring(n, rng);
    const CongruencyConstraint c{m, static_cast<int>(rng() % m)};
    const OracleResult truth = exhaustive_solve(*f, ring, c);

    std::optional<std::int64_t> previous;
    for (int d = 0; d <= m - 1; ++d) {
      const EnumSolution s = enum_solve(*f, ring, c, d);
      ASSERT_EQ(s.sfm_calls + s.skipped_empty, pair_count(n, d));
      ASSERT_EQ(s.pair_count, pair_count(n, d));
      if (s.best) {
        ASSERT_TRUE(ring.member(*s.best));
        ASSERT_TRUE(satisfies(c, *s.best));
        ASSERT_EQ(f->eval(*s.best), *s.value);
      }
      if (previous) {
        ASSERT_TRUE(s.value.has_value());
        ASSERT_LE(*s.value, *previous);
      }
      previous = s.value;
      if (d == m - 1) {
        ASSERT_TRUE(s.guaranteed);
        ASSERT_EQ(s.value, truth.optimum) << "m=" << m << " trial " << trial;
        for (Subset opt : truth.minimal_optima) {
          ASSERT_NE(std::find(s.candidate_family.begin(), s.candidate_family.end(), opt),
                    s.candidate_family.end());
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(PrimePowers, EnumInvariants, ::testing::Values(2, 3, 4, 5));

TEST(EnumSolve, DepthTightnessOnTightFamily) {
  for (int m = 2; m <= 6; ++m) {
    const Built b = tight(m);
    const EnumSolution hit = enum_solve(*b.f, b.ring, b.c, m - 1);
    ASSERT_TRUE(hit.value.has_value());
    EXPECT_EQ(*hit.value, -1) << m;
    const EnumSolution miss = enum_solve(*b.f, b.ring, b.c, m - 2);
    if (miss.value) EXPECT_GT(*miss.value, -1) << m;
  }
}

}  // namespace
}  // namespace ccsm
