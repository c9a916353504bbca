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

#include "ccsm/constraints.hpp"
#include "ccsm/enum_solver.hpp"
#include "ccsm/errors.hpp"
#include "ccsm/generators.hpp"
#include "ccsm/instance.hpp"
#include "ccsm/reference_oracle.hpp"
#include "test_util.hpp"

namespace ccsm {
namespace {

using testing::labels;
using testing::set_of;

TEST(Satisfies, CongruencyAndGeneralized) {
  const GroundSet g = labels({"a", "b", "c", "d"});
  EXPECT_TRUE(satisfies(CongruencyConstraint{2, 1}, set_of(g, {"a"})));
  EXPECT_FALSE(satisfies(CongruencyConstraint{3, 0}, set_of(g, {"a", "b"})));
  const GeneralizedConstraint gc{2, {{set_of(g, {"a", "b"}), 1}, {set_of(g, {"c", "d"}), 1}}};
  EXPECT_TRUE(satisfies(gc, set_of(g, {"a", "d"})));
  EXPECT_FALSE(satisfies(gc, set_of(g, {"a", "b"})));
}

TEST(Satisfies, MembershipPredicate) {
  const MembershipConstraint even{[](Subset s) { return s.size() % 2 == 0; }, "even"};
  EXPECT_TRUE(satisfies(even, Subset::of({1, 2})));
  EXPECT_FALSE(satisfies(even, Subset::of({1})));
}

TEST(Satisfies, SingleFullTermMatchesCongruency) {
  for (int n = 0; n <= 10; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int r = 0; r < m; ++r) {
        const CongruencyConstraint c{m, r};
        const GeneralizedConstraint gc{m, {{Subset::full(n), r}}};
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
          ASSERT_EQ(satisfies(c, Subset(b)), satisfies(gc, Subset(b)));
        }
      }
    }
  }
}

TEST(DefaultDepth, MatchesModulusAndTermCount) {
  EXPECT_EQ(default_depth(CongruencyConstraint{3, 1}), 2);
  GeneralizedConstraint three{2, {{Subset::of({0}), 0}, {Subset::of({1}), 0}, {Subset::of({2}), 0}}};
  EXPECT_EQ(default_depth(three), 3);
  EXPECT_EQ(default_depth(CongruencyConstraint{1, 0}), 0);
  EXPECT_THROW(default_depth(MembershipConstraint{[](Subset) { return true; }, "all"}), InputError);
}

TEST(Validate, RejectsMalformedConstraints) {
  EXPECT_THROW(validate(CongruencyConstraint{0, 0}), InputError);
  EXPECT_THROW(validate(CongruencyConstraint{3, 3}), InputError);
  EXPECT_THROW(validate(CongruencyConstraint{3, -1}), InputError);
  EXPECT_THROW(validate(GeneralizedConstraint{2, {}}), InputError);
  EXPECT_THROW(validate(GeneralizedConstraint{2, {{Subset::of({0}), 2}}}), InputError);
  EXPECT_THROW(validate(MembershipConstraint{}), InputError);
  EXPECT_NO_THROW(validate(CongruencyConstraint{1, 0}));
}

TEST(PrimePower, Factorizations) {
  const auto eight = prime_power(8);
  ASSERT_TRUE(eight.has_value());
  EXPECT_EQ(eight->prime, 2);
  EXPECT_EQ(eight->exponent, 3);
  EXPECT_FALSE(is_prime_power(6));
  const auto nine = prime_power(9);
  ASSERT_TRUE(nine.has_value());
  EXPECT_EQ(nine->prime, 3);
  EXPECT_EQ(nine->exponent, 2);
  EXPECT_FALSE(is_prime_power(1));
  EXPECT_TRUE(is_prime_power(2));
  EXPECT_TRUE(is_prime_power(27));
  EXPECT_FALSE(is_prime_power(12));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

TEST(TCutReduce, FullTargetAddsNothing) {
  const GroundSet g = labels({"a", "b", "c"});
  const auto f = make_oracle(ModularSpec{{{"a", 1}}}, g);
  const auto red = tcut_reduce(g, f, RingFamily(3), g.all(), 2, 1);
  EXPECT_EQ(red.reduced.ground, g);
  EXPECT_TRUE(red.reduced.ring.implications().empty());
}

TEST(TCutReduce, CopiesElementsOutsideTarget) {
  const GroundSet g = labels({"a", "b"});
  const auto f = make_oracle(ModularSpec{{{"a", 1}, {"b", 2}}}, g);
  const auto red = tcut_reduce(g, f, RingFamily(2), set_of(g, {"a"}), 2, 1);
  EXPECT_EQ(red.reduced.ground.labels(), (std::vector<std::string>{"a", "b", "b#1"}));
  const auto& arcs = red.reduced.ring.implications();
  ASSERT_EQ(arcs.size(), 2u);
  EXPECT_EQ(arcs[0].from, 1);
  EXPECT_EQ(arcs[0].to, 2);
  EXPECT_EQ(arcs[1].from, 2);
  EXPECT_EQ(arcs[1].to, 1);
  EXPECT_EQ(red.reduced.function->eval(Subset::of({1, 2})), 2);
  EXPECT_EQ(red.lift(Subset::of({0, 1, 2})), g.all());
}

TEST(TCutReduce, TriangleCutMatchesDirectScan) {
  const GroundSet g = labels({"a", "b", "c"});
  const auto f = make_oracle(CutUndirectedSpec{{{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}}}, g);
  const Subset t = set_of(g, {"a", "b"});
  const auto red = tcut_reduce(g, f, RingFamily(3), t, 2, 1);
  const Constraint& c = red.reduced.constraint;
  const EnumSolution s = enum_solve(*red.reduced.function, red.reduced.ring, c, default_depth(c));
  const Constraint direct = GeneralizedConstraint{2, {{t, 1}}};
  const auto truth = testing::scan(*f, RingFamily(3), &direct);
  ASSERT_TRUE(s.value.has_value());
  EXPECT_EQ(*s.value, *truth.best);
  EXPECT_EQ(*s.value, 2);
  EXPECT_TRUE(satisfies(direct, red.lift(*s.best)));
}

TEST(TCutReduce, RejectsLabelCollisionsAndOversize) {
  const GroundSet g = labels({"b", "b#1"});
  const auto f = make_oracle(ModularSpec{}, g);
  EXPECT_THROW(tcut_reduce(g, f, RingFamily(2), Subset::of({1}), 2, 0), InputError);
  const GroundSet big = GroundSet::numbered(30);
  const auto fb = make_oracle(ModularSpec{}, big);
  EXPECT_THROW(tcut_reduce(big, fb, RingFamily(30), Subset(), 3, 0), UnsupportedError);
  EXPECT_THROW(tcut_reduce(g, f, RingFamily(2), Subset(), 2, 2), InputError);
}

// Feasible reduced sets lift to feasible original sets with the same value,
// and the optima agree, for n <= 8 and m in {2, 3}.
TEST(TCutReduce, ReductionIsExact) {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const int m = 2 + trial % 2;
    const GroundSet g = GroundSet::numbered(n);
    const auto f = make_oracle(random_function(static_cast<Family>(trial % 5), g, rng), g);
    const RingFamily ring = random_ring(n, rng);
    const Subset t = random_subset(n, rng);
    const int r = static_cast<int>(rng() % m);
    const auto red = tcut_reduce(g, f, ring, t, m, r);
    const Constraint direct = GeneralizedConstraint{m, {{t, r}}};

    std::optional<std::int64_t> reduced_best;
    for_each_member(red.reduced.ring, [&](Subset s) {
      if (!satisfies(red.reduced.constraint, s)) return;
      const Subset lifted = red.lift(s);
      ASSERT_TRUE(ring.member(lifted));
      ASSERT_TRUE(satisfies(direct, lifted));
      const std::int64_t v = red.reduced.function->eval(s);
      ASSERT_EQ(v, f->eval(lifted));
      if (!reduced_best || v < *reduced_best) reduced_best = v;
    });
    const auto truth = testing::scan(*f, ring, &direct);
    ASSERT_EQ(reduced_best, truth.best) << "trial " << trial;
  }
}

}  // namespace
}  // namespace ccsm
