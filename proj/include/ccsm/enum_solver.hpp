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

// Enumeration of depth d for submodular minimization under a constraint
// family F:
//
//   1. For every pair of disjoint A, B ⊆ N with |A|, |B| <= d, compute the
//      minimal minimizer of f over L_AB = { S ∈ L : A ⊆ S ⊆ N \ B }.
//   2. Among the collected minimizers that lie in F, return one of minimum
//      value.
//
// With d = m - 1 (congruency) or d = k (m - 1) (k generalized terms) and m a
// prime power, the returned value is the constrained optimum, and every
// inclusion-minimal optimal solution is among the collected minimizers.

#ifndef CCSM_ENUM_SOLVER_HPP_
#define CCSM_ENUM_SOLVER_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccsm/constraints.hpp"
#include "ccsm/oracle.hpp"
#include "ccsm/ring_family.hpp"
#include "ccsm/sfm.hpp"
#include "ccsm/subset.hpp"

namespace ccsm {

struct EnumOptions {
  // Worker threads for the (A, B) loop; 0 means available parallelism.
  // Results do not depend on the thread count.
  int threads = 1;
  SfmOptions sfm;
  // Evaluate f once on all of 2^N before enumerating when n is at most this.
  int tabulate_up_to = 20;
  // Keep the collected minimizers in EnumSolution::candidate_family.
  bool keep_candidates = true;
};

struct EnumSolution {
  std::optional<Subset> best;
  std::optional<std::int64_t> value;
  int depth = 0;
  std::uint64_t candidates = 0;  // distinct minimal minimizers collected
  std::uint64_t sfm_calls = 0;
  std::uint64_t skipped_empty = 0;  // pairs with L_AB = ∅
  std::uint64_t pair_count = 0;
  std::uint64_t evals = 0;  // oracle calls made inside SFM
  bool guaranteed = false;
  std::vector<Subset> candidate_family;  // in discovery order
  std::vector<std::string> warnings;
};

// Σ_{i<=d} Σ_{j<=d} C(n, i) C(n - i, j), saturating at UINT64_MAX.
std::uint64_t pair_count(int n, int d);

// Calls fn(A, B) for every ordered pair of disjoint A, B ⊆ {0..n-1} with
// |A|, |B| <= d, ordered by |A|, then |B|, then A and B lexicographically.
template <typename Fn>
void for_each_candidate_pair(int n, int d, Fn&& fn) {
  const Subset all = Subset::full(n);
  const int top = std::min(d, n);
  for (int i = 0; i <= top; ++i) {
    for (int j = 0; j <= top && i + j <= n; ++j) {
      for_each_k_subset(all, i, [&](Subset a) {
        for_each_k_subset(all - a, j, [&](Subset b) { fn(a, b); });
      });
    }
  }
}

std::vector<std::pair<Subset, Subset>> candidate_pairs(int n, int d);

// True iff c is a congruency or generalized constraint whose modulus is 1 or
// a prime power and d >= default_depth(c).
bool is_guaranteed(const Constraint& c, int d);

// Runs the enumeration at depth d >= 0. A missing result (best = nullopt) is
// a value, not an error.
EnumSolution enum_solve(const SubmodularOracle& f, const RingFamily& ring, const Constraint& c,
                        int depth, const EnumOptions& opts = {});

}  // namespace ccsm

#endif  // CCSM_ENUM_SOLVER_HPP_
