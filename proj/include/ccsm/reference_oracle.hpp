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

// Exhaustive ground truth for constrained minimization.

#ifndef CCSM_REFERENCE_ORACLE_HPP_
#define CCSM_REFERENCE_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ccsm/constraints.hpp"
#include "ccsm/oracle.hpp"
#include "ccsm/ring_family.hpp"

namespace ccsm {

struct OracleResult {
  std::optional<std::int64_t> optimum;  // nullopt: infeasible
  // Inclusion-minimal sets among all optimal feasible sets, in
  // (cardinality, lexicographic) order.
  std::vector<Subset> minimal_optima;
  std::uint64_t evals = 0;
};

inline constexpr int kExhaustiveCap = 24;

// Scans all 2^n subsets, keeping those in the ring family and the constraint.
// Throws UnsupportedError above the cap (24, lowered by CCSM_MAX_N).
OracleResult exhaustive_solve(const SubmodularOracle& f, const RingFamily& ring,
                              const Constraint& c);

}  // namespace ccsm

#endif  // CCSM_REFERENCE_ORACLE_HPP_
