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

// Seeded random instances, graphs, lattices and set systems, plus the
// tight-depth instance family.

#ifndef CCSM_GENERATORS_HPP_
#define CCSM_GENERATORS_HPP_

#include <random>

#include "ccsm/graph_cuts.hpp"
#include "ccsm/json_io.hpp"
#include "ccsm/set_system.hpp"

namespace ccsm {

using Rng = std::mt19937_64;

// Ground {"0".."n"}, f(S) = |S| - (m + 1)[0 ∈ S] (weight -m on "0", 1 on the
// rest), constraint |S| ≡ 0 (mod m). Depth m - 1 finds the optimum -1;
// depth m - 2 does not.
InstanceDoc tight_depth_instance(int m, int n);

enum class Family { kModular, kCut, kDirectedCut, kCoverage, kTable };
const char* family_name(Family f);

// Random function of the given family on ground {"0".."n-1"}. Tables are
// built as concave-of-cardinality plus modular plus cut, so they are
// submodular by construction; n <= 16 for tables.
FunctionSpec random_function(Family family, const GroundSet& ground, Rng& rng);

// Lattice with a few random implications and, sometimes, one forced element
// on each side. Never empty.
RingFamily random_ring(int n, Rng& rng);

// Undirected graph on {"0".."n-1"} with edge probability 1/2, weights 1..5.
Graph random_graph(int n, Rng& rng, bool directed = false);

// Random subset of {0..n-1} with each element present with probability 1/2.
Subset random_subset(int n, Rng& rng);

// Intersection-closed system on {"1".."n"} whose members cover every element.
SetSystem random_closed_covering_system(int n, Rng& rng);
// Arbitrary system of distinct sets on {"1".."n"}.
SetSystem random_set_system(int n, Rng& rng);
// Smallest intersection-closed system containing the given sets.
SetSystem intersection_closure(const GroundSet& ground, std::vector<Bitset> sets);

}  // namespace ccsm

#endif  // CCSM_GENERATORS_HPP_
