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

// Minimum cuts under congruency constraints and the t-Set Even/Odd-Cut
// problems, solved by enumeration at the default depth.

#ifndef CCSM_GRAPH_CUTS_HPP_
#define CCSM_GRAPH_CUTS_HPP_

#include <variant>
#include <vector>

#include "ccsm/enum_solver.hpp"
#include "ccsm/ground_set.hpp"
#include "ccsm/oracle.hpp"

namespace ccsm {

struct Graph {
  GroundSet vertices;
  std::vector<Edge> edges;  // arcs u -> v when directed
  bool directed = false;
};

// |S| ≡ residue (mod modulus).
struct CongruencyCutMode {
  int modulus = 2;
  int residue = 1;
};

// |S ∩ T_i| even for all i (odd = false) or odd for all i (odd = true).
struct TSetCutMode {
  std::vector<Subset> sets;
  bool odd = false;
};

using CutMode = std::variant<CongruencyCutMode, TSetCutMode>;

struct CutProblem {
  Graph graph;
  CutMode mode;
  bool proper = false;  // exclude S = ∅ and S = V
};

CutOracle cut_oracle(const Graph& g);
Constraint cut_constraint(const CutMode& mode);

// With proper = true, runs one enumeration per ordered vertex pair (u, v),
// pinning u inside and v outside, and keeps the best result in
// (value, cardinality, lexicographic) order. Counters are summed over runs.
EnumSolution solve_cut(const CutProblem& problem, const EnumOptions& opts = {});

}  // namespace ccsm

#endif  // CCSM_GRAPH_CUTS_HPP_
