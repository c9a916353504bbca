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

#include "ccsm/graph_cuts.hpp"

#include <algorithm>
#include <unordered_set>

#include "ccsm/errors.hpp"

namespace ccsm {

CutOracle cut_oracle(const Graph& g) { return CutOracle(g.vertices.size(), g.edges, g.directed); }

Constraint cut_constraint(const CutMode& mode) {
  if (const auto* cm = std::get_if<CongruencyCutMode>(&mode)) {
    return CongruencyConstraint{cm->modulus, cm->residue};
  }
  const auto& tm = std::get<TSetCutMode>(mode);
  GeneralizedConstraint gc;
  gc.modulus = 2;
  for (Subset t : tm.sets) gc.terms.push_back({t, tm.odd ? 1 : 0});
  return gc;
}

EnumSolution solve_cut(const CutProblem& problem, const EnumOptions& opts) {
  const int n = problem.graph.vertices.size();
  if (n == 0) throw InputError("graph has no vertices");
  const CutOracle f = cut_oracle(problem.graph);
  const Constraint c = cut_constraint(problem.mode);
  validate(c);
  const int depth = default_depth(c);

  if (!problem.proper) return enum_solve(f, RingFamily(n), c, depth, opts);

  // Candidates are deduplicated across runs, so each run must report them.
  EnumOptions run_opts = opts;
  run_opts.keep_candidates = true;

  EnumSolution total;
  total.depth = depth;
  total.guaranteed = is_guaranteed(c, depth);
  std::unordered_set<Subset, SubsetHash> seen;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const RingFamily pinned(n, Subset::singleton(u), Subset::singleton(v), {});
      EnumSolution run = enum_solve(f, pinned, c, depth, run_opts);
      total.sfm_calls += run.sfm_calls;
      total.skipped_empty += run.skipped_empty;
      total.pair_count += run.pair_count;
      total.evals += run.evals;
      for (Subset s : run.candidate_family) {
        if (seen.insert(s).second && opts.keep_candidates) total.candidate_family.push_back(s);
      }
      for (auto& w : run.warnings) {
        if (std::find(total.warnings.begin(), total.warnings.end(), w) == total.warnings.end()) {
          total.warnings.push_back(std::move(w));
        }
      }
      if (!run.best) continue;
      if (!total.best || *run.value < *total.value ||
          (*run.value == *total.value && cardinality_lex_less(*run.best, *total.best))) {
        total.best = run.best;
        total.value = run.value;
      }
    }
  }
  total.candidates = seen.size();
  return total;
}

}  // namespace ccsm
