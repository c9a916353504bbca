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

#include "ccsm/reference_oracle.hpp"

#include <algorithm>

#include "ccsm/errors.hpp"
#include "ccsm/sfm.hpp"

namespace ccsm {

OracleResult exhaustive_solve(const SubmodularOracle& f, const RingFamily& ring,
                              const Constraint& c) {
  validate(c);
  const int n = f.size();
  if (ring.size() != n) throw InputError("oracle and ring family sizes differ");
  const int cap = effective_brute_force_cap(kExhaustiveCap);
  if (n > cap) {
    throw UnsupportedError("exhaustive solve limited to " + std::to_string(cap) + " elements");
  }

  OracleResult result;
  std::vector<Subset> optima;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < limit; ++b) {
    const Subset s(b);
    if (!ring.member(s) || !satisfies(c, s)) continue;
    const std::int64_t v = f.eval(s);
    ++result.evals;
    if (!result.optimum || v < *result.optimum) {
      result.optimum = v;
      optima.clear();
    }
    if (v == *result.optimum) optima.push_back(s);
  }

  std::sort(optima.begin(), optima.end(), cardinality_lex_less);
  // Every optimum contains a minimal optimum, and those come earlier in
  // cardinality order, so comparing against kept sets suffices.
  for (Subset s : optima) {
    const bool dominated = std::any_of(result.minimal_optima.begin(), result.minimal_optima.end(),
                                       [s](Subset m) { return m.is_subset_of(s); });
    if (!dominated) result.minimal_optima.push_back(s);
  }
  return result;
}

}  // namespace ccsm
