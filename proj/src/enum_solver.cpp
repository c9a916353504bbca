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

#include "ccsm/enum_solver.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>
#include <unordered_set>

#include "ccsm/errors.hpp"

namespace ccsm {
namespace {

using u128 = unsigned __int128;

u128 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
  return r;
}

constexpr std::size_t kBlock = 1 << 15;

struct PairOutcome {
  bool feasible = false;
  Subset minimizer;
  std::uint64_t evals = 0;
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void solve_block(const SubmodularOracle& f, const RingFamily& ring, const SfmOptions& sfm,
                 const std::vector<std::pair<Subset, Subset>>& pairs,
                 std::vector<PairOutcome>& out, int threads) {
  out.assign(pairs.size(), PairOutcome{});
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < pairs.size(); i += step) {
      auto sub = ring.restrict(pairs[i].first, pairs[i].second);
      if (!sub) continue;
      const SfmResult r = sfm_minimal_min(f, *sub, sfm);
      out[i] = {true, r.minimizer, r.evals};
    }
  };
  if (threads <= 1 || pairs.size() < 64) {
    work(0, 1);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::uint64_t pair_count(int n, int d) {
  if (n < 0 || d < 0) throw InputError("pair_count needs n, d >= 0");
  u128 total = 0;
  const u128 cap = std::numeric_limits<std::uint64_t>::max();
  for (int i = 0; i <= d && i <= n; ++i) {
    for (int j = 0; j <= d && i + j <= n; ++j) {
      total += binomial(n, i) * binomial(n - i, j);
      if (total >= cap) return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<std::pair<Subset, Subset>> candidate_pairs(int n, int d) {
  if (d < 0) throw InputError("depth must be nonnegative");
  std::vector<std::pair<Subset, Subset>> out;
  for_each_candidate_pair(n, d, [&](Subset a, Subset b) { out.emplace_back(a, b); });
  return out;
}

bool is_guaranteed(const Constraint& c, int d) {
  const auto m = modulus_of(c);
  if (!m) return false;
  if (*m != 1 && !is_prime_power(*m)) return false;
  return d >= default_depth(c);
}

EnumSolution enum_solve(const SubmodularOracle& f, const RingFamily& ring, const Constraint& c,
                        int depth, const EnumOptions& opts) {
  if (depth < 0) throw InputError("depth must be nonnegative");
  validate(c);
  const int n = f.size();
  if (ring.size() != n) throw InputError("oracle and ring family sizes differ");

  EnumSolution sol;
  sol.depth = depth;
  sol.pair_count = pair_count(n, depth);
  sol.guaranteed = is_guaranteed(c, depth);
  if (const auto m = modulus_of(c)) {
    if (*m != 1 && !is_prime_power(*m)) {
      sol.warnings.push_back("modulus " + std::to_string(*m) +
                             " is not a prime power; the result may be suboptimal");
    } else if (depth < default_depth(c)) {
      sol.warnings.push_back("depth " + std::to_string(depth) + " is below the default depth " +
                             std::to_string(default_depth(c)) + "; the result may be suboptimal");
    }
  } else {
    sol.warnings.push_back("membership constraint: no optimality guarantee");
  }

  std::shared_ptr<const TableOracle> table;
  const SubmodularOracle* objective = &f;
  if (n <= opts.tabulate_up_to && n <= TableOracle::kMaxTableElements &&
      dynamic_cast<const TableOracle*>(&f) == nullptr) {
    table = TableOracle::tabulate(f);
    objective = table.get();
  }

  const int threads = resolve_threads(opts.threads);
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<std::pair<Subset, Subset>> block;
  std::vector<PairOutcome> outcomes;
  block.reserve(kBlock);

  auto flush = [&] {
    solve_block(*objective, ring, opts.sfm, block, outcomes, threads);
    for (const auto& o : outcomes) {
      if (!o.feasible) {
        ++sol.skipped_empty;
        continue;
      }
      ++sol.sfm_calls;
      sol.evals += o.evals;
      if (!seen.insert(o.minimizer).second) continue;
      if (opts.keep_candidates) sol.candidate_family.push_back(o.minimizer);
      if (!satisfies(c, o.minimizer)) continue;
      const std::int64_t v = f.eval(o.minimizer);
      if (!sol.best || v < *sol.value ||
          (v == *sol.value && cardinality_lex_less(o.minimizer, *sol.best))) {
        sol.best = o.minimizer;
        sol.value = v;
      }
    }
    block.clear();
  };

  for_each_candidate_pair(n, depth, [&](Subset a, Subset b) {
    block.emplace_back(a, b);
    if (block.size() == kBlock) flush();
  });
  if (!block.empty()) flush();

  sol.candidates = seen.size();
  return sol;
}

}  // namespace ccsm
