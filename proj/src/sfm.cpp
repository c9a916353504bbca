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

#include "ccsm/sfm.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "ccsm/errors.hpp"

namespace ccsm {

std::string_view backend_name(SfmBackend b) {
  return b == SfmBackend::kBruteForce ? "brute_force" : "min_norm_point";
}

int effective_brute_force_cap(int requested) {
  if (const char* env = std::getenv("CCSM_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 0 && v < requested) return static_cast<int>(v);
  }
  return requested;
}

PenalizedOracle::PenalizedOracle(const SubmodularOracle& f, const RingFamily& ring)
    : f_(f), forced_in_(ring.forced_in()), arcs_(ring.implications()) {
  const Subset fixed = ring.forced_in() | ring.forced_out();
  for (int i = 0; i < ring.size(); ++i) {
    if (!fixed.contains(i)) free_.push_back(i);
  }
  penalty_ = 2 * f.range_bound() + 1;
}

Subset PenalizedOracle::lift(Subset local) const {
  Subset s = forced_in_;
  for (std::uint64_t b = local.bits(); b != 0; b &= b - 1) s = s.with(free_[std::countr_zero(b)]);
  return s;
}

int PenalizedOracle::violations(Subset local) const {
  const Subset s = lift(local);
  int count = 0;
  for (const auto& arc : arcs_) {
    if (s.contains(arc.from) && !s.contains(arc.to)) ++count;
  }
  return count;
}

std::int64_t PenalizedOracle::eval(Subset local) const {
  const Subset s = lift(local);
  int count = 0;
  for (const auto& arc : arcs_) {
    if (s.contains(arc.from) && !s.contains(arc.to)) ++count;
  }
  return f_.eval(s) + penalty_ * count;
}

std::int64_t PenalizedOracle::range_bound() const {
  return f_.range_bound() + penalty_ * static_cast<std::int64_t>(arcs_.size());
}

namespace {

// Brute force over ring members. Keeps the smallest key; equal keys are
// broken by (cardinality, lexicographic) order. Also tracks min f so the
// scaled search can be cross-checked.
template <typename Eval>
SfmResult brute_force(const RingFamily& ring, Eval&& eval, bool scaled, int n,
                      std::int64_t& min_f) {
  SfmResult best;
  best.backend = SfmBackend::kBruteForce;
  std::int64_t best_key = std::numeric_limits<std::int64_t>::max();
  bool have = false;
  min_f = std::numeric_limits<std::int64_t>::max();
  for_each_member(ring, [&](Subset s) {
    const std::int64_t v = eval(s);
    ++best.evals;
    min_f = std::min(min_f, v);
    const std::int64_t key = scaled ? (n + 1) * v + s.size() : v;
    if (!have || key < best_key || (key == best_key && cardinality_lex_less(s, best.minimizer))) {
      have = true;
      best_key = key;
      best.minimizer = s;
      best.value = v;
    }
  });
  return best;
}

SfmResult run_brute_force(const SubmodularOracle& f, const RingFamily& ring, bool scaled) {
  std::int64_t min_f = 0;
  SfmResult r;
  if (const auto* table = dynamic_cast<const TableOracle*>(&f)) {
    const std::int64_t* values = table->values().data();
    r = brute_force(ring, [values](Subset s) { return values[s.bits()]; }, scaled, f.size(), min_f);
  } else {
    r = brute_force(ring, [&f](Subset s) { return f.eval(s); }, scaled, f.size(), min_f);
  }
  if (r.value != min_f) {
    throw InconsistencyError("scaled minimizer does not minimize f");
  }
  return r;
}

SfmResult run_min_norm_point(const SubmodularOracle& objective, const SubmodularOracle& f,
                             const RingFamily& ring) {
  const PenalizedOracle h(objective, ring);
  SfmResult r;
  r.backend = SfmBackend::kMinNormPoint;
  const Subset local = min_norm_point_minimize(h, r.evals);
  if (h.violations(local) != 0) {
    throw InconsistencyError("penalized minimizer violates the ring family");
  }
  r.minimizer = h.lift(local);
  if (!ring.member(r.minimizer)) {
    throw InconsistencyError("penalized minimizer is not a ring member");
  }
  r.value = f.eval(r.minimizer);
  ++r.evals;
  return r;
}

bool use_brute_force(const RingFamily& ring, const SfmOptions& opts) {
  const int free = ring.free_elements().size();
  switch (opts.backend) {
    case BackendChoice::kBruteForce:
      if (free > opts.brute_force_cap) {
        throw UnsupportedError("brute-force SFM limited to " + std::to_string(opts.brute_force_cap) +
                               " free elements");
      }
      return true;
    case BackendChoice::kMinNormPoint:
      return false;
    case BackendChoice::kAuto:
      break;
  }
  return free <= opts.brute_force_cap;
}

void require_nonempty(const SubmodularOracle& f, const RingFamily& ring) {
  if (f.size() != ring.size()) throw InputError("oracle and ring family sizes differ");
  if (ring.empty()) throw InfeasibleError("ring family is empty");
}

}  // namespace

SfmResult sfm_min(const SubmodularOracle& f, const RingFamily& ring, const SfmOptions& opts) {
  require_nonempty(f, ring);
  if (use_brute_force(ring, opts)) return run_brute_force(f, ring, /*scaled=*/false);
  return run_min_norm_point(f, f, ring);
}

SfmResult sfm_minimal_min(const SubmodularOracle& f, const RingFamily& ring,
                          const SfmOptions& opts) {
  require_nonempty(f, ring);
  if (use_brute_force(ring, opts)) return run_brute_force(f, ring, /*scaled=*/true);
  const ScaledOracle g(f);
  return run_min_norm_point(g, f, ring);
}

}  // namespace ccsm
