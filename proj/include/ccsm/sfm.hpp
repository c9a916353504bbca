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

// Exact submodular minimization over a ring family.

#ifndef CCSM_SFM_HPP_
#define CCSM_SFM_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "ccsm/oracle.hpp"
#include "ccsm/ring_family.hpp"
#include "ccsm/subset.hpp"

namespace ccsm {

enum class SfmBackend { kBruteForce, kMinNormPoint };

enum class BackendChoice {
  kAuto,  // brute force up to the cap, minimum-norm point above it
  kBruteForce,
  kMinNormPoint,
};

std::string_view backend_name(SfmBackend b);

// Brute-force cap after applying CCSM_MAX_N, which may only lower it.
int effective_brute_force_cap(int requested = 24);

struct SfmOptions {
  BackendChoice backend = BackendChoice::kAuto;
  // Largest number of free ring elements handed to the brute-force backend.
  int brute_force_cap = effective_brute_force_cap();
};

struct SfmResult {
  Subset minimizer;
  std::int64_t value = 0;
  SfmBackend backend = SfmBackend::kBruteForce;
  std::uint64_t evals = 0;
};

// Some minimizer of f over the ring family. Brute force keeps the minimizer
// that comes first in (cardinality, lexicographic) order.
// Throws InfeasibleError for an empty family and UnsupportedError when brute
// force is forced above its cap.
SfmResult sfm_min(const SubmodularOracle& f, const RingFamily& ring, const SfmOptions& opts = {});

// The unique inclusion-wise minimal minimizer of f over the ring family,
// obtained as a minimizer of g(S) = (n + 1) f(S) + |S|.
SfmResult sfm_minimal_min(const SubmodularOracle& f, const RingFamily& ring,
                          const SfmOptions& opts = {});

// g(S) = (n + 1) f(S) + |S| for integer-valued f on n elements.
class ScaledOracle final : public SubmodularOracle {
 public:
  explicit ScaledOracle(const SubmodularOracle& f) : f_(f) {}

  int size() const override { return f_.size(); }
  std::int64_t eval(Subset s) const override {
    return (f_.size() + 1) * f_.eval(s) + s.size();
  }
  std::int64_t range_bound() const override {
    return (f_.size() + 1) * f_.range_bound() + f_.size();
  }

 private:
  const SubmodularOracle& f_;
};

// h(S) = f(S ∪ P) + M · #{arcs (u, v) : u ∈ S ∪ P, v ∉ S ∪ P} with
// M = 2B + 1, on the elements outside P ∪ Q (local index i is the i-th such
// element in ground order). The penalty term is a directed cut, so h is
// submodular; its minimizers have zero penalty whenever the family is
// non-empty. Holds a reference to f.
class PenalizedOracle final : public SubmodularOracle {
 public:
  PenalizedOracle(const SubmodularOracle& f, const RingFamily& ring);

  int size() const override { return static_cast<int>(free_.size()); }
  std::int64_t eval(Subset local) const override;
  std::int64_t range_bound() const override;

  std::int64_t penalty() const { return penalty_; }
  // Global set S ∪ P for a local subset S.
  Subset lift(Subset local) const;
  // Number of arcs violated by the lifted set.
  int violations(Subset local) const;

 private:
  const SubmodularOracle& f_;
  Subset forced_in_;
  std::vector<int> free_;
  std::vector<Implication> arcs_;
  std::int64_t penalty_;
};

// Unconstrained minimizer of h over all subsets of its ground set by the
// Fujishige–Wolfe minimum-norm-point method. The returned set is certified
// exactly: with x the final base vector, h(T) - h(∅) < x⁻(N) + 1 proves
// optimality for integer-valued h. Throws InconsistencyError if the
// iteration stalls without a certificate.
Subset min_norm_point_minimize(const SubmodularOracle& h, std::uint64_t& evals);

}  // namespace ccsm

#endif  // CCSM_SFM_HPP_
