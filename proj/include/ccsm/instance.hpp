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

#ifndef CCSM_INSTANCE_HPP_
#define CCSM_INSTANCE_HPP_

#include "ccsm/constraints.hpp"
#include "ccsm/ground_set.hpp"
#include "ccsm/oracle.hpp"
#include "ccsm/ring_family.hpp"

namespace ccsm {

// min { f(S) : S ∈ ring, S ∈ constraint }.
struct Instance {
  GroundSet ground;
  OraclePtr function;
  RingFamily ring;
  Constraint constraint;
};

// g(S) = f(S ∩ {0, ..., n-1}) on a larger ground set.
class ProjectedOracle final : public SubmodularOracle {
 public:
  ProjectedOracle(OraclePtr inner, int size);

  int size() const override { return size_; }
  std::int64_t eval(Subset s) const override { return inner_->eval(s & mask_); }
  std::int64_t range_bound() const override { return inner_->range_bound(); }

 private:
  OraclePtr inner_;
  int size_;
  Subset mask_;
};

struct TCutReduction {
  Instance reduced;
  int original_size = 0;

  // S* ↦ S* ∩ N.
  Subset lift(Subset reduced_set) const { return reduced_set & Subset::full(original_size); }
};

// Casts min { f(S) : S ∈ L, |S ∩ T| ≡ r (mod m) } as a plain congruency
// problem. Each x ∉ T gets m - 1 copies labelled "x#1", ..., "x#(m-1)",
// coupled to x by implications in both directions, so x contributes either 0
// or m to |S|. Original elements keep their indices; copies are appended.
// The instance's own constraint is ignored.
// Throws InputError on invalid residues or label collisions and
// UnsupportedError when the reduced ground set exceeds 64 elements.
TCutReduction tcut_reduce(const GroundSet& ground, const OraclePtr& f, const RingFamily& ring,
                          Subset t, int modulus, int residue);

}  // namespace ccsm

#endif  // CCSM_INSTANCE_HPP_
