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

#include "ccsm/instance.hpp"

#include "ccsm/errors.hpp"

namespace ccsm {

ProjectedOracle::ProjectedOracle(OraclePtr inner, int size)
    : inner_(std::move(inner)), size_(size), mask_(Subset::full(inner_->size())) {
  if (size_ < inner_->size() || size_ > kMaxElements) {
    throw InputError("projected oracle must extend the inner ground set");
  }
}

TCutReduction tcut_reduce(const GroundSet& ground, const OraclePtr& f, const RingFamily& ring,
                          Subset t, int modulus, int residue) {
  validate(CongruencyConstraint{modulus, residue});
  const int n = ground.size();
  if (f->size() != n || ring.size() != n) throw InputError("instance parts disagree on size");
  if (!t.is_subset_of(Subset::full(n))) throw InputError("T must be a subset of the ground set");

  const Subset outside = Subset::full(n) - t;
  const int total = n + outside.size() * (modulus - 1);
  if (total > kMaxElements) {
    throw UnsupportedError("T-cut reduction needs " + std::to_string(total) +
                           " elements; at most 64 are supported");
  }

  std::vector<std::string> labels = ground.labels();
  std::vector<Implication> arcs = ring.implications();
  for (int x : outside.elements()) {
    for (int j = 1; j < modulus; ++j) {
      const int copy = static_cast<int>(labels.size());
      labels.push_back(ground.label(x) + "#" + std::to_string(j));
      arcs.push_back({x, copy});
      arcs.push_back({copy, x});
    }
  }

  TCutReduction out;
  out.original_size = n;
  out.reduced.ground = GroundSet(std::move(labels));  // throws on collisions
  out.reduced.function = std::make_shared<ProjectedOracle>(f, total);
  out.reduced.ring = RingFamily(total, ring.forced_in(), ring.forced_out(), std::move(arcs));
  out.reduced.constraint = CongruencyConstraint{modulus, residue};
  return out;
}

}  // namespace ccsm
