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

#ifndef CCSM_RING_FAMILY_HPP_
#define CCSM_RING_FAMILY_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ccsm/subset.hpp"

namespace ccsm {

// Implication arc u -> v: u in S forces v in S.
struct Implication {
  int from = 0;
  int to = 0;
  bool operator==(const Implication&) const = default;
};

// A lattice L ⊆ 2^N given by forced-in elements P, forced-out elements Q and
// an implication digraph:
//   L = { S : P ⊆ S, S ∩ Q = ∅, u ∈ S ⇒ v ∈ S for every arc (u, v) }.
// Such families are closed under union and intersection by construction.
class RingFamily {
 public:
  RingFamily() : RingFamily(0) {}
  // The full power set 2^N.
  explicit RingFamily(int n);
  // Throws InputError if P ∩ Q ≠ ∅ or an arc endpoint is out of range.
  RingFamily(int n, Subset forced_in, Subset forced_out, std::vector<Implication> implications);

  int size() const { return n_; }
  Subset forced_in() const { return forced_in_; }
  Subset forced_out() const { return forced_out_; }
  const std::vector<Implication>& implications() const { return arcs_->implications; }

  // Smallest superset of S ∪ P closed under all implications.
  Subset closure(Subset s) const;
  bool member(Subset s) const;
  // True iff no member exists, i.e. closure(P) meets Q.
  bool empty() const { return closure(forced_in_).intersects(forced_out_); }

  // Elements every member contains: closure(P).
  Subset minimal_member() const { return closure(forced_in_); }
  // Elements that no member contains: Q and everything whose closure meets Q.
  Subset excluded() const { return excluded_; }
  // Elements a member may or may not contain, for a non-empty family.
  Subset free_elements() const { return Subset::full(n_) - minimal_member() - excluded_; }
  // All elements reachable from i, including i.
  Subset reach(int i) const { return arcs_->reach[i]; }
  // All elements that reach i, including i.
  Subset reached_by(int i) const { return arcs_->reached_by[i]; }
  // True when no arc joins two free elements, so members are exactly
  // minimal_member() ∪ T for arbitrary T ⊆ free_elements().
  bool free_elements_unconstrained() const;

  // { S ∈ L : A ⊆ S ⊆ N \ B }, or nullopt when that family is empty.
  // Throws InputError when A ∩ B ≠ ∅.
  std::optional<RingFamily> restrict(Subset a, Subset b) const;

 private:
  // Shared between a family and its restrictions.
  struct Arcs {
    std::vector<Implication> implications;
    std::vector<Subset> reach;
    std::vector<Subset> reached_by;
  };

  int n_ = 0;
  Subset forced_in_;
  Subset forced_out_;
  std::shared_ptr<const Arcs> arcs_;
  Subset excluded_;
};

// Calls fn(S) once for every member S of a non-empty ring family. Backtracks
// over the free elements with full implication propagation; for implication
// systems propagation never dead-ends, so the cost is linear in the number of
// members.
template <typename Fn>
void for_each_member(const RingFamily& ring, Fn&& fn) {
  if (ring.empty()) return;
  const Subset base = ring.minimal_member();
  const Subset free = ring.free_elements();
  if (ring.free_elements_unconstrained()) {
    for_each_between(base, base | free, fn);
    return;
  }
  struct Frame {
    Subset in;
    Subset out;
  };
  std::vector<Frame> stack;
  stack.push_back({Subset(), Subset()});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const Subset undecided = free - f.in - f.out;
    if (undecided.empty()) {
      fn(base | f.in);
      continue;
    }
    const int i = undecided.front();
    const Subset up = ring.reach(i) & free;
    const Subset down = ring.reached_by(i) & free;
    // Pushed in reverse so members come out with i excluded first.
    if (!up.intersects(f.out)) stack.push_back({f.in | up, f.out});
    if (!down.intersects(f.in)) stack.push_back({f.in, f.out | down});
  }
}

}  // namespace ccsm

#endif  // CCSM_RING_FAMILY_HPP_
