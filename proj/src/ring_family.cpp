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

#include "ccsm/ring_family.hpp"

#include "ccsm/errors.hpp"

namespace ccsm {

RingFamily::RingFamily(int n) : RingFamily(n, Subset(), Subset(), {}) {}

RingFamily::RingFamily(int n, Subset forced_in, Subset forced_out,
                       std::vector<Implication> implications)
    : n_(n), forced_in_(forced_in), forced_out_(forced_out) {
  if (n_ < 0 || n_ > kMaxElements) throw UnsupportedError("ring family needs 0 <= n <= 64");
  const Subset all = Subset::full(n_);
  if (!forced_in_.is_subset_of(all) || !forced_out_.is_subset_of(all)) {
    throw InputError("forced sets must lie in the ground set");
  }
  if (forced_in_.intersects(forced_out_)) throw InputError("forced_in and forced_out overlap");
  for (const auto& arc : implications) {
    if (arc.from < 0 || arc.from >= n_ || arc.to < 0 || arc.to >= n_) {
      throw InputError("implication endpoint out of range");
    }
  }
  auto arcs = std::make_shared<Arcs>();
  std::vector<Subset> direct(n_);
  for (const auto& arc : implications) direct[arc.from] = direct[arc.from].with(arc.to);
  arcs->implications = std::move(implications);
  arcs->reach.assign(n_, Subset());
  for (int i = 0; i < n_; ++i) {
    Subset seen = Subset::singleton(i);
    Subset frontier = seen;
    while (!frontier.empty()) {
      Subset next;
      for (int u : frontier.elements()) next |= direct[u];
      frontier = next - seen;
      seen |= next;
    }
    arcs->reach[i] = seen;
  }
  arcs->reached_by.assign(n_, Subset());
  for (int i = 0; i < n_; ++i) {
    for (int j : arcs->reach[i].elements()) arcs->reached_by[j] = arcs->reached_by[j].with(i);
  }
  for (int q : forced_out_.elements()) excluded_ |= arcs->reached_by[q];
  arcs_ = std::move(arcs);
}

Subset RingFamily::closure(Subset s) const {
  Subset out = s | forced_in_;
  for (int i : (s | forced_in_).elements()) out |= arcs_->reach[i];
  return out;
}

bool RingFamily::member(Subset s) const {
  if (!s.is_subset_of(Subset::full(n_))) return false;
  if (!forced_in_.is_subset_of(s) || s.intersects(forced_out_)) return false;
  for (int i : s.elements()) {
    if (!arcs_->reach[i].is_subset_of(s)) return false;
  }
  return true;
}

bool RingFamily::free_elements_unconstrained() const {
  const Subset free = free_elements();
  for (int i : free.elements()) {
    if ((arcs_->reach[i] & free) != Subset::singleton(i)) return false;
  }
  return true;
}

std::optional<RingFamily> RingFamily::restrict(Subset a, Subset b) const {
  if (a.intersects(b)) throw InputError("restriction sets A and B overlap");
  const Subset all = Subset::full(n_);
  if (!a.is_subset_of(all) || !b.is_subset_of(all)) throw InputError("restriction outside ground set");
  const Subset in = forced_in_ | a;
  const Subset out = forced_out_ | b;
  if (in.intersects(out) || closure(in).intersects(out)) return std::nullopt;
  RingFamily r = *this;
  r.forced_in_ = in;
  r.forced_out_ = out;
  for (int q : b.elements()) r.excluded_ |= arcs_->reached_by[q];
  return r;
}

}  // namespace ccsm
