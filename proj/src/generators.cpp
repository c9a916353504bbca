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

#include "ccsm/generators.hpp"

#include <algorithm>
#include <set>

#include "ccsm/errors.hpp"

namespace ccsm {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

InstanceDoc tight_depth_instance(int m, int n) {
  if (m < 1) throw InputError("modulus must be at least 1");
  if (n < 0 || n + 1 > kMaxElements) throw InputError("n must lie in [0, 63]");
  InstanceDoc d;
  d.ground = GroundSet::numbered(n + 1);
  ModularSpec w;
  for (int i = 0; i <= n; ++i) w.weights.emplace_back(d.ground.label(i), i == 0 ? -m : 1);
  d.function = w;
  d.ring = RingFamily(n + 1);
  d.constraint = CongruencyConstraint{m, 0};
  return d;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::kModular: return "modular";
    case Family::kCut: return "cut";
    case Family::kDirectedCut: return "directed_cut";
    case Family::kCoverage: return "coverage";
    case Family::kTable: return "table";
  }
  return "unknown";
}

Subset random_subset(int n, Rng& rng) { return Subset(rng()) & Subset::full(n); }

Graph random_graph(int n, Rng& rng, bool directed) {
  Graph g;
  g.vertices = GroundSet::numbered(n);
  g.directed = directed;
  for (int u = 0; u < n; ++u) {
    for (int v = directed ? 0 : u + 1; v < n; ++v) {
      if (u != v && coin(rng)) g.edges.push_back({u, v, uniform(rng, 1, 5)});
    }
  }
  return g;
}

FunctionSpec random_function(Family family, const GroundSet& ground, Rng& rng) {
  const int n = ground.size();
  auto labelled = [&](const Graph& g) {
    std::vector<LabeledEdge> edges;
    for (const auto& e : g.edges) edges.push_back({ground.label(e.u), ground.label(e.v), e.weight});
    return edges;
  };
  switch (family) {
    case Family::kModular: {
      ModularSpec s;
      for (int i = 0; i < n; ++i) s.weights.emplace_back(ground.label(i), uniform(rng, -6, 6));
      return s;
    }
    case Family::kCut: return CutUndirectedSpec{labelled(random_graph(n, rng))};
    case Family::kDirectedCut: return CutDirectedSpec{labelled(random_graph(n, rng, true))};
    case Family::kCoverage: {
      const int universe = uniform(rng, 3, 10);
      CoverageSpec s;
      for (int i = 0; i < n; ++i) {
        std::vector<std::string> items;
        for (int u = 0; u < universe; ++u) {
          if (coin(rng, 0.3)) items.push_back("u" + std::to_string(u));
        }
        s.covers.emplace_back(ground.label(i), std::move(items));
      }
      return s;
    }
    case Family::kTable: {
      if (n > 16) throw InputError("random tables need n <= 16");
      // Concave sequence c(0..n): nonincreasing increments.
      std::vector<std::int64_t> concave(n + 1, 0);
      std::int64_t step = uniform(rng, 0, 12);
      for (int k = 1; k <= n; ++k) {
        step -= uniform(rng, 0, 3);
        concave[k] = concave[k - 1] + step;
      }
      std::vector<std::int64_t> w(n);
      for (auto& x : w) x = uniform(rng, -4, 4);
      const Graph g = random_graph(n, rng);
      const CutOracle cut(n, g.edges, false);
      ExplicitTableSpec s;
      s.values.resize(std::size_t{1} << n);
      for (std::uint64_t b = 0; b < s.values.size(); ++b) {
        const Subset set(b);
        std::int64_t v = concave[set.size()] + cut.eval(set);
        for (int i : set.elements()) v += w[i];
        s.values[b] = v;
      }
      return s;
    }
  }
  throw InputError("unknown family");
}

RingFamily random_ring(int n, Rng& rng) {
  std::vector<Implication> arcs;
  const int count = n < 2 ? 0 : uniform(rng, 0, std::max(1, n / 2));
  for (int i = 0; i < count; ++i) {
    const int u = uniform(rng, 0, n - 1);
    int v = uniform(rng, 0, n - 2);
    if (v >= u) ++v;
    arcs.push_back({u, v});
  }
  Subset in, out;
  if (n >= 3 && coin(rng, 0.3)) in = Subset::singleton(uniform(rng, 0, n - 1));
  RingFamily probe(n, in, out, arcs);
  if (n >= 3 && coin(rng, 0.3)) {
    // Exclude an element outside the closure of the forced set so the family
    // stays non-empty.
    const Subset candidates = Subset::full(n) - probe.minimal_member();
    if (!candidates.empty()) {
      const auto elems = candidates.elements();
      out = Subset::singleton(elems[uniform(rng, 0, static_cast<int>(elems.size()) - 1)]);
    }
  }
  RingFamily ring(n, in, out, std::move(arcs));
  if (ring.empty()) throw InconsistencyError("random ring generator produced an empty family");
  return ring;
}

SetSystem intersection_closure(const GroundSet& ground, std::vector<Bitset> sets) {
  std::set<Bitset> closed(sets.begin(), sets.end());
  std::vector<Bitset> order;
  for (auto& s : sets) {
    if (std::find(order.begin(), order.end(), s) == order.end()) order.push_back(s);
  }
  // Each new set is met against everything present; the frontier shrinks to
  // nothing once no fresh intersections appear.
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Bitset x = order[i] & order[j];
      if (closed.insert(x).second) order.push_back(std::move(x));
    }
  }
  return SetSystem(ground, std::move(order));
}

SetSystem random_closed_covering_system(int n, Rng& rng) {
  std::vector<Bitset> sets;
  const int count = uniform(rng, 1, std::max(1, n));
  for (int i = 0; i < count; ++i) sets.emplace_back(n, random_subset(n, rng).bits());
  Bitset covered(n);
  for (const auto& s : sets) covered |= s;
  for (int e = 0; e < n; ++e) {
    if (covered.test(e)) continue;
    Bitset s(n, random_subset(n, rng).bits());
    s.set(e);
    covered |= s;
    sets.push_back(std::move(s));
  }
  return intersection_closure(GroundSet::numbered(n, 1), std::move(sets));
}

SetSystem random_set_system(int n, Rng& rng) {
  std::vector<Bitset> sets;
  const int count = uniform(rng, 0, 2 * n + 2);
  for (int i = 0; i < count; ++i) sets.emplace_back(n, random_subset(n, rng).bits());
  return SetSystem::deduplicated(GroundSet::numbered(n, 1), std::move(sets));
}

}  // namespace ccsm
