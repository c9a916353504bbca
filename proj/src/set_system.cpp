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

#include "ccsm/set_system.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "ccsm/constraints.hpp"
#include "ccsm/errors.hpp"
#include "ccsm/number_theory.hpp"

namespace ccsm {

namespace {

// Calls fn(U) for every U ⊆ [n] with |U| = k in lexicographic order of sorted
// index lists; stops early when fn returns false. Returns false if stopped.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  Bitset u(n);
  while (true) {
    u.reset();
    for (int i : idx) u.set(i);
    if (!fn(static_cast<const Bitset&>(u))) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool covered_by_some(const SetSystem& h, const Bitset& u) {
  return std::any_of(h.sets().begin(), h.sets().end(),
                     [&u](const Bitset& s) { return u.is_subset_of(s); });
}

SystemVerdict fail(SystemProperty p, std::vector<Bitset> witness) {
  return SystemVerdict{false, p, std::move(witness)};
}

void check_modulus(int m) {
  if (m < 1) throw InputError("modulus must be at least 1");
}

}  // namespace

SetSystem::SetSystem(GroundSet ground, std::vector<Bitset> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  index();
  if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end()) {
    throw InputError("set system lists a set twice");
  }
}

SetSystem SetSystem::deduplicated(GroundSet ground, std::vector<Bitset> sets) {
  std::set<Bitset> seen;
  std::vector<Bitset> kept;
  for (auto& s : sets) {
    if (seen.insert(s).second) kept.push_back(std::move(s));
  }
  return SetSystem(std::move(ground), std::move(kept));
}

SetSystem SetSystem::from_labels(GroundSet ground,
                                 const std::vector<std::vector<std::string>>& sets) {
  std::vector<Bitset> bits;
  bits.reserve(sets.size());
  for (const auto& labels : sets) {
    Bitset b(ground.size());
    for (const auto& l : labels) {
      const int i = ground.index_of(l);
      if (b.test(i)) throw InputError("label '" + l + "' repeated within a set");
      b.set(i);
    }
    bits.push_back(std::move(b));
  }
  return SetSystem(std::move(ground), std::move(bits));
}

void SetSystem::index() {
  for (const auto& s : sets_) {
    if (static_cast<int>(s.size()) != ground_.size()) {
      throw InputError("set width does not match the ground set");
    }
  }
  sorted_ = sets_;
  std::sort(sorted_.begin(), sorted_.end());
}

bool SetSystem::contains(const Bitset& s) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), s);
}

Bitset SetSystem::from_indices(const std::vector<int>& idx) const {
  Bitset b(ground_.size());
  for (int i : idx) {
    if (i < 0 || i >= ground_.size()) throw InputError("element index out of range");
    b.set(i);
  }
  return b;
}

std::vector<std::string> SetSystem::labels_of(const Bitset& s) const {
  std::vector<std::string> out;
  for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) {
    out.push_back(ground_.label(static_cast<int>(i)));
  }
  return out;
}

std::string property_name(SystemProperty p) {
  switch (p) {
    case SystemProperty::kNone: return "none";
    case SystemProperty::kIntersectionClosed: return "intersection_closed";
    case SystemProperty::kResidue: return "residue";
    case SystemProperty::kCovering: return "covering";
  }
  return "unknown";
}

bool is_intersection_closed(const SetSystem& h, std::vector<Bitset>* witness) {
  const auto& s = h.sets();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!h.contains(s[i] & s[j])) {
        if (witness) *witness = {s[i], s[j]};
        return false;
      }
    }
  }
  return true;
}

std::optional<Bitset> first_uncovered(const SetSystem& h, int d) {
  const int n = h.ground_size();
  std::optional<Bitset> missing;
  for (int k = 0; k <= std::min(d, n) && !missing; ++k) {
    for_each_combination(n, k, [&](const Bitset& u) {
      if (covered_by_some(h, u)) return true;
      missing = u;
      return false;
    });
  }
  return missing;
}

int covering_degree(const SetSystem& h) {
  if (h.size() == 0) return -1;
  const int n = h.ground_size();
  for (int c = 0; c <= n; ++c) {
    bool all = for_each_combination(n, c, [&](const Bitset& u) { return covered_by_some(h, u); });
    if (!all) return c - 1;
  }
  return n;
}

SystemVerdict check_mkd_system(const SetSystem& h, int m, const std::vector<Bitset>& sets, int d) {
  check_modulus(m);
  if (d < 0) throw InputError("covering depth must be nonnegative");
  if (sets.empty()) throw InputError("at least one residue set is required");
  for (const auto& s : sets) {
    if (static_cast<int>(s.size()) != h.ground_size()) {
      throw InputError("residue set width does not match the ground set");
    }
  }

  std::vector<Bitset> witness;
  if (!is_intersection_closed(h, &witness)) {
    return fail(SystemProperty::kIntersectionClosed, std::move(witness));
  }
  for (const auto& member : h.sets()) {
    const bool all_match = std::all_of(sets.begin(), sets.end(), [&](const Bitset& s) {
      return static_cast<int>((member & s).count()) % m == static_cast<int>(s.count()) % m;
    });
    if (all_match) return fail(SystemProperty::kResidue, {member});
  }
  if (auto u = first_uncovered(h, d)) return fail(SystemProperty::kCovering, {*u});
  return {};
}

SystemVerdict check_md_system(const SetSystem& h, int m, int d) {
  return check_mkd_system(h, m, {h.full_set()}, d);
}

SetSystem construct_mm2_system(int m) {
  if (m < 2) throw InputError("construction needs m >= 2");
  if (m > 16) throw UnsupportedError("construction limited to m <= 16");
  GroundSet ground = GroundSet::numbered(m, 1);
  std::vector<Bitset> sets;
  // Element 0 (label "1") always present; the rest ranges over proper
  // subsets of {2..m}, i.e. everything but the full set.
  const std::uint32_t rest = (std::uint32_t{1} << (m - 1)) - 1;
  for (std::uint32_t mask = 0; mask < rest; ++mask) {
    Bitset b(m);
    b.set(0);
    for (int i = 0; i < m - 1; ++i) {
      if (mask >> i & 1U) b.set(i + 1);
    }
    sets.push_back(std::move(b));
  }
  return SetSystem(std::move(ground), std::move(sets));
}

std::vector<Bitset> atoms(const SetSystem& h) {
  const int n = h.ground_size();
  std::map<Bitset, std::size_t> block_of;
  std::vector<Bitset> blocks;
  for (int e = 0; e < n; ++e) {
    Bitset sig(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h.sets()[j].test(e)) sig.set(j);
    }
    auto [it, fresh] = block_of.emplace(sig, blocks.size());
    if (fresh) blocks.emplace_back(n);
    blocks[it->second].set(e);
  }
  return blocks;
}

HypothesisReport inclusion_exclusion_check(const SetSystem& h, int p, int r) {
  if (p < 1) throw InputError("modulus must be at least 1");
  if (r < 0 || r >= p) throw InputError("residue must lie in [0, p)");
  HypothesisReport rep;
  rep.nonempty = h.size() > 0;
  rep.intersection_closed = is_intersection_closed(h);
  rep.ground_residue = h.ground_size() % p != r;
  rep.member_residue = std::all_of(h.sets().begin(), h.sets().end(),
                                   [&](const Bitset& s) { return static_cast<int>(s.count()) % p == r; });
  rep.covering = rep.nonempty && !first_uncovered(h, 1).has_value();

  const std::pair<bool, const char*> order[] = {
      {rep.nonempty, "nonempty"},
      {rep.intersection_closed, "intersection_closed"},
      {rep.ground_residue, "ground_residue"},
      {rep.member_residue, "member_residue"},
      {rep.covering, "covering"},
  };
  for (int i = 0; i < 5; ++i) {
    if (order[i].first) continue;
    rep.first_failed = order[i].second;
    rep.hypothesis = i >= 2 ? i - 1 : 0;
    return rep;
  }
  throw InconsistencyError("set system satisfies every hypothesis of the mod-p obstruction");
}

FranklWilsonReport frankl_wilson_check(const SetSystem& h, int p, int s, const std::vector<int>& mu) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (s < 1) throw InputError("s must be at least 1");
  if (static_cast<int>(mu.size()) != s + 1) throw InputError("mu needs s + 1 residues");
  for (int x : mu) {
    if (x < 0 || x >= p) throw InputError("residues must lie in [0, p)");
  }
  if (std::set<int>(mu.begin(), mu.end()).size() != mu.size()) {
    throw InputError("residues must be distinct");
  }

  FranklWilsonReport rep;
  rep.size = h.size();
  rep.bound = binomial(h.ground_size(), s).str();
  const auto& sets = h.sets();
  if (!sets.empty()) {
    const std::size_t k = sets.front().count();
    if (std::any_of(sets.begin(), sets.end(), [k](const Bitset& b) { return b.count() != k; })) {
      rep.failed = "uniform";
    } else if (static_cast<int>(k % p) != mu[0]) {
      rep.failed = "size_residue";
    } else if (static_cast<std::size_t>(s) > k) {
      // Three 3-subsets of a 4-set with p = 5, s = 4 already exceed C(4, 4),
      // so the bound needs s <= k (and hence s <= n).
      rep.failed = "s_exceeds_k";
    }
  }
  if (rep.failed.empty()) {
    for (std::size_t i = 0; i < sets.size() && rep.failed.empty(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        const int x = static_cast<int>((sets[i] & sets[j]).count() % p);
        if (std::find(mu.begin() + 1, mu.end(), x) == mu.end()) {
          rep.failed = "intersection_residue";
          break;
        }
      }
    }
  }
  rep.hypotheses_hold = rep.failed.empty();
  if (rep.hypotheses_hold && BigInt(rep.size) > binomial(h.ground_size(), s)) {
    throw InconsistencyError("system exceeds the Frankl-Wilson bound");
  }
  return rep;
}

namespace {

struct Search {
  int m, d, n, target;
  std::vector<std::uint32_t> candidates;
  std::vector<std::uint32_t> gens;
  std::uint64_t nodes = 0;

  bool residue_ok(std::uint32_t s) const { return std::popcount(s) % m != n % m; }

  bool covering() const {
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t u = 0; u < limit; ++u) {
      if (std::popcount(u) > d) continue;
      bool hit = std::any_of(gens.begin(), gens.end(), [u](std::uint32_t g) { return (u & ~g) == 0; });
      if (!hit) return false;
    }
    return true;
  }

  // family: the intersection closure of gens, as a sorted vector.
  bool dfs(std::size_t start, const std::vector<std::uint32_t>& family) {
    ++nodes;
    if (static_cast<int>(gens.size()) == target) return covering();
    for (std::size_t c = start; c < candidates.size(); ++c) {
      const std::uint32_t g = candidates[c];
      // Generators form an antichain; a comparable pair is never needed.
      if (std::any_of(gens.begin(), gens.end(),
                      [g](std::uint32_t x) { return (g & ~x) == 0 || (x & ~g) == 0; })) {
        continue;
      }
      std::vector<std::uint32_t> next = family;
      bool ok = true;
      auto add = [&](std::uint32_t s) {
        if (!residue_ok(s)) ok = false;
        next.push_back(s);
      };
      add(g);
      for (std::uint32_t f : family) {
        if (!ok) break;
        add(g & f);
      }
      if (!ok) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      gens.push_back(g);
      if (dfs(c + 1, next)) return true;
      gens.pop_back();
    }
    return false;
  }
};

}  // namespace

SearchResult search_md_system(int m, int d, int n, int budget) {
  check_modulus(m);
  if (n < 0 || n > 8) throw InputError("search supports 0 <= n <= 8");
  if (d < 0) throw InputError("covering depth must be nonnegative");
  if (budget < 0) throw InputError("budget must be nonnegative");

  Search search{m, d, n, 0, {}, {}, 0};
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < limit; ++s) {
    if (search.residue_ok(s)) search.candidates.push_back(s);
  }
  // Larger sets first: they cover more and tend to be found sooner.
  std::stable_sort(search.candidates.begin(), search.candidates.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });

  SearchResult result;
  for (int t = 1; t <= budget; ++t) {
    search.target = t;
    search.gens.clear();
    if (!search.dfs(0, {})) continue;

    GroundSet ground = GroundSet::numbered(n, 1);
    std::vector<Bitset> gens_bits;
    for (std::uint32_t g : search.gens) gens_bits.emplace_back(n, g);
    // Rebuild the closure from scratch instead of trusting the DFS state.
    std::set<std::uint32_t> closure(search.gens.begin(), search.gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> cur(closure.begin(), closure.end());
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (std::size_t j = i + 1; j < cur.size(); ++j) grew |= closure.insert(cur[i] & cur[j]).second;
      }
    }
    std::vector<Bitset> members;
    for (std::uint32_t s : closure) members.emplace_back(n, s);
    SetSystem system(ground, std::move(members));
    if (!check_md_system(system, m, d).pass) {
      throw InconsistencyError("search produced a system that fails verification");
    }
    result.system = std::move(system);
    result.generators = std::move(gens_bits);
    break;
  }
  result.nodes = search.nodes;
  return result;
}

}  // namespace ccsm
