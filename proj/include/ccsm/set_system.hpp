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

// Explicit set systems H ⊆ 2^N and the structural checks run against them.

#ifndef CCSM_SET_SYSTEM_HPP_
#define CCSM_SET_SYSTEM_HPP_

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccsm/ground_set.hpp"

namespace ccsm {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

class SetSystem {
 public:
  SetSystem() = default;
  // Throws InputError if a set has the wrong width or appears twice.
  SetSystem(GroundSet ground, std::vector<Bitset> sets);
  // Same, but keeps the first copy of duplicated sets.
  static SetSystem deduplicated(GroundSet ground, std::vector<Bitset> sets);
  static SetSystem from_labels(GroundSet ground,
                               const std::vector<std::vector<std::string>>& sets);

  const GroundSet& ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  const std::vector<Bitset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(const Bitset& s) const;

  Bitset empty_set() const { return Bitset(ground_.size()); }
  Bitset full_set() const { return ~Bitset(ground_.size()); }
  Bitset from_indices(const std::vector<int>& idx) const;
  std::vector<std::string> labels_of(const Bitset& s) const;

 private:
  void index();

  GroundSet ground_;
  std::vector<Bitset> sets_;
  std::vector<Bitset> sorted_;
};

enum class SystemProperty {
  kNone,
  kIntersectionClosed,  // (i)
  kResidue,             // (ii)
  kCovering,            // (iii)
};

std::string property_name(SystemProperty p);

struct SystemVerdict {
  bool pass = true;
  SystemProperty failed = SystemProperty::kNone;
  // (i): the two sets whose intersection is missing; (ii): the offending set;
  // (iii): the uncovered subset.
  std::vector<Bitset> witness;
};

// (m, d)-system: (i) closed under intersection, (ii) |H| ≢ |N| (mod m) for
// every member, (iii) every S with |S| <= d lies in some member. Reports the
// first failing property in that order. Uncovered witnesses are of minimum
// size, lexicographically first.
SystemVerdict check_md_system(const SetSystem& h, int m, int d);

// (m, k, d)-system: as above, with (ii) replaced by "for every member H some
// i has |H ∩ S_i| ≢ |S_i| (mod m)". With k = 1 and S_1 = N this is the
// (m, d) check.
SystemVerdict check_mkd_system(const SetSystem& h, int m, const std::vector<Bitset>& sets, int d);

bool is_intersection_closed(const SetSystem& h, std::vector<Bitset>* witness = nullptr);
// First uncovered S with |S| <= d, scanning sizes upward.
std::optional<Bitset> first_uncovered(const SetSystem& h, int d);
// Largest c <= |N| such that h is c-covering, or -1 when h is empty.
int covering_degree(const SetSystem& h);

// All sets of {1..m} that contain 1 and have at most m - 1 elements.
// Ground labels are "1".."m". Throws InputError for m < 2.
SetSystem construct_mm2_system(int m);

// Maximal blocks of elements with identical membership across h, ordered by
// smallest element. Elements in no member form their own block.
std::vector<Bitset> atoms(const SetSystem& h);

struct HypothesisReport {
  bool nonempty = false;
  bool intersection_closed = false;
  bool ground_residue = false;  // |N| ≢ r (mod p)
  bool member_residue = false;  // |H| ≡ r (mod p) for all members
  bool covering = false;        // every element lies in some member
  // Name of the first failing hypothesis in the order above, and its number
  // among the three numbered ones (0 when a structural premise fails).
  std::string first_failed;
  int hypothesis = 0;
};

// Evaluates the hypotheses of the mod-p inclusion-exclusion obstruction.
// Those hypotheses are jointly unsatisfiable, so if all of them hold the
// system is a counterexample and InconsistencyError is thrown.
HypothesisReport inclusion_exclusion_check(const SetSystem& h, int p, int r);

struct FranklWilsonReport {
  bool hypotheses_hold = false;
  std::string failed;         // first failing hypothesis, empty when they hold
  std::string bound;          // C(n, s) as a decimal string
  std::size_t size = 0;
};

// Frankl-Wilson: if h is uniform of size k ≡ mu[0] (mod p) and every pairwise
// intersection of distinct members is ≡ some mu[i], 1 <= i <= s, (mod p),
// then |h| <= C(n, s), provided s <= k. mu must hold s + 1 distinct residues. When the
// hypotheses hold and the bound is violated, throws InconsistencyError.
FranklWilsonReport frankl_wilson_check(const SetSystem& h, int p, int s, const std::vector<int>& mu);

struct SearchResult {
  std::optional<SetSystem> system;  // closure of the chosen generators
  std::vector<Bitset> generators;
  std::uint64_t nodes = 0;
};

// Exhaustive search for an (m, d)-system on n <= 8 elements generated by at
// most `budget` sets (the system is the intersection closure). Any system
// returned has been re-verified with check_md_system.
SearchResult search_md_system(int m, int d, int n, int budget);

}  // namespace ccsm

#endif  // CCSM_SET_SYSTEM_HPP_
