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

#ifndef CCSM_CONSTRAINTS_HPP_
#define CCSM_CONSTRAINTS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccsm/subset.hpp"

namespace ccsm {

// |S| ≡ residue (mod modulus).
struct CongruencyConstraint {
  int modulus = 1;
  int residue = 0;
};

struct CongruencyTerm {
  Subset set;
  int residue = 0;
};

// |S ∩ S_i| ≡ r_i (mod modulus) for every term. One modulus for all terms.
struct GeneralizedConstraint {
  int modulus = 1;
  std::vector<CongruencyTerm> terms;
};

// Arbitrary family given by a pure predicate. Enum(d) accepts it but makes no
// optimality claim.
struct MembershipConstraint {
  std::function<bool(Subset)> predicate;
  std::string name = "membership";
};

using Constraint = std::variant<CongruencyConstraint, GeneralizedConstraint, MembershipConstraint>;

// Throws InputError unless modulus >= 1, every residue lies in [0, modulus),
// a generalized constraint has at least one term, and a membership
// constraint has a predicate.
void validate(const Constraint& c);

bool satisfies(const Constraint& c, Subset s);

// Enumeration depth that makes Enum(d) exact for prime-power moduli:
// m - 1 for a congruency constraint, k (m - 1) for k generalized terms.
// Throws InputError for membership constraints.
int default_depth(const Constraint& c);

// Modulus of a congruency-type constraint; nullopt for membership oracles.
std::optional<int> modulus_of(const Constraint& c);

struct PrimePowerFactor {
  std::int64_t prime = 0;
  int exponent = 0;
};

bool is_prime(std::int64_t p);
// (p, α) with m = p^α; nullopt for m = 1 and for composite non-prime-powers.
std::optional<PrimePowerFactor> prime_power(std::int64_t m);
inline bool is_prime_power(std::int64_t m) { return prime_power(m).has_value(); }

}  // namespace ccsm

#endif  // CCSM_CONSTRAINTS_HPP_
