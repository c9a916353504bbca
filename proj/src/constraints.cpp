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

#include "ccsm/constraints.hpp"

#include "ccsm/errors.hpp"

namespace ccsm {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_residue(int modulus, int residue) {
  if (modulus < 1) throw InputError("modulus must be positive");
  if (residue < 0 || residue >= modulus) {
    throw InputError("residue " + std::to_string(residue) + " outside [0, " +
                     std::to_string(modulus) + ")");
  }
}

}  // namespace

void validate(const Constraint& c) {
  std::visit(Overloaded{
                 [](const CongruencyConstraint& cc) { check_residue(cc.modulus, cc.residue); },
                 [](const GeneralizedConstraint& gc) {
                   if (gc.terms.empty()) throw InputError("generalized constraint needs a term");
                   for (const auto& t : gc.terms) check_residue(gc.modulus, t.residue);
                 },
                 [](const MembershipConstraint& mc) {
                   if (!mc.predicate) throw InputError("membership constraint without predicate");
                 },
             },
             c);
}

bool satisfies(const Constraint& c, Subset s) {
  return std::visit(Overloaded{
                        [s](const CongruencyConstraint& cc) {
                          return s.size() % cc.modulus == cc.residue;
                        },
                        [s](const GeneralizedConstraint& gc) {
                          for (const auto& t : gc.terms) {
                            if ((s & t.set).size() % gc.modulus != t.residue) return false;
                          }
                          return true;
                        },
                        [s](const MembershipConstraint& mc) { return mc.predicate(s); },
                    },
                    c);
}

int default_depth(const Constraint& c) {
  return std::visit(Overloaded{
                        [](const CongruencyConstraint& cc) { return cc.modulus - 1; },
                        [](const GeneralizedConstraint& gc) {
                          return static_cast<int>(gc.terms.size()) * (gc.modulus - 1);
                        },
                        [](const MembershipConstraint&) -> int {
                          throw InputError("membership constraints have no default depth");
                        },
                    },
                    c);
}

std::optional<int> modulus_of(const Constraint& c) {
  if (const auto* cc = std::get_if<CongruencyConstraint>(&c)) return cc->modulus;
  if (const auto* gc = std::get_if<GeneralizedConstraint>(&c)) return gc->modulus;
  return std::nullopt;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::optional<PrimePowerFactor> prime_power(std::int64_t m) {
  if (m < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= m && m % p != 0) ++p;
  if (m % p != 0) p = m;  // m itself is prime
  int alpha = 0;
  while (m % p == 0) {
    m /= p;
    ++alpha;
  }
  if (m != 1) return std::nullopt;
  return PrimePowerFactor{p, alpha};
}

}  // namespace ccsm
