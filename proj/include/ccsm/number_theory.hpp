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

// Exact binomial arithmetic and residue checks modulo prime powers.

#ifndef CCSM_NUMBER_THEORY_HPP_
#define CCSM_NUMBER_THEORY_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <utility>

namespace ccsm {

using BigInt = boost::multiprecision::cpp_int;

// C(a, b), zero when b > a or b < 0.
BigInt binomial(std::int64_t a, std::int64_t b);

// Nonnegative residue of x modulo m (m >= 1).
std::int64_t mod(const BigInt& x, std::int64_t m);
std::int64_t mod(std::int64_t x, std::int64_t m);

struct ResidueReport {
  bool pass = true;
  std::uint64_t checks = 0;
  // First (a, b) or (x, 0) that broke the congruence.
  std::optional<std::pair<std::int64_t, std::int64_t>> counterexample;
};

// Checks C(a, b) ≡ C(a mod p^alpha, b) (mod p) for 0 <= a <= a_max and
// 0 <= b < p^alpha. Throws InputError unless p is prime and alpha >= 1.
ResidueReport binom_mod_check(int p, int alpha, std::int64_t a_max);

}  // namespace ccsm

#endif  // CCSM_NUMBER_THEORY_HPP_
