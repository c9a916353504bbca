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

#include "ccsm/number_theory.hpp"

#include <string>
#include <vector>

#include "ccsm/constraints.hpp"
#include "ccsm/errors.hpp"

namespace ccsm {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r is C(a - b + i, i) here
  }
  return r;
}

std::int64_t mod(const BigInt& x, std::int64_t m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

ResidueReport binom_mod_check(int p, int alpha, std::int64_t a_max) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (alpha < 1) throw InputError("exponent must be at least 1");
  if (a_max < 0) throw InputError("a_max must be nonnegative");
  std::int64_t q = 1;
  for (int i = 0; i < alpha; ++i) {
    if (q > 4096 / p) throw UnsupportedError("prime power above 4096");
    q *= p;
  }

  ResidueReport rep;
  // Row-wise Pascal recurrence on residues mod p keeps this linear per row.
  std::vector<std::int64_t> row(q, 0), next(q, 0);
  std::vector<std::vector<std::int64_t>> base;  // rows 0..q-1, cached
  base.reserve(q);
  row[0] = 1;
  for (std::int64_t a = 0; a <= a_max; ++a) {
    if (a < q) base.push_back(row);
    const auto& reduced = base[a % q];
    for (std::int64_t b = 0; b < q; ++b) {
      ++rep.checks;
      if (row[b] != reduced[b]) {
        rep.pass = false;
        rep.counterexample = {a, b};
        return rep;
      }
    }
    next[0] = 1;
    for (std::int64_t b = 1; b < q; ++b) next[b] = (row[b] + row[b - 1]) % p;
    row.swap(next);
  }
  return rep;
}

}  // namespace ccsm
