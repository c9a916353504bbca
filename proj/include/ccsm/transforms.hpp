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

// Cardinality transformations G: 2^N -> 2^W. Every element w of W carries a
// support σ(w) ⊆ N and G(S) = {w : σ(w) ⊆ S}, which makes G(S ∩ T) =
// G(S) ∩ G(T) hold by construction; the size law |G(S)| = g(|S|) is what the
// realizations below have to get right.

#ifndef CCSM_TRANSFORMS_HPP_
#define CCSM_TRANSFORMS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccsm/ground_set.hpp"
#include "ccsm/number_theory.hpp"
#include "ccsm/set_system.hpp"

namespace ccsm {

struct TransformKind {
  enum class Type { kConstant, kPower, kBinomial, kSum, kPrimePower, kGeneralizedProduct };

  Type type = Type::kConstant;
  int k = 0;                                   // Constant/Power/Binomial k, PrimePower m
  std::vector<TransformKind> parts;            // Sum
  std::vector<std::vector<std::string>> sets;  // GeneralizedProduct, by label

  static TransformKind constant(int k) { return {Type::kConstant, k, {}, {}}; }
  static TransformKind power(int k) { return {Type::kPower, k, {}, {}}; }
  static TransformKind binomial(int k) { return {Type::kBinomial, k, {}, {}}; }
  static TransformKind sum(std::vector<TransformKind> parts) {
    return {Type::kSum, 0, std::move(parts), {}};
  }
  static TransformKind prime_power(int m) { return {Type::kPrimePower, m, {}, {}}; }
  static TransformKind product(std::vector<std::vector<std::string>> sets) {
    return {Type::kGeneralizedProduct, 0, {}, std::move(sets)};
  }
};

// Throws InputError for k < 1 on Power/Binomial, k < 0 on Constant, an empty
// Sum or product, or a PrimePower modulus that is not a prime power.
void validate(const TransformKind& kind);

// Constant 0, Power/Binomial k, Sum max of parts, PrimePower m - 1,
// GeneralizedProduct the number of sets.
int declared_level(const TransformKind& kind);

// Arithmetic g. The scalar form rejects kinds that involve a product; the
// vector form takes one count per product set (or a single count otherwise).
BigInt g_value(const TransformKind& kind, std::int64_t x);
BigInt g_value(const TransformKind& kind, const std::vector<std::int64_t>& xs);

// The parts a PrimePower{m} realization is assembled from: Binomial{k} once
// for each odd k < m and p - 1 times for each even k < m.
std::vector<TransformKind> prime_power_parts(int m);

// Text form: "constant:K", "power:K", "binomial:K", "primepower:M",
// "sum(A,B,...)", "product([a,b],[c])". Throws InputError on bad syntax.
TransformKind parse_transform_kind(std::string_view text);
std::string to_string(const TransformKind& kind);

inline constexpr std::size_t kMaxTransformedSize = std::size_t{1} << 20;

struct TransformResult {
  TransformKind kind;
  GroundSet source;              // N
  GroundSet ground;              // W
  std::vector<Subset> support;   // σ(w), also the recorded level witness
  int level = 0;

  Bitset image(Subset s) const;
  // |G(S)| as the arithmetic predicts it.
  BigInt expected_size(Subset s) const;
};

// Throws InputError on an empty ground set for Power/Binomial/product kinds
// or on unknown product labels, UnsupportedError when |N| > 64 or |W| would
// exceed kMaxTransformedSize.
TransformResult apply_transform(const TransformKind& kind, const GroundSet& ground);

struct TransformReport {
  bool pass = true;
  bool exhaustive = false;
  std::uint64_t subsets = 0;  // size-law checks
  std::uint64_t pairs = 0;    // intersection-law checks
  std::string failure;        // first failed law, empty on pass
};

// Exhaustive over all subsets and pairs when n <= 8, otherwise samples
// `trials` random subsets and pairs. Ground labels are "1".."n".
TransformReport verify_transform(const TransformKind& kind, int n, std::uint64_t trials = 1000,
                                 std::uint64_t seed = 0);

// {G(H) : H ∈ h} with duplicates removed, in first-appearance order.
SetSystem transform_system(const TransformKind& kind, const SetSystem& h);

// g(x) mod p for PrimePower{m = p^a} is 0 when m | x and 1 otherwise;
// checked for 0 <= x <= x_max.
ResidueReport prime_power_residue_check(int m, std::int64_t x_max);
// x^(m-1) mod m is 0 when m | x and 1 otherwise, for prime m.
ResidueReport fermat_residue_check(int m, std::int64_t x_max);

}  // namespace ccsm

#endif  // CCSM_TRANSFORMS_HPP_
