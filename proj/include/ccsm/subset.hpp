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

#ifndef CCSM_SUBSET_HPP_
#define CCSM_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <vector>

namespace ccsm {

// Solver-side ground sets are capped at this many elements.
inline constexpr int kMaxElements = 64;

// A subset of a ground set {0, ..., n-1} with n <= 64, stored as a bitmask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset singleton(int i) { return Subset(std::uint64_t{1} << i); }
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static Subset of(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s = s.with(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }
  constexpr Subset with(int i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }
  // Smallest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset operator^(Subset o) const { return Subset(bits_ ^ o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const Subset&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Strict ordering by cardinality first, then lexicographically by the sorted
// index sequence. This is the tie-break order used throughout the solvers.
constexpr bool cardinality_lex_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Equal-size sets agree below the lowest differing element; whichever set
  // holds that element has the smaller sequence.
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct SubsetHash {
  std::size_t operator()(Subset s) const noexcept {
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

// Calls fn(T) for every T with lo ⊆ T ⊆ hi. Requires lo ⊆ hi.
template <typename Fn>
void for_each_between(Subset lo, Subset hi, Fn&& fn) {
  const std::uint64_t free = hi.bits() & ~lo.bits();
  std::uint64_t t = free;
  while (true) {
    fn(Subset(lo.bits() | t));
    if (t == 0) break;
    t = (t - 1) & free;
  }
}

// Calls fn(T) for every T ⊆ within with |T| = k, in lexicographic order of
// sorted index sequences.
template <typename Fn>
void for_each_k_subset(Subset within, int k, Fn&& fn) {
  const std::vector<int> pool = within.elements();
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s;
    for (int i : idx) s = s.with(pool[i]);
    fn(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace ccsm

#endif  // CCSM_SUBSET_HPP_
