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

#ifndef CCSM_GROUND_SET_HPP_
#define CCSM_GROUND_SET_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ccsm/subset.hpp"

namespace ccsm {

// Ordered list of distinct labels. Index i is the bit position used by Subset.
class GroundSet {
 public:
  GroundSet() = default;
  // Throws InputError on duplicate labels.
  explicit GroundSet(std::vector<std::string> labels);

  // Labels "first", "first+1", ..., as decimal strings.
  static GroundSet numbered(int n, int first = 0);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(std::string_view label) const;
  // Throws InputError on unknown labels.
  int index_of(std::string_view label) const;

  // Label-based conversion for the solver side (n <= 64).
  Subset subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;
  Subset all() const { return Subset::full(size()); }

  bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace ccsm

#endif  // CCSM_GROUND_SET_HPP_
