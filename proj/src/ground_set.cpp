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

#include "ccsm/ground_set.hpp"

#include "ccsm/errors.hpp"

namespace ccsm {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InputError("duplicate ground-set label '" + labels_[i] + "'");
    }
  }
}

GroundSet GroundSet::numbered(int n, int first) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown element label '" + std::string(label) + "'");
}

Subset GroundSet::subset(const std::vector<std::string>& labels) const {
  if (size() > kMaxElements) {
    throw UnsupportedError("ground set has more than 64 elements");
  }
  Subset s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (int i : s.elements()) out.push_back(labels_.at(i));
  return out;
}

}  // namespace ccsm
