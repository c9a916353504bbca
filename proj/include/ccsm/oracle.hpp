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

// Integer-valued set function oracles and the label-level specs they are built
// from.

#ifndef CCSM_ORACLE_HPP_
#define CCSM_ORACLE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ccsm/ground_set.hpp"
#include "ccsm/subset.hpp"

namespace ccsm {

// Value oracle for f: 2^N -> Z. Implementations are immutable and eval() is
// pure, so a single oracle may be shared across threads.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  // Ground-set size n; eval() accepts subsets of {0, ..., n-1}.
  virtual int size() const = 0;
  virtual std::int64_t eval(Subset s) const = 0;
  // B with |f(S)| <= B for every S.
  virtual std::int64_t range_bound() const = 0;
};

using OraclePtr = std::shared_ptr<const SubmodularOracle>;

struct Edge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

class ModularOracle final : public SubmodularOracle {
 public:
  explicit ModularOracle(std::vector<std::int64_t> weights);

  int size() const override { return static_cast<int>(weights_.size()); }
  std::int64_t eval(Subset s) const override;
  std::int64_t range_bound() const override { return bound_; }

  const std::vector<std::int64_t>& weights() const { return weights_; }

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t bound_ = 0;
};

// Undirected: weight of edges with exactly one endpoint in S.
// Directed: weight of arcs (u, v) with u in S and v outside S.
class CutOracle final : public SubmodularOracle {
 public:
  CutOracle(int n, std::vector<Edge> edges, bool directed);

  int size() const override { return n_; }
  std::int64_t eval(Subset s) const override;
  std::int64_t range_bound() const override { return bound_; }

  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  bool directed_;
  std::int64_t bound_ = 0;
};

// f(S) = |union of cover(e) over e in S|.
class CoverageOracle final : public SubmodularOracle {
 public:
  CoverageOracle(std::vector<std::vector<int>> covers, int universe_size);

  int size() const override { return static_cast<int>(covers_.size()); }
  std::int64_t eval(Subset s) const override;
  std::int64_t range_bound() const override { return universe_size_; }

 private:
  std::vector<std::vector<std::uint64_t>> covers_;
  int universe_size_;
  int words_;
};

// Explicit value per subset, indexed by the subset bitmask.
class TableOracle final : public SubmodularOracle {
 public:
  static constexpr int kMaxTableElements = 24;

  // No submodularity check; see make_oracle() for the validated path.
  TableOracle(int n, std::vector<std::int64_t> values);
  // Evaluates f on every subset. Requires f.size() <= kMaxTableElements.
  static std::shared_ptr<const TableOracle> tabulate(const SubmodularOracle& f);

  int size() const override { return n_; }
  std::int64_t eval(Subset s) const override { return values_[s.bits()]; }
  std::int64_t range_bound() const override { return bound_; }

  const std::vector<std::int64_t>& values() const { return values_; }

 private:
  TableOracle(int n, std::vector<std::int64_t> values, std::int64_t bound);

  int n_;
  std::vector<std::int64_t> values_;
  std::int64_t bound_ = 0;
};

// Label-level function descriptions, as read from instance files.
struct LabeledEdge {
  std::string u;
  std::string v;
  std::int64_t weight = 0;
};

struct ModularSpec {
  std::vector<std::pair<std::string, std::int64_t>> weights;  // missing => 0
};
struct CutUndirectedSpec {
  std::vector<LabeledEdge> edges;
};
struct CutDirectedSpec {
  std::vector<LabeledEdge> arcs;
};
struct CoverageSpec {
  std::vector<std::pair<std::string, std::vector<std::string>>> covers;
};
struct ExplicitTableSpec {
  std::vector<std::int64_t> values;  // indexed by bitmask over ground order
};

using FunctionSpec =
    std::variant<ModularSpec, CutUndirectedSpec, CutDirectedSpec, CoverageSpec, ExplicitTableSpec>;

// Validates labels and weights. Explicit tables must have 2^n entries,
// n <= 24, and pass check_submodular (exhaustive up to n = 16, sampled above).
OraclePtr make_oracle(const FunctionSpec& spec, const GroundSet& ground);

enum class CheckMode { kExhaustive, kSampled };

struct SubmodularityReport {
  bool pass = true;
  // (A, B) with f(A) + f(B) < f(A ∪ B) + f(A ∩ B).
  std::optional<std::pair<Subset, Subset>> witness;
  std::uint64_t checks = 0;
};

// Exhaustive mode tests the local condition f(S+i) + f(S+j) >= f(S+i+j) + f(S)
// for all S and i, j outside S, which is equivalent to submodularity; it
// requires n <= 16. Sampled mode tests `trials` random pairs.
SubmodularityReport check_submodular(const SubmodularOracle& f, CheckMode mode,
                                     int trials = 1000, std::uint64_t seed = 0);

}  // namespace ccsm

#endif  // CCSM_ORACLE_HPP_
