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

#include "ccsm/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <map>
#include <random>

#include "ccsm/errors.hpp"

namespace ccsm {

ModularOracle::ModularOracle(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.size() > kMaxElements) throw UnsupportedError("more than 64 elements");
  for (auto w : weights_) bound_ += std::llabs(w);
}

std::int64_t ModularOracle::eval(Subset s) const {
  std::int64_t total = 0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) total += weights_[std::countr_zero(b)];
  return total;
}

CutOracle::CutOracle(int n, std::vector<Edge> edges, bool directed)
    : n_(n), edges_(std::move(edges)), directed_(directed) {
  if (n_ > kMaxElements) throw UnsupportedError("more than 64 elements");
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) throw InputError("edge endpoint out of range");
    if (e.weight < 0) throw InputError("cut weights must be nonnegative");
    bound_ += e.weight;
  }
}

std::int64_t CutOracle::eval(Subset s) const {
  std::int64_t total = 0;
  if (directed_) {
    for (const auto& e : edges_) {
      if (s.contains(e.u) && !s.contains(e.v)) total += e.weight;
    }
  } else {
    for (const auto& e : edges_) {
      if (s.contains(e.u) != s.contains(e.v)) total += e.weight;
    }
  }
  return total;
}

CoverageOracle::CoverageOracle(std::vector<std::vector<int>> covers, int universe_size)
    : universe_size_(universe_size), words_((universe_size + 63) / 64) {
  if (covers.size() > kMaxElements) throw UnsupportedError("more than 64 elements");
  covers_.reserve(covers.size());
  for (const auto& items : covers) {
    std::vector<std::uint64_t> mask(words_, 0);
    for (int item : items) {
      if (item < 0 || item >= universe_size_) throw InputError("coverage item out of range");
      mask[item / 64] |= std::uint64_t{1} << (item % 64);
    }
    covers_.push_back(std::move(mask));
  }
}

std::int64_t CoverageOracle::eval(Subset s) const {
  if (words_ == 1) {
    std::uint64_t acc = 0;
    for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) acc |= covers_[std::countr_zero(b)][0];
    return std::popcount(acc);
  }
  std::vector<std::uint64_t> acc(words_, 0);
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    const auto& m = covers_[std::countr_zero(b)];
    for (int w = 0; w < words_; ++w) acc[w] |= m[w];
  }
  std::int64_t total = 0;
  for (auto w : acc) total += std::popcount(w);
  return total;
}

namespace {

std::int64_t max_abs(const std::vector<std::int64_t>& values) {
  std::int64_t b = 0;
  for (auto v : values) b = std::max<std::int64_t>(b, v < 0 ? -v : v);
  return b;
}

}  // namespace

TableOracle::TableOracle(int n, std::vector<std::int64_t> values)
    : TableOracle(n, std::move(values), 0) {
  bound_ = max_abs(values_);
}

TableOracle::TableOracle(int n, std::vector<std::int64_t> values, std::int64_t bound)
    : n_(n), values_(std::move(values)), bound_(bound) {
  if (n_ < 0 || n_ > kMaxTableElements) {
    throw UnsupportedError("explicit tables support at most 24 elements");
  }
  if (values_.size() != (std::size_t{1} << n_)) {
    throw InputError("explicit table needs exactly 2^n values");
  }
}

std::shared_ptr<const TableOracle> TableOracle::tabulate(const SubmodularOracle& f) {
  const int n = f.size();
  if (n > kMaxTableElements) throw UnsupportedError("cannot tabulate more than 24 elements");
  std::vector<std::int64_t> values(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < values.size(); ++b) values[b] = f.eval(Subset(b));
  return std::shared_ptr<const TableOracle>(new TableOracle(n, std::move(values), f.range_bound()));
}

namespace {

struct SpecBuilder {
  const GroundSet& ground;

  OraclePtr operator()(const ModularSpec& spec) const {
    std::vector<std::int64_t> w(ground.size(), 0);
    for (const auto& [label, weight] : spec.weights) w[ground.index_of(label)] = weight;
    return std::make_shared<ModularOracle>(std::move(w));
  }
  std::vector<Edge> edges(const std::vector<LabeledEdge>& in) const {
    std::vector<Edge> out;
    out.reserve(in.size());
    for (const auto& e : in) out.push_back({ground.index_of(e.u), ground.index_of(e.v), e.weight});
    return out;
  }
  OraclePtr operator()(const CutUndirectedSpec& spec) const {
    return std::make_shared<CutOracle>(ground.size(), edges(spec.edges), false);
  }
  OraclePtr operator()(const CutDirectedSpec& spec) const {
    return std::make_shared<CutOracle>(ground.size(), edges(spec.arcs), true);
  }
  OraclePtr operator()(const CoverageSpec& spec) const {
    std::map<std::string, int> universe;
    std::vector<std::vector<int>> covers(ground.size());
    for (const auto& [label, items] : spec.covers) {
      auto& c = covers[ground.index_of(label)];
      for (const auto& item : items) {
        auto [it, inserted] = universe.emplace(item, static_cast<int>(universe.size()));
        c.push_back(it->second);
      }
    }
    return std::make_shared<CoverageOracle>(std::move(covers), static_cast<int>(universe.size()));
  }
  OraclePtr operator()(const ExplicitTableSpec& spec) const {
    auto table = std::make_shared<TableOracle>(ground.size(), spec.values);
    const auto mode = ground.size() <= 16 ? CheckMode::kExhaustive : CheckMode::kSampled;
    const auto report = check_submodular(*table, mode, 20000);
    if (!report.pass) throw InputError("explicit table is not submodular");
    return table;
  }
};

}  // namespace

OraclePtr make_oracle(const FunctionSpec& spec, const GroundSet& ground) {
  if (ground.size() > kMaxElements) throw UnsupportedError("more than 64 elements");
  return std::visit(SpecBuilder{ground}, spec);
}

SubmodularityReport check_submodular(const SubmodularOracle& f, CheckMode mode, int trials,
                                     std::uint64_t seed) {
  SubmodularityReport report;
  const int n = f.size();
  auto violated = [&](Subset a, Subset b) {
    ++report.checks;
    return f.eval(a) + f.eval(b) < f.eval(a | b) + f.eval(a & b);
  };
  if (mode == CheckMode::kExhaustive) {
    if (n > 16) throw UnsupportedError("exhaustive submodularity check requires n <= 16");
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t b = 0; b < limit; ++b) {
      const Subset s(b);
      for (int i = 0; i < n; ++i) {
        if (s.contains(i)) continue;
        for (int j = i + 1; j < n; ++j) {
          if (s.contains(j)) continue;
          if (violated(s.with(i), s.with(j))) {
            report.pass = false;
            report.witness = {s.with(i), s.with(j)};
            return report;
          }
        }
      }
    }
    return report;
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = Subset::full(n).bits();
  for (int t = 0; t < trials; ++t) {
    const Subset a(rng() & mask);
    const Subset b(rng() & mask);
    if (violated(a, b)) {
      report.pass = false;
      report.witness = {a, b};
      return report;
    }
  }
  return report;
}

}  // namespace ccsm
