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

// JSON documents read and written by the command-line tool.

#ifndef CCSM_JSON_IO_HPP_
#define CCSM_JSON_IO_HPP_

#include <string>
#include <variant>

#include "ccsm/constraints.hpp"
#include "ccsm/enum_solver.hpp"
#include "ccsm/graph_cuts.hpp"
#include "ccsm/ground_set.hpp"
#include "ccsm/oracle.hpp"
#include "ccsm/reference_oracle.hpp"
#include "ccsm/ring_family.hpp"
#include "ccsm/set_system.hpp"
#include "ccsm/transforms.hpp"
#include "json.hpp"

namespace ccsm {

using Json = nlohmann::ordered_json;

// |S ∩ set| ≡ residue (mod modulus), solved through tcut_reduce.
struct TCutConstraint {
  Subset set;
  int modulus = 2;
  int residue = 0;
};

using InstanceConstraint = std::variant<CongruencyConstraint, GeneralizedConstraint, TCutConstraint>;

struct InstanceDoc {
  GroundSet ground;
  FunctionSpec function;
  RingFamily ring;
  InstanceConstraint constraint;
};

// All parse functions throw InputError on malformed documents.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

InstanceDoc instance_from_json(const Json& j);
Json instance_to_json(const InstanceDoc& doc);
Json constraint_to_json(const InstanceConstraint& c, const GroundSet& ground);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

SetSystem set_system_from_json(const Json& j);
Json set_system_to_json(const SetSystem& h);

Json labels_json(const GroundSet& ground, Subset s);
Json labels_json(const SetSystem& h, const Bitset& s);

Json solution_to_json(const EnumSolution& s, const GroundSet& ground);
Json oracle_result_to_json(const OracleResult& r, const GroundSet& ground);
Json verdict_to_json(const SystemVerdict& v, const SetSystem& h);
// Ground set, sets (the image of every subset of N, deduplicated), level,
// per-element witnesses, and g(0..n) when g is scalar.
Json transform_result_to_json(const TransformResult& t);

}  // namespace ccsm

#endif  // CCSM_JSON_IO_HPP_
