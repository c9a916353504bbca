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

#include "ccsm/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <type_traits>

#include "ccsm/errors.hpp"

namespace ccsm {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<std::int64_t>();
}

int as_small_int(const Json& j, const std::string& what) {
  const std::int64_t v = as_int(j, what);
  if (v < -(1 << 30) || v > (1 << 30)) throw InputError(what + " is out of range");
  return static_cast<int>(v);
}

std::string as_label(const Json& j) {
  if (!j.is_string()) throw InputError("labels must be strings");
  return j.get<std::string>();
}

std::vector<std::string> as_labels(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of labels");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_label(x));
  return out;
}

std::vector<LabeledEdge> as_edges(const Json& j) {
  if (!j.is_array()) throw InputError("edges must be an array");
  std::vector<LabeledEdge> out;
  for (const auto& e : j) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
      throw InputError("each edge is [u, v] or [u, v, weight]");
    }
    out.push_back({as_label(e[0]), as_label(e[1]), e.size() == 3 ? as_int(e[2], "edge weight") : 1});
  }
  return out;
}

Json edges_json(const std::vector<LabeledEdge>& edges) {
  Json a = Json::array();
  for (const auto& e : edges) a.push_back(Json::array({e.u, e.v, e.weight}));
  return a;
}

FunctionSpec function_from_json(const Json& j) {
  const std::string type = as_label(field(j, "type"));
  if (type == "modular") {
    const Json& w = field(j, "weights");
    if (!w.is_object()) throw InputError("modular weights must be an object");
    ModularSpec s;
    for (auto it = w.begin(); it != w.end(); ++it) s.weights.emplace_back(it.key(), as_int(*it, "weight"));
    return s;
  }
  if (type == "cut" || type == "undirected_cut") return CutUndirectedSpec{as_edges(field(j, "edges"))};
  if (type == "directed_cut") return CutDirectedSpec{as_edges(field(j, "arcs"))};
  if (type == "coverage") {
    const Json& c = field(j, "covers");
    if (!c.is_object()) throw InputError("coverage covers must be an object");
    CoverageSpec s;
    for (auto it = c.begin(); it != c.end(); ++it) s.covers.emplace_back(it.key(), as_labels(*it));
    return s;
  }
  if (type == "table" || type == "explicit_table") {
    const Json& v = field(j, "values");
    if (!v.is_array()) throw InputError("table values must be an array");
    ExplicitTableSpec s;
    for (const auto& x : v) s.values.push_back(as_int(x, "table value"));
    return s;
  }
  throw InputError("unknown function type '" + type + "'");
}

Json function_to_json(const FunctionSpec& spec) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        Json j;
        if constexpr (std::is_same_v<T, ModularSpec>) {
          j["type"] = "modular";
          Json w = Json::object();
          for (const auto& [l, v] : s.weights) w[l] = v;
          j["weights"] = w;
        } else if constexpr (std::is_same_v<T, CutUndirectedSpec>) {
          j["type"] = "cut";
          j["edges"] = edges_json(s.edges);
        } else if constexpr (std::is_same_v<T, CutDirectedSpec>) {
          j["type"] = "directed_cut";
          j["arcs"] = edges_json(s.arcs);
        } else if constexpr (std::is_same_v<T, CoverageSpec>) {
          j["type"] = "coverage";
          Json c = Json::object();
          for (const auto& [l, items] : s.covers) c[l] = items;
          j["covers"] = c;
        } else {
          j["type"] = "table";
          j["values"] = s.values;
        }
        return j;
      },
      spec);
}

RingFamily ring_from_json(const Json* j, const GroundSet& g) {
  if (!j || j->is_null()) return RingFamily(g.size());
  Subset in, out;
  std::vector<Implication> arcs;
  if (auto it = j->find("forced_in"); it != j->end()) in = g.subset(as_labels(*it));
  if (auto it = j->find("forced_out"); it != j->end()) out = g.subset(as_labels(*it));
  if (auto it = j->find("implications"); it != j->end()) {
    if (!it->is_array()) throw InputError("implications must be an array");
    for (const auto& a : *it) {
      if (!a.is_array() || a.size() != 2) throw InputError("each implication is [u, v]");
      arcs.push_back({g.index_of(as_label(a[0])), g.index_of(as_label(a[1]))});
    }
  }
  return RingFamily(g.size(), in, out, std::move(arcs));
}

InstanceConstraint constraint_from_json(const Json* j, const GroundSet& g) {
  if (!j || j->is_null()) return CongruencyConstraint{1, 0};
  const std::string type = as_label(field(*j, "type"));
  if (type == "congruency") {
    return CongruencyConstraint{as_small_int(field(*j, "modulus"), "modulus"),
                                as_small_int(field(*j, "residue"), "residue")};
  }
  if (type == "generalized") {
    GeneralizedConstraint c;
    c.modulus = as_small_int(field(*j, "modulus"), "modulus");
    const Json& terms = field(*j, "terms");
    if (!terms.is_array()) throw InputError("terms must be an array");
    for (const auto& t : terms) {
      c.terms.push_back({g.subset(as_labels(field(t, "set"))), as_small_int(field(t, "residue"), "residue")});
    }
    return c;
  }
  if (type == "tcut") {
    return TCutConstraint{g.subset(as_labels(field(*j, "set"))),
                          as_small_int(field(*j, "modulus"), "modulus"),
                          as_small_int(field(*j, "residue"), "residue")};
  }
  throw InputError("unknown constraint type '" + type + "'");
}

template <typename Fn>
auto wrap_json_errors(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON document: ") + e.what());
  }
}

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

InstanceDoc instance_from_json(const Json& j) {
  return wrap_json_errors([&] {
    InstanceDoc d;
    d.ground = GroundSet(as_labels(field(j, "ground_set")));
    d.function = function_from_json(field(j, "function"));
    auto lat = j.find("lattice");
    d.ring = ring_from_json(lat == j.end() ? nullptr : &*lat, d.ground);
    auto con = j.find("constraint");
    d.constraint = constraint_from_json(con == j.end() ? nullptr : &*con, d.ground);
    return d;
  });
}

Json constraint_to_json(const InstanceConstraint& c, const GroundSet& ground) {
  Json j;
  if (const auto* cc = std::get_if<CongruencyConstraint>(&c)) {
    j["type"] = "congruency";
    j["modulus"] = cc->modulus;
    j["residue"] = cc->residue;
  } else if (const auto* gc = std::get_if<GeneralizedConstraint>(&c)) {
    j["type"] = "generalized";
    j["modulus"] = gc->modulus;
    Json terms = Json::array();
    for (const auto& t : gc->terms) {
      Json tj;
      tj["set"] = labels_json(ground, t.set);
      tj["residue"] = t.residue;
      terms.push_back(tj);
    }
    j["terms"] = terms;
  } else {
    const auto& tc = std::get<TCutConstraint>(c);
    j["type"] = "tcut";
    j["set"] = labels_json(ground, tc.set);
    j["modulus"] = tc.modulus;
    j["residue"] = tc.residue;
  }
  return j;
}

Json instance_to_json(const InstanceDoc& d) {
  Json j;
  j["ground_set"] = d.ground.labels();
  j["function"] = function_to_json(d.function);
  Json lat;
  lat["forced_in"] = labels_json(d.ground, d.ring.forced_in());
  lat["forced_out"] = labels_json(d.ground, d.ring.forced_out());
  Json arcs = Json::array();
  for (const auto& a : d.ring.implications()) {
    arcs.push_back(Json::array({d.ground.label(a.from), d.ground.label(a.to)}));
  }
  lat["implications"] = arcs;
  j["lattice"] = lat;
  j["constraint"] = constraint_to_json(d.constraint, d.ground);
  return j;
}

Graph graph_from_json(const Json& j) {
  return wrap_json_errors([&] {
    Graph g;
    g.vertices = GroundSet(as_labels(field(j, "vertices")));
    for (const auto& e : as_edges(field(j, "edges"))) {
      if (e.weight < 0) throw InputError("edge weights must be nonnegative");
      g.edges.push_back({g.vertices.index_of(e.u), g.vertices.index_of(e.v), e.weight});
    }
    if (auto it = j.find("directed"); it != j.end()) {
      if (!it->is_boolean()) throw InputError("directed must be a boolean");
      g.directed = it->get<bool>();
    }
    return g;
  });
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertices.labels();
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back(Json::array({g.vertices.label(e.u), g.vertices.label(e.v), e.weight}));
  }
  j["edges"] = edges;
  j["directed"] = g.directed;
  return j;
}

SetSystem set_system_from_json(const Json& j) {
  return wrap_json_errors([&] {
    GroundSet g(as_labels(field(j, "ground")));
    const Json& sets = field(j, "sets");
    if (!sets.is_array()) throw InputError("sets must be an array");
    std::vector<std::vector<std::string>> lists;
    for (const auto& s : sets) lists.push_back(as_labels(s));
    return SetSystem::from_labels(std::move(g), lists);
  });
}

Json set_system_to_json(const SetSystem& h) {
  Json j;
  j["ground"] = h.ground().labels();
  Json sets = Json::array();
  for (const auto& s : h.sets()) sets.push_back(labels_json(h, s));
  j["sets"] = sets;
  return j;
}

Json labels_json(const GroundSet& ground, Subset s) { return ground.labels_of(s); }

Json labels_json(const SetSystem& h, const Bitset& s) { return h.labels_of(s); }

Json solution_to_json(const EnumSolution& s, const GroundSet& ground) {
  Json j;
  j["value"] = s.value ? Json(*s.value) : Json(nullptr);
  j["set"] = s.best ? labels_json(ground, *s.best) : Json(nullptr);
  j["depth"] = s.depth;
  j["sfm_calls"] = s.sfm_calls;
  j["skipped_empty"] = s.skipped_empty;
  j["pair_count"] = s.pair_count;
  j["candidates"] = s.candidates;
  j["evals"] = s.evals;
  j["guaranteed"] = s.guaranteed;
  j["warnings"] = s.warnings;
  return j;
}

Json oracle_result_to_json(const OracleResult& r, const GroundSet& ground) {
  Json j;
  j["optimum"] = r.optimum ? Json(*r.optimum) : Json(nullptr);
  Json optima = Json::array();
  for (Subset s : r.minimal_optima) optima.push_back(labels_json(ground, s));
  j["minimal_optima"] = optima;
  j["evals"] = r.evals;
  return j;
}

Json verdict_to_json(const SystemVerdict& v, const SetSystem& h) {
  Json j;
  j["pass"] = v.pass;
  j["failed"] = v.pass ? Json(nullptr) : Json(property_name(v.failed));
  Json w = Json::array();
  for (const auto& s : v.witness) w.push_back(labels_json(h, s));
  j["witness"] = w;
  return j;
}

Json transform_result_to_json(const TransformResult& t) {
  const int n = t.source.size();
  if (n > 16) throw UnsupportedError("transform output lists all of 2^N; n must be at most 16");
  Json j;
  j["kind"] = to_string(t.kind);
  j["source"] = t.source.labels();
  j["ground"] = t.ground.labels();
  j["level"] = t.level;
  Json wit = Json::object();
  for (std::size_t w = 0; w < t.support.size(); ++w) {
    wit[t.ground.label(static_cast<int>(w))] = labels_json(t.source, t.support[w]);
  }
  j["witnesses"] = wit;
  try {
    Json g = Json::array();
    for (int x = 0; x <= n; ++x) g.push_back(big_json(g_value(t.kind, x)));
    j["g"] = g;
  } catch (const InputError&) {
    j["g"] = nullptr;  // product kinds have no scalar g
  }
  std::vector<Bitset> images;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) images.push_back(t.image(Subset(b)));
  const SetSystem sys = SetSystem::deduplicated(t.ground, std::move(images));
  Json sets = Json::array();
  for (const auto& s : sys.sets()) sets.push_back(labels_json(sys, s));
  j["sets"] = sets;
  return j;
}

}  // namespace ccsm
