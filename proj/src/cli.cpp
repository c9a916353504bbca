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

#include "ccsm/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ccsm/constraints.hpp"
#include "ccsm/enum_solver.hpp"
#include "ccsm/errors.hpp"
#include "ccsm/generators.hpp"
#include "ccsm/graph_cuts.hpp"
#include "ccsm/instance.hpp"
#include "ccsm/json_io.hpp"
#include "ccsm/number_theory.hpp"
#include "ccsm/reference_oracle.hpp"
#include "ccsm/set_system.hpp"
#include "ccsm/transforms.hpp"

namespace ccsm {

namespace {

Constraint plain_constraint(const InstanceConstraint& c) {
  if (const auto* cc = std::get_if<CongruencyConstraint>(&c)) return *cc;
  if (const auto* gc = std::get_if<GeneralizedConstraint>(&c)) return *gc;
  const auto& t = std::get<TCutConstraint>(c);
  return GeneralizedConstraint{t.modulus, {{t.set, t.residue}}};
}

EnumSolution solve_instance(const InstanceDoc& d, std::optional<int> depth, const EnumOptions& opts) {
  const OraclePtr f = make_oracle(d.function, d.ground);
  if (const auto* t = std::get_if<TCutConstraint>(&d.constraint)) {
    const TCutReduction red = tcut_reduce(d.ground, f, d.ring, t->set, t->modulus, t->residue);
    const Constraint& c = red.reduced.constraint;
    EnumSolution s = enum_solve(*red.reduced.function, red.reduced.ring, c,
                                depth.value_or(default_depth(c)), opts);
    if (s.best) s.best = red.lift(*s.best);
    for (auto& x : s.candidate_family) x = red.lift(x);
    return s;
  }
  const Constraint c = plain_constraint(d.constraint);
  validate(c);
  return enum_solve(*f, d.ring, c, depth.value_or(default_depth(c)), opts);
}

BackendChoice parse_backend(const std::string& s) {
  if (s == "auto") return BackendChoice::kAuto;
  if (s == "brute") return BackendChoice::kBruteForce;
  if (s == "mnp") return BackendChoice::kMinNormPoint;
  throw InputError("unknown backend '" + s + "'");
}

std::vector<std::vector<std::string>> read_label_lists(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.is_array()) throw InputError("expected a JSON array of label arrays");
  std::vector<std::vector<std::string>> out;
  for (const auto& s : j) {
    if (!s.is_array()) throw InputError("expected a JSON array of label arrays");
    std::vector<std::string> labels;
    for (const auto& l : s) {
      if (!l.is_string()) throw InputError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    out.push_back(std::move(labels));
  }
  return out;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct CheckRow {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<CheckRow> run_lemma_checks() {
  std::vector<CheckRow> rows;
  const std::pair<int, int> binom_cases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}};
  for (auto [p, a] : binom_cases) {
    const ResidueReport r = binom_mod_check(p, a, 500);
    rows.push_back({"binomial p=" + std::to_string(p) + " alpha=" + std::to_string(a), r.pass,
                    std::to_string(r.checks) + " congruences"});
  }
  for (int m : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const ResidueReport r = prime_power_residue_check(m, 10 * m);
    rows.push_back({"prime-power residues m=" + std::to_string(m), r.pass,
                    "x in [0, " + std::to_string(10 * m) + "]"});
  }
  for (int m : {2, 3, 5, 7}) {
    const ResidueReport r = fermat_residue_check(m, 10 * m);
    rows.push_back({"power residues m=" + std::to_string(m), r.pass,
                    "x in [0, " + std::to_string(10 * m) + "]"});
  }
  {
    // These hypotheses cannot all hold: every report must find a failing one, and
    // a fully satisfied one raises.
    Rng rng(0);
    int systems = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + trial % 6;
      const SetSystem h = random_closed_covering_system(n, rng);
      for (int p = 1; p <= 5; ++p) {
        for (int r = 0; r < p; ++r) inclusion_exclusion_check(h, p, r);
      }
      ++systems;
    }
    rows.push_back({"inclusion-exclusion obstruction", true,
                    std::to_string(systems) + " closed covering systems, p <= 5"});
  }
  {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
      std::vector<Bitset> singles;
      for (int i = 0; i < n; ++i) singles.emplace_back(n, std::uint64_t{1} << i);
      const SetSystem h(GroundSet::numbered(n, 1), singles);
      ok &= frankl_wilson_check(h, 2, 1, {1, 0}).hypotheses_hold;
    }
    Rng rng(1);
    int uniform_systems = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 3 + trial % 5;
      const int k = 1 + static_cast<int>(rng() % n);
      std::vector<Bitset> sets;
      for_each_k_subset(Subset::full(n), k, [&](Subset s) {
        if (rng() % 3 == 0) sets.emplace_back(n, s.bits());
      });
      const SetSystem h(GroundSet::numbered(n, 1), sets);
      for (int p : {2, 3, 5}) {
        // μ_0 = k mod p, intersections allowed in every other residue.
        std::vector<int> mu{k % p};
        for (int x = 0; x < p; ++x) {
          if (x != k % p) mu.push_back(x);
        }
        frankl_wilson_check(h, p, p - 1, mu);
      }
      ++uniform_systems;
    }
    rows.push_back({"Frankl-Wilson bound", ok, std::to_string(uniform_systems) + " uniform systems"});
  }
  return rows;
}

int cmd_check_lemmas(std::ostream& out) {
  const auto rows = run_lemma_checks();
  Json table = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    Json row;
    row["check"] = r.name;
    row["pass"] = r.pass;
    row["detail"] = r.detail;
    table.push_back(row);
    all &= r.pass;
  }
  Json j;
  j["pass"] = all;
  j["checks"] = table;
  print(out, j);
  return all ? kExitOk : kExitInconsistent;
}

int cmd_bench(std::ostream& out, const std::string& family, int m, int n, int trials, std::uint64_t seed,
              const EnumOptions& opts) {
  if (m < 1) throw InputError("modulus must be at least 1");
  if (n < 1 || n > 20) throw InputError("bench needs 1 <= n <= 20");
  if (trials < 1) throw InputError("trials must be positive");
  Rng rng(seed);
  Json rows = Json::array();
  int agree = 0;
  bool broken = false;
  for (int t = 0; t < trials; ++t) {
    InstanceDoc d;
    if (family == "sec6") {
      d = tight_depth_instance(m, n - 1);
    } else if (family == "random-cut" || family == "random-modular") {
      d.ground = GroundSet::numbered(n);
      d.function = random_function(family == "random-cut" ? Family::kCut : Family::kModular, d.ground, rng);
      d.ring = RingFamily(n);
      d.constraint = CongruencyConstraint{m, static_cast<int>(rng() % m)};
    } else {
      throw InputError("unknown bench family '" + family + "'");
    }
    const EnumSolution s = solve_instance(d, std::nullopt, opts);
    const OraclePtr f = make_oracle(d.function, d.ground);
    const OracleResult o = exhaustive_solve(*f, d.ring, plain_constraint(d.constraint));
    const bool same = s.value == o.optimum;
    agree += same;
    broken |= s.guaranteed && !same;
    Json row;
    row["trial"] = t;
    row["value"] = s.value ? Json(*s.value) : Json(nullptr);
    row["oracle"] = o.optimum ? Json(*o.optimum) : Json(nullptr);
    row["sfm_calls"] = s.sfm_calls;
    row["pair_count"] = s.pair_count;
    row["agrees"] = same;
    rows.push_back(row);
  }
  Json j;
  j["family"] = family;
  j["m"] = m;
  j["n"] = n;
  j["seed"] = seed;
  j["rows"] = rows;
  j["agreement"] = agree;
  print(out, j);
  return broken ? kExitInconsistent : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact congruency-constrained submodular minimization and set-system tools", "ccsm"};
  app.require_subcommand(1);

  std::string instance_file, graph_file, system_file, sets_file, kind_text, mode = "congruency",
                                                                            backend = "auto", family;
  std::optional<int> depth;
  int threads = 0, m = 2, r = 1, d = 0, n = 0, budget = 4, trials = 10;
  std::optional<int> k;
  std::uint64_t seed = 0;
  bool proper = false;

  auto add_solver_flags = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "worker threads, 0 = available parallelism");
    sub->add_option("--backend", backend, "auto | brute | mnp");
  };

  auto* solve = app.add_subcommand("solve", "Run the enumeration on an instance file");
  solve->add_option("--instance", instance_file)->required();
  solve->add_option("--depth", depth, "enumeration depth (default: guaranteed depth)");
  add_solver_flags(solve);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference solve of an instance file");
  oracle->add_option("--instance", instance_file)->required();
  oracle->add_option("--depth", depth, "accepted for symmetry with solve; unused");
  add_solver_flags(oracle);

  auto* cut = app.add_subcommand("solve-cut", "Minimum cut under a parity or congruency constraint");
  cut->add_option("--graph", graph_file)->required();
  cut->add_option("--mode", mode, "congruency | tset-even | tset-odd");
  cut->add_option("--m", m, "modulus for congruency mode");
  cut->add_option("--r", r, "residue for congruency mode");
  cut->add_option("--sets", sets_file, "JSON array of vertex-label arrays for t-set modes");
  cut->add_flag("--proper", proper, "exclude the empty set and the full vertex set");
  add_solver_flags(cut);

  auto* verify = app.add_subcommand("verify-system", "Check the (m,d) or (m,k,d) system properties");
  verify->add_option("--system", system_file)->required();
  verify->add_option("--m", m)->required();
  verify->add_option("--d", d)->required();
  verify->add_option("--k", k, "number of residue sets");
  verify->add_option("--sets", sets_file, "JSON array of label arrays S_1..S_k");

  auto* transform = app.add_subcommand("transform", "Realize a cardinality transformation");
  transform->add_option("--kind", kind_text)->required();
  transform->add_option("--n", n, "ground size when no system is given");
  transform->add_option("--system", system_file, "transform this set system instead");

  auto* search = app.add_subcommand("search-system", "Bounded search for an (m,d)-system");
  search->add_option("--m", m)->required();
  search->add_option("--d", d)->required();
  search->add_option("--n", n)->required();
  search->add_option("--budget", budget, "maximum number of generating sets");

  auto* lemmas = app.add_subcommand("check-lemmas", "Run the arithmetic and set-system self-tests");

  auto* bench = app.add_subcommand("bench", "Compare the enumeration with the exhaustive oracle");
  bench->add_option("--family", family, "sec6 | random-cut | random-modular")->required();
  bench->add_option("--m", m);
  bench->add_option("--n", n)->required();
  bench->add_option("--trials", trials);
  bench->add_option("--seed", seed);
  add_solver_flags(bench);

  std::vector<std::string> argv_store{"ccsm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    EnumOptions opts;
    opts.threads = threads;
    opts.sfm.backend = parse_backend(backend);

    if (*solve) {
      const InstanceDoc doc = instance_from_json(read_json_file(instance_file));
      const EnumSolution s = solve_instance(doc, depth, opts);
      for (const auto& w : s.warnings) err << "warning: " << w << '\n';
      print(out, solution_to_json(s, doc.ground));
      return s.best ? kExitOk : kExitNone;
    }
    if (*oracle) {
      const InstanceDoc doc = instance_from_json(read_json_file(instance_file));
      const OraclePtr f = make_oracle(doc.function, doc.ground);
      const OracleResult res = exhaustive_solve(*f, doc.ring, plain_constraint(doc.constraint));
      print(out, oracle_result_to_json(res, doc.ground));
      return res.optimum ? kExitOk : kExitNone;
    }
    if (*cut) {
      CutProblem problem;
      problem.graph = graph_from_json(read_json_file(graph_file));
      problem.proper = proper;
      if (mode == "congruency") {
        problem.mode = CongruencyCutMode{m, r};
      } else if (mode == "tset-even" || mode == "tset-odd") {
        if (sets_file.empty()) throw InputError("t-set modes need --sets");
        TSetCutMode tm;
        tm.odd = mode == "tset-odd";
        for (const auto& labels : read_label_lists(sets_file)) {
          tm.sets.push_back(problem.graph.vertices.subset(labels));
        }
        problem.mode = tm;
      } else {
        throw InputError("unknown cut mode '" + mode + "'");
      }
      const EnumSolution s = solve_cut(problem, opts);
      for (const auto& w : s.warnings) err << "warning: " << w << '\n';
      print(out, solution_to_json(s, problem.graph.vertices));
      return s.best ? kExitOk : kExitNone;
    }
    if (*verify) {
      const SetSystem h = set_system_from_json(read_json_file(system_file));
      SystemVerdict v;
      if (k || !sets_file.empty()) {
        if (sets_file.empty()) throw InputError("--k needs --sets");
        std::vector<Bitset> sets;
        for (const auto& labels : read_label_lists(sets_file)) {
          Bitset b(h.ground_size());
          for (const auto& l : labels) b.set(h.ground().index_of(l));
          sets.push_back(std::move(b));
        }
        if (k && *k != static_cast<int>(sets.size())) {
          throw InputError("--k does not match the number of sets");
        }
        v = check_mkd_system(h, m, sets, d);
      } else {
        v = check_md_system(h, m, d);
      }
      print(out, verdict_to_json(v, h));
      return v.pass ? kExitOk : kExitNone;
    }
    if (*transform) {
      const TransformKind kind = parse_transform_kind(kind_text);
      if (!system_file.empty()) {
        const SetSystem h = set_system_from_json(read_json_file(system_file));
        print(out, set_system_to_json(transform_system(kind, h)));
      } else {
        if (n < 0) throw InputError("--n must be nonnegative");
        print(out, transform_result_to_json(apply_transform(kind, GroundSet::numbered(n, 1))));
      }
      return kExitOk;
    }
    if (*search) {
      if (budget > 6) throw InputError("budget is limited to 6 generators");
      const SearchResult res = search_md_system(m, d, n, budget);
      Json j;
      j["found"] = res.system.has_value();
      if (res.system) {
        j["ground"] = res.system->ground().labels();
        Json sets = Json::array(), gens = Json::array();
        for (const auto& s : res.system->sets()) sets.push_back(labels_json(*res.system, s));
        for (const auto& g : res.generators) gens.push_back(labels_json(*res.system, g));
        j["sets"] = sets;
        j["generators"] = gens;
      }
      j["nodes"] = res.nodes;
      print(out, j);
      return res.system ? kExitOk : kExitNone;
    }
    if (*lemmas) return cmd_check_lemmas(out);
    if (*bench) return cmd_bench(out, family, m, n, trials, seed, opts);
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitNone;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace ccsm
