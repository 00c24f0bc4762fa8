// Copyright 2026 The smpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "smpoly/adjacency.hpp"
#include "smpoly/generate.hpp"
#include "smpoly/hull.hpp"
#include "smpoly/report_json.hpp"
#include "smpoly/simplex.hpp"
#include "smpoly/vertex_enum.hpp"

namespace smpoly::cli {

namespace {

enum class Format { Json, Text };

/// Options shared by all commands plus the per-command fields.
struct RunConfig {
  std::string command;
  std::vector<std::string> instance_paths;
  Format format = Format::Json;
  std::string output;
  std::size_t max_edges = 0;  // 0: command default

  // Generator spec.
  std::optional<std::size_t> exhaustive;
  std::optional<std::size_t> random_count;
  std::size_t a_count = 3;
  std::size_t b_count = 3;
  double edge_prob = 1.0;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> sample;

  // Command specific.
  std::string side = "A";
  std::string matching_path;
  std::string weights_path;
  std::string sense = "max";
  std::string export_path;
  std::string method = "dd";
  std::string quarantine = "smpoly-quarantine.json";
  bool details = false;
  std::string m1_path, m2_path, m1_side, m2_side;
  std::string without;
  std::string out_dir;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Side parse_side(const std::string& s) {
  if (s == "A" || s == "a") return Side::A;
  if (s == "B" || s == "b") return Side::B;
  throw UsageError("side must be A or B, got '" + s + "'");
}

std::size_t bound_or(const RunConfig& cfg, std::size_t fallback) {
  return cfg.max_edges == 0 ? fallback : cfg.max_edges;
}

const Instance load_single(const RunConfig& cfg) {
  if (cfg.instance_paths.size() != 1) throw UsageError(cfg.command + " takes exactly one instance file");
  return load_instance(cfg.instance_paths.front());
}

void emit(std::ostream& out, const ojson& doc) { out << doc.dump(2) << '\n'; }

std::string matching_text(const Instance& inst, const Matching& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.edges().size(); ++i) {
    if (i) s += ", ";
    s += inst.name(m.edges()[i].a_node()) + inst.name(m.edges()[i].b_node());
  }
  return s + "}";
}

// ---------------------------------------------------------------- solve

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_single(cfg);
  const Side side = parse_side(cfg.side);
  const Matching m = gale_shapley(inst, side);
  if (cfg.format == Format::Text) {
    out << "side " << cfg.side << ": " << matching_text(inst, m) << '\n';
  } else {
    ojson doc;
    doc["side"] = side == Side::A ? "A" : "B";
    doc["matching"] = matching_to_json(inst, m);
    emit(out, doc);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_single(cfg);
  const auto stable = enumerate_stable(inst, bound_or(cfg, kDefaultStableEnumerationBound));
  if (cfg.format == Format::Text) {
    out << stable.size() << " stable matching(s)\n";
    for (const auto& m : stable) out << "  " << matching_text(inst, m) << '\n';
  } else {
    ojson doc;
    doc["count"] = stable.size();
    doc["matchings"] = ojson::array();
    for (const auto& m : stable) doc["matchings"].push_back(matching_to_json(inst, m));
    emit(out, doc);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- check

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_single(cfg);
  if (cfg.matching_path.empty()) throw UsageError("check needs --matching FILE");
  const Matching m = load_matching(inst, cfg.matching_path);
  const auto blocking = blocking_pairs(inst, m);
  if (cfg.format == Format::Text) {
    out << (blocking.empty() ? "stable" : "unstable") << '\n';
    for (const auto& e : blocking) out << "  blocking " << inst.edge_name(e) << '\n';
  } else {
    ojson doc;
    doc["stable"] = blocking.empty();
    doc["blocking_pairs"] = ojson::array();
    for (const auto& e : blocking) doc["blocking_pairs"].push_back(edge_to_json(inst, e));
    emit(out, doc);
  }
  return blocking.empty() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- lp

std::optional<Matching> matching_at(const Instance& inst, const ConstraintSystem& system, const Point& p) {
  if (!p.is_integral_01()) return std::nullopt;
  std::vector<EdgeId> support;
  for (std::size_t j = 0; j < p.dimension(); ++j) {
    if (p.coords[j] == Rational(1)) support.push_back(system.columns()[j]);
  }
  try {
    Matching m = Matching::from_edges(inst, std::move(support));
    if (is_stable(inst, m)) return m;
  } catch (const InvalidMatching&) {
  }
  return std::nullopt;
}

int cmd_lp(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Instance inst = load_single(cfg);
  const ConstraintSystem system = build_q(inst);
  if (!cfg.export_path.empty()) {
    std::ofstream lp_out(cfg.export_path);
    if (!lp_out) throw UsageError("cannot write " + cfg.export_path);
    write_lp_text(lp_out, inst, system);
  }
  std::vector<Rational> weights(inst.edge_count(), Rational(1));
  if (!cfg.weights_path.empty()) {
    std::ifstream in(cfg.weights_path);
    if (!in) throw ParseError("cannot open " + cfg.weights_path);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(cfg.weights_path + ": " + e.what());
    }
    weights = weights_from_json(inst, doc);
  }
  if (cfg.sense != "max" && cfg.sense != "min") throw UsageError("--sense must be max or min");
  const auto result = optimize(system, weights, cfg.sense == "max" ? Sense::Maximize : Sense::Minimize);
  if (result.status != LpStatus::Optimal) {
    err << "error: LP over the stability relaxation is " << to_string(result.status)
        << ", which no valid instance admits\n";
    return kExitViolation;
  }
  const auto matched = matching_at(inst, system, result.point);
  if (cfg.format == Format::Text) {
    out << "value " << result.value << '\n';
    for (std::size_t j = 0; j < system.dimension(); ++j) {
      out << "  " << inst.edge_name(system.columns()[j]) << " = " << result.point.coords[j] << '\n';
    }
    out << (matched ? "integral: " + matching_text(inst, *matched) : std::string("NOT integral")) << '\n';
  } else {
    ojson doc;
    doc["status"] = to_string(result.status);
    doc["value"] = result.value.fraction_str();
    ojson point = ojson::object();
    for (std::size_t j = 0; j < system.dimension(); ++j) {
      point[inst.edge_name(system.columns()[j])] = result.point.coords[j].fraction_str();
    }
    doc["point"] = std::move(point);
    doc["integral"] = matched.has_value();
    doc["matching"] = matched ? matching_to_json(inst, *matched) : ojson(nullptr);
    emit(out, doc);
  }
  if (!matched) {
    err << "error: optimum is not the incidence vector of a stable matching\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- vertices

VertexMethod parse_method(const std::string& s) {
  if (s == "dd") return VertexMethod::DoubleDescription;
  if (s == "basis") return VertexMethod::BasisEnumeration;
  throw UsageError("--method must be dd or basis");
}

int cmd_vertices(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_single(cfg);
  const ConstraintSystem system = build_q(inst);
  const auto report =
      enumerate_vertices(system, {bound_or(cfg, kDefaultVertexEnumerationBound), parse_method(cfg.method)});
  const auto labels = matchings_of(inst, system, report);
  if (cfg.format == Format::Text) {
    out << report.vertices.size() << " vertices, " << report.integral_count() << " integral\n";
    for (std::size_t i = 0; i < report.vertices.size(); ++i) {
      out << "  (";
      for (std::size_t j = 0; j < report.vertices[i].point.dimension(); ++j) {
        out << (j ? ", " : "") << report.vertices[i].point.coords[j];
      }
      out << ")  " << (labels[i] ? matching_text(inst, *labels[i]) : std::string("fractional")) << '\n';
    }
  } else {
    emit(out, vertex_report_to_json(inst, system, report, labels));
  }
  return report.integral_count() == report.vertices.size() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- verify

struct InstanceCheck {
  bool skipped = false;
  std::string skip_reason;
  std::size_t edges = 0;
  std::size_t stable = 0;
  std::size_t vertices = 0;
  std::size_t fractional = 0;
  bool sets_match = true;
  ojson quarantine;  // filled on failure
};

InstanceCheck check_instance(const Instance& inst, std::size_t max_edges) {
  InstanceCheck c;
  c.edges = inst.edge_count();
  try {
    const ConstraintSystem system = build_q(inst);
    const auto report = enumerate_vertices(system, {max_edges, VertexMethod::DoubleDescription});
    const auto stable = enumerate_stable(inst, std::max(max_edges, kDefaultStableEnumerationBound));
    c.stable = stable.size();
    c.vertices = report.vertices.size();
    c.fractional = report.vertices.size() - report.integral_count();
    std::vector<Point> expected;
    for (const auto& m : stable) expected.push_back(incidence_point(inst, m));
    std::sort(expected.begin(), expected.end());
    c.sets_match = expected == report.points();
    if (c.fractional > 0 || !c.sets_match) {
      c.quarantine["instance"] = instance_to_json(inst);
      c.quarantine["report"] = vertex_report_to_json(inst, system, report, matchings_of(inst, system, report));
      c.quarantine["stable_matchings"] = ojson::array();
      for (const auto& m : stable) c.quarantine["stable_matchings"].push_back(matching_to_json(inst, m));
    }
  } catch (const BoundExceeded& e) {
    c.skipped = true;
    c.skip_reason = e.what();
  }
  return c;
}

std::size_t worker_count() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const long n = std::stol(env);
      if (n >= 1) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kWorkersEnv) + " must be a positive integer");
  }
  return 1;
}

std::vector<Instance> collect_instances(const RunConfig& cfg) {
  std::vector<Instance> out;
  for (const auto& path : cfg.instance_paths) out.push_back(load_instance(path));
  if (cfg.exhaustive) {
    auto family = exhaustive_complete(*cfg.exhaustive);
    if (cfg.sample && *cfg.sample < family.size()) {
      if (!cfg.seed) throw UsageError("--sample needs --seed");
      std::mt19937_64 rng(*cfg.seed);
      std::vector<std::size_t> idx(family.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::shuffle(idx.begin(), idx.end(), rng);
      idx.resize(*cfg.sample);
      std::sort(idx.begin(), idx.end());
      for (auto i : idx) out.push_back(family[i]);
    } else {
      out.insert(out.end(), family.begin(), family.end());
    }
  }
  if (cfg.random_count) {
    if (!cfg.seed) throw UsageError("random generation needs --seed");
    RandomInstanceGenerator gen({cfg.a_count, cfg.b_count, cfg.edge_prob, *cfg.seed, false});
    for (std::size_t i = 0; i < *cfg.random_count; ++i) out.push_back(gen.next());
  }
  if (out.empty()) throw UsageError(cfg.command + " needs instance files or a generator option");
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto instances = collect_instances(cfg);
  const std::size_t bound = bound_or(cfg, kDefaultVertexEnumerationBound);
  std::vector<InstanceCheck> checks(instances.size());

  const std::size_t workers = std::min(worker_count(), instances.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) checks[i] = check_instance(instances[i], bound);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < instances.size(); i += workers) checks[i] = check_instance(instances[i], bound);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::size_t checked = 0, skipped = 0, vertices = 0, fractional = 0, mismatches = 0, passed = 0;
  ojson quarantine = ojson::array();
  for (const auto& c : checks) {
    if (c.skipped) {
      ++skipped;
      continue;
    }
    ++checked;
    vertices += c.vertices;
    fractional += c.fractional;
    if (!c.sets_match) ++mismatches;
    if (c.fractional == 0 && c.sets_match) ++passed;
    if (!c.quarantine.is_null()) quarantine.push_back(c.quarantine);
  }
  if (!quarantine.empty()) {
    std::ofstream q(cfg.quarantine);
    q << quarantine.dump(2) << '\n';
  }

  if (cfg.format == Format::Text) {
    out << "instances checked   " << checked << '\n'
        << "instances skipped   " << skipped << '\n'
        << "instances passed    " << passed << '/' << checked << '\n'
        << "vertices found      " << vertices << '\n'
        << "fractional vertices " << fractional << '\n'
        << "set mismatches      " << mismatches << '\n';
    if (cfg.details) {
      out << "\n  #  |E|  stable  vertices  fractional  status\n";
      for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        out << "  " << i << "  " << c.edges << "  " << c.stable << "  " << c.vertices << "  " << c.fractional << "  "
            << (c.skipped ? "skipped" : (c.fractional == 0 && c.sets_match ? "pass" : "FAIL")) << '\n';
      }
    }
  } else {
    ojson doc;
    doc["instances_checked"] = checked;
    doc["instances_skipped"] = skipped;
    doc["instances_passed"] = passed;
    doc["vertices_found"] = vertices;
    doc["fractional_vertices"] = fractional;
    doc["set_mismatches"] = mismatches;
    if (!quarantine.empty()) doc["quarantine_file"] = cfg.quarantine;
    if (cfg.details) {
      ojson rows = ojson::array();
      for (const auto& c : checks) {
        ojson r;
        r["edges"] = c.edges;
        if (c.skipped) {
          r["skipped"] = c.skip_reason;
        } else {
          r["stable_matchings"] = c.stable;
          r["vertices"] = c.vertices;
          r["fractional"] = c.fractional;
          r["sets_match"] = c.sets_match;
        }
        rows.push_back(std::move(r));
      }
      doc["instances"] = std::move(rows);
    }
    emit(out, doc);
  }
  return fractional == 0 && mismatches == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- adjacency

Matching pick_matching(const Instance& inst, const std::string& path, const std::string& side, const char* flag) {
  if (!path.empty() && !side.empty()) throw UsageError(std::string("give either a file or a side for ") + flag);
  if (!path.empty()) return load_matching(inst, path);
  if (!side.empty()) return gale_shapley(inst, parse_side(side));
  throw UsageError(std::string("missing matching for ") + flag);
}

EdgeId parse_edge_name(const Instance& inst, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("edge '" + text + "' is not of the form a:b");
  const auto u = inst.find(text.substr(0, colon));
  const auto v = inst.find(text.substr(colon + 1));
  if (!u || !v || u->side == v->side) throw UsageError("edge '" + text + "' names no pair of opposite nodes");
  const EdgeId e = make_edge(*u, *v);
  if (!inst.has_edge(e)) throw UsageError("'" + text + "' is not an edge of the instance");
  return e;
}

int cmd_adjacency(const RunConfig& cfg, std::ostream& out) {
  const Instance parent = load_single(cfg);
  std::optional<EdgeId> removed;
  if (!cfg.without.empty()) removed = parse_edge_name(parent, cfg.without);
  const Instance inst = removed ? parent.without_edge(*removed) : parent;
  const Matching m1 = pick_matching(inst, cfg.m1_path, cfg.m1_side, "--m1");
  const Matching m2 = pick_matching(inst, cfg.m2_path, cfg.m2_side, "--m2");
  if (m1 == m2) throw UsageError("the two matchings are identical");
  for (const Matching* m : {&m1, &m2}) {
    const auto blocking = blocking_pairs(inst, *m);
    if (blocking.empty()) continue;
    std::string msg = "matching " + matching_text(inst, *m) + " is not stable; blocking pairs:";
    for (const auto& e : blocking) msg += " " + inst.edge_name(e);
    throw UsageError(msg);
  }
  auto verdict = assess_adjacency(inst, m1, m2, bound_or(cfg, kDefaultStableEnumerationBound));
  if (removed && !verdict.separating_witness) {
    verdict.separating_witness = find_separating_edge_removed(parent, *removed, m1, m2);
  }
  if (cfg.format == Format::Text) {
    out << "uniform_orientation  " << (verdict.uniform_orientation ? "true" : "false") << '\n'
        << "separating_witness   "
        << (verdict.separating_witness ? inst.edge_name(verdict.separating_witness->edge) : std::string("none")) << '\n'
        << "exact_adjacent       " << (verdict.exact_adjacent ? "true" : "false") << '\n'
        << "meet                 " << matching_text(inst, verdict.lattice.meet) << '\n'
        << "join                 " << matching_text(inst, verdict.lattice.join) << '\n';
  } else {
    auto doc = verdict_to_json(inst, verdict);
    if (removed) doc["removed"] = edge_to_json(parent, *removed);
    emit(out, doc);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- generate

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.instance_paths.empty()) throw UsageError("generate takes no instance files");
  const auto instances = collect_instances(cfg);
  if (cfg.out_dir.empty()) {
    for (const auto& inst : instances) out << instance_to_json(inst).dump() << '\n';
    return kExitOk;
  }
  std::filesystem::create_directories(cfg.out_dir);
  const int width = static_cast<int>(std::to_string(instances.size()).size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::ostringstream name;
    name << "instance_" << std::setw(width) << std::setfill('0') << i << ".json";
    std::ofstream f(std::filesystem::path(cfg.out_dir) / name.str());
    f << instance_to_json(instances[i]).dump(2) << '\n';
  }
  out << "wrote " << instances.size() << " instance(s) to " << cfg.out_dir << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- dispatch

void add_common(CLI::App* sub, RunConfig& cfg, bool positional = true) {
  if (positional) sub->add_option("instances", cfg.instance_paths, "instance JSON file(s)");
  sub->add_option("--max-edges", cfg.max_edges, "enumeration bound on |E|");
}

void add_generator(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--exhaustive-complete", cfg.exhaustive, "all complete n x n instances (n <= 3)");
  sub->add_option("--sample", cfg.sample, "seeded sample of the exhaustive family");
  sub->add_option("--random", cfg.random_count, "number of random instances");
  sub->add_option("--a", cfg.a_count, "side A size for --random");
  sub->add_option("--b", cfg.b_count, "side B size for --random");
  sub->add_option("--edge-prob", cfg.edge_prob, "edge probability for --random")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--seed", cfg.seed, "seed for --random and --sample");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Stable matchings, their lattice, and the stability polytope"};
  app.name("smpoly");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", cfg.output, "write the report to a file");

  auto* solve = app.add_subcommand("solve", "stable matching by deferred acceptance");
  add_common(solve, cfg);
  solve->add_option("--side", cfg.side, "proposing side (A or B)");

  auto* enumerate = app.add_subcommand("enumerate", "list every stable matching");
  add_common(enumerate, cfg);

  auto* check = app.add_subcommand("check", "stability of a given matching");
  add_common(check, cfg);
  check->add_option("--matching", cfg.matching_path, "matching JSON file")->required();

  auto* lp = app.add_subcommand("lp", "optimize over the stability relaxation");
  add_common(lp, cfg);
  lp->add_option("--weights", cfg.weights_path, "JSON map edge \"a:b\" -> fraction string");
  lp->add_option("--sense", cfg.sense, "max or min");
  lp->add_option("--export", cfg.export_path, "write the inequality system as text");

  auto* vertices = app.add_subcommand("vertices", "enumerate vertices of the stability relaxation");
  add_common(vertices, cfg);
  vertices->add_option("--method", cfg.method, "dd or basis");

  auto* verify = app.add_subcommand("verify", "compare relaxation vertices with stable matchings");
  add_common(verify, cfg);
  add_generator(verify, cfg);
  verify->add_option("--quarantine", cfg.quarantine, "where to write failing instances");
  verify->add_flag("--details", cfg.details, "per-instance rows");

  auto* adjacency = app.add_subcommand("adjacency", "adjacency tests for two stable matchings");
  add_common(adjacency, cfg);
  adjacency->add_option("--m1", cfg.m1_path, "first matching file");
  adjacency->add_option("--m2", cfg.m2_path, "second matching file");
  adjacency->add_option("--m1-side", cfg.m1_side, "first matching by deferred acceptance from side");
  adjacency->add_option("--m2-side", cfg.m2_side, "second matching by deferred acceptance from side");
  adjacency->add_option("--without", cfg.without,
                        "drop edge a:b; the matchings live in the smaller instance and a, b keep their ranks");

  auto* generate = app.add_subcommand("generate", "emit generated instances");
  add_common(generate, cfg, false);
  add_generator(generate, cfg);
  generate->add_option("--out-dir", cfg.out_dir, "write one file per instance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  cfg.format = format == "text" ? Format::Text : Format::Json;
  cfg.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kExitInputError;
    }
    sink = &file;
  }

  try {
    if (cfg.command == "solve") return cmd_solve(cfg, *sink);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, *sink);
    if (cfg.command == "check") return cmd_check(cfg, *sink);
    if (cfg.command == "lp") return cmd_lp(cfg, *sink, err);
    if (cfg.command == "vertices") return cmd_vertices(cfg, *sink);
    if (cfg.command == "verify") return cmd_verify(cfg, *sink);
    if (cfg.command == "adjacency") return cmd_adjacency(cfg, *sink);
    if (cfg.command == "generate") return cmd_generate(cfg, *sink);
  } catch (const OrientationConflict& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::length_error& e) {  // BoundExceeded
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::logic_error& e) {
    // A checked mathematical property failed.
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << "error: unknown command\n";
  return kExitInputError;
}

}  // namespace smpoly::cli
