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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Lines starting with "  note:" are data.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "smpoly/adjacency.hpp"
#include "smpoly/generate.hpp"
#include "smpoly/hull.hpp"
#include "smpoly/simplex.hpp"
#include "smpoly/symdiff.hpp"
#include "smpoly/vertex_enum.hpp"
#include "support.hpp"

namespace {

using namespace smpoly;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kRandomSeed = 20240501;
constexpr std::uint64_t kLpSeed = 20240502;
constexpr std::size_t kRandomInstances = 500;
constexpr std::size_t kLpRuns = 1000;
constexpr std::size_t kMaxRandomEdges = 10;
constexpr std::uint64_t kSeparationSeed = 20240503;
constexpr std::size_t kSeparationInstances = 400;

struct Failures {
  std::size_t count = 0;
  std::vector<std::string> samples;

  void add(const std::string& what) {
    ++count;
    if (samples.size() < 5) samples.push_back(what);
  }
};

// Everything the per-instance pass measures.
struct Tally {
  std::size_t instances = 0;
  std::size_t vertices = 0;
  std::size_t fractional = 0;
  std::size_t set_mismatches = 0;
  Failures vertex_failures;

  std::size_t pairs = 0;
  std::size_t components = 0;
  std::size_t path_components = 0;
  Failures uniformity;

  std::size_t swaps = 0;
  Failures closure;

  std::size_t adjacent_pairs = 0;
  std::size_t uniform_not_adjacent = 0;
  Failures converse_examples;  // data, not failures
  std::size_t edge_scan_witnesses = 0;
  std::size_t removed_edge_pairs = 0;
  std::size_t removed_edge_witnesses = 0;
  Failures adjacency;

  std::size_t gs_checks = 0;
  Failures optimality;

  std::size_t agreement_checks = 0;
  Failures agreement;

  std::size_t matched_set_violations = 0;
};

// Compact one-line form used in failure examples.
std::string label(const Instance& inst) {
  std::string out;
  for (NodeId u : inst.nodes()) {
    out += inst.name(u) + ":";
    const Side other = u.side == Side::A ? Side::B : Side::A;
    for (auto j : inst.prefs(u)) out += inst.name(NodeId{other, j});
    out += ' ';
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::string matching_label(const Instance& inst, const Matching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.edges().size(); ++i) {
    if (i) out += ", ";
    out += inst.edge_name(m.edges()[i]);
  }
  return out + "}";
}

std::vector<Point> stable_points(const Instance& inst, const std::vector<Matching>& stable) {
  std::vector<Point> out;
  for (const auto& m : stable) out.push_back(incidence_point(inst, m));
  std::sort(out.begin(), out.end());
  return out;
}

// Independent re-check of component orientation from raw preference lists.
bool uniform_by_oracle(const Instance& inst, const Matching& m1, const Matching& m2, const Component& c) {
  const bool a_prefers_first = c.orientation == Orientation::FirstPreferredByA;
  for (NodeId u : c.nodes) {
    const auto p1 = oracle::position(inst, u, m1.partner(u));
    const auto p2 = oracle::position(inst, u, m2.partner(u));
    const bool prefers_first = p1 && (!p2 || *p1 < *p2);
    if (prefers_first != (u.side == Side::A ? a_prefers_first : !a_prefers_first)) return false;
  }
  return true;
}

bool stable_by_oracle(const Instance& inst, const Matching& m) {
  return oracle::blocking_pairs(inst, oracle::mask_of(inst, m.edges())).empty();
}

void check_pair(const Instance& inst, const Matching& m1, const Matching& m2, Tally& t) {
  ++t.pairs;
  ComponentDecomposition dec;
  try {
    dec = decompose(inst, m1, m2);
  } catch (const OrientationConflict& e) {
    t.uniformity.add(label(inst) + ": " + e.what());
    return;
  }
  for (const auto& c : dec.components) {
    ++t.components;
    if (c.kind == ComponentKind::Path) ++t.path_components;
    if (!uniform_by_oracle(inst, m1, m2, c)) t.uniformity.add(label(inst) + ": oracle disagrees on orientation");
  }

  // Swaps of whole orientation classes and the midpoint identity.
  for (const auto* group : {&dec.first_preferred, &dec.second_preferred}) {
    ++t.swaps;
    try {
      const auto r = swap_components(inst, dec, *group);
      if (!stable_by_oracle(inst, r.matching)) {
        t.closure.add(label(inst) + ": swap gave unstable " + matching_label(inst, r.matching));
      }
    } catch (const std::logic_error& e) {
      t.closure.add(label(inst) + ": " + e.what());
    }
  }
  try {
    const auto mj = meet_join(inst, m1, m2);
    const auto x1 = m1.incidence(inst), x2 = m2.incidence(inst);
    const auto y1 = mj.meet.incidence(inst), y2 = mj.join.incidence(inst);
    for (std::size_t e = 0; e < x1.size(); ++e) {
      if (x1[e] + x2[e] != y1[e] + y2[e]) {
        t.closure.add(label(inst) + ": midpoint identity fails");
        break;
      }
    }
  } catch (const std::logic_error& e) {
    t.closure.add(label(inst) + ": " + e.what());
  }

  if (m1 == m2) return;
  const bool uniform = orientation_uniform(inst, m1, m2);
  const bool adjacent = exact_adjacency(inst, m1, m2).adjacent;
  if (adjacent) ++t.adjacent_pairs;
  if (adjacent && !uniform) {
    t.adjacency.add(label(inst) + ": adjacent pair with mixed orientations");
  }
  if (uniform && !adjacent) {
    ++t.uniform_not_adjacent;
    t.converse_examples.add(label(inst) + " | " + matching_label(inst, m1) + " vs " + matching_label(inst, m2) +
                            " | " + std::to_string(decompose(inst, m1, m2).components.size()) + " components");
  }
  if (find_separating_edge(inst, m1, m2)) {
    ++t.edge_scan_witnesses;
    if (adjacent) t.adjacency.add(label(inst) + ": separating edge on an adjacent pair");
  }
}

// Separating condition at each removed edge, checked in the smaller instance.
void check_removed_edges(const Instance& parent, Tally& t) {
  for (const EdgeId& e : parent.edges()) {
    const Instance child = parent.without_edge(e);
    const auto stable = enumerate_stable(child);
    for (std::size_t i = 0; i < stable.size(); ++i) {
      for (std::size_t j = i + 1; j < stable.size(); ++j) {
        ++t.removed_edge_pairs;
        if (!find_separating_edge_removed(parent, e, stable[i], stable[j])) continue;
        ++t.removed_edge_witnesses;
        if (exact_adjacency(child, stable[i], stable[j]).adjacent) {
          t.adjacency.add(label(parent) + " without " + parent.edge_name(e) + ": separated pair is adjacent");
        }
      }
    }
  }
}

void check_instance(const Instance& inst, bool check_gale_shapley, bool check_removed, Tally& t) {
  ++t.instances;
  const auto stable = enumerate_stable(inst);

  // Combinatorial side against the bitmask oracle.
  ++t.agreement_checks;
  std::vector<Matching> brute;
  for (auto mask : oracle::stable_matchings(inst)) brute.push_back(Matching::from_edges(inst, oracle::edges_of(inst, mask)));
  std::sort(brute.begin(), brute.end());
  if (brute != stable) t.agreement.add(label(inst) + ": stable enumeration differs from brute force");

  // Polyhedral side.
  const auto q = build_q(inst);
  const auto report = enumerate_vertices(q);
  t.vertices += report.vertices.size();
  const auto fractional = report.fractional_certificates();
  t.fractional += fractional.size();
  for (const auto& c : fractional) {
    std::string pt;
    for (const auto& v : c.point.coords) pt += v.str() + " ";
    t.vertex_failures.add(label(inst) + ": fractional vertex " + pt);
  }
  if (report.points() != stable_points(inst, stable)) {
    ++t.set_mismatches;
    t.vertex_failures.add(label(inst) + ": vertex set differs from stable matchings");
  }
  std::vector<Point> integral;
  for (const auto& v : report.vertices) {
    if (v.integral) integral.push_back(v.point);
  }
  if (integral != stable_points(inst, brute)) t.agreement.add(label(inst) + ": integral vertices differ");

  for (const auto& m : stable) {
    for (NodeId u : inst.nodes()) {
      if (m.partner(u).has_value() != stable.front().partner(u).has_value()) {
        ++t.matched_set_violations;
        break;
      }
    }
  }

  for (std::size_t i = 0; i < stable.size(); ++i) {
    for (std::size_t j = i; j < stable.size(); ++j) check_pair(inst, stable[i], stable[j], t);
  }
  if (check_removed) check_removed_edges(inst, t);

  if (check_gale_shapley) {
    for (Side s : {Side::A, Side::B}) {
      ++t.gs_checks;
      const auto m = gale_shapley(inst, s);
      if (!stable_by_oracle(inst, m)) {
        t.optimality.add(label(inst) + ": deferred acceptance result is unstable");
        continue;
      }
      for (const auto& other : stable) {
        if (!weakly_dominates(inst, s, m, other)) {
          t.optimality.add(label(inst) + ": deferred acceptance result is not side-optimal");
        }
      }
    }
  }
}

std::vector<Instance> random_family(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> side(1, 4);
  const double probs[] = {0.5, 0.8, 1.0};
  std::vector<Instance> out;
  while (out.size() < count) {
    const double p = probs[out.size() % 3];
    RandomInstanceGenerator gen({side(rng), side(rng), p, rng(), true});
    Instance inst = gen.next();
    if (inst.edge_count() <= kMaxRandomEdges) out.push_back(std::move(inst));
  }
  return out;
}

struct Line {
  bool pass = true;
  std::string text;
};

std::vector<Line> lines;

void report(int criterion, bool pass, const std::string& text, const std::vector<const Failures*>& failures = {}) {
  std::cout << "criterion " << criterion << ' ' << (pass ? "PASS" : "FAIL") << ": " << text << '\n';
  for (const auto* f : failures) {
    for (const auto& s : f->samples) std::cout << "  example: " << s << '\n';
  }
  std::cout.flush();
  lines.push_back({pass, text});
}

void note(const std::string& text) { std::cout << "  note: " << text << '\n'; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Every smpoly header reachable from `file` through quoted includes.
void collect_includes(const std::filesystem::path& root, const std::filesystem::path& file,
                      std::set<std::string>& seen) {
  static const std::regex include_re(R"re(#include\s+"smpoly/([a-z_]+)\.hpp")re");
  std::ifstream in(file);
  std::string line;
  while (std::getline(in, line)) {
    std::smatch m;
    if (!std::regex_search(line, m, include_re)) continue;
    if (seen.insert(m[1]).second) collect_includes(root, root / "include" / "smpoly" / (m[1].str() + ".hpp"), seen);
  }
}

// Libraries named on the target_link_libraries line of `target`.
std::vector<std::string> linked_libraries(const std::filesystem::path& cmake_file, const std::string& target) {
  std::ifstream in(cmake_file);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::regex re("target_link_libraries\\(" + target + "\\s+([^)]*)\\)");
  std::smatch m;
  const std::string text = buf.str();
  if (!std::regex_search(text, m, re)) return {};
  std::istringstream words(m[1].str());
  std::vector<std::string> out;
  for (std::string w; words >> w;) out.push_back(w);
  return out;
}

}  // namespace

int main() {
  const auto start = Clock::now();

  // Exhaustive family: all complete 2x2 and 3x3 instances.
  Tally exhaustive;
  auto t0 = Clock::now();
  for (const auto& inst : exhaustive_complete(2)) check_instance(inst, true, true, exhaustive);
  {
    ExhaustiveCompleteGenerator gen(3);
    while (auto inst = gen.next()) check_instance(*inst, true, true, exhaustive);
  }
  const double exhaustive_seconds = seconds_since(t0);

  // Random family.
  Tally random;
  t0 = Clock::now();
  const auto family = random_family(kRandomSeed, kRandomInstances);
  for (const auto& inst : family) check_instance(inst, false, true, random);
  const double random_seconds = seconds_since(t0);

  {
    std::ostringstream s;
    s << "exhaustive complete 2x2 and 3x3 (" << exhaustive.instances << " instances): " << exhaustive.vertices
      << " vertices, " << exhaustive.fractional << " fractional, " << exhaustive.set_mismatches
      << " set mismatches, " << exhaustive_seconds << " s";
    report(1, exhaustive.instances == 16 + 46656 && exhaustive.fractional == 0 && exhaustive.set_mismatches == 0 &&
                  exhaustive.vertex_failures.count == 0,
           s.str(), {&exhaustive.vertex_failures});
  }
  {
    std::ostringstream s;
    s << "random family (" << random.instances << " instances, sides <= 4, p in {0.5, 0.8, 1.0}, |E| <= "
      << kMaxRandomEdges << ", seed " << kRandomSeed << "): " << random.vertices << " vertices, " << random.fractional
      << " fractional, " << random.set_mismatches << " set mismatches, " << random_seconds << " s";
    report(2, random.instances == kRandomInstances && random.fractional == 0 && random.set_mismatches == 0 &&
                  random.vertex_failures.count == 0,
           s.str(), {&random.vertex_failures});
  }

  // LP optima under random rational weights.
  {
    t0 = Clock::now();
    Failures lp;
    const auto lp_family = random_family(kLpSeed, kLpRuns);
    std::mt19937_64 rng(kLpSeed);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
    for (const auto& inst : lp_family) {
      std::vector<Rational> w(inst.edge_count());
      for (auto& v : w) v = Rational(num(rng), den(rng));
      const auto r = optimize(build_q(inst), w, Sense::Maximize);
      if (r.status != LpStatus::Optimal) {
        lp.add(label(inst) + ": status " + std::string(to_string(r.status)));
        continue;
      }
      const auto stable = enumerate_stable(inst);
      const auto points = stable_points(inst, stable);
      if (!r.point.is_integral_01() || !std::binary_search(points.begin(), points.end(), r.point)) {
        lp.add(label(inst) + ": optimum is not a stable matching");
      }
      if (r.value != oracle::max_weight_stable(inst, w)) {
        lp.add(label(inst) + ": optimum " + r.value.str() + " differs from brute force");
      }
    }
    std::ostringstream s;
    s << lp_family.size() << " weighted LP runs (seed " << kLpSeed << "): " << lp.count << " failures, "
      << seconds_since(t0) << " s";
    report(3, lp.count == 0 && lp_family.size() == kLpRuns, s.str(), {&lp});
  }

  const std::size_t pairs = exhaustive.pairs + random.pairs;
  {
    const std::size_t bad = exhaustive.uniformity.count + random.uniformity.count;
    std::ostringstream s;
    s << pairs << " stable pairs, " << exhaustive.components + random.components << " components: " << bad
      << " non-uniform";
    report(4, bad == 0 && pairs > 0, s.str(), {&exhaustive.uniformity, &random.uniformity});
    note("path components among stable pairs: " +
         std::to_string(exhaustive.path_components + random.path_components));
    note("instances whose stable matchings differ in matched nodes: " +
         std::to_string(exhaustive.matched_set_violations + random.matched_set_violations));
  }
  {
    const std::size_t bad = exhaustive.closure.count + random.closure.count;
    std::ostringstream s;
    s << exhaustive.swaps + random.swaps << " orientation-class swaps and " << pairs
      << " midpoint identities: " << bad << " failures";
    report(5, bad == 0, s.str(), {&exhaustive.closure, &random.closure});
  }
  // Complete 4x4 instances, where separated pairs actually occur.
  Tally separation;
  {
    RandomInstanceGenerator gen({4, 4, 1.0, kSeparationSeed, false});
    for (std::size_t k = 0; k < kSeparationInstances; ++k) {
      const auto inst = gen.next();
      const auto stable = enumerate_stable(inst);
      for (std::size_t i = 0; i < stable.size(); ++i) {
        for (std::size_t j = i + 1; j < stable.size(); ++j) check_pair(inst, stable[i], stable[j], separation);
      }
      check_removed_edges(inst, separation);
    }
  }
  {
    // The cached opposed fixture must carry a separating edge.
    const auto f = testing_support::load_opposed_fixture();
    const auto& p = f.pair;
    const bool fixture_witness = find_separating_edge_removed(p.parent, p.removed, p.first, p.second).has_value();
    const bool fixture_not_adjacent = !exact_adjacency(p.instance, p.first, p.second).adjacent;
    const bool fixture_mixed = !orientation_uniform(p.instance, p.first, p.second);

    const std::size_t bad = exhaustive.adjacency.count + random.adjacency.count + separation.adjacency.count +
                            separation.uniformity.count + separation.closure.count;
    const std::size_t witnesses =
        exhaustive.removed_edge_witnesses + random.removed_edge_witnesses + separation.removed_edge_witnesses;
    std::ostringstream s;
    s << bad << " counterexamples over " << pairs + separation.pairs << " stable pairs and "
      << exhaustive.removed_edge_pairs + random.removed_edge_pairs + separation.removed_edge_pairs
      << " removed-edge pairs (incl. " << kSeparationInstances << " complete 4x4, seed " << kSeparationSeed
      << "); " << witnesses
      << " separating-edge witnesses; fixture witness " << (fixture_witness ? "present" : "absent")
      << ", fixture adjacent " << (fixture_not_adjacent ? "no" : "yes");
    report(6, bad == 0 && fixture_witness && fixture_not_adjacent && fixture_mixed, s.str(),
           {&exhaustive.adjacency, &random.adjacency, &separation.adjacency, &separation.uniformity,
            &separation.closure});
    note("adjacent pairs: " +
         std::to_string(exhaustive.adjacent_pairs + random.adjacent_pairs + separation.adjacent_pairs));
    note("uniform but not adjacent pairs: " +
         std::to_string(exhaustive.uniform_not_adjacent + random.uniform_not_adjacent +
                        separation.uniform_not_adjacent));
    for (const auto* tally : {&exhaustive, &random, &separation}) {
      for (const auto& ex : tally->converse_examples.samples) note("uniform but not adjacent: " + ex);
    }
    note("edge-scan separating witnesses on stable pairs: " +
         std::to_string(exhaustive.edge_scan_witnesses + random.edge_scan_witnesses +
                        separation.edge_scan_witnesses));
    note("path components in the 4x4 sweep: " + std::to_string(separation.path_components));
  }
  {
    std::ostringstream s;
    s << exhaustive.gs_checks << " deferred acceptance runs on the exhaustive family: "
      << exhaustive.optimality.count << " failures";
    report(7, exhaustive.optimality.count == 0 && exhaustive.gs_checks == 2 * exhaustive.instances, s.str(),
           {&exhaustive.optimality});
  }
  {
    const std::filesystem::path root = SMPOLY_SOURCE_DIR;
    std::set<std::string> reached;
    for (const char* src : {"rational", "linalg", "constraint_system", "simplex", "vertex_enum", "instance",
                            "generate", "instance_json"}) {
      collect_includes(root, root / "src" / (std::string(src) + ".cpp"), reached);
    }
    const std::set<std::string> forbidden{"matching", "symdiff", "hull", "adjacency", "report_json"};
    std::vector<std::string> leaks;
    for (const auto& h : reached) {
      if (forbidden.contains(h)) leaks.push_back(h + ".hpp");
    }
    for (const auto& lib : linked_libraries(root / "src" / "CMakeLists.txt", "smpoly_polytope")) {
      if (lib == "smpoly_matching" || lib == "smpoly_lattice" || lib == "smpoly_hull") leaks.push_back(lib);
    }
    const auto links = linked_libraries(root / "src" / "CMakeLists.txt", "smpoly_polytope");
    const bool scanned = reached.contains("constraint_system") && !links.empty();

    const std::size_t bad = exhaustive.agreement.count + random.agreement.count;
    std::ostringstream s;
    s << "polytope code reaches " << reached.size() << " headers, " << leaks.size()
      << " from the combinatorial side; enumeration and integral vertices disagree on " << bad << " of "
      << exhaustive.agreement_checks + random.agreement_checks << " instances";
    for (const auto& l : leaks) s << " [" << l << "]";
    report(8, leaks.empty() && scanned && bad == 0, s.str(), {&exhaustive.agreement, &random.agreement});
  }

  const bool all = std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.pass; });
  std::cout << "total " << seconds_since(start) << " s\n";
  return all ? 0 : 1;
}
