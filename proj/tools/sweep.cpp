// Copyright 2026 The pathgraph Authors
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

#include "sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "pathgraph/clique_tree.hpp"
#include "pathgraph/families.hpp"
#include "pathgraph/graph_io.hpp"
#include "pathgraph/recognizer.hpp"

namespace pathgraph::tools {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

class Checker {
 public:
  Checker(const SweepOptions& options, SweepReport& report)
      : options_(options), report_(report) {}

  // Returns the recognizer's result for callers that need more checks.
  RecognitionResult Check(const std::string& group, const Graph& g) {
    GroupCounts& counts = report_.groups[group];
    ++counts.instances;
    RecognitionStats stats;
    const auto start = std::chrono::steady_clock::now();
    RecognitionResult result;
    try {
      result = recognize(g, {}, &stats);
    } catch (const std::exception& e) {
      Fail(counts.mismatches, g, std::string("recognizer threw: ") + e.what());
      return result;
    }
    const auto stop = std::chrono::steady_clock::now();
    report_.micros.push_back(
        std::chrono::duration<double, std::micro>(stop - start).count());
    report_.fallbacks += stats.fallbacks;
    if (result.is_path_graph()) {
      ++counts.path_graphs;
      const std::string defect = clique_tree_defect(g, *result.tree, true);
      if (!defect.empty()) Fail(counts.tree_violations, g, "tree: " + defect);
    } else {
      ++counts.non_path_graphs;
      CheckCertificate(counts, g, *result.certificate);
    }
    const auto verdict = cpt_exists_bruteforce(g, options_.budget);
    if (verdict.status == CptStatus::kOverBudget) {
      ++counts.skipped;
    } else if ((verdict.status == CptStatus::kTree) != result.is_path_graph()) {
      Fail(counts.mismatches, g,
           std::string("oracle says ") + to_string(verdict.status));
    }
    return result;
  }

 private:
  void CheckCertificate(GroupCounts& counts, const Graph& g, const Certificate& cert) {
    if (!validate_certificate(g, cert)) {
      Fail(counts.certificate_violations, g, "certificate does not validate");
      return;
    }
    const auto witness = induced_subgraph(g, VertexSet(cert.witness));
    const auto verdict = cpt_exists_bruteforce(witness.graph, options_.budget);
    if (verdict.status == CptStatus::kTree) {
      Fail(counts.certificate_violations, g, "witness is a path graph");
    }
  }

  void Fail(int& counter, const Graph& g, const std::string& reason) {
    ++counter;
    if (report_.failures.size() < kMaxListedFailures) {
      report_.failures.push_back(to_graph6(g) + ": " + reason);
    }
  }

  const SweepOptions& options_;
  SweepReport& report_;
};

}  // namespace

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph chordal_fill_in(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> order(g.order());
  for (int i = 0; i < g.order(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Graph h = g;
  VertexSet eliminated;
  for (int v : order) {
    const VertexSet later = h.neighbors(v) - eliminated;
    for (int a : later) {
      for (int b : later) {
        if (a < b && !h.adjacent(a, b)) h.add_edge(a, b);
      }
    }
    eliminated.insert(v);
  }
  return h;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
    }
    visit(g);
  }
}

std::vector<SweepSample> sweep_samples(std::uint64_t seed, int count, int order) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(7, 9);
  std::vector<SweepSample> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    SweepSample s;
    s.random = random_graph(order > 0 ? order : pick(rng), 0.5, rng);
    s.chordal = chordal_fill_in(s.random, rng);
    out.push_back(std::move(s));
  }
  return out;
}

bool SweepReport::ok() const {
  return total.mismatches == 0 && total.certificate_violations == 0 &&
         total.tree_violations == 0 && family_failures == 0;
}

SweepReport run_sweep(const SweepOptions& options,
                      const std::function<void(const std::string&)>& progress) {
  SweepReport report;
  report.seed = options.seed;
  Checker checker(options, report);
  auto note = [&](const std::string& text) {
    if (progress) progress(text);
  };

  for (int n = 0; n <= options.max_exhaustive_order; ++n) {
    note("exhaustive n=" + std::to_string(n));
    for_each_labeled_graph(n, [&](const Graph& g) {
      checker.Check("exhaustive n<=" + std::to_string(options.max_exhaustive_order), g);
    });
  }

  note("random samples: " + std::to_string(options.samples));
  for (const auto& sample : sweep_samples(options.seed, options.samples, options.sample_order)) {
    checker.Check("random G(n,1/2)", sample.random);
    checker.Check("chordal fill-in", sample.chordal);
  }

  if (options.include_families) {
    note("families");
    for (int index = 0; index <= 16; ++index) {
      std::vector<int> params{family_smallest_parameter(index)};
      if (family_is_parameterized(index)) {
        params.push_back(family_next_parameter(index, params[0]));
      }
      for (int p : params) {
        const FamilyId id = make_family(index, p);
        const Graph g = generate(id);
        const auto result = checker.Check("families", g);
        if (!result.certificate || !(result.certificate->family == id)) {
          ++report.family_failures;
          if (report.failures.size() < kMaxListedFailures) {
            report.failures.push_back(id.to_string() + ": no self-certificate");
          }
        }
      }
    }
  }

  for (const auto& [name, c] : report.groups) {
    report.total.instances += c.instances;
    report.total.path_graphs += c.path_graphs;
    report.total.non_path_graphs += c.non_path_graphs;
    report.total.skipped += c.skipped;
    report.total.mismatches += c.mismatches;
    report.total.certificate_violations += c.certificate_violations;
    report.total.tree_violations += c.tree_violations;
  }
  return report;
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double rank = p / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = static_cast<std::size_t>(std::ceil(rank));
  return values[lo] + (values[hi] - values[lo]) * (rank - static_cast<double>(lo));
}

std::string format_report(const SweepReport& report) {
  std::ostringstream out;
  out << "sweep seed=" << report.seed << "\n";
  auto row = [&](const std::string& name, const GroupCounts& c) {
    out << "  " << name << ": instances=" << c.instances << " path=" << c.path_graphs
        << " non-path=" << c.non_path_graphs << " skipped=" << c.skipped
        << " mismatches=" << c.mismatches
        << " certificate-violations=" << c.certificate_violations
        << " tree-violations=" << c.tree_violations << "\n";
  };
  for (const auto& [name, c] : report.groups) row(name, c);
  row("total", report.total);
  out << "  family failures: " << report.family_failures << "\n";
  out << "  oracle fallbacks inside the recognizer: " << report.fallbacks << "\n";
  out.setf(std::ios::fixed);
  out.precision(1);
  out << "  recognize time (us): p50=" << percentile(report.micros, 50)
      << " p90=" << percentile(report.micros, 90)
      << " p99=" << percentile(report.micros, 99)
      << " max=" << percentile(report.micros, 100) << "\n";
  for (const auto& f : report.failures) out << "  failure: " << f << "\n";
  out << (report.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace pathgraph::tools
