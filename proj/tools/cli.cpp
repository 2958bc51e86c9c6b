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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pathgraph/clique_tree.hpp"
#include "pathgraph/errors.hpp"
#include "pathgraph/families.hpp"
#include "pathgraph/graph_io.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/recognizer.hpp"
#include "sweep.hpp"

namespace pathgraph::tools {

namespace {

struct InputFlags {
  std::string file;
  std::string graph6;
};

void AddInput(CLI::App* cmd, InputFlags& in) {
  auto* file = cmd->add_option("--input", in.file, "graph file (edge list or graph6), - for stdin");
  auto* g6 = cmd->add_option("--graph6", in.graph6, "graph in graph6");
  file->excludes(g6);
  g6->excludes(file);
}

std::string ReadText(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

Graph LoadGraph(const InputFlags& in) {
  if (!in.graph6.empty()) return parse_graph6(in.graph6);
  if (in.file.empty()) throw std::runtime_error("one of --input or --graph6 is required");
  return parse_graph_auto(ReadText(in.file));
}

std::string Braced(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    out += (first ? "" : ", ") + g.name(v);
    first = false;
  }
  return out + "}";
}

std::string DotId(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string CertificateText(const Graph& g, const Certificate& cert) {
  const Graph family = generate(cert.family);
  std::ostringstream out;
  out << "not a path graph: induced " << cert.family.to_string() << "\n";
  for (std::size_t i = 0; i < cert.witness.size(); ++i) {
    out << "  " << family.name(static_cast<int>(i)) << " -> " << g.name(cert.witness[i]) << "\n";
  }
  return out.str();
}

std::string CertificateDot(const Graph& g, const Certificate& cert) {
  const Graph family = generate(cert.family);
  std::ostringstream out;
  out << "graph certificate {\n  label=" << DotId(cert.family.to_string()) << ";\n";
  for (std::size_t i = 0; i < cert.witness.size(); ++i) {
    out << "  " << cert.witness[i] << " [label="
        << DotId(family.name(static_cast<int>(i)) + "=" + g.name(cert.witness[i])) << "];\n";
  }
  for (auto [a, b] : family.edges()) {
    out << "  " << cert.witness[a] << " -- " << cert.witness[b] << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string TreeText(const Graph& g, const CliqueTree& tree) {
  std::ostringstream out;
  out << "path graph: " << tree.node_count() << " maximal cliques\n";
  for (int i = 0; i < tree.node_count(); ++i) {
    out << "  clique " << i << ": " << Braced(g, tree.cliques[i]) << "\n";
  }
  for (auto [a, b] : tree.edges) {
    out << "  edge " << a << " - " << b << " label "
        << Braced(g, tree.cliques[a] & tree.cliques[b]) << "\n";
  }
  return out.str();
}

int Recognize(const InputFlags& in, const std::string& format, bool no_fallback,
              bool show_stats, std::ostream& out, std::ostream& err) {
  const Graph g = LoadGraph(in);
  RecognizerOptions options;
  options.allow_fallback = !no_fallback;
  RecognitionStats stats;
  const auto result = recognize(g, options, &stats);
  if (format == "json") {
    out << to_json(result) << "\n";
  } else if (format == "dot") {
    out << (result.tree ? to_dot(*result.tree, &g) : CertificateDot(g, *result.certificate));
  } else {
    out << (result.tree ? TreeText(g, *result.tree) : CertificateText(g, *result.certificate));
  }
  if (show_stats) {
    err << "subproblems=" << stats.subproblems << " cache-hits=" << stats.cache_hits
        << " fallbacks=" << stats.fallbacks << " repairs=" << stats.repairs << "\n";
    for (const auto& [name, count] : stats.branches) err << "  " << name << ": " << count << "\n";
  }
  return result.is_path_graph() ? kExitYes : kExitNo;
}

FamilyId ParseFamily(const std::string& name, std::optional<int> param) {
  const int index = parse_family_index(name);
  if (!family_is_parameterized(index)) {
    if (param) throw std::invalid_argument("F" + std::to_string(index) + " takes no parameter");
    return make_family(index);
  }
  if (!param) {
    throw std::invalid_argument("F" + std::to_string(index) +
                                " needs a parameter: " + family_domain(index));
  }
  try {
    return make_family(index, *param);
  } catch (const ContractError&) {
    throw std::invalid_argument("bad parameter " + std::to_string(*param) + " for F" +
                                std::to_string(index) + ": " + family_domain(index));
  }
}

int Generate(const std::string& name, std::optional<int> param, const std::string& format,
             std::ostream& out) {
  const Graph g = generate(ParseFamily(name, param));
  out << (format == "graph6" ? to_graph6(g) + "\n" : to_edge_list(g));
  return kExitYes;
}

int Validate(const InputFlags& in, const std::string& cert_path, bool minimal,
             std::ostream& out) {
  const Graph g = LoadGraph(in);
  const Certificate cert = certificate_from_json(ReadText(cert_path));
  if (!cert.family.valid()) {
    out << "invalid: " << cert.family.to_string() << " is not a family member\n";
    return kExitNo;
  }
  bool ok = false;
  try {
    ok = validate_certificate(g, cert);
  } catch (const std::out_of_range& e) {
    out << "invalid: " << e.what() << "\n";
    return kExitNo;
  }
  if (!ok) {
    out << "invalid: witness does not induce " << cert.family.to_string() << "\n";
    return kExitNo;
  }
  out << "valid: induced " << cert.family.to_string() << "\n";
  if (minimal) {
    const auto verdict = verify_minimal_non_path(cert.family);
    out << "minimal non path graph: " << to_string(verdict) << "\n";
    if (verdict == MinimalityVerdict::kNotMinimal) return kExitNo;
  }
  return kExitYes;
}

int Oracle(const InputFlags& in, const OracleBudget& budget, const std::string& format,
           std::ostream& out) {
  const Graph g = LoadGraph(in);
  const auto verdict = cpt_exists_bruteforce(g, budget);
  if (format == "json") {
    out << "{\"status\":\"" << to_string(verdict.status) << "\",\"trees_examined\":"
        << verdict.trees_examined;
    if (verdict.status == CptStatus::kTree) out << ",\"tree\":" << to_json(verdict.tree);
    out << "}\n";
  } else if (format == "dot" && verdict.status == CptStatus::kTree) {
    out << to_dot(verdict.tree, &g);
  } else {
    out << "oracle: " << to_string(verdict.status) << " (" << verdict.trees_examined
        << " trees examined)\n";
    if (verdict.status == CptStatus::kTree) out << TreeText(g, verdict.tree);
  }
  switch (verdict.status) {
    case CptStatus::kTree:
      return kExitYes;
    case CptStatus::kNone:
      return kExitNo;
    case CptStatus::kOverBudget:
      break;
  }
  return kExitOverBudget;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path graph recognition with clique path trees or forbidden subgraphs"};
  app.name("pathgraph");
  app.require_subcommand(1);

  InputFlags in;
  std::string format = "json";
  const std::vector<std::string> formats{"json", "dot", "text"};

  auto* rec = app.add_subcommand("recognize", "clique path tree or forbidden induced subgraph");
  AddInput(rec, in);
  rec->add_option("--format", format, "json, dot or text")->check(CLI::IsMember(formats));
  bool no_fallback = false;
  bool show_stats = false;
  rec->add_flag("--no-fallback", no_fallback, "fail instead of consulting the oracle");
  rec->add_flag("--stats", show_stats, "branch counts on standard error");

  auto* gen = app.add_subcommand("generate", "a member of F0..F16");
  std::string family;
  std::optional<int> param;
  std::string gen_format = "edges";
  gen->add_option("--family,family", family, "F0..F16")->required();
  gen->add_option("--param,param", param, "order of a parameterized family");
  gen->add_option("--format", gen_format, "edges or graph6")
      ->check(CLI::IsMember({"edges", "graph6"}));

  auto* val = app.add_subcommand("validate", "check a certificate against a graph");
  AddInput(val, in);
  std::string cert_path;
  bool minimal = false;
  val->add_option("--certificate", cert_path, "certificate JSON file")->required();
  val->add_flag("--minimal", minimal, "also verify the family is minimal non path");

  auto* orc = app.add_subcommand("oracle", "brute-force clique path tree search");
  AddInput(orc, in);
  OracleBudget budget;
  orc->add_option("--format", format, "json, dot or text")->check(CLI::IsMember(formats));

  auto* swp = app.add_subcommand("sweep", "recognizer against the oracle on many graphs");
  SweepOptions sweep;
  swp->add_option("--samples", sweep.samples, "random samples at n = 7..9");
  swp->add_option("--seed", sweep.seed, "random seed");
  swp->add_option("--order", sweep.sample_order, "fixed order of the random samples")
      ->check(CLI::Range(1, 12));
  swp->add_option("--max-order", sweep.max_exhaustive_order, "exhaustive up to this order")
      ->check(CLI::Range(0, 7));
  bool no_families = false;
  swp->add_flag("--no-families", no_families, "skip the family graphs");

  for (auto* cmd : {orc, swp}) {
    cmd->add_option("--budget-cliques", cmd == orc ? budget.max_cliques : sweep.budget.max_cliques,
                    "oracle limit on maximal cliques per component");
    cmd->add_option("--budget-vertices",
                    cmd == orc ? budget.max_vertices : sweep.budget.max_vertices,
                    "oracle limit on vertices for subset searches");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    if (*rec) return Recognize(in, format, no_fallback, show_stats, out, err);
    if (*gen) return Generate(family, param, gen_format, out);
    if (*val) return Validate(in, cert_path, minimal, out);
    if (*orc) return Oracle(in, budget, format, out);
    sweep.include_families = !no_families;
    const auto report = run_sweep(sweep, [&](const std::string& s) { err << s << "\n"; });
    out << format_report(report);
    return report.ok() ? kExitYes : kExitNo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace pathgraph::tools
