#include "solvgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "solvgraph/errors.hpp"
#include "solvgraph/group_spec.hpp"
#include "solvgraph/report.hpp"
#include "solvgraph/topology.hpp"

namespace solvgraph {

namespace {

/// Splits on commas outside parentheses, so "SL(2,5),A6" has two items.
std::vector<std::string> split_group_list(const std::string &text)
{
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(')
      ++depth;
    else if (c == ')')
      --depth;
    if (c == ',' && depth == 0) {
      items.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  items.push_back(current);
  std::erase_if(items, [](const std::string &s) { return s.empty(); });
  return items;
}

std::set<std::string> check_categories()
{
  std::set<std::string> out;
  for (const auto &[anchor, category] : theorem_anchors())
    out.insert(category);
  return out;
}

std::string status_tag(CheckStatus status)
{
  switch (status) {
  case CheckStatus::pass: return "PASS";
  case CheckStatus::fail: return "FAIL";
  case CheckStatus::informational: return "INFO";
  case CheckStatus::not_applicable: return "N/A ";
  case CheckStatus::skipped: return "SKIP";
  }
  return "????";
}

void print_summary(std::ostream &out, const AnalysisReport &r)
{
  out << "group " << r.group << ": order " << r.order << ", degree " << r.degree
      << ", |Sol(G)| = " << r.radical_order << (r.solvable ? " (solvable)" : "") << '\n';
  if (r.vertices)
    out << "graph: " << *r.vertices << " vertices, " << *r.edges << " edges\n";
  if (r.invariants) {
    const auto &inv = *r.invariants;
    out << "degrees " << inv.min_degree << ".." << inv.max_degree << ", girth "
        << (inv.girth ? std::to_string(*inv.girth) : "inf") << ", clique number "
        << (inv.clique_exact ? "" : ">= ") << inv.clique_size << '\n';
    out << "components " << inv.components << ", diameter "
        << (inv.diameter ? std::to_string(*inv.diameter) : "undefined") << '\n';
  }
  if (r.certificate)
    out << "genus >= " << r.certificate->best_lower_bound << " (Euler " << r.certificate->euler_bound
        << ", clique " << r.certificate->clique_bound << ", packing " << r.certificate->packing_bound << ")\n";
  out << "P_s = " << r.degrees.ps << " (" << r.degrees.ps_decimal << "), Pr = " << r.degrees.pr << " ("
      << r.degrees.pr_decimal << ")\n";
  for (const auto &entry : r.ledger)
    out << "  [" << status_tag(entry.status) << "] " << entry.anchor << ": " << entry.detail << '\n';
}

bool write_text(const std::string &path, const std::string &text, std::ostream &out, std::ostream &err)
{
  if (path == "-") {
    out << text;
    return true;
  }
  std::ofstream file(path);
  file << text;
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

std::string dot_text(const SolvableGraph &graph)
{
  std::ostringstream s;
  write_dot(s, graph);
  return s.str();
}

std::size_t checked_cap(std::size_t cap)
{
  if (cap == 0 || cap > kMaxOrderCap)
    throw CLI::ValidationError("--cap", "must be between 1 and " + std::to_string(kMaxOrderCap));
  return cap;
}

struct AnalyzeArgs
{
  std::string spec;
  std::string json_path;
  std::string dot_path;
  std::size_t cap = kDefaultOrderCap;
  unsigned workers = 0;
};

int cmd_analyze(const AnalyzeArgs &a, std::ostream &out, std::ostream &err)
{
  const PermGroup group = build_group(a.spec, checked_cap(a.cap));
  AnalyzeOptions options;
  options.workers = a.workers;

  bool wrote = true;
  const AnalysisReport report = analyze_group(group, options, [&](const SolvableGraph &graph) {
    if (!a.dot_path.empty())
      wrote = write_text(a.dot_path, dot_text(graph), out, err) && wrote;
  });

  if (!a.json_path.empty()) {
    nlohmann::json j = report;
    wrote = write_text(a.json_path, j.dump(2) + "\n", out, err) && wrote;
  } else {
    print_summary(out, report);
  }

  if (!wrote)
    return exit_usage;
  if (report.solvable) {
    err << "error: " << group.name() << " is solvable; the solvable graph is undefined\n";
    return exit_solvable_input;
  }
  return report.any_failure() ? exit_theorem_failure : exit_ok;
}

struct VerifyArgs
{
  std::string suite = "paper";
  std::string groups;
  std::string check;
  double timeout = 0;
  unsigned workers = 0;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out, std::ostream &err)
{
  if (a.suite != "paper") {
    err << "error: unknown suite '" << a.suite << "'\n";
    return exit_usage;
  }
  const auto categories = check_categories();
  if (!a.check.empty() && !categories.contains(a.check)) {
    err << "error: unknown check '" << a.check << "'; expected one of:";
    for (const auto &c : categories)
      err << ' ' << c;
    err << '\n';
    return exit_usage;
  }

  const std::vector<std::string> names = a.groups.empty() ? paper_suite_groups() : split_group_list(a.groups);
  if (names.empty()) {
    err << "error: empty group list\n";
    return exit_usage;
  }

  // Build every group up front so a solvable entry is rejected before any
  // long computation starts.
  std::vector<PermGroup> groups;
  for (const auto &name : names) {
    groups.push_back(build_group(name));
    if (is_solvable(whole_group(groups.back()))) {
      err << "error: suite requires non-solvable groups; " << groups.back().name() << " is solvable\n";
      return exit_solvable_input;
    }
  }

  std::size_t passed = 0, failed = 0, skipped = 0, informational = 0;
  auto selected = [&](const std::string &category) { return a.check.empty() || category == a.check || category == "audit"; };
  auto record = [&](const std::string &group, const TheoremCheck &entry) {
    if (!selected(entry.category))
      return;
    switch (entry.status) {
    case CheckStatus::pass: ++passed; break;
    case CheckStatus::fail: ++failed; break;
    case CheckStatus::skipped: ++skipped; break;
    default: ++informational; break;
    }
    out << '[' << status_tag(entry.status) << "] " << std::left << std::setw(9) << group << ' '
        << std::setw(9) << entry.category << ' ' << entry.anchor << ": " << entry.detail << '\n';
  };

  for (const auto &group : groups) {
    AnalyzeOptions options;
    options.workers = a.workers;
    if (a.timeout > 0)
      options.deadline = Deadline::after(std::chrono::duration<double>(a.timeout));

    try {
      const AnalysisReport report = analyze_group(group, options);
      for (const auto &entry : report.ledger)
        record(group.name(), entry);
      for (const auto &missing : missing_anchors(report.ledger))
        record(group.name(), {missing, "audit", CheckStatus::fail, "anchor missing from ledger"});
    } catch (const Timeout &e) {
      for (const auto &[anchor, category] : theorem_anchors())
        record(group.name(), {anchor, category, CheckStatus::skipped, e.what()});
    }
  }

  out << passed << " passed, " << failed << " failed, " << skipped << " skipped, " << informational
      << " informational or not applicable\n";
  return failed > 0 ? exit_theorem_failure : exit_ok;
}

int cmd_bounds(std::uint64_t v, std::uint64_t e, std::ostream &out, std::ostream &err)
{
  if (v < 1 || e > v * (v - 1) / 2) {
    err << "error: no simple graph has " << v << " vertices and " << e << " edges\n";
    return exit_usage;
  }
  const auto genus = euler_genus_lower_bound(v, e);
  const auto crosscap = euler_crosscap_lower_bound(v, e);
  out << "vertices " << v << ", edges " << e << '\n';
  out << "genus >= " << genus << '\n';
  out << "crosscap >= " << crosscap << '\n';
  out << "heawood cap at genus " << genus << ": " << heawood_cap(genus) << '\n';
  return exit_ok;
}

struct ExportArgs
{
  std::string spec;
  std::string dot_path;
  std::string adj_path;
  std::size_t cap = kDefaultOrderCap;
  unsigned workers = 0;
};

int cmd_export(const ExportArgs &a, std::ostream &out, std::ostream &err)
{
  if (a.dot_path.empty() == a.adj_path.empty()) {
    err << "error: export needs exactly one of --dot PATH or --adj PATH\n";
    return exit_usage;
  }
  const PermGroup group = build_group(a.spec, checked_cap(a.cap));
  const PairTable table = PairTable::compute(group, {a.workers, {}});
  const Subgroup radical = solvable_radical(table);
  const SolvableGraph graph = build_solvable_graph(table, radical);

  const bool ok = a.dot_path.empty() ? write_text(a.adj_path, adjacency_json(graph).dump(2) + "\n", out, err)
                                     : write_text(a.dot_path, dot_text(graph), out, err);
  return ok ? exit_ok : exit_usage;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Solvable graphs of finite non-solvable groups", "solvgraph"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto *analyze_cmd = app.add_subcommand("analyze", "full analysis of one group");
  analyze_cmd->add_option("spec", analyze.spec, "group spec, e.g. A5, S5, A5xC2, SL(2,5)")->required();
  analyze_cmd->add_option("--json", analyze.json_path, "write the JSON report to PATH ('-' for stdout)");
  analyze_cmd->add_option("--dot", analyze.dot_path, "write the graph in DOT format");
  analyze_cmd->add_option("--cap", analyze.cap, "group order cap")->capture_default_str();
  analyze_cmd->add_option("--workers", analyze.workers, "worker threads (0 = all cores)");

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "check the theorem ledger over a group list");
  verify_cmd->add_option("--suite", verify.suite, "named suite")->capture_default_str();
  verify_cmd->add_option("--groups", verify.groups, "comma-separated group specs");
  verify_cmd->add_option("--check", verify.check, "restrict output to one check category");
  verify_cmd->add_option("--timeout", verify.timeout, "per-group time limit in seconds");
  verify_cmd->add_option("--workers", verify.workers, "worker threads (0 = all cores)");

  std::uint64_t bounds_v = 0, bounds_e = 0;
  auto *bounds_cmd = app.add_subcommand("bounds", "Euler-formula genus and crosscap bounds");
  bounds_cmd->add_option("V", bounds_v, "vertex count")->required();
  bounds_cmd->add_option("E", bounds_e, "edge count")->required();

  ExportArgs exp;
  auto *export_cmd = app.add_subcommand("export", "write the solvable graph");
  export_cmd->add_option("spec", exp.spec, "group spec")->required();
  export_cmd->add_option("--dot", exp.dot_path, "DOT output path");
  export_cmd->add_option("--adj", exp.adj_path, "JSON adjacency output path");
  export_cmd->add_option("--cap", exp.cap, "group order cap")->capture_default_str();
  export_cmd->add_option("--workers", exp.workers, "worker threads (0 = all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*analyze_cmd)
      return cmd_analyze(analyze, out, err);
    if (*verify_cmd)
      return cmd_verify(verify, out, err);
    if (*bounds_cmd)
      return cmd_bounds(bounds_v, bounds_e, out, err);
    return cmd_export(exp, out, err);
  } catch (const SpecError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const CLI::ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << '\n';
    return exit_cap_exceeded;
  } catch (const SolvableGroupError &e) {
    err << "error: " << e.what() << '\n';
    return exit_solvable_input;
  }
}

} // namespace solvgraph
