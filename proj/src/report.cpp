#include "solvgraph/report.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "solvgraph/errors.hpp"

namespace solvgraph {

using nlohmann::json;

std::string to_string(CheckStatus status)
{
  switch (status) {
  case CheckStatus::pass: return "pass";
  case CheckStatus::fail: return "fail";
  case CheckStatus::informational: return "informational";
  case CheckStatus::not_applicable: return "not-applicable";
  case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

CheckStatus check_status_from_string(const std::string &text)
{
  for (auto status : {CheckStatus::pass, CheckStatus::fail, CheckStatus::informational,
                      CheckStatus::not_applicable, CheckStatus::skipped}) {
    if (to_string(status) == text)
      return status;
  }
  throw std::invalid_argument("unknown check status '" + text + "'");
}

namespace anchor {
const std::string radical = "Sol(G) = intersection of all Sol_G(u), a normal solvable subgroup";
const std::string centralizer = "C_G(u) in Sol_G(u) and |C_G(u)| divides |Sol_G(u)|";
const std::string lift = "<H, Sol(G)> is solvable for solvable H";
const std::string degree = "deg(u) = |Sol_G(u)| - |Sol(G)| - 1";
const std::string star = "not a star";
const std::string bipartite = "not complete bipartite";
const std::string multipartite = "not complete n-partite";
const std::string isolated = "no isolated vertex";
const std::string regular = "not regular";
const std::string tree = "not a tree";
const std::string square = "some x has x, x^2 outside Sol(G)";
const std::string girth = "girth = 3";
const std::string clique4 = "clique number >= 4";
const std::string k11 = "K_11 subgraph when |G| <= 120";
const std::string heawood = "clique size <= Heawood cap h_m";
const std::string radical_cap = "|Sol(G)| <= h_m / (t - 1)";
const std::string subgroup_cap = "|H| <= h_m + |H n Sol(G)| for solvable H";
const std::string order_cap = "|G| < (2 h_m)^h_m";
const std::string genus4 = "genus >= 4 (not planar, toroidal, double- or triple-toroidal)";
const std::string genus5 = "genus >= 5";
const std::string euler = "Euler-formula genus lower bound";
const std::string projective = "not projective (crosscap >= 2)";
const std::string diameter = "diameter observation (2, or > 2)";
const std::string two_step = "two-step diameter test agrees with BFS";
const std::string ps_formula = "P_s = sum |Sol_G(u)| / |G|^2";
const std::string integrality = "|G| P_s is an integer";
const std::string ps_lower = "P_s >= |Sol|/|G| + 2(|G| - |Sol|)/|G|^2";
const std::string ps_ge_pr = "P_s >= Pr";
const std::string equality_condition = "P_s = Pr iff Sol_G(u) = C_G(u) for all u";
const std::string equality_solvable = "P_s = Pr iff G is solvable (literal reading)";
const std::string ceiling = "P_s <= 11/30";
const std::string edge_identity = "2|E| = |G|^2 P_s + |Sol|^2 + |Sol| - |G|(2|Sol| + 1)";
} // namespace anchor

const std::vector<std::pair<std::string, std::string>> &theorem_anchors()
{
  static const std::vector<std::pair<std::string, std::string>> anchors = {
    {anchor::radical, "radical"},
    {anchor::centralizer, "radical"},
    {anchor::lift, "radical"},
    {anchor::degree, "degree"},
    {anchor::star, "shape"},
    {anchor::bipartite, "shape"},
    {anchor::multipartite, "shape"},
    {anchor::isolated, "shape"},
    {anchor::regular, "shape"},
    {anchor::tree, "shape"},
    {anchor::square, "girth"},
    {anchor::girth, "girth"},
    {anchor::clique4, "clique"},
    {anchor::k11, "clique"},
    {anchor::heawood, "bounds"},
    {anchor::radical_cap, "bounds"},
    {anchor::subgroup_cap, "bounds"},
    {anchor::order_cap, "bounds"},
    {anchor::genus4, "genus"},
    {anchor::genus5, "genus"},
    {anchor::euler, "genus"},
    {anchor::projective, "crosscap"},
    {anchor::diameter, "diameter"},
    {anchor::two_step, "diameter"},
    {anchor::ps_formula, "degrees"},
    {anchor::integrality, "degrees"},
    {anchor::ps_lower, "degrees"},
    {anchor::ps_ge_pr, "degrees"},
    {anchor::equality_condition, "degrees"},
    {anchor::equality_solvable, "degrees"},
    {anchor::ceiling, "degrees"},
    {anchor::edge_identity, "degrees"},
  };
  return anchors;
}

std::vector<std::string> missing_anchors(const std::vector<TheoremCheck> &ledger)
{
  std::set<std::string> present;
  for (const auto &entry : ledger)
    present.insert(entry.anchor);
  std::vector<std::string> missing;
  for (const auto &[name, category] : theorem_anchors()) {
    if (!present.contains(name))
      missing.push_back(name);
  }
  return missing;
}

bool AnalysisReport::any_failure() const
{
  return std::any_of(ledger.begin(), ledger.end(),
                     [](const TheoremCheck &c) { return c.status == CheckStatus::fail; });
}

std::optional<bool> expected_diameter_two(const std::string &group_name)
{
  static const std::map<std::string, bool> known = {
    {"A5", true}, {"S5", true}, {"A5xC2", true}, {"SL(2,5)", true},
    {"PSL(3,2)", true}, {"GL(2,4)", true}, {"A6", false}, {"S6", false},
  };
  auto it = known.find(group_name);
  if (it == known.end())
    return std::nullopt;
  return it->second;
}

const std::vector<std::string> &paper_suite_groups()
{
  static const std::vector<std::string> groups = {
    "A5", "S5", "A5xC2", "SL(2,5)", "PSL(3,2)", "GL(2,4)", "A6", "S6",
  };
  return groups;
}

namespace {

class Ledger
{
public:
  void add(const std::string &anchor, CheckStatus status, std::string detail)
  {
    _entries.push_back({anchor, category_of(anchor), status, std::move(detail)});
  }

  void check(const std::string &anchor, bool ok, std::string detail)
  {
    add(anchor, ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail));
  }

  void not_applicable(const std::string &anchor, std::string detail)
  {
    add(anchor, CheckStatus::not_applicable, std::move(detail));
  }

  std::vector<TheoremCheck> take() { return std::move(_entries); }

private:
  static std::string category_of(const std::string &anchor)
  {
    for (const auto &[name, category] : theorem_anchors()) {
      if (name == anchor)
        return category;
    }
    throw InternalError("ledger anchor not registered: " + anchor);
  }

  std::vector<TheoremCheck> _entries;
};

std::string yes_no(bool value) { return value ? "yes" : "no"; }

class Stopwatch
{
public:
  explicit Stopwatch(RuntimeInfo &info) : _info(info), _start(std::chrono::steady_clock::now()) {}

  void lap(const std::string &stage)
  {
    const auto now = std::chrono::steady_clock::now();
    _info.timings_ms[stage] = std::chrono::duration<double, std::milli>(now - _start).count();
    _start = now;
  }

private:
  RuntimeInfo &_info;
  std::chrono::steady_clock::time_point _start;
};

DegreeSummary summarize(const DegreeReport &d)
{
  DegreeSummary out;
  out.ps = to_fraction_string(d.ps);
  out.ps_decimal = to_decimal_string(d.ps);
  out.pr = to_fraction_string(d.pr);
  out.pr_decimal = to_decimal_string(d.pr);
  out.sum_solvabilizers = d.sum_solvabilizers;
  out.sum_centralizers = d.sum_centralizers;
  out.integrality_ok = d.integrality_ok;
  out.lower_bound_ok = d.lower_bound_ok;
  out.ps_ge_pr_ok = d.ps_ge_pr_ok;
  out.equality_holds = d.equality_holds;
  out.solvabilizers_are_centralizers = d.solvabilizers_are_centralizers;
  out.equality_condition_ok = d.equality_condition_ok;
  out.equality_iff_solvable_ok = d.equality_iff_solvable_ok;
  out.ceiling_ok = d.ceiling_ok;
  out.edge_identity_ok = d.edge_identity_ok;
  return out;
}

void add_degree_entries(Ledger &ledger, const DegreeReport &d)
{
  const std::string ps = to_fraction_string(d.ps);
  const std::string pr = to_fraction_string(d.pr);

  ledger.check(anchor::ps_formula, true,
               "both routes give " + std::to_string(d.sum_solvabilizers) + " solvable ordered pairs, P_s = " + ps);
  ledger.check(anchor::integrality, d.integrality_ok, "|G| P_s = " + to_fraction_string(d.ps * boost::multiprecision::cpp_int(d.order)));
  ledger.check(anchor::ps_lower, d.lower_bound_ok, "P_s = " + ps);
  ledger.check(anchor::ps_ge_pr, d.ps_ge_pr_ok, "P_s = " + ps + ", Pr = " + pr);
  ledger.check(anchor::equality_condition, d.equality_condition_ok,
               "equality " + yes_no(d.equality_holds) + ", all Sol_G(u) = C_G(u) "
               + yes_no(d.solvabilizers_are_centralizers));

  const std::string literal = "equality " + yes_no(d.equality_holds) + ", solvable " + yes_no(d.solvable);
  if (d.solvable && !d.equality_iff_solvable_ok)
    ledger.add(anchor::equality_solvable, CheckStatus::informational,
               literal + "; the literal reading fails for this solvable non-abelian group");
  else
    ledger.check(anchor::equality_solvable, d.equality_iff_solvable_ok, literal);

  if (d.ceiling_ok)
    ledger.check(anchor::ceiling, *d.ceiling_ok, "P_s = " + ps + " (" + to_decimal_string(d.ps) + ")");
  else
    ledger.not_applicable(anchor::ceiling, "solvable group");

  if (d.edge_identity_ok)
    ledger.check(anchor::edge_identity, *d.edge_identity_ok,
                 "2|E| = " + std::to_string(2 * d.edge_count.value_or(0)));
  else
    ledger.not_applicable(anchor::edge_identity, "no graph");
}

/// For adjacent u, v and z in Sol(G): u ~ vz and u ~ uz. Also checks
/// <u, v, Sol(G)> directly for each distinct <u, v>.
std::pair<bool, std::string> check_lift_closure(const PermGroup &group,
                                                const SolvableGraph &graph,
                                                const Subgroup &radical)
{
  if (radical.is_trivial())
    return {true, "Sol(G) trivial; holds vacuously"};

  std::size_t pairs = 0;
  for (std::size_t a = 0; a < graph.vertex_count(); ++a) {
    const ElementId u = graph.vertices[a];
    const auto &row = graph.graph.neighbors(a);
    for (auto b = row.find_first(); b != VertexSet::npos; b = row.find_next(b)) {
      const ElementId v = graph.vertices[b];
      for (auto z : radical.members()) {
        if (z == PermGroup::identity())
          continue;
        const auto uz = graph.vertex_of(group.mul(u, z));
        const auto vz = graph.vertex_of(group.mul(v, z));
        if (!uz || !vz || !graph.graph.adjacent(a, *uz) || (*vz != a && !graph.graph.adjacent(a, *vz)))
          return {false, "fails for elements " + std::to_string(u) + ", " + std::to_string(v)
                         + ", z = " + std::to_string(z)};
        ++pairs;
      }
    }
  }

  std::set<std::vector<ElementId>> seen;
  for (std::size_t a = 0; a < graph.vertex_count(); ++a) {
    const auto &row = graph.graph.neighbors(a);
    for (auto b = row.find_next(a); b != VertexSet::npos; b = row.find_next(b)) {
      const ElementId seeds[] = {graph.vertices[a], graph.vertices[b]};
      Subgroup h = subgroup_closure(group, seeds);
      if (!seen.insert(h.members()).second)
        continue;
      std::vector<ElementId> lifted = h.members();
      lifted.insert(lifted.end(), radical.members().begin(), radical.members().end());
      if (!is_solvable(subgroup_closure(group, lifted)))
        return {false, "<H, Sol(G)> not solvable for H of order " + std::to_string(h.order())};
    }
  }
  return {true, std::to_string(pairs) + " lifted pairs adjacent, " + std::to_string(seen.size())
                + " subgroups <u, v> lifted"};
}

std::pair<bool, std::string> check_centralizers(const PairTable &table)
{
  const PermGroup &group = table.group();
  for (std::size_t u = 0; u < group.order(); ++u) {
    const auto id = static_cast<ElementId>(u);
    const Subgroup c = centralizer(group, id);
    const auto &sol = table.solvabilizer_mask(id);
    if (!c.mask().is_subset_of(sol) || sol.count() % c.order() != 0)
      return {false, "fails at element " + std::to_string(id)};
  }
  return {true, "all " + std::to_string(group.order()) + " elements"};
}

} // namespace

AnalysisReport analyze_group(const PermGroup &group,
                             const AnalyzeOptions &options,
                             const std::function<void(const SolvableGraph &)> &on_graph)
{
  AnalysisReport report;
  report.group = group.name();
  report.order = group.order();
  report.degree = group.degree();

  Stopwatch watch(report.runtime);
  Ledger ledger;

  const PairTable table = PairTable::compute(group, {options.workers, options.deadline});
  watch.lap("pair_table");
  report.runtime.cache_entries = table.stats().entries;
  report.runtime.cache_hits = table.stats().hits;
  report.runtime.cache_misses = table.stats().misses;
  report.runtime.workers = table.stats().workers;

  const Subgroup radical = solvable_radical(table);
  report.radical_order = radical.order();
  report.solvable = radical.order() == group.order();
  ledger.check(anchor::radical, true, "|Sol(G)| = " + std::to_string(radical.order()));
  {
    auto [ok, detail] = check_centralizers(table);
    ledger.check(anchor::centralizer, ok, detail);
  }
  watch.lap("radical");

  if (report.solvable) {
    const DegreeReport degrees = degree_report(table, radical, nullptr, options.deadline);
    report.degrees = summarize(degrees);
    const std::string why = "graph undefined for solvable groups";
    for (const auto &name : {anchor::lift, anchor::degree, anchor::star, anchor::bipartite,
                             anchor::multipartite, anchor::isolated, anchor::regular, anchor::tree,
                             anchor::square, anchor::girth, anchor::clique4, anchor::k11,
                             anchor::heawood, anchor::radical_cap, anchor::subgroup_cap,
                             anchor::order_cap, anchor::genus4, anchor::genus5, anchor::euler,
                             anchor::projective, anchor::diameter, anchor::two_step})
      ledger.not_applicable(name, why);
    add_degree_entries(ledger, degrees);
    watch.lap("degrees");
    report.ledger = ledger.take();
    return report;
  }

  const SolvableGraph graph = build_solvable_graph(table, radical);
  report.vertices = graph.vertex_count();
  report.edges = graph.edge_count();
  watch.lap("graph");
  if (on_graph)
    on_graph(graph);

  {
    auto [ok, detail] = check_lift_closure(group, graph, radical);
    ledger.check(anchor::lift, ok, detail);
  }

  const ElementId witness = find_square_witness(group, radical);
  report.square_witness = witness;
  ledger.check(anchor::square, true,
               "x = " + group.element(witness).to_cycle_string() + " (element " + std::to_string(witness) + ")");

  const InvariantReport inv = compute_invariants(graph, options.clique_budget, options.deadline);
  watch.lap("invariants");

  InvariantSummary summary;
  summary.min_degree = inv.degrees.min_degree;
  summary.max_degree = inv.degrees.max_degree;
  summary.girth = inv.girth;
  summary.components = inv.exact.components;
  summary.diameter = inv.exact.diameter;
  summary.two_step_at_most_two = inv.two_step.at_most_two;
  if (inv.two_step.witness)
    summary.two_step_witness = std::make_pair(graph.vertices[inv.two_step.witness->first],
                                              graph.vertices[inv.two_step.witness->second]);
  summary.two_step_witness_count = inv.two_step.witness_count;
  summary.clique_size = inv.clique.size;
  summary.clique_exact = inv.clique.exact;
  for (auto v : inv.clique.witness)
    summary.clique_witness.push_back(graph.vertices[v]);
  summary.clique_nodes = inv.clique.nodes;
  summary.shape = inv.shape;
  report.invariants = summary;

  ledger.check(anchor::degree, true,
               std::to_string(inv.degrees.vertices_checked) + " vertices, degrees "
               + std::to_string(inv.degrees.min_degree) + ".." + std::to_string(inv.degrees.max_degree));
  ledger.check(anchor::star, !inv.shape.is_star, "is_star = " + yes_no(inv.shape.is_star));
  ledger.check(anchor::bipartite, !inv.shape.is_complete_bipartite,
               "is_complete_bipartite = " + yes_no(inv.shape.is_complete_bipartite));
  ledger.check(anchor::multipartite, !inv.shape.is_complete_multipartite,
               "is_complete_multipartite = " + yes_no(inv.shape.is_complete_multipartite));
  ledger.check(anchor::isolated, !inv.shape.has_isolated_vertex,
               "minimum degree " + std::to_string(inv.degrees.min_degree));
  ledger.check(anchor::regular, !inv.shape.is_regular,
               "degrees " + std::to_string(inv.degrees.min_degree) + ".." + std::to_string(inv.degrees.max_degree));
  ledger.check(anchor::tree, !inv.shape.is_tree, "is_tree = " + yes_no(inv.shape.is_tree));
  ledger.check(anchor::girth, inv.girth == 3u,
               inv.girth ? "girth " + std::to_string(*inv.girth) : std::string("acyclic"));

  const std::string clique_text = "clique number " + std::string(inv.clique.exact ? "= " : ">= ")
                                  + std::to_string(inv.clique.size);
  ledger.check(anchor::clique4, inv.clique.size >= 4, clique_text);
  if (group.order() <= 120)
    ledger.check(anchor::k11, inv.clique.size >= 11, clique_text);
  else
    ledger.not_applicable(anchor::k11, "|G| = " + std::to_string(group.order()) + " > 120");

  const std::optional<bool> expected = expected_diameter_two(group.name());
  const std::string observed = inv.exact.diameter
                                   ? "diameter " + std::to_string(*inv.exact.diameter)
                                   : std::to_string(inv.exact.components) + " components";
  const bool two_step_consistent = inv.two_step.at_most_two == (inv.exact.diameter && *inv.exact.diameter <= 2);
  if (expected) {
    const bool observed_two = inv.two_step.at_most_two;
    ledger.check(anchor::diameter, observed_two == *expected,
                 std::string(observed_two ? "diameter 2" : "diameter > 2") + " (BFS: " + observed + ")"
                 + (*expected ? ", expected 2" : ", expected > 2")
                 + (inv.two_step.witness ? ", witness pair " + std::to_string(summary.two_step_witness->first)
                                               + " " + std::to_string(summary.two_step_witness->second)
                                         : std::string()));
  } else {
    ledger.add(anchor::diameter, CheckStatus::informational, observed);
  }
  ledger.check(anchor::two_step, two_step_consistent,
               std::string("two-step ") + (inv.two_step.at_most_two ? "<= 2" : "> 2") + ", BFS " + observed);

  const CliqueResult &clique = inv.clique;
  const GenusCertificate cert = certify(graph.graph, &clique, options.clique_budget);
  report.certificate = cert;
  watch.lap("certificate");

  ledger.check(anchor::genus4, cert.best_lower_bound >= 4, "genus >= " + std::to_string(cert.best_lower_bound));
  ledger.check(anchor::genus5, cert.best_lower_bound >= 5, "genus >= " + std::to_string(cert.best_lower_bound));
  ledger.add(anchor::euler, CheckStatus::informational,
             "ceil(" + std::to_string(graph.edge_count()) + "/6 - " + std::to_string(graph.vertex_count())
             + "/2 + 1) = " + std::to_string(cert.euler_bound));
  ledger.check(anchor::projective, cert.crosscap_at_least_two(),
               "crosscap >= " + std::to_string(cert.crosscap_clique_bound) + " from K_"
               + std::to_string(cert.clique_size) + ", disjoint 2K5 " + yes_no(cert.has_disjoint_2K5));

  const BoundChecks bounds = check_genus_bounds(group, graph, radical, clique, cert.best_lower_bound);
  report.bound_checks = bounds;
  const std::string with_m = " with m = " + std::to_string(bounds.m) + ", h_m = " + std::to_string(bounds.cap);
  ledger.add(anchor::heawood, CheckStatus::informational,
             "clique " + std::to_string(bounds.clique_size) + (bounds.clique_within_cap ? " <= " : " > ")
             + "h_m" + with_m);
  ledger.add(anchor::radical_cap, CheckStatus::informational,
             std::string(bounds.radical_within_cap ? "holds" : "does not hold") + ", t = "
             + std::to_string(bounds.max_coset_order) + with_m);
  ledger.add(anchor::subgroup_cap, CheckStatus::informational,
             std::string(bounds.subgroups_within_cap ? "holds" : "does not hold") + " for "
             + std::to_string(bounds.subgroups_checked) + " subgroups" + with_m);
  ledger.add(anchor::order_cap, CheckStatus::informational,
             std::string(bounds.order_below_function ? "holds" : "does not hold") + with_m);
  watch.lap("bounds");

  const DegreeReport degrees = degree_report(table, radical, &graph, options.deadline);
  report.degrees = summarize(degrees);
  add_degree_entries(ledger, degrees);
  watch.lap("degrees");

  report.ledger = ledger.take();
  return report;
}

// JSON

namespace {

template<typename T>
json optional_json(const std::optional<T> &value)
{
  return value ? json(*value) : json(nullptr);
}

template<typename T>
std::optional<T> optional_from(const json &j, const char *key)
{
  if (!j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  return j.at(key).get<T>();
}

json shape_json(const ShapePredicates &s)
{
  return {
    {"is_star", s.is_star},
    {"is_regular", s.is_regular},
    {"is_complete_bipartite", s.is_complete_bipartite},
    {"is_complete_multipartite", s.is_complete_multipartite},
    {"has_isolated_vertex", s.has_isolated_vertex},
    {"is_tree", s.is_tree},
  };
}

ShapePredicates shape_from(const json &j)
{
  ShapePredicates s;
  s.is_star = j.at("is_star");
  s.is_regular = j.at("is_regular");
  s.is_complete_bipartite = j.at("is_complete_bipartite");
  s.is_complete_multipartite = j.at("is_complete_multipartite");
  s.has_isolated_vertex = j.at("has_isolated_vertex");
  s.is_tree = j.at("is_tree");
  return s;
}

json invariants_json(const InvariantSummary &s)
{
  json witness = nullptr;
  if (s.two_step_witness)
    witness = json::array({s.two_step_witness->first, s.two_step_witness->second});
  return {
    {"min_degree", s.min_degree},
    {"max_degree", s.max_degree},
    {"girth", optional_json(s.girth)},
    {"components", s.components},
    {"diameter", optional_json(s.diameter)},
    {"two_step", {{"at_most_two", s.two_step_at_most_two},
                  {"witness", witness},
                  {"witness_count", s.two_step_witness_count}}},
    {"clique", {{"size", s.clique_size},
                {"exact", s.clique_exact},
                {"witness", s.clique_witness},
                {"nodes", s.clique_nodes}}},
    {"predicates", shape_json(s.shape)},
  };
}

InvariantSummary invariants_from(const json &j)
{
  InvariantSummary s;
  s.min_degree = j.at("min_degree");
  s.max_degree = j.at("max_degree");
  s.girth = optional_from<std::size_t>(j, "girth");
  s.components = j.at("components");
  s.diameter = optional_from<std::size_t>(j, "diameter");
  const json &two = j.at("two_step");
  s.two_step_at_most_two = two.at("at_most_two");
  if (!two.at("witness").is_null())
    s.two_step_witness = std::make_pair(two.at("witness").at(0).get<ElementId>(),
                                        two.at("witness").at(1).get<ElementId>());
  s.two_step_witness_count = two.at("witness_count");
  const json &clique = j.at("clique");
  s.clique_size = clique.at("size");
  s.clique_exact = clique.at("exact");
  s.clique_witness = clique.at("witness").get<std::vector<ElementId>>();
  s.clique_nodes = clique.at("nodes");
  s.shape = shape_from(j.at("predicates"));
  return s;
}

json certificate_json(const GenusCertificate &c)
{
  return {
    {"euler_bound", c.euler_bound},
    {"clique_bound", c.clique_bound},
    {"packing_bound", c.packing_bound},
    {"best_lower_bound", c.best_lower_bound},
    {"crosscap_euler_bound", c.crosscap_euler_bound},
    {"crosscap_clique_bound", c.crosscap_clique_bound},
    {"has_disjoint_2K5", c.has_disjoint_2K5},
    {"clique_size", c.clique_size},
    {"packing_sizes", c.packing_sizes},
  };
}

GenusCertificate certificate_from(const json &j)
{
  GenusCertificate c;
  c.euler_bound = j.at("euler_bound");
  c.clique_bound = j.at("clique_bound");
  c.packing_bound = j.at("packing_bound");
  c.best_lower_bound = j.at("best_lower_bound");
  c.crosscap_euler_bound = j.at("crosscap_euler_bound");
  c.crosscap_clique_bound = j.at("crosscap_clique_bound");
  c.has_disjoint_2K5 = j.at("has_disjoint_2K5");
  c.clique_size = j.at("clique_size");
  c.packing_sizes = j.at("packing_sizes").get<std::vector<std::size_t>>();
  return c;
}

json bounds_json(const BoundChecks &b)
{
  return {
    {"m", b.m},
    {"heawood_cap", b.cap},
    {"max_coset_order", b.max_coset_order},
    {"clique_size", b.clique_size},
    {"clique_within_cap", b.clique_within_cap},
    {"radical_within_cap", b.radical_within_cap},
    {"subgroups_within_cap", b.subgroups_within_cap},
    {"subgroups_checked", b.subgroups_checked},
    {"largest_solvable_subgroup", b.largest_solvable_subgroup},
    {"order_below_function", b.order_below_function},
  };
}

BoundChecks bounds_from(const json &j)
{
  BoundChecks b;
  b.m = j.at("m");
  b.cap = j.at("heawood_cap");
  b.max_coset_order = j.at("max_coset_order");
  b.clique_size = j.at("clique_size");
  b.clique_within_cap = j.at("clique_within_cap");
  b.radical_within_cap = j.at("radical_within_cap");
  b.subgroups_within_cap = j.at("subgroups_within_cap");
  b.subgroups_checked = j.at("subgroups_checked");
  b.largest_solvable_subgroup = j.at("largest_solvable_subgroup");
  b.order_below_function = j.at("order_below_function");
  return b;
}

json degrees_json(const DegreeSummary &d)
{
  return {
    {"ps", d.ps},
    {"ps_decimal", d.ps_decimal},
    {"pr", d.pr},
    {"pr_decimal", d.pr_decimal},
    {"sum_solvabilizers", d.sum_solvabilizers},
    {"sum_centralizers", d.sum_centralizers},
    {"integrality_ok", d.integrality_ok},
    {"lower_bound_ok", d.lower_bound_ok},
    {"ps_ge_pr_ok", d.ps_ge_pr_ok},
    {"equality_holds", d.equality_holds},
    {"solvabilizers_are_centralizers", d.solvabilizers_are_centralizers},
    {"equality_condition_ok", d.equality_condition_ok},
    {"equality_iff_solvable_ok", d.equality_iff_solvable_ok},
    {"ceiling_ok", optional_json(d.ceiling_ok)},
    {"edge_identity_ok", optional_json(d.edge_identity_ok)},
  };
}

DegreeSummary degrees_from(const json &j)
{
  DegreeSummary d;
  d.ps = j.at("ps");
  d.ps_decimal = j.at("ps_decimal");
  d.pr = j.at("pr");
  d.pr_decimal = j.at("pr_decimal");
  d.sum_solvabilizers = j.at("sum_solvabilizers");
  d.sum_centralizers = j.at("sum_centralizers");
  d.integrality_ok = j.at("integrality_ok");
  d.lower_bound_ok = j.at("lower_bound_ok");
  d.ps_ge_pr_ok = j.at("ps_ge_pr_ok");
  d.equality_holds = j.at("equality_holds");
  d.solvabilizers_are_centralizers = j.at("solvabilizers_are_centralizers");
  d.equality_condition_ok = j.at("equality_condition_ok");
  d.equality_iff_solvable_ok = j.at("equality_iff_solvable_ok");
  d.ceiling_ok = optional_from<bool>(j, "ceiling_ok");
  d.edge_identity_ok = optional_from<bool>(j, "edge_identity_ok");
  return d;
}

} // namespace

void to_json(json &j, const AnalysisReport &r)
{
  json ledger = json::array();
  for (const auto &entry : r.ledger) {
    ledger.push_back({{"anchor", entry.anchor},
                      {"category", entry.category},
                      {"status", to_string(entry.status)},
                      {"detail", entry.detail}});
  }

  j = {
    {"schema", r.schema},
    {"group", r.group},
    {"order", r.order},
    {"degree", r.degree},
    {"radical_order", r.radical_order},
    {"solvable", r.solvable},
    {"vertices", optional_json(r.vertices)},
    {"edges", optional_json(r.edges)},
    {"square_witness", optional_json(r.square_witness)},
    {"invariants", r.invariants ? invariants_json(*r.invariants) : json(nullptr)},
    {"certificate", r.certificate ? certificate_json(*r.certificate) : json(nullptr)},
    {"bound_checks", r.bound_checks ? bounds_json(*r.bound_checks) : json(nullptr)},
    {"degrees", degrees_json(r.degrees)},
    {"ledger", ledger},
    {"runtime", {{"timings_ms", r.runtime.timings_ms},
                 {"cache", {{"entries", r.runtime.cache_entries},
                            {"hits", r.runtime.cache_hits},
                            {"misses", r.runtime.cache_misses}}},
                 {"workers", r.runtime.workers}}},
  };
}

void from_json(const json &j, AnalysisReport &r)
{
  r.schema = j.at("schema");
  if (r.schema != kReportSchema)
    throw std::invalid_argument("unsupported report schema " + std::to_string(r.schema));
  r.group = j.at("group");
  r.order = j.at("order");
  r.degree = j.at("degree");
  r.radical_order = j.at("radical_order");
  r.solvable = j.at("solvable");
  r.vertices = optional_from<std::uint64_t>(j, "vertices");
  r.edges = optional_from<std::uint64_t>(j, "edges");
  r.square_witness = optional_from<ElementId>(j, "square_witness");
  r.invariants = j.at("invariants").is_null() ? std::nullopt
                                              : std::optional(invariants_from(j.at("invariants")));
  r.certificate = j.at("certificate").is_null() ? std::nullopt
                                                : std::optional(certificate_from(j.at("certificate")));
  r.bound_checks = j.at("bound_checks").is_null() ? std::nullopt
                                                  : std::optional(bounds_from(j.at("bound_checks")));
  r.degrees = degrees_from(j.at("degrees"));

  r.ledger.clear();
  for (const auto &entry : j.at("ledger")) {
    r.ledger.push_back({entry.at("anchor"), entry.at("category"),
                        check_status_from_string(entry.at("status")), entry.at("detail")});
  }

  const json &runtime = j.at("runtime");
  r.runtime.timings_ms = runtime.at("timings_ms").get<std::map<std::string, double>>();
  r.runtime.cache_entries = runtime.at("cache").at("entries");
  r.runtime.cache_hits = runtime.at("cache").at("hits");
  r.runtime.cache_misses = runtime.at("cache").at("misses");
  r.runtime.workers = runtime.at("workers");
}

json adjacency_json(const SolvableGraph &graph)
{
  const PermGroup &group = *graph.group;
  json vertices = json::array();
  for (auto x : graph.vertices)
    vertices.push_back({{"id", x}, {"cycles", group.element(x).to_cycle_string()}});

  json edges = json::array();
  for (std::size_t a = 0; a < graph.vertex_count(); ++a) {
    const auto &row = graph.graph.neighbors(a);
    for (auto b = row.find_next(a); b != VertexSet::npos; b = row.find_next(b))
      edges.push_back(json::array({graph.vertices[a], graph.vertices[b]}));
  }

  return {
    {"group", group.name()},
    {"order", group.order()},
    {"radical", graph.radical_ids},
    {"vertices", vertices},
    {"edges", edges},
  };
}

} // namespace solvgraph
