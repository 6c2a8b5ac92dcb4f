#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "solvgraph/deadline.hpp"
#include "solvgraph/degrees.hpp"
#include "solvgraph/invariants.hpp"
#include "solvgraph/perm_group.hpp"
#include "solvgraph/solv_graph.hpp"
#include "solvgraph/topology.hpp"

namespace solvgraph {

inline constexpr int kReportSchema = 1;

enum class CheckStatus
{
  pass,
  fail,
  informational,   ///< recorded, never fails the suite
  not_applicable,
  skipped          ///< timed out
};

std::string to_string(CheckStatus status);
CheckStatus check_status_from_string(const std::string &text);

/// One ledger line: which statement was checked, and how it came out.
struct TheoremCheck
{
  std::string anchor;
  std::string category;
  CheckStatus status = CheckStatus::informational;
  std::string detail;

  friend bool operator==(const TheoremCheck &, const TheoremCheck &) = default;
};

/// Every anchor a complete ledger must contain, with its category.
const std::vector<std::pair<std::string, std::string>> &theorem_anchors();

/// Anchors missing from `ledger`.
std::vector<std::string> missing_anchors(const std::vector<TheoremCheck> &ledger);

struct InvariantSummary
{
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::optional<std::size_t> girth;
  std::size_t components = 0;
  std::optional<std::size_t> diameter;
  bool two_step_at_most_two = false;
  std::optional<std::pair<ElementId, ElementId>> two_step_witness;   ///< element ids
  std::size_t two_step_witness_count = 0;
  std::size_t clique_size = 0;
  bool clique_exact = false;
  std::vector<ElementId> clique_witness;                             ///< element ids
  std::uint64_t clique_nodes = 0;
  ShapePredicates shape;

  friend bool operator==(const InvariantSummary &, const InvariantSummary &) = default;
};

struct DegreeSummary
{
  std::string ps;
  std::string ps_decimal;
  std::string pr;
  std::string pr_decimal;
  std::uint64_t sum_solvabilizers = 0;
  std::uint64_t sum_centralizers = 0;
  bool integrality_ok = false;
  bool lower_bound_ok = false;
  bool ps_ge_pr_ok = false;
  bool equality_holds = false;
  bool solvabilizers_are_centralizers = false;
  bool equality_condition_ok = false;
  bool equality_iff_solvable_ok = false;
  std::optional<bool> ceiling_ok;
  std::optional<bool> edge_identity_ok;

  friend bool operator==(const DegreeSummary &, const DegreeSummary &) = default;
};

struct RuntimeInfo
{
  std::map<std::string, double> timings_ms;
  std::size_t cache_entries = 0;
  std::size_t cache_hits = 0;
  std::size_t cache_misses = 0;
  unsigned workers = 1;

  friend bool operator==(const RuntimeInfo &, const RuntimeInfo &) = default;
};

/// Everything computed for one group. `runtime` holds the only fields that
/// may differ between runs.
struct AnalysisReport
{
  int schema = kReportSchema;
  std::string group;
  std::uint64_t order = 0;
  unsigned degree = 0;
  std::uint64_t radical_order = 0;
  bool solvable = false;
  std::optional<std::uint64_t> vertices;
  std::optional<std::uint64_t> edges;
  std::optional<ElementId> square_witness;
  std::optional<InvariantSummary> invariants;
  std::optional<GenusCertificate> certificate;
  std::optional<BoundChecks> bound_checks;
  DegreeSummary degrees;
  std::vector<TheoremCheck> ledger;
  RuntimeInfo runtime;

  bool any_failure() const;
  friend bool operator==(const AnalysisReport &, const AnalysisReport &) = default;
};

struct AnalyzeOptions
{
  unsigned workers = 0;
  std::uint64_t clique_budget = kDefaultCliqueBudget;
  Deadline deadline;
};

/// Runs build -> radical -> graph -> invariants -> certificate -> degrees and
/// fills the theorem ledger. For solvable groups only the group-level data
/// and the degree report are produced. `on_graph` sees the graph before it
/// is discarded.
AnalysisReport analyze_group(const PermGroup &group,
                             const AnalyzeOptions &options = {},
                             const std::function<void(const SolvableGraph &)> &on_graph = {});

/// Known diameter outcome for catalogue groups: true for "diameter 2",
/// false for "diameter > 2", nullopt when not catalogued.
std::optional<bool> expected_diameter_two(const std::string &group_name);

/// The non-solvable groups checked by the default verification suite.
const std::vector<std::string> &paper_suite_groups();

void to_json(nlohmann::json &j, const AnalysisReport &report);
void from_json(const nlohmann::json &j, AnalysisReport &report);

/// Adjacency export: {"group", "vertices": [{"id", "cycles"}], "edges": [[a, b], ...]}
/// with element ids.
nlohmann::json adjacency_json(const SolvableGraph &graph);

} // namespace solvgraph
