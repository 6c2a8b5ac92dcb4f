#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "solvgraph/graph.hpp"
#include "solvgraph/invariants.hpp"
#include "solvgraph/perm_group.hpp"
#include "solvgraph/solv_graph.hpp"

namespace solvgraph {

/// Orientable genus of K_n: ceil((n-3)(n-4)/12) for n >= 3, else 0.
std::uint64_t genus_complete(std::uint64_t n);

/// Nonorientable genus of K_n: ceil((n-3)(n-4)/6) for n >= 3, except 3 at n = 7.
std::uint64_t crosscap_complete(std::uint64_t n);

/// floor(sqrt(x)) by Newton iteration.
std::uint64_t isqrt(std::uint64_t x);

/// floor((7 + sqrt(1 + 48m)) / 2): the largest clique a graph of genus m can
/// contain. Returns 4 at m = 0.
std::uint64_t heawood_cap(std::uint64_t m);

/// max(0, ceil(e/6 - v/2 + 1)); 0 when v < 3.
std::uint64_t euler_genus_lower_bound(std::uint64_t v, std::uint64_t e);

/// max(0, ceil(e/3 - v + 2)); 0 when v < 3.
std::uint64_t euler_crosscap_lower_bound(std::uint64_t v, std::uint64_t e);

struct CliquePacking
{
  std::uint64_t bound = 0;                       ///< sum of genus_complete over the cliques
  std::vector<std::vector<std::size_t>> cliques; ///< vertex-disjoint, largest first
  bool exact_steps = true;                       ///< every extraction finished within budget
};

/// Greedily removes a maximum clique from the remaining vertices until the
/// largest left has fewer than five vertices. Genus adds over disjoint
/// subgraphs, so the sum of genus_complete over the sizes bounds the genus.
CliquePacking clique_packing_bound(const Graph &graph, std::uint64_t budget = kDefaultCliqueBudget);

struct GenusCertificate
{
  std::uint64_t euler_bound = 0;
  std::uint64_t clique_bound = 0;
  std::uint64_t packing_bound = 0;
  std::uint64_t best_lower_bound = 0;
  std::uint64_t crosscap_euler_bound = 0;   ///< auxiliary only
  std::uint64_t crosscap_clique_bound = 0;
  bool has_disjoint_2K5 = false;
  std::size_t clique_size = 0;
  std::vector<std::size_t> packing_sizes;

  /// Not projective: a clique forcing crosscap >= 2, or two disjoint K5s.
  bool crosscap_at_least_two() const { return crosscap_clique_bound >= 2 || has_disjoint_2K5; }

  friend bool operator==(const GenusCertificate &, const GenusCertificate &) = default;
};

/// Lower-bound certificate. `clique` is reused when supplied.
GenusCertificate certify(const Graph &graph,
                         const CliqueResult *clique = nullptr,
                         std::uint64_t budget = kDefaultCliqueBudget);

/// Consistency checks of the genus-driven size bounds, evaluated with a
/// hypothesised genus m. They are guaranteed only when m is at least the
/// true genus, so with m a lower bound they are informational.
struct BoundChecks
{
  std::uint64_t m = 0;
  std::uint64_t cap = 0;                 ///< heawood_cap(m)
  std::size_t max_coset_order = 0;       ///< t: largest order of x Sol(G) in G/Sol(G)
  std::size_t clique_size = 0;
  bool clique_within_cap = false;        ///< every verified clique <= cap
  bool radical_within_cap = false;       ///< |Sol(G)| (t - 1) <= cap
  bool subgroups_within_cap = false;     ///< |H| <= cap + |H n Sol(G)| for the checked H
  std::size_t subgroups_checked = 0;
  std::size_t largest_solvable_subgroup = 0;
  bool order_below_function = false;     ///< |G| < (2 cap)^cap

  friend bool operator==(const BoundChecks &, const BoundChecks &) = default;
};

/// The subgroups checked are every cyclic subgroup and <u, v> for every
/// edge {u, v} of the graph.
BoundChecks check_genus_bounds(const PermGroup &group,
                               const SolvableGraph &graph,
                               const Subgroup &radical,
                               const CliqueResult &clique,
                               std::uint64_t m);

} // namespace solvgraph
