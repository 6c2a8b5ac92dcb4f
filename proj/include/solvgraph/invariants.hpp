#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "solvgraph/deadline.hpp"
#include "solvgraph/graph.hpp"
#include "solvgraph/solv_graph.hpp"

namespace solvgraph {

struct DegreeCheck
{
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t vertices_checked = 0;
};

/// Checks deg(u) = |Sol_G(u)| - |Sol(G)| - 1 at every vertex, with the right
/// side recomputed by direct pair tests rather than read from the graph.
/// Throws InternalError naming the first vertex that fails.
DegreeCheck degree_check(const SolvableGraph &graph, const Deadline &deadline = {});

/// Shortest cycle length, or nullopt for a forest.
std::optional<std::size_t> girth(const Graph &graph);

enum class DiameterMode
{
  two_step,   ///< common-neighbour search over every non-adjacent pair
  exact       ///< breadth-first search from every vertex
};

struct DiameterResult
{
  DiameterMode mode = DiameterMode::exact;
  std::size_t components = 0;

  /// two_step: true when every non-adjacent pair has a common neighbour.
  bool at_most_two = false;
  /// two_step: first non-adjacent pair (by vertex index) with no common neighbour.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::size_t witness_count = 0;

  /// exact: the diameter when the graph is connected.
  std::optional<std::size_t> diameter;
};

DiameterResult connectivity_and_diameter(const Graph &graph, DiameterMode mode);

inline constexpr std::uint64_t kDefaultCliqueBudget = 10'000'000;

struct CliqueResult
{
  std::size_t size = 0;
  bool exact = false;
  std::vector<std::size_t> witness;   ///< sorted vertex indices
  std::uint64_t nodes = 0;            ///< search nodes expanded
};

/// Maximum clique by colour-bounded branch and bound. Within `budget` node
/// expansions the result is exact; otherwise the best clique found so far
/// is returned with exact = false. The witness is checked edge by edge.
/// When `allowed` is given the search is restricted to those vertices.
CliqueResult max_clique(const Graph &graph,
                        std::uint64_t budget = kDefaultCliqueBudget,
                        const VertexSet *allowed = nullptr);

struct ShapePredicates
{
  bool is_star = false;
  bool is_regular = false;
  bool is_complete_bipartite = false;
  bool is_complete_multipartite = false;
  bool has_isolated_vertex = false;
  bool is_tree = false;

  bool any() const
  {
    return is_star || is_regular || is_complete_bipartite || is_complete_multipartite
           || has_isolated_vertex || is_tree;
  }

  friend bool operator==(const ShapePredicates &, const ShapePredicates &) = default;
};

/// Complete multipartite means non-adjacency is an equivalence relation with
/// at least two classes, i.e. the complement is a disjoint union of cliques.
ShapePredicates shape_predicates(const Graph &graph);

struct InvariantReport
{
  DegreeCheck degrees;
  std::optional<std::size_t> girth;
  DiameterResult two_step;
  DiameterResult exact;
  CliqueResult clique;
  ShapePredicates shape;
};

InvariantReport compute_invariants(const SolvableGraph &graph,
                                   std::uint64_t clique_budget = kDefaultCliqueBudget,
                                   const Deadline &deadline = {});

} // namespace solvgraph
