#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace solvgraph {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph
{
public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  static Graph complete(std::size_t n);
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges);

  std::size_t vertex_count() const { return _rows.size(); }
  std::size_t edge_count() const { return _edges; }

  /// Ignores self-loops and repeated edges.
  void add_edge(std::size_t u, std::size_t v);

  bool adjacent(std::size_t u, std::size_t v) const { return _rows[u].test(v); }
  const VertexSet &neighbors(std::size_t u) const { return _rows[u]; }
  std::size_t degree(std::size_t u) const { return _rows[u].count(); }

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet all_vertices() const { return ~VertexSet(vertex_count()); }

  /// True iff every pair of distinct members is adjacent.
  bool is_clique(const std::vector<std::size_t> &members) const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::vector<VertexSet> _rows;
  std::size_t _edges = 0;
};

} // namespace solvgraph
