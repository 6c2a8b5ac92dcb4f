#include "solvgraph/graph.hpp"

#include <stdexcept>

namespace solvgraph {

Graph::Graph(std::size_t vertex_count)
: _rows(vertex_count, VertexSet(vertex_count))
{}

Graph Graph::complete(std::size_t n)
{
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  }
  return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges)
{
  Graph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v)
{
  if (u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("edge endpoint out of range");
  if (u == v || _rows[u].test(v))
    return;
  _rows[u].set(v);
  _rows[v].set(u);
  ++_edges;
}

bool Graph::is_clique(const std::vector<std::size_t> &members) const
{
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j] || !adjacent(members[i], members[j]))
        return false;
    }
  }
  return true;
}

} // namespace solvgraph
