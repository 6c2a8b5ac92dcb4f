#include "solvgraph/invariants.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "solvgraph/errors.hpp"

namespace solvgraph {

DegreeCheck degree_check(const SolvableGraph &graph, const Deadline &deadline)
{
  const PermGroup &group = *graph.group;
  const std::size_t radical = graph.radical_ids.size();
  SolvCache cache(0);

  DegreeCheck out;
  out.min_degree = std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    deadline.check("degree check");
    const std::size_t sol = solvabilizer(group, graph.vertices[v], cache).size();
    const std::size_t deg = graph.graph.degree(v);
    if (sol < radical + 1 || deg != sol - radical - 1)
      throw InternalError("degree formula fails at vertex " + std::to_string(v) + " (element "
                          + std::to_string(graph.vertices[v]) + "): deg=" + std::to_string(deg)
                          + ", |Sol_G(u)|=" + std::to_string(sol)
                          + ", |Sol(G)|=" + std::to_string(radical));
    out.min_degree = std::min(out.min_degree, deg);
    out.max_degree = std::max(out.max_degree, deg);
    ++out.vertices_checked;
  }
  if (out.vertices_checked == 0)
    out.min_degree = 0;
  return out;
}

std::optional<std::size_t> girth(const Graph &graph)
{
  const std::size_t n = graph.vertex_count();
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::optional<std::size_t> best;

  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[root] = 0;
    parent[root] = unseen;
    std::deque<std::size_t> queue{root};

    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      // A cycle through the root can be no shorter than 2 * dist[x] + 1.
      if (best && 2 * dist[x] + 1 >= *best)
        break;
      const auto &row = graph.neighbors(x);
      for (auto y = row.find_first(); y != VertexSet::npos; y = row.find_next(y)) {
        if (dist[y] == unseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          const std::size_t length = dist[x] + dist[y] + 1;
          if (!best || length < *best)
            best = length;
        }
      }
    }
    if (best == 3u)
      break;
  }
  return best;
}

namespace {

std::size_t count_components(const Graph &graph)
{
  const std::size_t n = graph.vertex_count();
  VertexSet seen(n);
  std::size_t components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen.test(root))
      continue;
    ++components;
    VertexSet frontier(n);
    frontier.set(root);
    seen.set(root);
    while (frontier.any()) {
      VertexSet next(n);
      for (auto x = frontier.find_first(); x != VertexSet::npos; x = frontier.find_next(x))
        next |= graph.neighbors(x);
      next -= seen;
      seen |= next;
      frontier = std::move(next);
    }
  }
  return components;
}

/// Eccentricity of `root`, or nullopt if some vertex is unreachable.
std::optional<std::size_t> eccentricity(const Graph &graph, std::size_t root)
{
  const std::size_t n = graph.vertex_count();
  VertexSet seen(n), frontier(n);
  seen.set(root);
  frontier.set(root);
  std::size_t depth = 0;
  for (;;) {
    VertexSet next(n);
    for (auto x = frontier.find_first(); x != VertexSet::npos; x = frontier.find_next(x))
      next |= graph.neighbors(x);
    next -= seen;
    if (next.none())
      break;
    seen |= next;
    frontier = std::move(next);
    ++depth;
  }
  if (seen.count() != n)
    return std::nullopt;
  return depth;
}

} // namespace

DiameterResult connectivity_and_diameter(const Graph &graph, DiameterMode mode)
{
  DiameterResult out;
  out.mode = mode;
  out.components = count_components(graph);
  const std::size_t n = graph.vertex_count();

  if (mode == DiameterMode::two_step) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (graph.adjacent(x, y))
          continue;
        if (graph.neighbors(x).intersects(graph.neighbors(y)))
          continue;
        if (!out.witness)
          out.witness = std::make_pair(x, y);
        ++out.witness_count;
      }
    }
    out.at_most_two = out.witness_count == 0 && n > 0;
    return out;
  }

  if (out.components != 1)
    return out;
  std::size_t diameter = 0;
  for (std::size_t root = 0; root < n; ++root)
    diameter = std::max(diameter, *eccentricity(graph, root));
  out.diameter = diameter;
  out.at_most_two = diameter <= 2;
  return out;
}

namespace {

class CliqueSearch
{
public:
  CliqueSearch(const Graph &graph, std::vector<std::size_t> order, std::uint64_t budget)
  : _order(std::move(order)),
    _budget(budget)
  {
    const std::size_t k = _order.size();
    _adjacency.assign(k, VertexSet(k));
    std::vector<std::size_t> position(graph.vertex_count(), k);
    for (std::size_t i = 0; i < k; ++i)
      position[_order[i]] = i;
    for (std::size_t i = 0; i < k; ++i) {
      const auto &row = graph.neighbors(_order[i]);
      for (auto y = row.find_first(); y != VertexSet::npos; y = row.find_next(y)) {
        if (position[y] < k)
          _adjacency[i].set(position[y]);
      }
    }
  }

  void seed(std::vector<std::size_t> clique) { offer(std::move(clique)); }

  void run()
  {
    VertexSet candidates(_order.size());
    candidates.set();
    std::vector<std::size_t> current;
    expand(current, candidates);
  }

  bool exhausted() const { return _exhausted; }
  std::uint64_t nodes() const { return _nodes; }
  const std::vector<std::size_t> &best() const { return _best; }

private:
  /// Candidate clique in original vertex ids; keeps the larger, breaking
  /// ties toward the lexicographically smaller sorted vertex list.
  void offer(std::vector<std::size_t> clique)
  {
    std::sort(clique.begin(), clique.end());
    if (clique.size() > _best.size() || (clique.size() == _best.size() && clique < _best))
      _best = std::move(clique);
  }

  void expand(std::vector<std::size_t> &current, VertexSet candidates)
  {
    if (_exhausted)
      return;
    if (++_nodes > _budget) {
      _exhausted = true;
      return;
    }

    // Greedy colouring in index order gives an upper bound per vertex.
    std::vector<std::pair<std::size_t, std::size_t>> coloured;
    coloured.reserve(candidates.count());
    VertexSet uncoloured = candidates;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      VertexSet available = uncoloured;
      for (auto v = available.find_first(); v != VertexSet::npos; v = available.find_next(v)) {
        uncoloured.reset(v);
        available -= _adjacency[v];
        coloured.emplace_back(v, colour);
      }
    }

    for (auto it = coloured.rbegin(); it != coloured.rend(); ++it) {
      const auto [v, bound] = *it;
      if (current.size() + bound <= _best.size())
        return;

      current.push_back(v);
      VertexSet next = candidates & _adjacency[v];
      if (next.none()) {
        std::vector<std::size_t> clique;
        for (auto w : current)
          clique.push_back(_order[w]);
        offer(std::move(clique));
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
      if (_exhausted)
        return;
    }
  }

  std::vector<std::size_t> _order;
  std::vector<VertexSet> _adjacency;
  std::uint64_t _budget;
  std::uint64_t _nodes = 0;
  bool _exhausted = false;
  std::vector<std::size_t> _best;
};

std::vector<std::size_t> greedy_clique(const Graph &graph, const VertexSet &allowed)
{
  std::vector<std::size_t> clique;
  VertexSet candidates = allowed;
  while (candidates.any()) {
    std::size_t pick = VertexSet::npos;
    std::size_t pick_degree = 0;
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
      const std::size_t d = (graph.neighbors(v) & candidates).count();
      if (pick == VertexSet::npos || d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    clique.push_back(pick);
    candidates &= graph.neighbors(pick);
  }
  return clique;
}

} // namespace

CliqueResult max_clique(const Graph &graph, std::uint64_t budget, const VertexSet *allowed)
{
  const VertexSet vertices = allowed ? *allowed : graph.all_vertices();

  std::vector<std::size_t> order;
  std::vector<std::size_t> degree(graph.vertex_count(), 0);
  for (auto v = vertices.find_first(); v != VertexSet::npos; v = vertices.find_next(v)) {
    order.push_back(v);
    degree[v] = (graph.neighbors(v) & vertices).count();
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  CliqueSearch search(graph, order, budget);
  search.seed(greedy_clique(graph, vertices));
  search.run();

  CliqueResult out;
  out.witness = search.best();
  out.size = out.witness.size();
  out.exact = !search.exhausted();
  out.nodes = search.nodes();

  if (!graph.is_clique(out.witness))
    throw InternalError("clique witness failed edge verification");
  for (auto v : out.witness) {
    if (!vertices.test(v))
      throw InternalError("clique witness left the allowed vertex set");
  }
  return out;
}

ShapePredicates shape_predicates(const Graph &graph)
{
  ShapePredicates out;
  const std::size_t n = graph.vertex_count();
  if (n == 0)
    return out;

  std::vector<std::size_t> degrees(n);
  for (std::size_t v = 0; v < n; ++v)
    degrees[v] = graph.degree(v);
  const auto [min_it, max_it] = std::minmax_element(degrees.begin(), degrees.end());

  out.is_regular = *min_it == *max_it;
  out.has_isolated_vertex = *min_it == 0;

  const std::size_t centres = static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), n - 1));
  const std::size_t leaves = static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), 1));
  if (n == 2)
    out.is_star = graph.edge_count() == 1;
  else if (n > 2)
    out.is_star = centres == 1 && leaves == n - 1;

  out.is_tree = graph.edge_count() + 1 == n && count_components(graph) == 1;

  // Classes of the relation "equal or non-adjacent".
  const VertexSet all = graph.all_vertices();
  VertexSet assigned(n);
  std::size_t classes = 0;
  bool equivalence = true;
  for (std::size_t v = 0; v < n && equivalence; ++v) {
    if (assigned.test(v))
      continue;
    const VertexSet cls = all - graph.neighbors(v);
    for (auto w = cls.find_first(); w != VertexSet::npos; w = cls.find_next(w)) {
      if ((all - graph.neighbors(w)) != cls) {
        equivalence = false;
        break;
      }
    }
    assigned |= cls;
    ++classes;
  }
  out.is_complete_multipartite = equivalence && classes >= 2;
  out.is_complete_bipartite = equivalence && classes == 2;
  return out;
}

InvariantReport compute_invariants(const SolvableGraph &graph,
                                   std::uint64_t clique_budget,
                                   const Deadline &deadline)
{
  InvariantReport out;
  out.degrees = degree_check(graph, deadline);
  deadline.check("girth");
  out.girth = girth(graph.graph);
  deadline.check("diameter");
  out.two_step = connectivity_and_diameter(graph.graph, DiameterMode::two_step);
  out.exact = connectivity_and_diameter(graph.graph, DiameterMode::exact);
  deadline.check("clique search");
  out.clique = max_clique(graph.graph, clique_budget);
  out.shape = shape_predicates(graph.graph);
  return out;
}

} // namespace solvgraph
