#include "solvgraph/solv_graph.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <thread>

#include "solvgraph/errors.hpp"

namespace solvgraph {

SubgroupKey subgroup_key(std::span<const ElementId> sorted_members)
{
  // splitmix64 finalizer folded over the ids.
  std::uint64_t h = 0x6a09e667f3bcc909ULL ^ sorted_members.size();
  for (auto id : sorted_members) {
    std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + id;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return {sorted_members.size(), h};
}

std::optional<bool> SolvCache::lookup(const SubgroupKey &key)
{
  auto it = _verdicts.find(key);
  if (it == _verdicts.end()) {
    ++_misses;
    return std::nullopt;
  }
  ++_hits;
  return it->second;
}

void SolvCache::insert(const SubgroupKey &key, bool solvable, std::span<const ElementId> members)
{
  if (!_verdicts.emplace(key, solvable).second)
    return;
  if (_retained.size() < _retain_limit)
    _retained.push_back({std::vector<ElementId>(members.begin(), members.end()), solvable});
}

void SolvCache::merge(const SolvCache &other)
{
  for (const auto &[key, verdict] : other._verdicts)
    _verdicts.emplace(key, verdict);
  for (const auto &entry : other._retained) {
    if (_retained.size() >= _retain_limit)
      break;
    _retained.push_back(entry);
  }
  _hits += other._hits;
  _misses += other._misses;
}

PairSolver::PairSolver(const PermGroup &group, SolvCache &cache)
: _group(&group),
  _cache(&cache),
  _mask(group.order())
{}

bool PairSolver::solvable(ElementId u, ElementId v)
{
  const ElementId seeds[] = {u, v};
  closure_into(*_group, seeds, _mask, _members);

  _sorted.clear();
  for (auto i = _mask.find_first(); i != ElementMask::npos; i = _mask.find_next(i))
    _sorted.push_back(static_cast<ElementId>(i));

  const SubgroupKey key = subgroup_key(_sorted);
  if (auto cached = _cache->lookup(key))
    return *cached;

  const bool verdict = is_solvable(Subgroup(*_group, _mask));
  _cache->insert(key, verdict, _sorted);
  return verdict;
}

bool pair_solvable(const PermGroup &group, ElementId u, ElementId v, SolvCache &cache)
{
  return PairSolver(group, cache).solvable(u, v);
}

std::vector<ElementId> solvabilizer(const PermGroup &group, ElementId u, SolvCache &cache)
{
  PairSolver solver(group, cache);
  std::vector<ElementId> out;
  for (std::size_t v = 0; v < group.order(); ++v) {
    if (solver.solvable(u, static_cast<ElementId>(v)))
      out.push_back(static_cast<ElementId>(v));
  }
  return out;
}

PairTable PairTable::compute(const PermGroup &group, const PairTableOptions &options)
{
  const std::size_t n = group.order();
  unsigned workers = options.workers;
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

  PairTable table;
  table._group = &group;
  table._rows.assign(n, ElementMask(n));

  std::vector<SolvCache> caches(workers);
  std::vector<PairSolver> solvers;
  solvers.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    solvers.emplace_back(group, caches[w]);

  std::vector<std::exception_ptr> failures(workers);

  // Rows are dealt round-robin; each worker writes only the rows it owns.
  auto run = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < n; i += workers) {
        options.deadline.check("pair table");
        auto &row = table._rows[i];
        for (std::size_t j = i; j < n; ++j) {
          if (solvers[w].solvable(static_cast<ElementId>(i), static_cast<ElementId>(j)))
            row.set(j);
        }
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back(run, w);
    for (auto &t : threads)
      t.join();
  }
  for (const auto &failure : failures) {
    if (failure)
      std::rethrow_exception(failure);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (table._rows[i].test(j))
        table._rows[j].set(i);
    }
  }

  SolvCache merged(0);
  for (const auto &cache : caches) {
    merged.merge(cache);
    for (const auto &entry : cache.retained())
      table._retained.push_back(entry);
  }
  std::sort(table._retained.begin(), table._retained.end(),
            [](const auto &a, const auto &b) { return a.members < b.members; });
  table._retained.erase(std::unique(table._retained.begin(), table._retained.end(),
                                    [](const auto &a, const auto &b) { return a.members == b.members; }),
                        table._retained.end());

  table._stats = {merged.size(), merged.hits(), merged.misses(), workers};
  return table;
}

Subgroup solvable_radical(const PairTable &table)
{
  const PermGroup &group = table.group();
  const std::size_t n = group.order();

  std::vector<ElementId> members;
  ElementMask intersection(n);
  intersection.set();
  for (std::size_t u = 0; u < n; ++u) {
    const auto &row = table.solvabilizer_mask(static_cast<ElementId>(u));
    intersection &= row;
    if (row.all())
      members.push_back(static_cast<ElementId>(u));
  }

  Subgroup radical(group, std::move(members));
  if (radical.mask() != intersection)
    throw InternalError("radical differs from the intersection of all solvabilizers");
  if (!is_subgroup(group, radical.members()))
    throw InternalError("radical is not closed under multiplication");
  if (!is_normal(group, radical))
    throw InternalError("radical is not normal");
  if (!is_solvable(radical))
    throw InternalError("radical is not solvable");
  return radical;
}

std::optional<std::size_t> SolvableGraph::vertex_of(ElementId x) const
{
  auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
  if (it == vertices.end() || *it != x)
    return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

SolvableGraph build_solvable_graph(const PairTable &table, const Subgroup &radical)
{
  const PermGroup &group = table.group();
  if (radical.order() == group.order())
    throw SolvableGroupError("solvable graph undefined for solvable group " + group.name()
                             + " (vertex set is empty)");

  SolvableGraph out;
  out.group = &group;
  out.radical_ids = radical.members();
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (!radical.contains(static_cast<ElementId>(x)))
      out.vertices.push_back(static_cast<ElementId>(x));
  }

  out.graph = Graph(out.vertices.size());
  for (std::size_t a = 0; a < out.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < out.vertices.size(); ++b) {
      if (table.solvable(out.vertices[a], out.vertices[b]))
        out.graph.add_edge(a, b);
    }
  }
  return out;
}

ElementId find_square_witness(const PermGroup &group, const Subgroup &radical)
{
  if (radical.order() == group.order())
    throw SolvableGroupError("no square witness in solvable group " + group.name());

  for (std::size_t x = 0; x < group.order(); ++x) {
    const auto id = static_cast<ElementId>(x);
    if (!radical.contains(id) && !radical.contains(group.mul(id, id)))
      return id;
  }
  throw InternalError("non-solvable group " + group.name() + " has no x with x, x^2 outside the radical");
}

void write_dot(std::ostream &out, const SolvableGraph &graph)
{
  const PermGroup &group = *graph.group;
  out << "graph solvable_graph {\n";
  out << "  comment=\"group=" << group.name() << "; order=" << group.order()
      << "; radical=" << graph.radical_ids.size() << "\";\n";
  for (auto x : graph.vertices)
    out << "  e" << x << " [label=\"" << x << " " << group.element(x).to_cycle_string() << "\"];\n";
  for (std::size_t a = 0; a < graph.vertices.size(); ++a) {
    const auto &row = graph.graph.neighbors(a);
    for (auto b = row.find_next(a); b != VertexSet::npos; b = row.find_next(b))
      out << "  e" << graph.vertices[a] << " -- e" << graph.vertices[b] << ";\n";
  }
  out << "}\n";
}

} // namespace solvgraph
