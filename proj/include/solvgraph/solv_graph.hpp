#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "solvgraph/deadline.hpp"
#include "solvgraph/graph.hpp"
#include "solvgraph/perm_group.hpp"

namespace solvgraph {

/// Memo key for a subgroup: its order plus a 64-bit hash of its sorted
/// member ids.
struct SubgroupKey
{
  std::size_t order = 0;
  std::uint64_t hash = 0;

  friend bool operator==(const SubgroupKey &, const SubgroupKey &) = default;
};

SubgroupKey subgroup_key(std::span<const ElementId> sorted_members);

struct SubgroupKeyHash
{
  std::size_t operator()(const SubgroupKey &key) const noexcept
  { return static_cast<std::size_t>(key.hash ^ (key.order * 0x9e3779b97f4a7c15ULL)); }
};

/// Solvability verdicts keyed by subgroup. The first `retain_limit` inserted
/// entries also keep their member list so verdicts can be recomputed.
class SolvCache
{
public:
  struct Retained
  {
    std::vector<ElementId> members;
    bool solvable = false;
  };

  explicit SolvCache(std::size_t retain_limit = 256) : _retain_limit(retain_limit) {}

  std::optional<bool> lookup(const SubgroupKey &key);
  void insert(const SubgroupKey &key, bool solvable, std::span<const ElementId> members);

  /// Adds entries and counters from another cache.
  void merge(const SolvCache &other);

  std::size_t size() const { return _verdicts.size(); }
  std::size_t hits() const { return _hits; }
  std::size_t misses() const { return _misses; }
  const std::vector<Retained> &retained() const { return _retained; }

private:
  std::unordered_map<SubgroupKey, bool, SubgroupKeyHash> _verdicts;
  std::vector<Retained> _retained;
  std::size_t _retain_limit;
  std::size_t _hits = 0;
  std::size_t _misses = 0;
};

/// Decides whether <u, v> is solvable: closes the pair inside the group's
/// multiplication table, then consults the cache before running the derived
/// series. Holds scratch buffers, so keep one per thread.
class PairSolver
{
public:
  PairSolver(const PermGroup &group, SolvCache &cache);

  bool solvable(ElementId u, ElementId v);

  const SolvCache &cache() const { return *_cache; }

private:
  const PermGroup *_group;
  SolvCache *_cache;
  ElementMask _mask;
  std::vector<ElementId> _members;
  std::vector<ElementId> _sorted;
};

bool pair_solvable(const PermGroup &group, ElementId u, ElementId v, SolvCache &cache);

/// { v : <u, v> solvable }, computed by direct pair tests.
std::vector<ElementId> solvabilizer(const PermGroup &group, ElementId u, SolvCache &cache);

struct PairTableOptions
{
  unsigned workers = 0;   ///< 0 selects std::thread::hardware_concurrency()
  Deadline deadline;
};

struct CacheStats
{
  std::size_t entries = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
  unsigned workers = 1;
};

/// Verdicts for every unordered pair of group elements. One pass serves the
/// solvabilizers, the radical and the graph. Rows are bit-identical for any
/// worker count.
class PairTable
{
public:
  static PairTable compute(const PermGroup &group, const PairTableOptions &options = {});
  /// The table refers to the group, which must outlive it.
  static PairTable compute(PermGroup &&, const PairTableOptions & = {}) = delete;

  const PermGroup &group() const { return *_group; }

  bool solvable(ElementId u, ElementId v) const { return _rows[u].test(v); }

  /// Sol_G(u) as a mask over element ids.
  const ElementMask &solvabilizer_mask(ElementId u) const { return _rows[u]; }
  std::size_t solvabilizer_size(ElementId u) const { return _rows[u].count(); }

  const CacheStats &stats() const { return _stats; }

  /// Member lists retained by the worker caches, with their verdicts.
  const std::vector<SolvCache::Retained> &retained() const { return _retained; }

private:
  const PermGroup *_group = nullptr;
  std::vector<ElementMask> _rows;
  CacheStats _stats;
  std::vector<SolvCache::Retained> _retained;
};

/// { u : Sol_G(u) = G }. Validated as a subgroup that is normal and
/// solvable; throws InternalError otherwise.
Subgroup solvable_radical(const PairTable &table);

/// The solvable graph: vertices are G \ Sol(G) in increasing element id,
/// u ~ v iff <u, v> is solvable.
struct SolvableGraph
{
  const PermGroup *group = nullptr;
  std::vector<ElementId> radical_ids;
  std::vector<ElementId> vertices;
  Graph graph;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return graph.edge_count(); }

  /// Vertex index of an element, or nullopt for radical elements.
  std::optional<std::size_t> vertex_of(ElementId x) const;
};

/// Throws SolvableGroupError when the group is solvable.
SolvableGraph build_solvable_graph(const PairTable &table, const Subgroup &radical);

/// Some x with x and x^2 outside the radical. Throws SolvableGroupError for
/// solvable groups and InternalError if none exists otherwise.
ElementId find_square_witness(const PermGroup &group, const Subgroup &radical);

/// Graphviz export: one node per vertex labelled with its element id and
/// cycle notation.
void write_dot(std::ostream &out, const SolvableGraph &graph);

} // namespace solvgraph
