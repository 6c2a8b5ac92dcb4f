#include "solvgraph/topology.hpp"

#include <algorithm>
#include <set>

#include "solvgraph/errors.hpp"

namespace solvgraph {

namespace {

std::uint64_t ceil_div(std::uint64_t num, std::uint64_t den)
{
  return (num + den - 1) / den;
}

} // namespace

std::uint64_t genus_complete(std::uint64_t n)
{
  // (n-3)(n-4) vanishes at n = 3, 4.
  if (n <= 4)
    return 0;
  return ceil_div((n - 3) * (n - 4), 12);
}

std::uint64_t crosscap_complete(std::uint64_t n)
{
  if (n <= 4)
    return 0;
  if (n == 7)
    return 3;
  return ceil_div((n - 3) * (n - 4), 6);
}

std::uint64_t isqrt(std::uint64_t x)
{
  if (x < 2)
    return x;
  std::uint64_t r = x;
  std::uint64_t next = (r + 1) / 2;
  while (next < r) {
    r = next;
    next = (r + x / r) / 2;
  }
  return r;
}

std::uint64_t heawood_cap(std::uint64_t m)
{
  if (m == 0)
    return 4;
  return (7 + isqrt(1 + 48 * m)) / 2;
}

std::uint64_t euler_genus_lower_bound(std::uint64_t v, std::uint64_t e)
{
  // e/6 - v/2 + 1 = (e - 3v + 6) / 6
  if (v < 3 || e + 6 <= 3 * v)
    return 0;
  return ceil_div(e + 6 - 3 * v, 6);
}

std::uint64_t euler_crosscap_lower_bound(std::uint64_t v, std::uint64_t e)
{
  // e/3 - v + 2 = (e - 3v + 6) / 3
  if (v < 3 || e + 6 <= 3 * v)
    return 0;
  return ceil_div(e + 6 - 3 * v, 3);
}

CliquePacking clique_packing_bound(const Graph &graph, std::uint64_t budget)
{
  CliquePacking out;
  VertexSet remaining = graph.all_vertices();
  while (remaining.count() >= 5) {
    CliqueResult clique = max_clique(graph, budget, &remaining);
    out.exact_steps = out.exact_steps && clique.exact;
    if (clique.size < 5)
      break;
    if (!graph.is_clique(clique.witness))
      throw InternalError("packing clique failed edge verification");
    for (auto v : clique.witness)
      remaining.reset(v);
    out.bound += genus_complete(clique.size);
    out.cliques.push_back(std::move(clique.witness));
  }
  return out;
}

GenusCertificate certify(const Graph &graph, const CliqueResult *clique, std::uint64_t budget)
{
  GenusCertificate out;
  const std::uint64_t v = graph.vertex_count();
  const std::uint64_t e = graph.edge_count();

  CliqueResult own;
  if (!clique) {
    own = max_clique(graph, budget);
    clique = &own;
  }

  out.clique_size = clique->size;
  out.euler_bound = euler_genus_lower_bound(v, e);
  out.clique_bound = genus_complete(clique->size);
  out.crosscap_euler_bound = euler_crosscap_lower_bound(v, e);
  out.crosscap_clique_bound = crosscap_complete(clique->size);

  const CliquePacking packing = clique_packing_bound(graph, budget);
  out.packing_bound = packing.bound;
  for (const auto &c : packing.cliques)
    out.packing_sizes.push_back(c.size());
  out.has_disjoint_2K5 = packing.cliques.size() >= 2;

  out.best_lower_bound = std::max({out.euler_bound, out.clique_bound, out.packing_bound});
  return out;
}

namespace {

/// (2 cap)^cap > order, without overflow.
bool power_exceeds(std::uint64_t base, std::uint64_t exponent, std::uint64_t order)
{
  if (base <= 1)
    return base > order;
  std::uint64_t value = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (value > order / base)
      return true;
    value *= base;
  }
  return value > order;
}

} // namespace

BoundChecks check_genus_bounds(const PermGroup &group,
                               const SolvableGraph &graph,
                               const Subgroup &radical,
                               const CliqueResult &clique,
                               std::uint64_t m)
{
  BoundChecks out;
  out.m = m;
  out.cap = heawood_cap(m);
  out.clique_size = clique.size;
  out.clique_within_cap = clique.size <= out.cap;

  for (std::size_t x = 0; x < group.order(); ++x) {
    out.max_coset_order = std::max(out.max_coset_order,
                                   coset_order(group, static_cast<ElementId>(x), radical));
  }
  out.radical_within_cap =
      out.max_coset_order >= 2 && radical.order() * (out.max_coset_order - 1) <= out.cap;

  std::set<std::vector<ElementId>> seen;
  bool ok = true;
  auto check = [&](ElementId a, ElementId b) {
    const ElementId seeds[] = {a, b};
    Subgroup h = subgroup_closure(group, seeds);
    if (!seen.insert(h.members()).second)
      return;
    std::size_t in_radical = 0;
    for (auto id : h.members())
      in_radical += radical.contains(id) ? 1 : 0;
    out.largest_solvable_subgroup = std::max(out.largest_solvable_subgroup, h.order());
    if (h.order() > out.cap + in_radical)
      ok = false;
  };

  for (std::size_t x = 0; x < group.order(); ++x)
    check(static_cast<ElementId>(x), static_cast<ElementId>(x));
  for (std::size_t a = 0; a < graph.vertex_count(); ++a) {
    const auto &row = graph.graph.neighbors(a);
    for (auto b = row.find_next(a); b != VertexSet::npos; b = row.find_next(b))
      check(graph.vertices[a], graph.vertices[b]);
  }
  out.subgroups_checked = seen.size();
  out.subgroups_within_cap = ok;

  out.order_below_function = power_exceeds(2 * out.cap, out.cap, group.order());
  return out;
}

} // namespace solvgraph
