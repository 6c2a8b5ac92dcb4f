#include "solvgraph/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "solvgraph/errors.hpp"

namespace solvgraph {

std::vector<Permutation> enumerate_elements(unsigned degree,
                                            std::span<const Permutation> generators,
                                            std::size_t cap)
{
  for (const auto &gen : generators) {
    if (gen.degree() != degree)
      throw std::invalid_argument("generator degree does not match group degree");
  }

  std::vector<Permutation> elements{Permutation(degree)};
  std::unordered_set<Permutation> seen{elements.front()};

  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto &gen : generators) {
      Permutation product = elements[next] * gen;
      if (seen.contains(product))
        continue;
      if (elements.size() >= cap)
        throw CapExceeded("group order exceeds cap of " + std::to_string(cap));
      seen.insert(product);
      elements.push_back(std::move(product));
    }
  }
  return elements;
}

PermGroup PermGroup::generate(std::string name,
                              unsigned degree,
                              std::vector<Permutation> generators,
                              std::size_t cap)
{
  if (cap > kMaxOrderCap)
    throw std::invalid_argument("order cap above supported maximum of "
                                + std::to_string(kMaxOrderCap));

  PermGroup group;
  group._name = std::move(name);
  group._degree = degree;
  group._elements = enumerate_elements(degree, generators, cap);
  group._generators = std::move(generators);

  const std::size_t n = group._elements.size();
  group._index.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    group._index.emplace(group._elements[i], static_cast<ElementId>(i));

  for (const auto &gen : group._generators)
    group._generator_ids.push_back(group._index.at(gen));

  group._table.resize(n * n);
  group._inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ElementId product = group._index.at(group._elements[a] * group._elements[b]);
      group._table[a * n + b] = static_cast<std::uint16_t>(product);
      if (product == identity())
        group._inverse[a] = static_cast<ElementId>(b);
    }
  }
  return group;
}

std::optional<ElementId> PermGroup::find(const Permutation &perm) const
{
  auto it = _index.find(perm);
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

ElementId PermGroup::pow(ElementId x, std::size_t exponent) const
{
  ElementId result = identity();
  ElementId base = x;
  while (exponent > 0) {
    if (exponent & 1)
      result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::size_t PermGroup::element_order(ElementId x) const
{
  std::size_t k = 1;
  for (ElementId y = x; y != identity(); y = mul(y, x))
    ++k;
  return k;
}

Subgroup::Subgroup(const PermGroup &parent, std::vector<ElementId> members)
: _parent(&parent),
  _members(std::move(members)),
  _mask(parent.order())
{
  std::sort(_members.begin(), _members.end());
  _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
  for (auto id : _members)
    _mask.set(id);
}

Subgroup::Subgroup(const PermGroup &parent, const ElementMask &mask)
: _parent(&parent),
  _mask(mask)
{
  _members.reserve(mask.count());
  for (auto i = mask.find_first(); i != ElementMask::npos; i = mask.find_next(i))
    _members.push_back(static_cast<ElementId>(i));
}

std::size_t closure_into(const PermGroup &group,
                         std::span<const ElementId> seeds,
                         ElementMask &mask,
                         std::vector<ElementId> &members)
{
  mask.reset();
  members.clear();
  members.push_back(PermGroup::identity());
  mask.set(PermGroup::identity());

  for (std::size_t next = 0; next < members.size(); ++next) {
    const ElementId x = members[next];
    for (auto seed : seeds) {
      const ElementId y = group.mul(x, seed);
      if (!mask.test(y)) {
        mask.set(y);
        members.push_back(y);
      }
    }
  }
  return members.size();
}

Subgroup subgroup_closure(const PermGroup &group, std::span<const ElementId> seeds)
{
  ElementMask mask(group.order());
  std::vector<ElementId> members;
  closure_into(group, seeds, mask, members);
  return Subgroup(group, std::move(members));
}

Subgroup trivial_subgroup(const PermGroup &group)
{
  return Subgroup(group, std::vector<ElementId>{PermGroup::identity()});
}

Subgroup whole_group(const PermGroup &group)
{
  std::vector<ElementId> all(group.order());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<ElementId>(i);
  return Subgroup(group, std::move(all));
}

bool is_subgroup(const PermGroup &group, std::span<const ElementId> ids)
{
  if (ids.empty())
    return false;

  ElementMask mask(group.order());
  for (auto id : ids)
    mask.set(id);

  for (auto a : ids) {
    for (auto b : ids) {
      if (!mask.test(group.mul(a, b)))
        return false;
    }
  }
  return true;
}

std::vector<ElementId> generating_set(const Subgroup &h)
{
  const PermGroup &group = h.parent();
  std::vector<ElementId> gens;
  ElementMask reached(group.order());
  reached.set(PermGroup::identity());
  std::vector<ElementId> scratch;

  for (auto x : h.members()) {
    if (reached.test(x))
      continue;
    gens.push_back(x);
    closure_into(group, gens, reached, scratch);
    if (scratch.size() == h.order())
      break;
  }
  return gens;
}

Subgroup normal_closure(const PermGroup &group,
                        std::span<const ElementId> seeds,
                        std::span<const ElementId> conjugators)
{
  std::vector<ElementId> gens(seeds.begin(), seeds.end());
  ElementMask mask(group.order());
  std::vector<ElementId> members;
  closure_into(group, gens, mask, members);

  for (;;) {
    bool grew = false;
    for (std::size_t i = 0; i < members.size() && !grew; ++i) {
      for (auto g : conjugators) {
        const ElementId y = group.conjugate(members[i], g);
        if (!mask.test(y)) {
          gens.push_back(y);
          grew = true;
          break;
        }
      }
    }
    if (!grew)
      break;
    closure_into(group, gens, mask, members);
  }
  return Subgroup(group, std::move(members));
}

Subgroup derived_subgroup(const Subgroup &h)
{
  const PermGroup &group = h.parent();
  const auto &members = h.members();

  if (h.order() <= kAllPairsCommutatorLimit) {
    ElementMask commutators(group.order());
    std::vector<ElementId> seeds;
    for (auto a : members) {
      for (auto b : members) {
        const ElementId c = group.commutator(a, b);
        if (!commutators.test(c)) {
          commutators.set(c);
          seeds.push_back(c);
        }
      }
    }
    // The full commutator set is conjugation invariant, so its closure is
    // already normal in h.
    return subgroup_closure(group, seeds);
  }

  const auto gens = generating_set(h);
  std::vector<ElementId> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seeds.push_back(group.commutator(gens[i], gens[j]));
  }
  return normal_closure(group, seeds, gens);
}

std::vector<Subgroup> derived_series(const Subgroup &h)
{
  std::vector<Subgroup> series{h};
  while (!series.back().is_trivial()) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const Subgroup &h)
{
  return derived_series(h).back().is_trivial();
}

bool is_normal(const PermGroup &group, const Subgroup &h)
{
  for (std::size_t g = 0; g < group.order(); ++g) {
    for (auto x : h.members()) {
      if (!h.contains(group.conjugate(x, static_cast<ElementId>(g))))
        return false;
    }
  }
  return true;
}

Subgroup centralizer(const PermGroup &group, ElementId u)
{
  std::vector<ElementId> members;
  for (std::size_t v = 0; v < group.order(); ++v) {
    const auto id = static_cast<ElementId>(v);
    if (group.mul(u, id) == group.mul(id, u))
      members.push_back(id);
  }
  return Subgroup(group, std::move(members));
}

std::size_t coset_order(const PermGroup &group, ElementId x, const Subgroup &n)
{
  if (!is_normal(group, n))
    throw std::invalid_argument("coset_order requires a normal subgroup");

  std::size_t k = 1;
  for (ElementId y = x; !n.contains(y); y = group.mul(y, x))
    ++k;
  return k;
}

PermGroup direct_product(const PermGroup &a, const PermGroup &b, std::size_t cap)
{
  const unsigned degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto &g : a.generators())
    gens.push_back(g.shifted(0, degree));
  for (const auto &g : b.generators())
    gens.push_back(g.shifted(a.degree(), degree));
  return PermGroup::generate(a.name() + "x" + b.name(), degree, std::move(gens), cap);
}

} // namespace solvgraph
