#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "solvgraph/permutation.hpp"

namespace solvgraph {

/// Index of an element in its group's element table. Id 0 is the identity.
using ElementId = std::uint32_t;

using ElementMask = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultOrderCap = 5040;

/// The multiplication table is quadratic in the order; this bounds it at
/// roughly 200 MB.
inline constexpr std::size_t kMaxOrderCap = 10080;

/// Breadth-first closure of `generators` starting from the identity. The
/// element order is fixed by the generator order, so equal inputs give equal
/// tables. Throws CapExceeded once more than `cap` elements are found.
std::vector<Permutation> enumerate_elements(unsigned degree,
                                            std::span<const Permutation> generators,
                                            std::size_t cap = kDefaultOrderCap);

/// A fully enumerated permutation group with a precomputed multiplication
/// table. Immutable after construction.
class PermGroup
{
public:
  static PermGroup generate(std::string name,
                            unsigned degree,
                            std::vector<Permutation> generators,
                            std::size_t cap = kDefaultOrderCap);

  const std::string &name() const { return _name; }
  unsigned degree() const { return _degree; }
  std::size_t order() const { return _elements.size(); }

  const std::vector<Permutation> &generators() const { return _generators; }
  const std::vector<ElementId> &generator_ids() const { return _generator_ids; }

  const std::vector<Permutation> &elements() const { return _elements; }
  const Permutation &element(ElementId id) const { return _elements[id]; }

  std::optional<ElementId> find(const Permutation &perm) const;

  static constexpr ElementId identity() { return 0; }

  ElementId mul(ElementId lhs, ElementId rhs) const
  { return _table[static_cast<std::size_t>(lhs) * _elements.size() + rhs]; }

  ElementId inv(ElementId x) const { return _inverse[x]; }

  ElementId pow(ElementId x, std::size_t exponent) const;

  /// g^-1 x g
  ElementId conjugate(ElementId x, ElementId g) const
  { return mul(mul(inv(g), x), g); }

  /// a^-1 b^-1 a b
  ElementId commutator(ElementId a, ElementId b) const
  { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  std::size_t element_order(ElementId x) const;

private:
  PermGroup() = default;

  std::string _name;
  unsigned _degree = 0;
  std::vector<Permutation> _generators;
  std::vector<ElementId> _generator_ids;
  std::vector<Permutation> _elements;
  std::unordered_map<Permutation, ElementId> _index;
  std::vector<std::uint16_t> _table;
  std::vector<ElementId> _inverse;
};

/// A subset of a parent group's elements. Construction does not check
/// closure; use subgroup_closure() or is_subgroup() for that. The parent
/// must outlive the subgroup.
class Subgroup
{
public:
  Subgroup(const PermGroup &parent, std::vector<ElementId> members);
  Subgroup(const PermGroup &parent, const ElementMask &mask);

  const PermGroup &parent() const { return *_parent; }
  const std::vector<ElementId> &members() const { return _members; }
  const ElementMask &mask() const { return _mask; }

  std::size_t order() const { return _members.size(); }
  bool contains(ElementId x) const { return _mask.test(x); }
  bool is_trivial() const { return _members.size() == 1; }

  friend bool operator==(const Subgroup &lhs, const Subgroup &rhs)
  { return lhs._parent == rhs._parent && lhs._members == rhs._members; }

private:
  const PermGroup *_parent;
  std::vector<ElementId> _members;
  ElementMask _mask;
};

/// Smallest subgroup containing `seeds`.
Subgroup subgroup_closure(const PermGroup &group, std::span<const ElementId> seeds);

/// Closure into caller-owned storage. `mask` must be sized to the group
/// order; it is cleared first. Returns the subgroup order.
std::size_t closure_into(const PermGroup &group,
                         std::span<const ElementId> seeds,
                         ElementMask &mask,
                         std::vector<ElementId> &members);

Subgroup trivial_subgroup(const PermGroup &group);
Subgroup whole_group(const PermGroup &group);
Subgroup trivial_subgroup(PermGroup &&) = delete;
Subgroup whole_group(PermGroup &&) = delete;

/// True iff `ids` is closed under the parent's product (and therefore, being
/// finite and nonempty, a subgroup).
bool is_subgroup(const PermGroup &group, std::span<const ElementId> ids);

/// A small generating set of `h`, chosen greedily in member order.
std::vector<ElementId> generating_set(const Subgroup &h);

/// Smallest subgroup containing `seeds` and closed under conjugation by
/// every element of `conjugators`.
Subgroup normal_closure(const PermGroup &group,
                        std::span<const ElementId> seeds,
                        std::span<const ElementId> conjugators);

/// Subgroups up to this order use all member commutators; larger ones use
/// the normal closure of generator commutators.
inline constexpr std::size_t kAllPairsCommutatorLimit = 256;

Subgroup derived_subgroup(const Subgroup &h);

/// h, h', h'', ... ending at the first repeated term.
std::vector<Subgroup> derived_series(const Subgroup &h);

bool is_solvable(const Subgroup &h);

bool is_normal(const PermGroup &group, const Subgroup &h);

Subgroup centralizer(const PermGroup &group, ElementId u);

/// Least k >= 1 with x^k in n. Throws std::invalid_argument unless n is
/// normal in the group.
std::size_t coset_order(const PermGroup &group, ElementId x, const Subgroup &n);

/// Acts on the disjoint union of both point sets.
PermGroup direct_product(const PermGroup &a,
                         const PermGroup &b,
                         std::size_t cap = kDefaultOrderCap);

} // namespace solvgraph
