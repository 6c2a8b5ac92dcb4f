#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace solvgraph {

/// Largest supported permutation degree.
inline constexpr unsigned kMaxDegree = 128;

/// A bijection of {0, ..., degree-1} stored as its image array.
///
/// Products compose left to right: `(a * b)(x) == b(a(x))`, matching the
/// usual convention of computational group theory systems, so that the
/// commutator `[a, b] = a^-1 b^-1 a b` has its textbook meaning.
class Permutation
{
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(unsigned degree);

  /// Takes ownership of an image array; throws std::invalid_argument unless
  /// it is a bijection.
  explicit Permutation(std::vector<std::uint8_t> images);

  /// Builds a permutation of the given degree from 1-based cycles.
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<unsigned>> &cycles);

  unsigned degree() const { return static_cast<unsigned>(_images.size()); }
  unsigned operator[](unsigned point) const { return _images[point]; }
  const std::vector<std::uint8_t> &images() const { return _images; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Embeds into a larger degree, moving point i to i + offset.
  Permutation shifted(unsigned offset, unsigned new_degree) const;

  /// Disjoint cycle notation with 1-based points, "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation &lhs, const Permutation &rhs);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

  std::size_t hash() const;

private:
  std::vector<std::uint8_t> _images;
};

} // namespace solvgraph

template<>
struct std::hash<solvgraph::Permutation>
{
  std::size_t operator()(const solvgraph::Permutation &perm) const noexcept
  { return perm.hash(); }
};
