#include "solvgraph/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace solvgraph {

Permutation::Permutation(unsigned degree)
{
  if (degree > kMaxDegree)
    throw std::invalid_argument("permutation degree exceeds " + std::to_string(kMaxDegree));

  _images.resize(degree);
  std::iota(_images.begin(), _images.end(), std::uint8_t{0});
}

Permutation::Permutation(std::vector<std::uint8_t> images)
: _images(std::move(images))
{
  if (_images.size() > kMaxDegree)
    throw std::invalid_argument("permutation degree exceeds " + std::to_string(kMaxDegree));

  std::vector<bool> seen(_images.size(), false);
  for (auto image : _images) {
    if (image >= _images.size() || seen[image])
      throw std::invalid_argument("image array is not a bijection");
    seen[image] = true;
  }
}

Permutation Permutation::from_cycles(unsigned degree,
                                     const std::vector<std::vector<unsigned>> &cycles)
{
  Permutation result(degree);
  std::vector<bool> touched(degree, false);

  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      unsigned from = cycle[i];
      unsigned to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > degree)
        throw std::invalid_argument("cycle point " + std::to_string(from) + " out of range");
      if (touched[from - 1])
        throw std::invalid_argument("point " + std::to_string(from) + " repeated in cycles");
      touched[from - 1] = true;
      result._images[from - 1] = static_cast<std::uint8_t>(to - 1);
    }
  }
  return result;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation result(degree());
  for (std::size_t i = 0; i < _images.size(); ++i)
    result._images[_images[i]] = static_cast<std::uint8_t>(i);
  return result;
}

Permutation Permutation::shifted(unsigned offset, unsigned new_degree) const
{
  if (offset + degree() > new_degree)
    throw std::invalid_argument("shifted permutation does not fit new degree");

  Permutation result(new_degree);
  for (unsigned i = 0; i < degree(); ++i)
    result._images[i + offset] = static_cast<std::uint8_t>(_images[i] + offset);
  return result;
}

std::string Permutation::to_cycle_string() const
{
  std::string out;
  std::vector<bool> done(_images.size(), false);

  for (unsigned start = 0; start < _images.size(); ++start) {
    if (done[start] || _images[start] == start)
      continue;

    out += '(';
    unsigned point = start;
    do {
      if (point != start)
        out += ' ';
      out += std::to_string(point + 1);
      done[point] = true;
      point = _images[point];
    } while (point != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation &lhs, const Permutation &rhs)
{
  if (lhs.degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");

  Permutation result;
  result._images.resize(lhs._images.size());
  for (std::size_t i = 0; i < lhs._images.size(); ++i)
    result._images[i] = rhs._images[lhs._images[i]];
  return result;
}

std::size_t Permutation::hash() const
{
  // FNV-1a over the image bytes.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto image : _images) {
    h ^= image;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

} // namespace solvgraph
