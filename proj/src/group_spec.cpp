#include "solvgraph/group_spec.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

#include "solvgraph/errors.hpp"

namespace solvgraph {

namespace {

class SpecParser
{
public:
  explicit SpecParser(std::string_view text) : _text(text) {}

  GroupSpec parse()
  {
    if (_text.empty())
      throw SpecError("empty group spec", 0);

    GroupSpec spec;
    spec.factors.push_back(parse_atom());
    while (_pos < _text.size()) {
      expect('x');
      spec.factors.push_back(parse_atom());
    }
    return spec;
  }

private:
  bool at_end() const { return _pos >= _text.size(); }
  char peek() const { return at_end() ? '\0' : _text[_pos]; }

  bool consume(std::string_view token)
  {
    if (_text.substr(_pos, token.size()) != token)
      return false;
    _pos += token.size();
    return true;
  }

  void expect(char c)
  {
    if (peek() != c) {
      std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
      throw SpecError(std::string("expected '") + c + "', found " + found, _pos);
    }
    ++_pos;
  }

  unsigned parse_number()
  {
    const std::size_t start = _pos;
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(_text.data() + _pos, _text.data() + _text.size(), value);
    if (ec != std::errc() || ptr == _text.data() + _pos)
      throw SpecError("expected a number", start);
    _pos = static_cast<std::size_t>(ptr - _text.data());
    return value;
  }

  unsigned parse_field_size()
  {
    const std::size_t start = _pos;
    const unsigned q = parse_number();
    if (std::find(std::begin(kSupportedFieldSizes), std::end(kSupportedFieldSizes), q)
        == std::end(kSupportedFieldSizes))
      throw SpecError("unsupported field size q=" + std::to_string(q)
                      + " (supported: 2, 3, 4, 5, 7)", start);
    return q;
  }

  GroupAtom parse_atom()
  {
    const std::size_t start = _pos;
    GroupAtom atom;

    if (consume("PSL(3,2)")) {
      atom.kind = AtomKind::psl32;
    } else if (consume("SL(2,")) {
      atom.kind = AtomKind::sl2;
      atom.q = parse_field_size();
      expect(')');
    } else if (consume("GL(2,")) {
      atom.kind = AtomKind::gl2;
      atom.q = parse_field_size();
      expect(')');
    } else if (consume("perm:")) {
      atom.kind = AtomKind::raw;
      parse_raw(atom);
    } else {
      switch (peek()) {
      case 'A': atom.kind = AtomKind::alternating; break;
      case 'S': atom.kind = AtomKind::symmetric; break;
      case 'C': atom.kind = AtomKind::cyclic; break;
      case 'D': atom.kind = AtomKind::dihedral; break;
      default:
        throw SpecError(at_end() ? "expected a group atom, found end of input"
                                 : std::string("unknown group atom starting with '") + peek() + "'",
                        _pos);
      }
      ++_pos;
      const std::size_t number_pos = _pos;
      atom.n = parse_number();
      if (atom.n < 1)
        throw SpecError("degree parameter must be at least 1", number_pos);
      if (atom.kind == AtomKind::dihedral && atom.n < 3)
        throw SpecError("dihedral atom D<n> needs n >= 3", number_pos);
      if (atom.n > kMaxDegree)
        throw SpecError("degree parameter exceeds " + std::to_string(kMaxDegree), number_pos);
    }

    atom.text = std::string(_text.substr(start, _pos - start));
    return atom;
  }

  void parse_raw(GroupAtom &atom)
  {
    do {
      std::vector<std::vector<unsigned>> generator;
      std::set<unsigned> used;
      if (peek() != '(')
        throw SpecError("expected '(' to start a cycle", _pos);
      while (peek() == '(') {
        ++_pos;
        std::vector<unsigned> cycle;
        while (peek() == ' ')
          ++_pos;
        while (peek() != ')') {
          const std::size_t point_pos = _pos;
          const unsigned point = parse_number();
          if (point < 1 || point > kMaxDegree)
            throw SpecError("cycle point out of range 1.." + std::to_string(kMaxDegree), point_pos);
          if (!used.insert(point).second)
            throw SpecError("point " + std::to_string(point) + " repeated in one generator", point_pos);
          cycle.push_back(point);
          atom.raw_degree = std::max(atom.raw_degree, point);
          if (peek() != ')' && peek() != ' ')
            throw SpecError("expected ' ' or ')' inside a cycle", _pos);
          while (peek() == ' ')
            ++_pos;
        }
        ++_pos;
        if (!cycle.empty())
          generator.push_back(std::move(cycle));
      }
      atom.raw_generators.push_back(std::move(generator));
    } while (peek() == ';' && (++_pos, true));

    atom.raw_degree = std::max(atom.raw_degree, 1u);
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

// Prime fields and GF(4) = GF(2)[w]/(w^2 + w + 1), elements encoded as
// 0..q-1 (for GF(4): bit 0 is the constant term, bit 1 the w coefficient).
class FiniteField
{
public:
  explicit FiniteField(unsigned q) : _q(q)
  {
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        if (q == 4) {
          _add[a][b] = static_cast<std::uint8_t>(a ^ b);
          _mul[a][b] = gf4_mul(a, b);
        } else {
          _add[a][b] = static_cast<std::uint8_t>((a + b) % q);
          _mul[a][b] = static_cast<std::uint8_t>((a * b) % q);
        }
      }
    }
  }

  unsigned size() const { return _q; }
  std::uint8_t add(unsigned a, unsigned b) const { return _add[a][b]; }
  std::uint8_t mul(unsigned a, unsigned b) const { return _mul[a][b]; }

  /// Generator of the multiplicative group.
  std::uint8_t primitive() const
  {
    switch (_q) {
    case 2: return 1;
    case 3: return 2;
    case 4: return 2;
    case 5: return 2;
    case 7: return 3;
    }
    throw InternalError("no primitive element for field size " + std::to_string(_q));
  }

  /// Additive generators over the prime field.
  std::vector<std::uint8_t> additive_basis() const
  {
    if (_q == 4)
      return {1, 2};
    return {1};
  }

private:
  static std::uint8_t gf4_mul(unsigned a, unsigned b)
  {
    // (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1.
    unsigned a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
    unsigned c0 = (a0 & b0) ^ (a1 & b1);
    unsigned c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    return static_cast<std::uint8_t>(c0 | (c1 << 1));
  }

  unsigned _q;
  std::array<std::array<std::uint8_t, 8>, 8> _add{};
  std::array<std::array<std::uint8_t, 8>, 8> _mul{};
};

using Matrix = std::vector<std::uint8_t>;  // row-major, dim x dim

Matrix identity_matrix(unsigned dim)
{
  Matrix m(dim * dim, 0);
  for (unsigned i = 0; i < dim; ++i)
    m[i * dim + i] = 1;
  return m;
}

Matrix matrix_mul(const FiniteField &f, unsigned dim, const Matrix &a, const Matrix &b)
{
  Matrix c(dim * dim, 0);
  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned j = 0; j < dim; ++j) {
      std::uint8_t sum = 0;
      for (unsigned k = 0; k < dim; ++k)
        sum = f.add(sum, f.mul(a[i * dim + k], b[k * dim + j]));
      c[i * dim + j] = sum;
    }
  }
  return c;
}

/// Nonzero row vectors of GF(q)^dim, indexed by their base-q encoding minus one.
std::vector<std::vector<std::uint8_t>> nonzero_vectors(unsigned q, unsigned dim)
{
  unsigned count = 1;
  for (unsigned i = 0; i < dim; ++i)
    count *= q;

  std::vector<std::vector<std::uint8_t>> out;
  for (unsigned code = 1; code < count; ++code) {
    std::vector<std::uint8_t> v(dim);
    unsigned rest = code;
    for (unsigned i = 0; i < dim; ++i) {
      v[dim - 1 - i] = static_cast<std::uint8_t>(rest % q);
      rest /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

unsigned encode_vector(unsigned q, const std::vector<std::uint8_t> &v)
{
  unsigned code = 0;
  for (auto c : v)
    code = code * q + c;
  return code;
}

/// The right action v -> vM on nonzero vectors.
Permutation vector_action(const FiniteField &f, unsigned dim, const Matrix &m)
{
  const auto vectors = nonzero_vectors(f.size(), dim);
  std::vector<std::uint8_t> images(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    std::vector<std::uint8_t> image(dim, 0);
    for (unsigned j = 0; j < dim; ++j) {
      std::uint8_t sum = 0;
      for (unsigned k = 0; k < dim; ++k)
        sum = f.add(sum, f.mul(vectors[i][k], m[k * dim + j]));
      image[j] = sum;
    }
    images[i] = static_cast<std::uint8_t>(encode_vector(f.size(), image) - 1);
  }
  return Permutation(std::move(images));
}

std::size_t matrix_group_order(const FiniteField &f, unsigned dim, const std::vector<Matrix> &gens)
{
  std::set<Matrix> seen{identity_matrix(dim)};
  std::vector<Matrix> queue{identity_matrix(dim)};
  for (std::size_t next = 0; next < queue.size(); ++next) {
    for (const auto &g : gens) {
      Matrix product = matrix_mul(f, dim, queue[next], g);
      if (seen.insert(product).second)
        queue.push_back(std::move(product));
    }
  }
  return queue.size();
}

AtomGenerators matrix_atom(unsigned q, unsigned dim, bool general)
{
  const FiniteField f(q);
  std::vector<Matrix> gens;

  // Elementary transvections generate SL(dim, q).
  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned j = 0; j < dim; ++j) {
      if (i == j)
        continue;
      for (auto a : f.additive_basis()) {
        Matrix m = identity_matrix(dim);
        m[i * dim + j] = a;
        gens.push_back(std::move(m));
      }
    }
  }
  if (general && q > 2) {
    Matrix m = identity_matrix(dim);
    m[0] = f.primitive();
    gens.push_back(std::move(m));
  }

  AtomGenerators out;
  out.degree = static_cast<unsigned>(nonzero_vectors(q, dim).size());
  for (const auto &m : gens)
    out.generators.push_back(vector_action(f, dim, m));

  // |GL(dim,q)| = prod (q^dim - q^i); SL divides by q - 1.
  std::size_t qd = 1;
  for (unsigned i = 0; i < dim; ++i)
    qd *= q;
  std::size_t order = 1;
  std::size_t qi = 1;
  for (unsigned i = 0; i < dim; ++i) {
    order *= qd - qi;
    qi *= q;
  }
  if (!general)
    order /= q - 1;
  out.expected_order = order;

  const std::size_t matrix_order = matrix_group_order(f, dim, gens);
  if (matrix_order != order)
    throw InternalError("matrix generators produced order " + std::to_string(matrix_order)
                        + ", expected " + std::to_string(order));

  // The action is a homomorphism onto the permutation group, so equal orders
  // means a trivial kernel.
  const auto perm_elements = enumerate_elements(out.degree, out.generators, kMaxOrderCap);
  if (perm_elements.size() != matrix_order)
    throw InternalError("vector action of matrix group is not faithful");

  return out;
}

std::size_t factorial(unsigned n)
{
  std::size_t r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (r > kMaxOrderCap)
      return 0;  // too large to matter; the cap check will reject it
    r *= i;
  }
  return r;
}

std::vector<unsigned> iota_cycle(unsigned first, unsigned last)
{
  std::vector<unsigned> cycle;
  for (unsigned i = first; i <= last; ++i)
    cycle.push_back(i);
  return cycle;
}

} // namespace

std::string GroupSpec::to_string() const
{
  std::string out;
  for (const auto &atom : factors) {
    if (!out.empty())
      out += 'x';
    out += atom.text;
  }
  return out;
}

GroupSpec parse_group_spec(std::string_view text)
{
  return SpecParser(text).parse();
}

AtomGenerators atom_generators(const GroupAtom &atom)
{
  AtomGenerators out;
  const unsigned n = atom.n;

  switch (atom.kind) {
  case AtomKind::alternating:
    out.degree = n;
    if (n >= 3) {
      out.generators.push_back(Permutation::from_cycles(n, {{1, 2, 3}}));
      if (n >= 4)
        out.generators.push_back(Permutation::from_cycles(
            n, {n % 2 == 1 ? iota_cycle(1, n) : iota_cycle(2, n)}));
    }
    out.expected_order = n >= 2 ? factorial(n) / 2 : 1;
    break;
  case AtomKind::symmetric:
    out.degree = n;
    if (n >= 2) {
      out.generators.push_back(Permutation::from_cycles(n, {iota_cycle(1, n)}));
      out.generators.push_back(Permutation::from_cycles(n, {{1, 2}}));
    }
    out.expected_order = factorial(n);
    break;
  case AtomKind::cyclic:
    out.degree = n;
    if (n >= 2)
      out.generators.push_back(Permutation::from_cycles(n, {iota_cycle(1, n)}));
    out.expected_order = n;
    break;
  case AtomKind::dihedral: {
    out.degree = n;
    out.generators.push_back(Permutation::from_cycles(n, {iota_cycle(1, n)}));
    // Reflection fixing point 1: i -> n + 2 - i.
    std::vector<std::vector<unsigned>> reflection;
    for (unsigned i = 2; i < n + 2 - i; ++i)
      reflection.push_back({i, n + 2 - i});
    out.generators.push_back(Permutation::from_cycles(n, reflection));
    out.expected_order = 2 * n;
    break;
  }
  case AtomKind::sl2:
    return matrix_atom(atom.q, 2, false);
  case AtomKind::gl2:
    return matrix_atom(atom.q, 2, true);
  case AtomKind::psl32:
    return matrix_atom(2, 3, false);
  case AtomKind::raw:
    out.degree = atom.raw_degree;
    for (const auto &cycles : atom.raw_generators)
      out.generators.push_back(Permutation::from_cycles(atom.raw_degree, cycles));
    break;
  }
  return out;
}

PermGroup build_group(const GroupSpec &spec, std::size_t cap)
{
  std::vector<AtomGenerators> parts;
  unsigned degree = 0;
  for (const auto &atom : spec.factors) {
    parts.push_back(atom_generators(atom));
    degree += parts.back().degree;
  }
  if (degree > kMaxDegree)
    throw std::invalid_argument("total degree " + std::to_string(degree) + " exceeds "
                                + std::to_string(kMaxDegree));

  std::vector<Permutation> gens;
  unsigned offset = 0;
  for (const auto &part : parts) {
    for (const auto &g : part.generators)
      gens.push_back(g.shifted(offset, degree));
    offset += part.degree;
  }

  PermGroup group = PermGroup::generate(spec.to_string(), degree, std::move(gens), cap);

  std::size_t expected = 1;
  for (const auto &part : parts) {
    if (part.expected_order == 0 || expected == 0) {
      expected = 0;
      continue;
    }
    expected *= part.expected_order;
  }
  if (expected != 0 && expected != group.order())
    throw InternalError("group " + group.name() + " has order " + std::to_string(group.order())
                        + ", expected " + std::to_string(expected));
  return group;
}

PermGroup build_group(std::string_view text, std::size_t cap)
{
  return build_group(parse_group_spec(text), cap);
}

} // namespace solvgraph
