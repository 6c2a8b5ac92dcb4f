#include "solvgraph/degrees.hpp"

#include <stdexcept>

#include "solvgraph/errors.hpp"

namespace solvgraph {

using boost::multiprecision::cpp_int;

std::string to_fraction_string(const Rational &value)
{
  return boost::multiprecision::numerator(value).str() + "/"
         + boost::multiprecision::denominator(value).str();
}

Rational parse_fraction(const std::string &text)
{
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("expected num/den, got '" + text + "'");
  cpp_int num(text.substr(0, slash));
  cpp_int den(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_decimal_string(const Rational &value, int places)
{
  cpp_int scale = 1;
  for (int i = 0; i < places; ++i)
    scale *= 10;

  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  cpp_int scaled = (abs(num) * scale * 2 + den) / (den * 2);   // round half up

  const cpp_int whole = scaled / scale;
  std::string frac = cpp_int(scaled % scale).str();
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');

  std::string out = negative ? "-" : "";
  out += whole.str();
  if (places > 0)
    out += "." + frac;
  return out;
}

Rational solvability_degree(const PairTable &table, const Deadline &deadline)
{
  const PermGroup &group = table.group();
  const std::uint64_t n = group.order();

  std::uint64_t by_solvabilizers = 0;
  for (std::uint64_t u = 0; u < n; ++u)
    by_solvabilizers += table.solvabilizer_size(static_cast<ElementId>(u));

  SolvCache cache(0);
  PairSolver solver(group, cache);
  std::uint64_t by_pairs = 0;
  for (std::uint64_t u = 0; u < n; ++u) {
    deadline.check("solvability degree");
    for (std::uint64_t v = 0; v < n; ++v) {
      if (solver.solvable(static_cast<ElementId>(u), static_cast<ElementId>(v)))
        ++by_pairs;
    }
  }

  if (by_pairs != by_solvabilizers)
    throw InternalError("solvability degree routes disagree: " + std::to_string(by_solvabilizers)
                        + " by solvabilizers, " + std::to_string(by_pairs) + " by pairs");
  return Rational(cpp_int(by_pairs), cpp_int(n) * n);
}

namespace {

std::uint64_t centralizer_sum(const PermGroup &group)
{
  std::uint64_t sum = 0;
  for (std::size_t u = 0; u < group.order(); ++u) {
    for (std::size_t v = 0; v < group.order(); ++v) {
      const auto a = static_cast<ElementId>(u), b = static_cast<ElementId>(v);
      if (group.mul(a, b) == group.mul(b, a))
        ++sum;
    }
  }
  return sum;
}

} // namespace

Rational commuting_probability(const PermGroup &group)
{
  const std::uint64_t n = group.order();
  return Rational(cpp_int(centralizer_sum(group)), cpp_int(n) * n);
}

DegreeReport degree_report(const PairTable &table,
                           const Subgroup &radical,
                           const SolvableGraph *graph,
                           const Deadline &deadline)
{
  const PermGroup &group = table.group();
  const std::uint64_t n = group.order();
  const std::uint64_t s = radical.order();

  DegreeReport out;
  out.order = n;
  out.radical_order = s;
  out.solvable = s == n;
  out.ps = solvability_degree(table, deadline);
  out.pr = commuting_probability(group);
  out.sum_centralizers = centralizer_sum(group);
  for (std::uint64_t u = 0; u < n; ++u)
    out.sum_solvabilizers += table.solvabilizer_size(static_cast<ElementId>(u));

  const Rational n_ps = out.ps * cpp_int(n);
  out.integrality_ok = boost::multiprecision::denominator(n_ps) == 1;

  const Rational lower = Rational(cpp_int(s), cpp_int(n)) + Rational(cpp_int(2 * (n - s)), cpp_int(n) * n);
  out.lower_bound_ok = out.ps >= lower;
  out.ps_ge_pr_ok = out.ps >= out.pr;

  out.solvabilizers_are_centralizers = true;
  for (std::uint64_t u = 0; u < n && out.solvabilizers_are_centralizers; ++u) {
    const auto id = static_cast<ElementId>(u);
    const Subgroup c = centralizer(group, id);
    if (c.mask() != table.solvabilizer_mask(id))
      out.solvabilizers_are_centralizers = false;
  }
  out.equality_holds = out.ps == out.pr;
  out.equality_condition_ok = out.equality_holds == out.solvabilizers_are_centralizers;
  out.equality_iff_solvable_ok = out.equality_holds == out.solvable;

  if (!out.solvable)
    out.ceiling_ok = out.ps <= kSolvabilityCeiling;

  if (graph) {
    const cpp_int lhs = cpp_int(2) * graph->edge_count();
    const Rational rhs = out.ps * cpp_int(n) * cpp_int(n) + Rational(cpp_int(s) * s + s)
                         - Rational(cpp_int(n) * (2 * s + 1));
    out.edge_count = graph->edge_count();
    out.edge_identity_ok = Rational(lhs) == rhs;
  }
  return out;
}

} // namespace solvgraph
