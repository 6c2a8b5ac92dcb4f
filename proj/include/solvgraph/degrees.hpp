#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "solvgraph/deadline.hpp"
#include "solvgraph/perm_group.hpp"
#include "solvgraph/solv_graph.hpp"

namespace solvgraph {

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" (denominator always written).
std::string to_fraction_string(const Rational &value);

/// Parses the output of to_fraction_string.
Rational parse_fraction(const std::string &text);

/// Rounded decimal for display, e.g. "0.366667".
std::string to_decimal_string(const Rational &value, int places = 6);

/// Probability that a uniform ordered pair generates a solvable subgroup.
/// Computed twice: as sum_u |Sol_G(u)| / |G|^2 from the table, and by
/// counting ordered pairs directly with a fresh cache. Throws InternalError
/// if the two disagree.
Rational solvability_degree(const PairTable &table, const Deadline &deadline = {});

/// Probability that a uniform ordered pair commutes: sum_u |C_G(u)| / |G|^2.
Rational commuting_probability(const PermGroup &group);

/// The cited upper bound on the solvability degree of a non-solvable group.
inline const Rational kSolvabilityCeiling{11, 30};

struct DegreeReport
{
  Rational ps;
  Rational pr;
  std::uint64_t order = 0;
  std::uint64_t radical_order = 0;
  std::uint64_t sum_solvabilizers = 0;
  std::uint64_t sum_centralizers = 0;
  bool solvable = false;

  bool integrality_ok = false;        ///< |G| P_s is an integer
  bool lower_bound_ok = false;        ///< P_s >= |Sol|/|G| + 2(|G| - |Sol|)/|G|^2
  bool ps_ge_pr_ok = false;

  /// P_s = Pr exactly.
  bool equality_holds = false;
  /// Sol_G(u) = C_G(u) for every u.
  bool solvabilizers_are_centralizers = false;
  /// equality_holds == solvabilizers_are_centralizers
  bool equality_condition_ok = false;
  /// equality_holds == solvable. Fails for solvable non-abelian groups,
  /// where P_s = 1 > Pr.
  bool equality_iff_solvable_ok = false;

  std::optional<bool> ceiling_ok;        ///< non-solvable groups only
  std::optional<bool> edge_identity_ok;  ///< when a graph is supplied
  std::optional<std::uint64_t> edge_count;
};

/// `graph` is needed only for the edge identity
/// 2|E| = |G|^2 P_s + |Sol|^2 + |Sol| - |G| (2|Sol| + 1).
DegreeReport degree_report(const PairTable &table,
                           const Subgroup &radical,
                           const SolvableGraph *graph = nullptr,
                           const Deadline &deadline = {});

} // namespace solvgraph
