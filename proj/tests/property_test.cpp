#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "solvgraph/degrees.hpp"
#include "solvgraph/group_spec.hpp"

using namespace solvgraph;

namespace {

/// 20 solvable groups from random generator pairs of degree 4 to 7, fixed seed.
std::vector<PermGroup> random_solvable_groups()
{
  std::mt19937 rng(20240611);
  std::vector<PermGroup> out;
  while (out.size() < 20) {
    const unsigned degree = 4 + rng() % 4;
    std::vector<std::uint8_t> a(degree), b(degree);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const std::vector<Permutation> gens{Permutation(a), Permutation(b)};
    const auto set = oracle::closure(degree, gens);
    if (set.size() > 200 || !oracle::solvable(degree, set))
      continue;
    out.push_back(PermGroup::generate("random" + std::to_string(out.size()), degree, gens));
  }
  return out;
}

std::vector<Subgroup> sample_subgroups(const PermGroup &g, std::mt19937 &rng, int count)
{
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  std::vector<Subgroup> out;
  for (int i = 0; i < count; ++i) {
    const std::vector<ElementId> seeds{pick(rng), pick(rng)};
    out.push_back(subgroup_closure(g, seeds));
  }
  return out;
}

void check_group_structure(const PermGroup &g, std::mt19937 &rng)
{
  for (const Subgroup &h : sample_subgroups(g, rng, 10)) {
    EXPECT_EQ(g.order() % h.order(), 0u) << g.name();
    std::uniform_int_distribution<std::size_t> pick(0, h.order() - 1);
    for (int i = 0; i < 20; ++i) {
      const ElementId x = h.members()[pick(rng)], y = h.members()[pick(rng)];
      EXPECT_TRUE(h.contains(g.mul(x, y)));
      EXPECT_TRUE(h.contains(g.inv(x)));
    }

    const auto series = derived_series(h);
    for (std::size_t i = 1; i < series.size(); ++i)
      EXPECT_LT(series[i].order(), series[i - 1].order());
    EXPECT_EQ(derived_subgroup(series.back()), series.back());
    EXPECT_EQ(is_solvable(h), series.back().is_trivial());
  }
}

void check_pair_table(const PermGroup &g)
{
  const PairTable t = PairTable::compute(g, {2, {}});
  const Subgroup rad = solvable_radical(t);
  EXPECT_TRUE(is_subgroup(g, rad.members()));
  EXPECT_TRUE(is_normal(g, rad));
  EXPECT_TRUE(is_solvable(rad));

  const Rational ps = solvability_degree(t);
  std::uint64_t pairs = 0;
  for (ElementId u = 0; u < g.order(); ++u)
    pairs += t.solvabilizer_size(u);
  EXPECT_EQ(ps, Rational(pairs, g.order() * g.order()));

  for (const auto &entry : t.retained())
    EXPECT_EQ(is_solvable(Subgroup(g, entry.members)), entry.solvable);
}

} // namespace

TEST(Properties, RandomSolvableGroups)
{
  std::mt19937 rng(99);
  const auto groups = random_solvable_groups();
  ASSERT_EQ(groups.size(), 20u);
  for (const auto &g : groups) {
    EXPECT_TRUE(is_solvable(whole_group(g))) << g.name();
    check_group_structure(g, rng);
    check_pair_table(g);

    const PairTable t = PairTable::compute(g, {1, {}});
    EXPECT_EQ(solvable_radical(t).order(), g.order());
    EXPECT_EQ(solvability_degree(t), Rational(1));
  }
}

TEST(Properties, CatalogueGroups)
{
  std::mt19937 rng(42);
  for (const char *spec : {"A5", "S5", "A5xC2", "SL(2,5)", "PSL(3,2)", "GL(2,4)", "A6"}) {
    const PermGroup g = build_group(spec);
    check_group_structure(g, rng);
    check_pair_table(g);
  }
}

TEST(Properties, PerfectFixedPoint)
{
  const PermGroup s5 = build_group("S5");
  const auto series = derived_series(whole_group(s5));
  ASSERT_EQ(series.size(), 2u);
  EXPECT_EQ(series[1].order(), 60u);
  EXPECT_EQ(derived_subgroup(series[1]), series[1]);
}
