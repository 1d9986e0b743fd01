#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "qsi/symgroup.hpp"
#include "qsi/tensor.hpp"

using namespace qsi;

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST(Perm, ValidatesBijection) {
  EXPECT_THROW(Perm({0, 0, 1}), DomainError);
  EXPECT_THROW(Perm({0, 3}), DomainError);
  EXPECT_EQ(Perm::from_cycles(4, {{1, 3}, {2, 4}}).images(), (std::vector<int>{2, 3, 0, 1}));
}

TEST(Perm, CompositionAndInverse) {
  const Perm a = Perm::from_cycles(3, {{1, 2, 3}});
  const Perm b = Perm::from_cycles(3, {{1, 2}});
  EXPECT_EQ((a * b)(0), a(b(0)));
  EXPECT_EQ(a * a.inverse(), Perm::identity(3));
  EXPECT_EQ(a.fixed_points(), 0);
  EXPECT_EQ(b.fixed_points(), 1);
  EXPECT_EQ(b.cycle_count(), 2);
}

TEST(CycleType, Examples) {
  EXPECT_EQ(cycle_type(Perm::identity(4)), Partition({1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(Perm::from_cycles(4, {{1, 2, 3, 4}})), Partition{4});
  EXPECT_EQ(cycle_type(Perm::from_cycles(4, {{1, 3}, {2, 4}})), Partition({2, 2}));
}

TEST(Character, Examples) {
  for (const auto& c : partitions_of(5)) EXPECT_EQ(character(Partition{5}, c), 1);
  EXPECT_EQ(character(Partition{1, 1, 1}, Partition{2, 1}), -1);
  EXPECT_EQ(character(Partition{2, 1}, Partition{1, 1, 1}), 2);
}

TEST(Character, IdentityClassGivesDimension) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions_of(n)) {
      std::vector<int> ones(static_cast<std::size_t>(n), 1);
      EXPECT_EQ(character(l, Partition(ones)), dim_symmetric(l)) << l.str();
    }
}

TEST(Character, StandardIsFixedPointsMinusOne) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : all_perms(n))
      EXPECT_EQ(character(Partition{n - 1, 1}, cycle_type(g)), g.fixed_points() - 1);
}

TEST(Character, RowOrthogonality) {
  for (int n = 1; n <= 6; ++n) {
    const auto group = all_perms(n);
    const auto parts = partitions_of(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        BigInt sum = 0;
        for (const auto& g : group) sum += character(a, cycle_type(g)) * character(b, cycle_type(g));
        EXPECT_EQ(sum, a == b ? factorial(n) : BigInt(0)) << a.str() << " " << b.str();
      }
  }
}

TEST(Character, EqualsNormalizedTraceOfIsotypicBlock) {
  // Tr[ψ(π) Π_λ] = m_{λ,d} χ^λ(π).
  const int n = 3, d = 3;
  for (const auto& l : partitions_of(n, d)) {
    const auto proj = isotypic_projector(l, d);
    for (const auto& g : all_perms(n)) {
      const auto op = perm_operator(g, d);
      EXPECT_EQ(trace_of_product(op.op, proj.op), Rational(dim_unitary(l, d) * character(l, cycle_type(g))))
          << l.str();
    }
  }
}

TEST(ExpandSubgroup, Examples) {
  const auto c3 = expand_subgroup(SubgroupSpec::cyclic(3));
  EXPECT_EQ(c3.size(), 3u);
  EXPECT_NE(std::find(c3.begin(), c3.end(), Perm::from_cycles(3, {{1, 2, 3}})), c3.end());
  EXPECT_NE(std::find(c3.begin(), c3.end(), Perm::from_cycles(3, {{1, 3, 2}})), c3.end());
  const auto w2 = expand_subgroup(SubgroupSpec::iterated_wreath_2(2));
  EXPECT_EQ(w2.size(), 8u);
  for (const auto& g : {Perm::from_cycles(4, {{1, 2}}), Perm::from_cycles(4, {{3, 4}}),
                        Perm::from_cycles(4, {{1, 3}, {2, 4}})})
    EXPECT_NE(std::find(w2.begin(), w2.end(), g), w2.end());
  EXPECT_EQ(expand_subgroup(SubgroupSpec::iterated_wreath_2(3)).size(), 128u);
  EXPECT_EQ(expand_subgroup(SubgroupSpec::symmetric(5)).size(), 120u);
}

TEST(ExpandSubgroup, ClosedAndDuplicateFree) {
  for (const auto& spec : {SubgroupSpec::cyclic(6), SubgroupSpec::iterated_wreath_2(2),
                           SubgroupSpec::generated(4, {Perm::from_cycles(4, {{1, 2}, {3, 4}})})}) {
    const auto elems = expand_subgroup(spec);
    const std::set<Perm> set(elems.begin(), elems.end());
    EXPECT_EQ(set.size(), elems.size());
    EXPECT_TRUE(std::is_sorted(elems.begin(), elems.end()));
    for (const auto& a : elems)
      for (const auto& b : elems) EXPECT_TRUE(set.count(a * b)) << spec.name();
  }
}

TEST(ExpandSubgroup, BudgetExceeded) {
  EXPECT_THROW(expand_subgroup(SubgroupSpec::symmetric(6), 100), BudgetError);
}

TEST(ExpandSubgroup, WreathOrderIsTwoToTheInternalNodes) {
  for (int m = 0; m <= 3; ++m) {
    const auto elems = expand_subgroup(SubgroupSpec::iterated_wreath_2(m));
    EXPECT_EQ(elems.size(), std::size_t{1} << ((1 << m) - 1)) << m;
  }
}

TEST(WreathGroup, TransitiveWithUnitAverageFixedPoints) {
  for (int m = 1; m <= 3; ++m) {
    const auto elems = expand_subgroup(SubgroupSpec::iterated_wreath_2(m));
    const int n = 1 << m;
    std::set<int> orbit;
    std::size_t fixed = 0;
    for (const auto& g : elems) {
      orbit.insert(g(0));
      fixed += static_cast<std::size_t>(g.fixed_points());
    }
    EXPECT_EQ(static_cast<int>(orbit.size()), n);
    EXPECT_EQ(fixed, elems.size());
  }
}

TEST(TrivialMultiplicity, Examples) {
  for (const auto& spec : {SubgroupSpec::symmetric(4), SubgroupSpec::cyclic(5), SubgroupSpec::iterated_wreath_2(2)})
    EXPECT_EQ(trivial_multiplicity(spec, Partition{spec.degree()}), 1) << spec.name();
  for (int m = 1; m <= 3; ++m) {
    const int n = 1 << m;
    EXPECT_EQ(trivial_multiplicity(SubgroupSpec::iterated_wreath_2(m), Partition{n - 1, 1}), 0) << m;
  }
  EXPECT_EQ(trivial_multiplicity(SubgroupSpec::cyclic(4), Partition{2, 2}), 1);
}

TEST(TrivialMultiplicity, SymmetricGroupSelectsTrivialIrrep) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n))
      EXPECT_EQ(trivial_multiplicity(SubgroupSpec::symmetric(n), l), l == Partition{n} ? 1 : 0);
}

TEST(TrivialMultiplicity, FrobeniusCountsCosets) {
  // Σ_λ d_λ r^G_λ is the dimension of the permutation module on cosets.
  for (const auto& spec : {SubgroupSpec::cyclic(5), SubgroupSpec::cyclic(6), SubgroupSpec::iterated_wreath_2(2),
                           SubgroupSpec::iterated_wreath_2(3), SubgroupSpec::symmetric(4)}) {
    const auto elems = expand_subgroup(spec);
    BigInt sum = 0;
    for (const auto& l : partitions_of(spec.degree())) sum += dim_symmetric(l) * trivial_multiplicity(elems, l);
    EXPECT_EQ(sum * BigInt(static_cast<unsigned long>(elems.size())), factorial(spec.degree())) << spec.name();
  }
}

TEST(TrivialMultiplicity, CyclicMatchesMajorIndexCount) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions_of(n))
      EXPECT_EQ(trivial_multiplicity(SubgroupSpec::cyclic(n), l),
                BigInt(static_cast<unsigned long>(count_maj_zero(l, n))))
          << l.str();
}

TEST(Generators, TreeAndYoung) {
  EXPECT_EQ(tree_block_swaps(2).size(), 3u);
  EXPECT_EQ(tree_block_swaps(3).size(), 7u);
  const auto young = close_under_product(5, young_subgroup_generators({3, 2}));
  EXPECT_EQ(young.size(), 12u);
  const auto hist = cycle_type_histogram(expand_subgroup(SubgroupSpec::symmetric(4)));
  EXPECT_EQ(hist.at(Partition({2, 2})), 3u);
  EXPECT_EQ(hist.at(Partition{4}), 6u);
}
