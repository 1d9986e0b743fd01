#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "oracles.hpp"
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

bool is_projector(const Matrix& m) { return m.is_symmetric() && m * m == m; }

}  // namespace

TEST(TensorDimension, BudgetIsEnforced) {
  EXPECT_EQ(tensor_dimension(3, 2), 8u);
  EXPECT_THROW(tensor_dimension(13, 2), BudgetError);
  try {
    tensor_dimension(5, 3, 100);
    FAIL();
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.requested(), 243u);
    EXPECT_EQ(e.limit(), 100u);
  }
}

TEST(PermOperator, Examples) {
  EXPECT_EQ(perm_operator(Perm::identity(3), 2).op, Matrix::identity(8));
  const Matrix swap = Matrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(perm_operator(Perm({1, 0}), 2).op, swap);
  EXPECT_EQ(perm_operator(Perm::from_cycles(3, {{1, 2, 3}}), 2).op.trace(), 2);
}

TEST(PermOperator, MovesRegisterContent) {
  // Register 1 carries label 1, the rest label 0; π = (1 2 3) moves it to register 2.
  const auto op = perm_operator(Perm::from_cycles(3, {{1, 2, 3}}), 2);
  std::vector<Rational> v(8);
  v[4] = 1;  // |100⟩
  const auto w = op.op.apply(v);
  EXPECT_EQ(w[2], 1);  // |010⟩
}

TEST(PermOperator, IsAHomomorphism) {
  const auto group = all_perms(3);
  for (const auto& a : group)
    for (const auto& b : group)
      EXPECT_EQ(perm_operator(a * b, 2).op, perm_operator(a, 2).op * perm_operator(b, 2).op);
}

TEST(HsInner, PermutationOperatorsCountFixedStrings) {
  const auto group = all_perms(3);
  for (const auto& a : group)
    for (const auto& b : group) {
      const Perm rel = b * a.inverse();
      // Fixed basis strings of ψ(rel): d^{cycles}.
      const Rational expect = Rational(1u << rel.cycle_count());
      EXPECT_EQ(hs_inner(perm_operator(a, 2).op, perm_operator(b, 2).op), expect);
    }
  EXPECT_EQ(hs_inner(perm_operator(Perm::from_cycles(3, {{1, 2, 3}}), 2).op,
                     perm_operator(Perm::from_cycles(3, {{1, 3, 2}}), 2).op),
            2);
}

TEST(IsotypicProjector, Examples) {
  const auto sym = isotypic_projector(Partition{2}, 2);
  EXPECT_EQ(sym.op.trace(), 3);
  EXPECT_EQ(sym.op(0, 0), 1);
  EXPECT_EQ(sym.op(1, 2), ratio(1, 2));
  EXPECT_EQ(isotypic_projector(Partition{1, 1}, 2).op.trace(), 1);
  EXPECT_TRUE(isotypic_projector(Partition{1, 1, 1}, 2).op.is_zero());
  EXPECT_EQ(hs_inner(sym.op, isotypic_projector(Partition{1, 1}, 2).op), 0);
}

TEST(IsotypicProjector, OrthogonalCompleteAndCommuting) {
  for (int n = 2; n <= 4; ++n)
    for (int d = 2; d <= 3; ++d) {
      if (n == 4 && d == 3) continue;
      const std::size_t dim = tensor_dimension(n, d);
      std::vector<TensorOperator> projs;
      for (const auto& l : partitions_of(n)) projs.push_back(isotypic_projector(l, d));
      Matrix sum(dim, dim);
      for (std::size_t i = 0; i < projs.size(); ++i) {
        const auto& p = projs[i].op;
        EXPECT_TRUE(is_projector(p));
        sum += p;
        for (std::size_t j = i + 1; j < projs.size(); ++j) EXPECT_TRUE((p * projs[j].op).is_zero());
        for (const auto& g : all_perms(n)) EXPECT_TRUE(commutator(p, perm_operator(g, d).op).is_zero());
      }
      EXPECT_EQ(sum, Matrix::identity(dim));
      const auto parts = partitions_of(n);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const Rational expect = parts[i].length() > d ? Rational(0) : Rational(dim_unitary(parts[i], d) * dim_symmetric(parts[i]));
        EXPECT_EQ(projs[i].op.trace(), expect) << parts[i].str();
      }
    }
}

TEST(IsotypicProjector, InvariantUnderRotation) {
  const Matrix o = Matrix::from_rows({{ratio(3, 5), ratio(-4, 5)}, {ratio(4, 5), ratio(3, 5)}});
  ASSERT_EQ(o * o.transpose(), Matrix::identity(2));
  const Matrix u = tensor_power(o, 3);
  for (const auto& l : partitions_of(3)) {
    const auto& p = isotypic_projector(l, 2).op;
    EXPECT_EQ(u * p * u.transpose(), p) << l.str();
  }
}

TEST(GroupProjector, Examples) {
  const auto sym2 = group_projector(SubgroupSpec::symmetric(2), 2);
  const Matrix swap = perm_operator(Perm({1, 0}), 2).op;
  EXPECT_EQ(sym2.op, (Matrix::identity(4) + swap) * ratio(1, 2));
  // Burnside count of binary necklaces / tree-orbits of length 4.
  EXPECT_EQ(group_projector(SubgroupSpec::cyclic(4), 2).op.trace(), 6);
  EXPECT_EQ(group_projector(SubgroupSpec::iterated_wreath_2(2), 2).op.trace(), 6);
}

TEST(GroupProjector, RankMatchesMultiplicities) {
  for (const auto& spec : {SubgroupSpec::cyclic(4), SubgroupSpec::cyclic(5), SubgroupSpec::iterated_wreath_2(2),
                           SubgroupSpec::iterated_wreath_2(3)}) {
    const int n = spec.degree();
    const auto p = group_projector(spec, 2);
    EXPECT_TRUE(is_projector(p.op)) << spec.name();
    BigInt rank = 0;
    for (const auto& l : partitions_of(n, 2)) rank += dim_unitary(l, 2) * trivial_multiplicity(spec, l);
    EXPECT_EQ(p.op.trace(), Rational(rank)) << spec.name();
  }
}

TEST(ProductState, CanonicalWord) {
  EXPECT_EQ(canonical_word(Partition{2, 1}), (std::vector<int>{0, 0, 1}));
  const auto s = product_state({1, 0}, 2);
  EXPECT_EQ(s.op(2, 2), 1);
  EXPECT_EQ(s.op.trace(), 1);
  EXPECT_THROW(product_state({2, 0}, 2), DomainError);
}

TEST(RhoStates, SingleRowCollapses) {
  for (int n = 1; n <= 3; ++n) {
    const auto s = rho_states(Partition{n}, 2);
    const Matrix expect = isotypic_projector(Partition{n}, 2).op * ratio(1, binomial(n + 1, n));
    EXPECT_EQ(s.rho_neq.op, expect);
    EXPECT_EQ(s.rho_neq_twirled.op, expect);
    EXPECT_EQ(s.rho_eq.op, expect);
  }
}

TEST(RhoStates, Examples) {
  const auto a = rho_states(Partition{1, 1}, 2);
  EXPECT_EQ(trace_of_product(isotypic_projector(Partition{2}, 2).op, a.rho_neq.op), ratio(1, 2));
  const auto b = rho_states(Partition{2, 1}, 2);
  EXPECT_EQ(trace_of_product(isotypic_projector(Partition{3}, 2).op, b.rho_neq.op), ratio(1, 3));
  EXPECT_THROW(rho_states(Partition{1, 1, 1}, 2), DomainError);
}

TEST(RhoStates, AreDensityOperators) {
  for (const auto& mu : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}}) {
    const auto s = rho_states(mu, 2);
    for (const auto* m : {&s.rho_neq.op, &s.rho_neq_twirled.op, &s.rho_eq.op}) {
      EXPECT_EQ(m->trace(), 1);
      EXPECT_TRUE(psd_certificate(*m).is_psd());
    }
    EXPECT_EQ(symmetric_group_twirl(s.rho_neq).op, s.rho_neq_twirled.op) << mu.str();
    EXPECT_EQ(rho_neq_twirled(mu, 2).op, s.rho_neq_twirled.op);
  }
}

TEST(CommutantProjection, Examples) {
  const auto swap = perm_operator(Perm({1, 0}), 2);
  EXPECT_EQ(commutant_projection(swap).op, swap.op);
  EXPECT_EQ(commutant_projection(product_state({1, 1}, 2)).op, rho_eq(2, 2).op);
  EXPECT_EQ(commutant_projection(product_state({0, 0, 1}, 2)).op, rho_states(Partition{2, 1}, 2).rho_neq.op);
}

TEST(CommutantProjection, IdempotentAndSelfAdjoint) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    TensorOperator x{Matrix(8, 8), 3, 2};
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) x.op(i, j) = oracle::random_rational(rng, 3);
    const auto px = commutant_projection(x);
    EXPECT_EQ(commutant_projection(px).op, px.op);
    TensorOperator y{Matrix(8, 8), 3, 2};
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) y.op(i, j) = oracle::random_rational(rng, 3);
    EXPECT_EQ(hs_inner(px.op, y.op), hs_inner(x.op, commutant_projection(y).op));
    // The projection commutes with every rotation power.
    const Matrix o = Matrix::from_rows({{ratio(3, 5), ratio(-4, 5)}, {ratio(4, 5), ratio(3, 5)}});
    EXPECT_TRUE(commutator(px.op, tensor_power(o, 3)).is_zero());
  }
}

TEST(CommutantProjection, GramBudget) {
  EXPECT_THROW(commutant_projection(product_state({0, 0, 0, 1}, 2), 10), BudgetError);
}

TEST(TensorPower, Shapes) {
  const Matrix o = Matrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(tensor_power(o, 2), perm_operator(Perm::identity(2), 2).op * tensor_power(o, 2));
  EXPECT_EQ(tensor_power(o, 3).rows(), 8u);
  EXPECT_EQ(tensor_power(o, 2)(0, 3), 1);
}
