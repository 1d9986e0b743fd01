#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsi/exact.hpp"
#include "qsi/partitions.hpp"
#include "qsi/symgroup.hpp"
#include "qsi/tensor.hpp"

namespace qsi {

enum class ChosenTest { permutation, trivial, g_test, anti_test, mixture };

std::string to_string(ChosenTest t);

/// One-sided and averaged success probabilities of a two-outcome test.
struct TestReport {
  Rational completeness;
  Rational soundness;
  Rational avg_success;
  Rational prior_p;
  ChosenTest chosen_test = ChosenTest::permutation;
  /// Set when p sits exactly on the threshold and both tests are optimal.
  bool tie = false;
};

/// 1 / (1 + binom(n, μ)).
Rational p_star(const Partition& mu);

/// The optimal test for prior p: the permutation test at or above p*(μ),
/// the trivial test (always "not equal") below. PromiseViolation when μ has a
/// single part; DomainError when p is outside [0, 1].
TestReport perm_test_report(const Partition& mu, const Rational& p);

/// p·completeness + (1 − p)·soundness.
Rational average_success(const Rational& p, const Rational& completeness, const Rational& soundness);

/// Soundness of the G-test by the Kostka/multiplicity formula.
Rational gtest_soundness(const SubgroupSpec& spec, const Partition& mu, int d);

struct GTestReport {
  Rational formula;
  std::optional<Rational> trace;  // 1 − Tr[Π_G ρ̃], when within budget
  bool formula_ran = true;
  bool trace_ran = false;
  bool agree() const { return !trace || *trace == formula; }
};

/// Formula value plus the operator-trace cross-check when d^n fits the budget.
GTestReport gtest_soundness_checked(const SubgroupSpec& spec, const Partition& mu, int d,
                                    std::size_t budget = kDefaultDimensionBudget);

/// 1 − Tr[Π_G ρ̃_≠^μ] from explicit operators.
Rational gtest_soundness_trace(const SubgroupSpec& spec, const Partition& mu, int d,
                               std::size_t budget = kDefaultDimensionBudget);

enum class CircleRoute { burnside, maj, totient };

std::string to_string(CircleRoute r);

/// r^{C_n}_λ / d_λ by the requested route.
Rational circle_rate(const Partition& lambda, CircleRoute route);

int euler_totient(int n);

/// Boundary of the achievable (α, β) region at a given type-I error α.
struct RegionSlice {
  Rational alpha;
  Rational beta_low;
  Rational beta_high;
  Rational t_low;   // mixture weight reaching beta_low
  Rational t_high;  // mixture weight reaching beta_high
};

/// α = Tr[Π_≠ ρ_=] and β = Tr[Π_= ρ_≠].
struct RegionPoint {
  Rational alpha;
  Rational beta;
};

RegionSlice region_boundary(const Partition& mu, const Rational& alpha);

/// Weight t of Π_= = (1 − α)Π_(n) + t(I − Π_(n)) achieving (α, β0).
/// InfeasibleError when β0 lies outside the region.
Rational region_mixture_weight(const Partition& mu, const Rational& alpha, const Rational& beta0);

/// The four corner points: permutation test, trivial test, always-equal, anti-test.
std::vector<RegionPoint> region_vertices(const Partition& mu);

struct SwapComparison {
  int pairs = 0;
  Rational p_swap;
  Rational p_perm;
};

/// Parallel Swap tests on n pairs versus the permutation test on 2n registers, p = 1/2.
SwapComparison swap_vs_perm(int pairs);

}  // namespace qsi
