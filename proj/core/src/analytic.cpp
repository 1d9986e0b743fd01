#include "qsi/analytic.hpp"

namespace qsi {

namespace {

void require_probability(const Rational& p, const char* what) {
  if (p < 0 || p > 1) throw DomainError(std::string(what) + " must lie in [0, 1], got " + to_string(p));
}

void require_two_parts(const Partition& mu) {
  if (mu.length() < 2) throw PromiseViolation("promise needs at least two distinct states, got mu = " + mu.str());
}

}  // namespace

std::string to_string(ChosenTest t) {
  switch (t) {
    case ChosenTest::permutation: return "permutation";
    case ChosenTest::trivial: return "trivial";
    case ChosenTest::g_test: return "g_test";
    case ChosenTest::anti_test: return "anti_test";
    case ChosenTest::mixture: return "mixture";
  }
  return "unknown";
}

std::string to_string(CircleRoute r) {
  switch (r) {
    case CircleRoute::burnside: return "burnside";
    case CircleRoute::maj: return "maj";
    case CircleRoute::totient: return "totient";
  }
  return "unknown";
}

Rational p_star(const Partition& mu) { return Rational(1) / Rational(1 + multinomial(mu)); }

Rational average_success(const Rational& p, const Rational& completeness, const Rational& soundness) {
  return p * completeness + (1 - p) * soundness;
}

TestReport perm_test_report(const Partition& mu, const Rational& p) {
  require_two_parts(mu);
  require_probability(p, "prior p");
  const Rational threshold = p_star(mu);
  TestReport r;
  r.prior_p = p;
  if (p >= threshold) {
    r.completeness = 1;
    r.soundness = 1 - Rational(1) / Rational(multinomial(mu));
    r.chosen_test = ChosenTest::permutation;
    r.tie = p == threshold;
  } else {
    r.completeness = 0;
    r.soundness = 1;
    r.chosen_test = ChosenTest::trivial;
  }
  r.avg_success = average_success(p, r.completeness, r.soundness);
  return r;
}

Rational gtest_soundness(const SubgroupSpec& spec, const Partition& mu, int d) {
  require_two_parts(mu);
  const int n = mu.size();
  if (spec.degree() != n) throw DomainError("gtest_soundness: group acts on " + std::to_string(spec.degree()) +
                                            " points but |mu| = " + std::to_string(n));
  if (mu.length() > d) throw DomainError("gtest_soundness: mu has more than d parts");
  const auto group = expand_subgroup(spec);
  BigInt acc = 0;
  for (const auto& lambda : partitions_of(n, d)) {
    const auto k = kostka(lambda, mu);
    if (k == 0) continue;
    acc += BigInt(static_cast<unsigned long>(k)) * trivial_multiplicity(group, lambda);
  }
  return 1 - ratio(acc, multinomial(mu));
}

Rational gtest_soundness_trace(const SubgroupSpec& spec, const Partition& mu, int d, std::size_t budget) {
  require_two_parts(mu);
  if (spec.degree() != mu.size()) throw DomainError("gtest_soundness_trace: group degree differs from |mu|");
  const auto projector = group_projector(spec, d, budget);
  const auto state = rho_neq_twirled(mu, d, budget);
  return 1 - trace_of_product(projector.op, state.op);
}

GTestReport gtest_soundness_checked(const SubgroupSpec& spec, const Partition& mu, int d, std::size_t budget) {
  GTestReport report;
  report.formula = gtest_soundness(spec, mu, d);
  try {
    tensor_dimension(mu.size(), d, budget);
  } catch (const BudgetError&) {
    return report;
  }
  report.trace = gtest_soundness_trace(spec, mu, d, budget);
  report.trace_ran = true;
  return report;
}

int euler_totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational circle_rate(const Partition& lambda, CircleRoute route) {
  const int n = lambda.size();
  if (n < 1) throw DomainError("circle_rate: empty partition");
  const BigInt dim = dim_symmetric(lambda);
  switch (route) {
    case CircleRoute::burnside:
      return ratio(trivial_multiplicity(SubgroupSpec::cyclic(n), lambda), dim);
    case CircleRoute::maj:
      return ratio(BigInt(static_cast<unsigned long>(count_maj_zero(lambda, n))), dim);
    case CircleRoute::totient: {
      Rational sum = 0;
      for (int ell = 2; ell <= n; ++ell) {
        if (n % ell) continue;
        const CycleType type(std::vector<int>(static_cast<std::size_t>(n / ell), ell));
        sum += ratio(character(lambda, type) * euler_totient(ell), dim);
      }
      return (1 + sum) / n;
    }
  }
  throw DomainError("circle_rate: unknown route");
}

RegionSlice region_boundary(const Partition& mu, const Rational& alpha) {
  require_two_parts(mu);
  require_probability(alpha, "alpha");
  const Rational inv = Rational(1) / Rational(multinomial(mu));
  return {alpha, (1 - alpha) * inv, 1 - alpha * inv, 0, 1};
}

Rational region_mixture_weight(const Partition& mu, const Rational& alpha, const Rational& beta0) {
  const auto slice = region_boundary(mu, alpha);
  if (beta0 < slice.beta_low || beta0 > slice.beta_high)
    throw InfeasibleError("beta = " + to_string(beta0) + " is outside [" + to_string(slice.beta_low) + ", " +
                          to_string(slice.beta_high) + "] at alpha = " + to_string(alpha));
  const Rational inv = Rational(1) / Rational(multinomial(mu));
  return (beta0 - slice.beta_low) / (1 - inv);
}

std::vector<RegionPoint> region_vertices(const Partition& mu) {
  require_two_parts(mu);
  const Rational inv = Rational(1) / Rational(multinomial(mu));
  return {{0, inv}, {1, 0}, {0, 1}, {1, 1 - inv}};
}

SwapComparison swap_vs_perm(int pairs) {
  if (pairs < 1) throw DomainError("swap_vs_perm: need at least one pair");
  SwapComparison c;
  c.pairs = pairs;
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(pairs + 1));
  c.p_swap = 1 - ratio(BigInt(1), pow2);
  c.p_perm = 1 - ratio(BigInt(1), 2 * binomial(2 * pairs, pairs));
  return c;
}

}  // namespace qsi
