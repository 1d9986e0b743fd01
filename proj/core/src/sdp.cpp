#include "qsi/sdp.hpp"

#include "qsi/analytic.hpp"

namespace qsi {

std::string to_string(Regime r) { return r == Regime::above_pstar ? "above_pstar" : "below_pstar"; }

namespace {

void check_inputs(const Partition& mu, const Rational& p) {
  if (mu.length() < 2) throw PromiseViolation("dual witness needs at least two distinct states, got mu = " + mu.str());
  if (p < 0 || p > 1) throw DomainError("prior p must lie in [0, 1], got " + to_string(p));
}

}  // namespace

std::shared_ptr<const RhoStates> make_states(const Partition& mu, int d, std::size_t budget) {
  return std::make_shared<const RhoStates>(rho_states(mu, d, budget));
}

DualWitness build_dual_witness(const Partition& mu, const Rational& p, int d, std::size_t budget) {
  check_inputs(mu, p);
  return build_dual_witness(make_states(mu, d, budget), mu, p);
}

DualWitness build_dual_witness(std::shared_ptr<const RhoStates> states, const Partition& mu, const Rational& p) {
  check_inputs(mu, p);
  DualWitness w;
  w.p = p;
  w.mu = mu;
  w.regime = p >= p_star(mu) ? Regime::above_pstar : Regime::below_pstar;
  Matrix y = states->rho_neq.op * (1 - p);
  if (w.regime == Regime::above_pstar) {
    const Rational weight = p - (1 - p) / Rational(multinomial(mu));
    y += states->rho_eq.op * weight;
  }
  w.y = {std::move(y), states->rho_neq.n, states->rho_neq.d};
  w.states = std::move(states);
  return w;
}

Rational primal_value(const RhoStates& states, const Rational& p, PrimalTest test) {
  if (test == PrimalTest::trivial) return (1 - p) * states.rho_neq.op.trace();
  const auto sym = isotypic_projector(Partition({states.rho_eq.n}), states.rho_eq.d, states.rho_eq.dim());
  const Rational accept_equal = trace_of_product(sym.op, states.rho_eq.op);
  const Rational reject_unequal = states.rho_neq.op.trace() - trace_of_product(sym.op, states.rho_neq.op);
  return p * accept_equal + (1 - p) * reject_unequal;
}

Rational primal_value(const Partition& mu, const Rational& p, int d, PrimalTest test, std::size_t budget) {
  if (p < 0 || p > 1) throw DomainError("prior p must lie in [0, 1], got " + to_string(p));
  return primal_value(rho_states(mu, d, budget), p, test);
}

Certification certify(const DualWitness& witness) {
  const auto& states = *witness.states;
  Certification c;
  c.eq_slack = psd_certificate(witness.y.op - states.rho_eq.op * witness.p);
  c.neq_slack = psd_certificate(witness.y.op - states.rho_neq.op * (1 - witness.p));
  c.dual_value = witness.y.op.trace();
  c.primal_value = primal_value(states, witness.p,
                                witness.regime == Regime::above_pstar ? PrimalTest::permutation : PrimalTest::trivial);
  c.gap = c.dual_value - c.primal_value;
  c.feasible = c.eq_slack.is_psd() && c.neq_slack.is_psd() && sgn(c.gap) == 0;
  return c;
}

TensorOperator slack_decomposition(const Partition& mu, int d, std::size_t budget) {
  const int n = mu.size();
  const std::size_t dim = tensor_dimension(n, d, budget);
  Matrix sum(dim, dim);
  for (const auto& lambda : partitions_of(n, d)) {
    if (lambda.length() == 1) continue;
    sum += isotypic_projector(lambda, d, budget).op * ratio(dim_symmetric(lambda), dim_unitary(lambda, d));
  }
  const auto blocks = block_symmetrizer(mu.parts(), d, budget);
  return {blocks.op * sum * (Rational(1) / Rational(multinomial(mu))), n, d};
}

TensorOperator region_operator(const RhoStates& states, const Partition& mu) {
  return {states.rho_neq.op - states.rho_eq.op * (Rational(1) / Rational(multinomial(mu))), states.rho_neq.n,
          states.rho_neq.d};
}

}  // namespace qsi
