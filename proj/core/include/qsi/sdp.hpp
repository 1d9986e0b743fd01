#pragma once

#include <memory>
#include <string>

#include "qsi/exact.hpp"
#include "qsi/partitions.hpp"
#include "qsi/tensor.hpp"

namespace qsi {

enum class Regime { above_pstar, below_pstar };

std::string to_string(Regime r);

/// Closed-form dual solution Y for the two-hypothesis discrimination SDP
///
///   minimize Tr[Y]  s.t.  Y ⪰ p ρ_=,  Y ⪰ (1 − p) ρ_≠^μ.
///
/// Above the threshold p*(μ), Y = (1 − p)ρ_≠ + (p − (1 − p)/binom(n,μ))ρ_=;
/// below it, Y = (1 − p)ρ_≠. At p = p*(μ) both expressions coincide and the
/// above-threshold regime is reported.
struct DualWitness {
  TensorOperator y;
  Regime regime = Regime::above_pstar;
  Rational p;
  Partition mu;
  std::shared_ptr<const RhoStates> states;
};

/// States depend only on (μ, d), so sweeps over p can share them.
std::shared_ptr<const RhoStates> make_states(const Partition& mu, int d, std::size_t budget = kDefaultDimensionBudget);

DualWitness build_dual_witness(const Partition& mu, const Rational& p, int d,
                               std::size_t budget = kDefaultDimensionBudget);
DualWitness build_dual_witness(std::shared_ptr<const RhoStates> states, const Partition& mu, const Rational& p);

enum class PrimalTest { permutation, trivial };

/// p·Tr[Π_= ρ_=] + (1 − p)·Tr[(I − Π_=) ρ_≠] with Π_= = Π_(n) or 0.
Rational primal_value(const RhoStates& states, const Rational& p, PrimalTest test);
Rational primal_value(const Partition& mu, const Rational& p, int d, PrimalTest test,
                      std::size_t budget = kDefaultDimensionBudget);

struct Certification {
  bool feasible = false;
  Rational gap;
  Rational dual_value;
  Rational primal_value;
  PsdCertificate eq_slack;   // Y − p ρ_=
  PsdCertificate neq_slack;  // Y − (1 − p) ρ_≠
};

/// Checks both dual constraints exactly and compares Tr[Y] with the value of
/// the matching primal measurement. Failure is reported, never thrown.
Certification certify(const DualWitness& witness);

/// (1/binom(n,μ)) Σ_{λ ≠ (n)} (d_λ / m_λ)(Π_(μ1) ⊗ ...) Π_λ, the slack
/// operator ρ_≠ − ρ_=/binom(n,μ) assembled term by term.
TensorOperator slack_decomposition(const Partition& mu, int d, std::size_t budget = kDefaultDimensionBudget);

/// ρ_≠ − ρ_=/binom(n,μ), the operator bounding the achievable region.
TensorOperator region_operator(const RhoStates& states, const Partition& mu);

}  // namespace qsi
