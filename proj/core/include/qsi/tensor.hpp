#pragma once

#include <cstddef>
#include <vector>

#include "qsi/exact.hpp"
#include "qsi/partitions.hpp"
#include "qsi/symgroup.hpp"

namespace qsi {

/// Largest tensor-space dimension d^n for which dense operators are built.
inline constexpr std::size_t kDefaultDimensionBudget = 4096;
/// Largest number of permutation operators in a Gram system.
inline constexpr std::size_t kDefaultGramBudget = 720;

/// d^n, or BudgetError when it exceeds `budget`.
std::size_t tensor_dimension(int n, int d, std::size_t budget = kDefaultDimensionBudget);

/// Operator on (C^d)^{⊗n}. Basis index of e_{i_1} ⊗ ... ⊗ e_{i_n} is the
/// base-d number i_1 i_2 ... i_n (register 1 most significant).
struct TensorOperator {
  Matrix op;
  int n = 0;
  int d = 0;

  std::size_t dim() const { return op.rows(); }
};

/// Index map of ψ(π): basis state y goes to ψ(π)y. The content of register k
/// moves to register π(k), which makes ψ a homomorphism: ψ(πσ) = ψ(π)ψ(σ).
std::vector<std::size_t> basis_action(const Perm& p, int d);

TensorOperator perm_operator(const Perm& p, int d, std::size_t budget = kDefaultDimensionBudget);

/// Π_λ = (d_λ / n!) Σ_π χ^λ(π) ψ(π).
TensorOperator isotypic_projector(const Partition& lambda, int d, std::size_t budget = kDefaultDimensionBudget);

/// Π_G = (1/|G|) Σ_{g∈G} ψ(g) for an explicit element list on n points.
TensorOperator group_average(const std::vector<Perm>& group, int d, std::size_t budget = kDefaultDimensionBudget);
TensorOperator group_projector(const SubgroupSpec& spec, int d, std::size_t budget = kDefaultDimensionBudget);

/// Π_(μ1) ⊗ Π_(μ2) ⊗ ..., symmetrizers on consecutive register blocks.
TensorOperator block_symmetrizer(const std::vector<int>& block_sizes, int d,
                                 std::size_t budget = kDefaultDimensionBudget);

/// |x⟩⟨x| for a computational-basis word x with labels in [0, d).
TensorOperator product_state(const std::vector<int>& word, int d, std::size_t budget = kDefaultDimensionBudget);

/// The word 0^{μ1} 1^{μ2} ... (d-1)^{μd}.
std::vector<int> canonical_word(const Partition& mu);

struct RhoStates {
  TensorOperator rho_neq;          // Haar twirl of the ordered product state
  TensorOperator rho_neq_twirled;  // additionally averaged over S_n
  TensorOperator rho_eq;           // Π_(n) / binom(n+d-1, n)
};

/// Closed forms of the Haar-twirled states built from isotypic projectors,
/// Kostka numbers and irrep dimensions. DomainError when ℓ(μ) > d.
RhoStates rho_states(const Partition& mu, int d, std::size_t budget = kDefaultDimensionBudget);
TensorOperator rho_eq(int n, int d, std::size_t budget = kDefaultDimensionBudget);
/// Only the S_n-averaged state (1/binom(n,μ)) Σ_λ (K_λμ / m_λ) Π_λ.
TensorOperator rho_neq_twirled(const Partition& mu, int d, std::size_t budget = kDefaultDimensionBudget);

/// (1/n!) Σ_π ψ(π) X ψ(π)^T.
TensorOperator symmetric_group_twirl(const TensorOperator& x);

/// Hilbert–Schmidt orthogonal projection of X onto span{ψ(π) : π ∈ S_n},
/// obtained by solving the Gram system of the permutation operators. For
/// d < n the Gram matrix is singular; the consistent system is still solved
/// exactly and the projection is unique.
TensorOperator commutant_projection(const TensorOperator& x, std::size_t gram_budget = kDefaultGramBudget);

/// O^{⊗n} for a d×d matrix O.
Matrix tensor_power(const Matrix& o, int n, std::size_t budget = kDefaultDimensionBudget);

/// Commutator AB − BA.
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace qsi
