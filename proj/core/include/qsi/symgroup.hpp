#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qsi/exact.hpp"
#include "qsi/partitions.hpp"

namespace qsi {

/// Permutation of {0, ..., n-1}; images[i] = π(i).
class Perm {
 public:
  Perm() = default;
  /// Throws DomainError unless `images` is a bijection on {0..n-1}.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  /// Builds from 1-indexed disjoint cycles, e.g. {{1,3},{2,4}} for (1 3)(2 4).
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  int fixed_points() const;
  int cycle_count() const;

  /// Composition: (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

using CycleType = Partition;

CycleType cycle_type(const Perm& p);

/// χ^λ at the class with cycle type c, by the Murnaghan–Nakayama rule.
/// Results are memoized; safe to call concurrently.
BigInt character(const Partition& lambda, const CycleType& c);

/// Symbolic subgroup of S_n.
struct SubgroupSpec {
  struct Symmetric {
    int n;
  };
  struct Cyclic {
    int n;
  };
  /// Automorphisms of the complete binary tree with 2^m leaves.
  struct IteratedWreath2 {
    int m;
  };
  struct Generated {
    int n;
    std::vector<Perm> generators;
  };
  std::variant<Symmetric, Cyclic, IteratedWreath2, Generated> kind;

  static SubgroupSpec symmetric(int n) { return {Symmetric{n}}; }
  static SubgroupSpec cyclic(int n) { return {Cyclic{n}}; }
  static SubgroupSpec iterated_wreath_2(int m) { return {IteratedWreath2{m}}; }
  static SubgroupSpec generated(int n, std::vector<Perm> gens) { return {Generated{n, std::move(gens)}}; }

  /// Number of points acted on.
  int degree() const;
  std::string name() const;
};

inline constexpr std::size_t kDefaultElementBudget = 1'000'000;

/// The canonical generators of the tree automorphism group: 2^m − 1 block
/// swaps, leaf pairs first, then adjacent 2-blocks, up to the two halves.
std::vector<Perm> tree_block_swaps(int m);

/// Generators of S_{μ1} × S_{μ2} × ... acting on consecutive blocks of points.
std::vector<Perm> young_subgroup_generators(const std::vector<int>& block_sizes);

/// Closure of a generating set under composition, breadth first from the identity.
std::vector<Perm> close_under_product(int n, const std::vector<Perm>& generators,
                                      std::size_t budget = kDefaultElementBudget);

/// Full element list, duplicate free, sorted. Throws BudgetError past `budget`.
std::vector<Perm> expand_subgroup(const SubgroupSpec& spec, std::size_t budget = kDefaultElementBudget);

/// Class sizes of a group element list keyed by cycle type.
std::map<CycleType, std::size_t> cycle_type_histogram(const std::vector<Perm>& elements);

/// r^G_λ: multiplicity of the trivial G-representation inside the S_n irrep λ,
/// as the Burnside average of χ^λ over G.
BigInt trivial_multiplicity(const std::vector<Perm>& group, const Partition& lambda);
BigInt trivial_multiplicity(const SubgroupSpec& spec, const Partition& lambda);

}  // namespace qsi
