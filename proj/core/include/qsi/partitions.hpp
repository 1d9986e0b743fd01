#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qsi/exact.hpp"

namespace qsi {

/// Integer partition with weakly decreasing positive parts. Trailing zeros
/// are dropped on construction.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError if `parts` is not weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary nonnegative content into a partition.
  static Partition from_content(std::vector<int> content);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// i-th part, 0-indexed; zero beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// λ ⊵ μ in dominance order (requires equal sizes).
  bool dominates(const Partition& other) const;

  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Standard Young tableau stored row by row.
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  /// Entries i with i+1 in a strictly lower row.
  std::vector<int> descents() const;
  int major_index() const;
};

/// All λ ⊢ n with ℓ(λ) <= max_len in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n, int max_len);
inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n > 0 ? n : 1); }

std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// d_λ by the hook-length formula.
BigInt dim_symmetric(const Partition& lambda);

/// m_{λ,d}, the dimension of the U(d) irrep. DomainError when ℓ(λ) > d.
BigInt dim_unitary(const Partition& lambda, int d);

/// Number of semistandard tableaux of shape λ with content `content`
/// (any order, zeros allowed). DomainError on size mismatch.
std::uint64_t kostka(const Partition& lambda, const std::vector<int>& content);
inline std::uint64_t kostka(const Partition& lambda, const Partition& mu) {
  return kostka(lambda, mu.parts());
}

/// n! / (μ₁! ⋯ μ_k!).
BigInt multinomial(const Partition& mu);
BigInt binomial(int n, int k);
BigInt factorial(int n);

/// |{T ∈ SYT(λ) : maj(T) ≡ 0 mod n}|.
std::uint64_t count_maj_zero(const Partition& lambda, int n);

}  // namespace qsi
