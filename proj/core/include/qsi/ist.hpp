#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsi/exact.hpp"
#include "qsi/partitions.hpp"

namespace qsi {

/// Register contents of an Iterated Swap Tree input: label 0 is the majority
/// state, labels 1..k are mutually orthogonal species.
struct Arrangement {
  std::vector<int> word;

  /// Parses comma-separated labels, e.g. "1,0,0,0,1,0,1,1".
  static Arrangement parse(std::string_view text);

  int size() const { return static_cast<int>(word.size()); }
  /// Number of nonzero labels.
  int weight() const;
  int max_label() const;
  std::string str() const;
};

/// Largest d^n the branch simulator accepts. The simulator stores only the
/// support of the state, so this is far above the dense-operator budget.
inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 20;

/// log2(n) for a power of two, DomainError otherwise.
int tree_depth(int n);

/// γ(h, m) from its recurrence, memoized. Values are exact integers.
BigInt gamma(int h, int m);

/// γ(h, m) checked against the mirrored value γ(2^m − h, m); InternalError
/// on disagreement. Requires 0 <= h <= 2^m.
BigInt gamma_symmetric(int h, int m);

/// Guaranteed "possible clicks": per tree node, one click when the two
/// subtrees carry different numbers of orthogonal states.
int click_lower_bound(const Arrangement& a);

/// Probability that the tree returns "equal" on the product input encoded by
/// the word: the squared norm after applying (I + SWAP)/2 at every node.
Rational ist_accept_prob(const Arrangement& a, int d, std::size_t budget = kDefaultStateBudget);

/// All weight-h 0/1 words of length n in lexicographic order.
std::vector<std::vector<int>> words_of_weight(int n, int h);

/// Mean acceptance over the C(n, h) weight-h words.
Rational ist_mean_accept(int n, int h, int d, std::size_t budget = kDefaultStateBudget);

/// 1 − mean acceptance. PromiseViolation unless 1 <= h <= n/2.
Rational ist_soundness_exact(int n, int h, int d, std::size_t budget = kDefaultStateBudget);

/// 1 − γ(h, log2 n) / C(n, h).
Rational ist_soundness_bound(int n, int h);

struct MuBound {
  int h_star = 0;
  Rational bound;
};

/// Merges the smallest parts of μ into one block of size h* <= n/2 and
/// returns the two-species bound for h*.
MuBound general_mu_bound(const Partition& mu);

/// Smallest power of two n <= n_max with n >= 2h and γ(h, log2 n)/C(n, h) <= 1/n.
std::optional<int> threshold_n0(int h, int n_max);

}  // namespace qsi
