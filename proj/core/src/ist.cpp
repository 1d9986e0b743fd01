#include "qsi/ist.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace qsi {

Arrangement Arrangement::parse(std::string_view text) {
  Arrangement a;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
      throw DomainError("malformed arrangement '" + std::string(text) + "'");
    a.word.push_back(value);
    pos = comma + 1;
  }
  return a;
}

int Arrangement::weight() const {
  return static_cast<int>(std::count_if(word.begin(), word.end(), [](int x) { return x != 0; }));
}

int Arrangement::max_label() const { return word.empty() ? 0 : *std::max_element(word.begin(), word.end()); }

std::string Arrangement::str() const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

int tree_depth(int n) {
  if (n < 1 || (n & (n - 1)) != 0) throw DomainError("register count " + std::to_string(n) + " is not a power of two");
  int m = 0;
  while ((1 << m) < n) ++m;
  return m;
}

// ---------------------------------------------------------------------------

namespace {

std::shared_mutex g_gamma_mutex;
std::map<std::pair<int, int>, BigInt> g_gamma_memo;

}  // namespace

BigInt gamma(int h, int m) {
  if (h < 0 || m < 0) throw DomainError("gamma: arguments must be nonnegative");
  if (h <= 1) return 1;
  if (m == 0) return 0;
  {
    std::shared_lock lock(g_gamma_mutex);
    if (auto it = g_gamma_memo.find({h, m}); it != g_gamma_memo.end()) return it->second;
  }
  BigInt value = 0;
  for (int k = 0; k <= h / 2; ++k) value += gamma(k, m - 1) * gamma(h - k, m - 1);
  // A tree with 2^m leaves cannot hold more than 2^m orthogonal states.
  if (m < 31 && h > (1 << m) && value != 0)
    throw InternalError("gamma(" + std::to_string(h) + "," + std::to_string(m) + ") should vanish");
  std::unique_lock lock(g_gamma_mutex);
  g_gamma_memo.emplace(std::pair{h, m}, value);
  return value;
}

BigInt gamma_symmetric(int h, int m) {
  if (m < 0 || m > 30) throw DomainError("gamma_symmetric: depth out of range");
  const int n = 1 << m;
  if (h < 0 || h > n) throw DomainError("gamma_symmetric: need 0 <= h <= 2^m");
  BigInt direct = gamma(h, m);
  if (direct != gamma(n - h, m))
    throw InternalError("gamma(" + std::to_string(h) + "," + std::to_string(m) + ") differs from its mirror");
  return direct;
}

int click_lower_bound(const Arrangement& a) {
  tree_depth(a.size());
  std::vector<int> counts;
  for (int label : a.word) {
    if (label != 0 && label != 1) throw DomainError("click_lower_bound expects a two-species 0/1 word");
    counts.push_back(label);
  }
  int clicks = 0;
  while (counts.size() > 1) {
    std::vector<int> merged;
    for (std::size_t i = 0; i + 1 < counts.size(); i += 2) {
      if (counts[i] != counts[i + 1]) ++clicks;
      merged.push_back(counts[i] + counts[i + 1]);
    }
    counts = std::move(merged);
  }
  return clicks;
}

// ---------------------------------------------------------------------------
// Branch simulator. Only the all-zero outcome branch accepts, so the
// accepting amplitude is obtained by applying (I + SWAP)/2 at each node.
// Nodes acting on disjoint registers commute, so each subtree is processed
// on its own and joined at its parent; a subtree state is a sparse map from
// packed register contents to a (nonnegative, dyadic) amplitude.

namespace {

using SparseState = std::unordered_map<std::uint64_t, Rational>;

struct Packing {
  int bits;  // per register
};

SparseState subtree_state(const std::vector<int>& word, std::size_t begin, std::size_t len, const Packing& pk) {
  if (len == 1) return {{static_cast<std::uint64_t>(word[begin]), Rational(1)}};
  const std::size_t half = len / 2;
  const SparseState left = subtree_state(word, begin, half, pk);
  const SparseState right = subtree_state(word, begin + half, half, pk);
  const unsigned shift = static_cast<unsigned>(pk.bits) * static_cast<unsigned>(half);
  SparseState joined;
  joined.reserve(2 * left.size() * right.size());
  Rational amp;
  for (const auto& [lk, la] : left)
    for (const auto& [rk, ra] : right) {
      mpq_mul(amp.get_mpq_t(), la.get_mpq_t(), ra.get_mpq_t());
      amp /= 2;
      joined[(lk << shift) | rk] += amp;
      joined[(rk << shift) | lk] += amp;
    }
  return joined;
}

}  // namespace

Rational ist_accept_prob(const Arrangement& a, int d, std::size_t budget) {
  const int n = a.size();
  tree_depth(n);
  if (d < 2) throw DomainError("ist_accept_prob: local dimension must be at least 2");
  if (a.max_label() >= d) throw DomainError("ist_accept_prob: more species than the local dimension holds");
  BigInt dim;
  mpz_ui_pow_ui(dim.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
  if (dim > budget)
    throw BudgetError("state dimension d^n = " + dim.get_str() + " exceeds the simulation budget",
                      dim.fits_ulong_p() ? dim.get_ui() : SIZE_MAX, budget);
  Packing pk{1};
  while ((1 << pk.bits) < d) ++pk.bits;
  if (pk.bits * n > 64) {
    BigInt cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(64 / pk.bits));
    throw BudgetError("register contents do not fit a 64-bit key", dim.fits_ulong_p() ? dim.get_ui() : SIZE_MAX,
                      cap.fits_ulong_p() ? cap.get_ui() : SIZE_MAX);
  }

  const auto state = subtree_state(a.word, 0, static_cast<std::size_t>(n), pk);
  Rational norm = 0;
  for (const auto& [key, amp] : state) norm += amp * amp;
  return norm;
}

std::vector<std::vector<int>> words_of_weight(int n, int h) {
  if (h < 0 || h > n) return {};
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  std::fill(word.end() - h, word.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Rational ist_mean_accept(int n, int h, int d, std::size_t budget) {
  tree_depth(n);
  const auto words = words_of_weight(n, h);
  if (words.empty()) throw DomainError("ist_mean_accept: no words of the requested weight");
  Rational total = 0;
  for (const auto& w : words) total += ist_accept_prob(Arrangement{w}, d, budget);
  return total / Rational(BigInt(static_cast<unsigned long>(words.size())));
}

Rational ist_soundness_exact(int n, int h, int d, std::size_t budget) {
  tree_depth(n);
  if (h < 1 || 2 * h > n) throw PromiseViolation("ist_soundness_exact: need 1 <= h <= n/2");
  return 1 - ist_mean_accept(n, h, d, budget);
}

Rational ist_soundness_bound(int n, int h) {
  const int m = tree_depth(n);
  if (h < 1 || 2 * h > n) throw PromiseViolation("ist_soundness_bound: need 1 <= h <= n/2");
  return 1 - ratio(gamma(h, m), binomial(n, h));
}

MuBound general_mu_bound(const Partition& mu) {
  const int n = mu.size();
  const int m = tree_depth(n);
  if (mu.length() < 2) throw PromiseViolation("general_mu_bound: mu needs at least two parts");
  // Smallest starting index whose tail sum still fits in one half.
  int tail = 0;
  int h_star = 0;
  for (int i = mu.length() - 1; i >= 0; --i) {
    tail += mu[static_cast<std::size_t>(i)];
    if (2 * tail > n) break;
    h_star = tail;
  }
  return {h_star, 1 - ratio(gamma(h_star, m), binomial(n, h_star))};
}

std::optional<int> threshold_n0(int h, int n_max) {
  if (h < 1) throw DomainError("threshold_n0: need h >= 1");
  for (int m = 1; m < 31 && (1 << m) <= n_max; ++m) {
    const int n = 1 << m;
    if (n < 2 * h) continue;
    if (gamma(h, m) * n <= binomial(n, h)) return n;
  }
  return std::nullopt;
}

}  // namespace qsi
