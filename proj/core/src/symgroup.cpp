#include "qsi/symgroup.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>

namespace qsi {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw DomainError("Perm: images do not form a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k] - 1, to = cyc[(k + 1) % cyc.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n) throw DomainError("Perm::from_cycles: point out of range");
      if (used[static_cast<std::size_t>(from)]) throw DomainError("Perm::from_cycles: cycles are not disjoint");
      used[static_cast<std::size_t>(from)] = true;
      img[static_cast<std::size_t>(from)] = to;
    }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(inv));
}

int Perm::fixed_points() const {
  int f = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == static_cast<int>(i)) ++f;
  return f;
}

int Perm::cycle_count() const { return cycle_type(*this).length(); }

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DomainError("Perm product: degree mismatch");
  std::vector<int> img(b.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  Perm out;
  out.images_ = std::move(img);
  return out;
}

CycleType cycle_type(const Perm& p) {
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p(static_cast<int>(j)))) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_content(std::move(lengths));
}

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama on beta-sets: a rim hook of length r corresponds to
// moving one bead from position b to the empty position b - r, with sign
// (-1)^(beads strictly between).

namespace {

std::shared_mutex g_char_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> g_char_memo;

BigInt mn_character(const std::vector<int>& lambda, const std::vector<int>& cycles, std::size_t next) {
  if (next == cycles.size()) return lambda.empty() ? 1 : 0;

  std::pair key{lambda, std::vector<int>(cycles.begin() + static_cast<std::ptrdiff_t>(next), cycles.end())};
  {
    std::shared_lock lock(g_char_mutex);
    if (auto it = g_char_memo.find(key); it != g_char_memo.end()) return it->second;
  }

  const int r = cycles[next];
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
  const std::set<int> beads(beta.begin(), beta.end());

  BigInt total = 0;
  for (int b : beta) {
    const int target = b - r;
    if (target < 0 || beads.count(target)) continue;
    int between = 0;
    for (int other : beta)
      if (other > target && other < b) ++between;
    std::vector<int> moved;
    for (int x : beta) moved.push_back(x == b ? target : x);
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> reduced;
    for (int i = 0; i < len; ++i) reduced.push_back(moved[static_cast<std::size_t>(i)] - (len - 1 - i));
    while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
    BigInt sub = mn_character(reduced, cycles, next + 1);
    if (between % 2) total -= sub;
    else total += sub;
  }

  std::unique_lock lock(g_char_mutex);
  g_char_memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt character(const Partition& lambda, const CycleType& c) {
  if (lambda.size() != c.size()) throw DomainError("character: |lambda| != |cycle type|");
  return mn_character(lambda.parts(), c.parts(), 0);
}

// ---------------------------------------------------------------------------

int SubgroupSpec::degree() const {
  return std::visit(
      [](const auto& k) -> int {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, IteratedWreath2>) return 1 << k.m;
        else return k.n;
      },
      kind);
}

std::string SubgroupSpec::name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Symmetric>) return "symmetric(" + std::to_string(k.n) + ")";
        else if constexpr (std::is_same_v<T, Cyclic>) return "cyclic(" + std::to_string(k.n) + ")";
        else if constexpr (std::is_same_v<T, IteratedWreath2>) return "iterated_wreath_2(" + std::to_string(k.m) + ")";
        else return "generators(" + std::to_string(k.n) + ";" + std::to_string(k.generators.size()) + ")";
      },
      kind);
}

std::vector<Perm> tree_block_swaps(int m) {
  if (m < 0) throw DomainError("tree_block_swaps: negative depth");
  const int n = 1 << m;
  std::vector<Perm> gens;
  for (int level = 1; level <= m; ++level) {
    const int half = 1 << (level - 1);
    for (int offset = 0; offset < n; offset += 2 * half) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      for (int i = 0; i < half; ++i) {
        img[static_cast<std::size_t>(offset + i)] = offset + half + i;
        img[static_cast<std::size_t>(offset + half + i)] = offset + i;
      }
      gens.emplace_back(std::move(img));
    }
  }
  return gens;
}

std::vector<Perm> young_subgroup_generators(const std::vector<int>& block_sizes) {
  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  std::vector<Perm> gens;
  int start = 0;
  for (int size : block_sizes) {
    for (int i = start; i + 1 < start + size; ++i) gens.push_back(Perm::from_cycles(n, {{i + 1, i + 2}}));
    start += size;
  }
  return gens;
}

std::vector<Perm> close_under_product(int n, const std::vector<Perm>& generators, std::size_t budget) {
  for (const auto& g : generators)
    if (g.degree() != n) throw DomainError("close_under_product: generator on the wrong ground set");
  std::set<Perm> seen{Perm::identity(n)};
  std::deque<Perm> frontier{Perm::identity(n)};
  while (!frontier.empty()) {
    Perm g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      Perm h = s * g;
      if (seen.insert(h).second) {
        if (seen.size() > budget) throw BudgetError("subgroup closure exceeded the element budget", seen.size(), budget);
        frontier.push_back(std::move(h));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> expand_subgroup(const SubgroupSpec& spec, std::size_t budget) {
  return std::visit(
      [budget](const auto& k) -> std::vector<Perm> {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SubgroupSpec::Symmetric>) {
          if (k.n < 0) throw DomainError("symmetric group on a negative number of points");
          BigInt order = factorial(k.n);
          if (order > budget) throw BudgetError("symmetric group too large", order.get_ui(), budget);
          std::vector<int> img(static_cast<std::size_t>(k.n));
          std::iota(img.begin(), img.end(), 0);
          std::vector<Perm> out;
          do {
            out.emplace_back(img);
          } while (std::next_permutation(img.begin(), img.end()));
          return out;
        } else if constexpr (std::is_same_v<T, SubgroupSpec::Cyclic>) {
          if (k.n < 1) throw DomainError("cyclic group needs at least one point");
          if (static_cast<std::size_t>(k.n) > budget) throw BudgetError("cyclic group too large", static_cast<std::size_t>(k.n), budget);
          std::vector<Perm> out;
          for (int shift = 0; shift < k.n; ++shift) {
            std::vector<int> img(static_cast<std::size_t>(k.n));
            for (int i = 0; i < k.n; ++i) img[static_cast<std::size_t>(i)] = (i + shift) % k.n;
            out.emplace_back(std::move(img));
          }
          std::sort(out.begin(), out.end());
          return out;
        } else if constexpr (std::is_same_v<T, SubgroupSpec::IteratedWreath2>) {
          return close_under_product(1 << k.m, tree_block_swaps(k.m), budget);
        } else {
          return close_under_product(k.n, k.generators, budget);
        }
      },
      spec.kind);
}

std::map<CycleType, std::size_t> cycle_type_histogram(const std::vector<Perm>& elements) {
  std::map<CycleType, std::size_t> hist;
  for (const auto& g : elements) ++hist[cycle_type(g)];
  return hist;
}

BigInt trivial_multiplicity(const std::vector<Perm>& group, const Partition& lambda) {
  if (group.empty()) throw DomainError("trivial_multiplicity: empty group");
  if (group.front().degree() != lambda.size())
    throw DomainError("trivial_multiplicity: partition size does not match the ground set");
  BigInt sum = 0;
  for (const auto& [type, count] : cycle_type_histogram(group)) sum += character(lambda, type) * BigInt(count);
  const BigInt order(group.size());
  if (sum % order != 0 || sum < 0)
    throw InternalError("Burnside average of chi^" + lambda.str() + " is not a nonnegative integer");
  return sum / order;
}

BigInt trivial_multiplicity(const SubgroupSpec& spec, const Partition& lambda) {
  if (spec.degree() != lambda.size())
    throw DomainError("trivial_multiplicity: partition size does not match the ground set");
  return trivial_multiplicity(expand_subgroup(spec), lambda);
}

}  // namespace qsi
