#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsi/ist.hpp"
#include "qsi/partitions.hpp"
#include "qsi/tensor.hpp"

namespace qsi::verify {

enum class Suite {
  lemma1,           // commutant oracle vs closed-form twirled states
  pair_optimality,  // two-species permutation test at p = 1/2
  sdp,              // dual certificates over the prior grid
  gtest,            // G-test formula vs operator trace
  circle,           // three routes to the cyclic multiplicities
  ist,              // tree simulator vs click counting
  recurrence,       // click sums vs γ, bound vs exact soundness
  gamma,            // polynomial degree, symmetry, closed forms
  wreath,           // tree acceptance vs wreath-group projector
  region,           // (α, β) boundary by explicit measurements
  swap,             // parallel Swap tests vs permutation test
};

std::string to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

struct Cell {
  std::string key;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  Suite suite = Suite::lemma1;
  std::vector<Cell> cells;
  /// Cells left out because d^n exceeded the configured budget.
  std::vector<std::string> skipped;

  bool pass() const;
  const Cell* first_failure() const;
};

/// Sweep limits. Negative values select the suite's default range.
struct Options {
  int n_max = -1;
  int d_max = -1;
  int h_max = -1;
  int m_max = -1;
  std::optional<Partition> mu;
  std::size_t dim_budget = kDefaultDimensionBudget;
  std::size_t state_budget = kDefaultStateBudget;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

/// Runs one suite. Cell order depends only on the options, never on
/// scheduling.
SuiteResult run(Suite suite, const Options& opts);

}  // namespace qsi::verify
