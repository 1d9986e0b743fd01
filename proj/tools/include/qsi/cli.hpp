#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "qsi/exact.hpp"
#include "qsi/ist.hpp"
#include "qsi/partitions.hpp"
#include "qsi/symgroup.hpp"
#include "qsi/tensor.hpp"
#include "qsi/verify.hpp"

namespace qsi::cli {

enum class Command { soundness, gtest, ist, region, verify, compare_swap };
enum class Format { json, csv, table };

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  Command command = Command::soundness;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<int> h;
  std::optional<Partition> mu;
  std::optional<Rational> p;
  std::optional<SubgroupSpec> group;
  /// Single IST input such as "1,0,0,0,1,0,1,1".
  std::optional<std::string> word;
  /// Empty runs every suite.
  std::optional<verify::Suite> suite;
  verify::Options sweep;
  int alpha_steps = 4;
  int pairs_max = 10;
  Format format = Format::json;
  std::size_t dim_budget = kDefaultDimensionBudget;
  std::size_t state_budget = kDefaultStateBudget;
  std::optional<std::string> out_path;
};

/// Executes one command, writing the report to `out` (or the configured file)
/// and diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. Usage errors return kUsage.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsi::cli
