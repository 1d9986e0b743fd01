#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qsi/analytic.hpp"
#include "qsi/exact.hpp"
#include "qsi/ist.hpp"
#include "qsi/partitions.hpp"
#include "qsi/sdp.hpp"
#include "qsi/symgroup.hpp"
#include "qsi/tensor.hpp"

namespace qsi {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Exact value as {"exact": "p/q", "approx": "0.75..."}; the decimal is
/// advisory only.
Json rational_json(const Rational& x);

Json partition_json(const Partition& p);
Partition partition_from_json(const Json& j);
/// "3,1" -> (3,1). Content order is normalized.
Partition parse_partition(std::string_view text);

/// One-line 1-indexed image array.
Json perm_json(const Perm& p);
Perm perm_from_json(const Json& j);

/// Tagged form: {"symmetric": 5}, {"cyclic": 5}, {"iterated_wreath_2": 3},
/// {"generators": {"n": 4, "perms": [[2,1,3,4], ...]}}.
Json subgroup_json(const SubgroupSpec& spec);
SubgroupSpec subgroup_from_json(const Json& j);
/// Short CLI form: "symmetric:5", "cyclic:5", "wreath:3".
SubgroupSpec parse_subgroup(std::string_view text);

/// {n, d, entries: [["p/q", ...], ...]}.
Json operator_json(const TensorOperator& op);
TensorOperator operator_from_json(const Json& j);

Json report_json(const Partition& mu, const TestReport& r);
Json certification_json(const DualWitness& w, const Certification& c, int d);

}  // namespace qsi
