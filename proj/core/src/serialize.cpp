#include "qsi/serialize.hpp"

#include <charconv>

namespace qsi {

Json rational_json(const Rational& x) { return Json{{"exact", to_string(x)}, {"approx", to_decimal(x, 12)}}; }

Json partition_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition JSON must be an array of integers");
  return Partition(j.get<std::vector<int>>());
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
      throw DomainError("malformed partition '" + std::string(text) + "'");
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition::from_content(std::move(parts));
}

Json perm_json(const Perm& p) {
  Json arr = Json::array();
  for (int v : p.images()) arr.push_back(v + 1);
  return arr;
}

Perm perm_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("permutation JSON must be an image array");
  std::vector<int> img;
  for (const auto& v : j) img.push_back(v.get<int>() - 1);
  return Perm(std::move(img));
}

Json subgroup_json(const SubgroupSpec& spec) {
  return std::visit(
      [](const auto& k) -> Json {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SubgroupSpec::Symmetric>) return Json{{"symmetric", k.n}};
        else if constexpr (std::is_same_v<T, SubgroupSpec::Cyclic>) return Json{{"cyclic", k.n}};
        else if constexpr (std::is_same_v<T, SubgroupSpec::IteratedWreath2>) return Json{{"iterated_wreath_2", k.m}};
        else {
          Json perms = Json::array();
          for (const auto& g : k.generators) perms.push_back(perm_json(g));
          return Json{{"generators", Json{{"n", k.n}, {"perms", perms}}}};
        }
      },
      spec.kind);
}

SubgroupSpec subgroup_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw DomainError("subgroup JSON must be a single-key object");
  const std::string tag = j.begin().key();
  const Json& value = j.begin().value();
  if (tag == "symmetric") return SubgroupSpec::symmetric(value.get<int>());
  if (tag == "cyclic") return SubgroupSpec::cyclic(value.get<int>());
  if (tag == "iterated_wreath_2") return SubgroupSpec::iterated_wreath_2(value.get<int>());
  if (tag == "generators") {
    std::vector<Perm> gens;
    for (const auto& p : value.at("perms")) gens.push_back(perm_from_json(p));
    return SubgroupSpec::generated(value.at("n").get<int>(), std::move(gens));
  }
  throw DomainError("unknown subgroup tag '" + tag + "'");
}

SubgroupSpec parse_subgroup(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("group must look like 'cyclic:5'");
  const std::string_view tag = text.substr(0, colon);
  const std::string_view num = text.substr(colon + 1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
  if (ec != std::errc() || ptr != num.data() + num.size() || v < 0)
    throw DomainError("malformed group size in '" + std::string(text) + "'");
  if (tag == "symmetric") return SubgroupSpec::symmetric(v);
  if (tag == "cyclic") return SubgroupSpec::cyclic(v);
  if (tag == "wreath" || tag == "iterated_wreath_2") return SubgroupSpec::iterated_wreath_2(v);
  throw DomainError("unknown group '" + std::string(tag) + "'");
}

Json operator_json(const TensorOperator& op) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < op.op.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < op.op.cols(); ++j) row.push_back(to_string(op.op(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", op.n}, {"d", op.d}, {"entries", std::move(rows)}};
}

TensorOperator operator_from_json(const Json& j) {
  TensorOperator op;
  op.n = j.at("n").get<int>();
  op.d = j.at("d").get<int>();
  const auto& rows = j.at("entries");
  std::vector<std::vector<Rational>> grid;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(parse_rational(e.get<std::string>()));
    grid.push_back(std::move(r));
  }
  op.op = Matrix::from_rows(grid);
  if (op.op.rows() != tensor_dimension(op.n, op.d, SIZE_MAX) || !op.op.is_square())
    throw ShapeError("operator JSON: entries do not form a d^n square");
  return op;
}

Json report_json(const Partition& mu, const TestReport& r) {
  return Json{{"n", mu.size()},
              {"mu", partition_json(mu)},
              {"p", to_string(r.prior_p)},
              {"p_star", to_string(p_star(mu))},
              {"chosen_test", to_string(r.chosen_test)},
              {"tie", r.tie},
              {"completeness", to_string(r.completeness)},
              {"soundness", to_string(r.soundness)},
              {"avg_success", to_string(r.avg_success)},
              {"avg_success_approx", to_decimal(r.avg_success, 12)}};
}

Json certification_json(const DualWitness& w, const Certification& c, int d) {
  Json mins = Json::array();
  for (const auto* cert : {&c.eq_slack, &c.neq_slack}) {
    const auto m = cert->min_pivot();
    mins.push_back(m ? Json(to_string(*m)) : Json(nullptr));
  }
  return Json{{"mu", partition_json(w.mu)},
              {"d", d},
              {"p", to_string(w.p)},
              {"regime", to_string(w.regime)},
              {"gap", to_string(c.gap)},
              {"feasible", c.feasible},
              {"pivot_mins", mins}};
}

}  // namespace qsi
