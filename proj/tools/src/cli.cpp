#include "qsi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "qsi/analytic.hpp"
#include "qsi/serialize.hpp"

namespace qsi::cli {

namespace {

// A command's output in both shapes: a JSON document and a flat table for
// the csv/table formats.
struct Report {
  Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_report(const Report& r, Format f, std::ostream& os) {
  if (f == Format::json) {
    os << r.json.dump(2) << '\n';
    return;
  }
  if (f == Format::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
      os << '\n';
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
    return;
  }
  std::vector<std::size_t> width(r.header.size());
  for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      text += cells[i];
      if (i + 1 < cells.size()) text += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << text << '\n';
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
}

Json header_json(const char* command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

std::string mu_text(const Partition& mu) { return partition_json(mu).dump(); }

std::string opt_text(const std::optional<Rational>& x) { return x ? to_string(*x) : std::string("-"); }

template <class T>
const T& require(const std::optional<T>& v, const char* flag, const char* command) {
  if (!v) throw CLI::ValidationError(std::string(command) + " requires " + flag);
  return *v;
}

std::vector<Rational> default_priors(const Partition& mu) {
  const Rational ps = p_star(mu);
  return {Rational(0), ps / 2, ps, (1 + ps) / 2, Rational(1)};
}

// ---------------------------------------------------------------------------

Report soundness(const RunConfig& c) {
  std::vector<Partition> mus;
  if (c.mu) {
    mus.push_back(*c.mu);
  } else {
    const int n = require(c.n, "--mu or --n", "soundness");
    for (const auto& mu : partitions_of(n, c.d.value_or(n)))
      if (mu.length() >= 2) mus.push_back(mu);
  }
  Report r;
  r.json = header_json("soundness");
  r.json["rows"] = Json::array();
  r.header = {"n", "d", "mu", "p", "completeness", "soundness", "avg", "avg_approx", "chosen_test"};
  for (const auto& mu : mus) {
    const int d = c.d.value_or(mu.length());
    if (d < mu.length())
      throw DomainError("mu " + mu.str() + " needs local dimension at least " + std::to_string(mu.length()));
    for (const auto& p : c.p ? std::vector<Rational>{*c.p} : default_priors(mu)) {
      const auto rep = perm_test_report(mu, p);
      Json row = report_json(mu, rep);
      row["d"] = d;
      r.json["rows"].push_back(std::move(row));
      r.rows.push_back({std::to_string(mu.size()), std::to_string(d), mu_text(mu), to_string(p),
                        to_string(rep.completeness), to_string(rep.soundness), to_string(rep.avg_success),
                        to_decimal(rep.avg_success, 12), to_string(rep.chosen_test) + (rep.tie ? " (tie)" : "")});
    }
  }
  return r;
}

Report gtest(const RunConfig& c, bool& agree) {
  const auto& spec = require(c.group, "--group", "gtest");
  const auto& mu = require(c.mu, "--mu", "gtest");
  if (mu.size() != spec.degree())
    throw DomainError("mu " + mu.str() + " has size " + std::to_string(mu.size()) + " but the group acts on " +
                      std::to_string(spec.degree()) + " points");
  const int d = c.d.value_or(std::max(2, mu.length()));
  const auto rep = gtest_soundness_checked(spec, mu, d, c.dim_budget);
  agree = rep.agree();
  Report r;
  r.json = header_json("gtest");
  r.json["group"] = subgroup_json(spec);
  r.json["mu"] = partition_json(mu);
  r.json["d"] = d;
  r.json["soundness"] = to_string(rep.formula);
  r.json["soundness_approx"] = to_decimal(rep.formula, 12);
  r.json["trace"] = rep.trace ? Json(to_string(*rep.trace)) : Json(nullptr);
  r.json["paths"] = Json{{"formula", rep.formula_ran}, {"trace", rep.trace_ran}};
  r.json["agree"] = agree;
  r.header = {"group", "mu", "d", "formula", "trace", "agree", "formula_approx"};
  r.rows.push_back({spec.name(), mu_text(mu), std::to_string(d), to_string(rep.formula), opt_text(rep.trace),
                    rep.trace ? (agree ? "yes" : "NO") : "not run", to_decimal(rep.formula, 12)});
  return r;
}

Report ist_word(const RunConfig& c) {
  const auto a = Arrangement::parse(*c.word);
  const int d = c.d.value_or(std::max(2, a.max_label() + 1));
  const Rational accept = ist_accept_prob(a, d, c.state_budget);
  Report r;
  r.json = header_json("ist");
  r.json["word"] = a.str();
  r.json["n"] = a.size();
  r.json["d"] = d;
  r.json["accept"] = to_string(accept);
  std::string clicks = "-";
  if (a.max_label() <= 1) {
    const int k = click_lower_bound(a);
    Rational cap(1);
    cap.get_den() <<= static_cast<unsigned>(k);
    r.json["clicks"] = k;
    r.json["click_cap"] = to_string(cap);
    clicks = std::to_string(k);
  }
  r.header = {"word", "d", "accept", "clicks", "accept_approx"};
  r.rows.push_back({a.str(), std::to_string(d), to_string(accept), clicks, to_decimal(accept, 12)});
  return r;
}

Report ist(const RunConfig& c) {
  if (c.word) return ist_word(c);
  const int n = require(c.n, "--n or --word", "ist");
  const int h = require(c.h, "--h", "ist");
  const int d = c.d.value_or(2);
  const int m = tree_depth(n);
  const Rational exact = ist_soundness_exact(n, h, d, c.state_budget);
  const Rational bound = ist_soundness_bound(n, h);
  const Rational perm = 1 - ratio(1, binomial(n, h));
  std::optional<Rational> wreath;
  try {
    tensor_dimension(n, d, c.dim_budget);
    wreath = gtest_soundness_trace(SubgroupSpec::iterated_wreath_2(m), Partition{n - h, h}, d, c.dim_budget);
  } catch (const BudgetError&) {
  }
  Report r;
  r.json = header_json("ist");
  r.json["n"] = n;
  r.json["h"] = h;
  r.json["d"] = d;
  r.json["exact"] = to_string(exact);
  r.json["bound"] = to_string(bound);
  r.json["wreath_trace"] = wreath ? Json(to_string(*wreath)) : Json(nullptr);
  r.json["perm_optimum"] = to_string(perm);
  r.json["gap_to_optimum"] = to_string(perm - exact);
  r.json["exact_approx"] = to_decimal(exact, 12);
  r.header = {"n", "h", "d", "exact", "bound", "wreath_trace", "perm_optimum", "exact_approx"};
  r.rows.push_back({std::to_string(n), std::to_string(h), std::to_string(d), to_string(exact), to_string(bound),
                    opt_text(wreath), to_string(perm), to_decimal(exact, 12)});
  return r;
}

Report region(const RunConfig& c) {
  const auto& mu = require(c.mu, "--mu", "region");
  if (c.alpha_steps < 1) throw DomainError("--alpha-steps must be positive");
  Report r;
  r.json = header_json("region");
  r.json["mu"] = partition_json(mu);
  r.json["slices"] = Json::array();
  r.header = {"alpha", "beta_low", "beta_high", "t_low", "t_high", "beta_low_approx", "beta_high_approx"};
  for (int i = 0; i <= c.alpha_steps; ++i) {
    Rational a(i, c.alpha_steps);
    a.canonicalize();
    const auto s = region_boundary(mu, a);
    r.json["slices"].push_back(Json{{"alpha", to_string(a)},
                                    {"beta_low", to_string(s.beta_low)},
                                    {"beta_high", to_string(s.beta_high)},
                                    {"t_low", to_string(s.t_low)},
                                    {"t_high", to_string(s.t_high)}});
    r.rows.push_back({to_string(a), to_string(s.beta_low), to_string(s.beta_high), to_string(s.t_low),
                      to_string(s.t_high), to_decimal(s.beta_low, 12), to_decimal(s.beta_high, 12)});
  }
  Json vertices = Json::array();
  for (const auto& v : region_vertices(mu))
    vertices.push_back(Json{{"alpha", to_string(v.alpha)}, {"beta", to_string(v.beta)}});
  r.json["vertices"] = std::move(vertices);
  return r;
}

Report compare_swap(const RunConfig& c) {
  if (c.pairs_max < 1) throw DomainError("--n-max must be at least 1");
  Report r;
  r.json = header_json("compare-swap");
  r.json["rows"] = Json::array();
  r.header = {"pairs", "p_swap", "p_perm", "p_swap_approx", "p_perm_approx"};
  for (int k = 1; k <= c.pairs_max; ++k) {
    const auto s = swap_vs_perm(k);
    r.json["rows"].push_back(Json{{"pairs", k}, {"p_swap", to_string(s.p_swap)}, {"p_perm", to_string(s.p_perm)}});
    r.rows.push_back({std::to_string(k), to_string(s.p_swap), to_string(s.p_perm), to_decimal(s.p_swap, 12),
                      to_decimal(s.p_perm, 12)});
  }
  return r;
}

Report run_verify(const RunConfig& c, const verify::Cell** failure, std::string& failed_suite,
                  std::vector<verify::SuiteResult>& keep) {
  auto opts = c.sweep;
  opts.dim_budget = c.dim_budget;
  opts.state_budget = c.state_budget;
  const std::vector<verify::Suite> suites = c.suite ? std::vector{*c.suite} : verify::all_suites();
  Report r;
  r.json = header_json("verify");
  r.json["suites"] = Json::array();
  r.header = {"suite", "status", "cell", "detail"};
  keep.reserve(suites.size());
  bool all_pass = true;
  for (const auto s : suites) {
    keep.push_back(verify::run(s, opts));
    const auto& res = keep.back();
    Json cells = Json::array();
    for (const auto& cell : res.cells) {
      cells.push_back(Json{{"key", cell.key}, {"pass", cell.pass}, {"detail", cell.detail}});
      r.rows.push_back({verify::to_string(s), cell.pass ? "PASS" : "FAIL", cell.key, cell.detail});
    }
    for (const auto& sk : res.skipped) r.rows.push_back({verify::to_string(s), "SKIP", sk, "over budget"});
    r.json["suites"].push_back(Json{{"suite", verify::to_string(s)},
                                    {"pass", res.pass()},
                                    {"cells", std::move(cells)},
                                    {"skipped", res.skipped}});
    if (!res.pass() && !*failure) {
      *failure = res.first_failure();
      failed_suite = verify::to_string(s);
    }
    all_pass = all_pass && res.pass();
  }
  r.json["pass"] = all_pass;
  return r;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    Report report;
    int code = kOk;
    std::vector<verify::SuiteResult> results;
    switch (c.command) {
      case Command::soundness: report = soundness(c); break;
      case Command::gtest: {
        bool agree = true;
        report = gtest(c, agree);
        if (!agree) {
          err << "check failed: gtest formula and trace disagree for " << c.group->name() << " mu="
              << mu_text(*c.mu) << '\n';
          code = kCheckFailed;
        }
        break;
      }
      case Command::ist: report = ist(c); break;
      case Command::region: report = region(c); break;
      case Command::compare_swap: report = compare_swap(c); break;
      case Command::verify: {
        const verify::Cell* failure = nullptr;
        std::string suite;
        report = run_verify(c, &failure, suite, results);
        if (failure) {
          err << "check failed: " << suite << " cell '" << failure->key << "': " << failure->detail << '\n';
          code = kCheckFailed;
        }
        break;
      }
    }
    if (c.out_path) {
      std::ofstream file(*c.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << *c.out_path << " for writing\n";
        return kUsage;
      }
      write_report(report, c.format, file);
    } else {
      write_report(report, c.format, out);
    }
    return code;
  } catch (const BudgetError& e) {
    err << "budget exceeded: d^n = " << e.requested() << " exceeds the limit " << e.limit() << '\n';
    return kBudget;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PromiseViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ShapeError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

namespace {

// String-typed flags are converted after parsing so that the exact-input
// rules (p/q only, validated partitions) produce our own messages.
struct RawFlags {
  std::string mu, p, group, format = "json", suite = "all";
};

template <class T, class F>
std::optional<T> convert(const std::string& text, F&& parse) {
  if (text.empty()) return std::nullopt;
  return parse(text);
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of quantum state identity tests"};
  app.name("qsi");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  RawFlags raw;
  int n = -1, d = -1, h = -1;
  app.add_option("--format", raw.format, "Output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--dim-budget", c.dim_budget, "Largest d^n for dense operators")->check(CLI::PositiveNumber);
  app.add_option("--state-budget", c.state_budget, "Largest d^n for the tree simulator")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out_path, "Write the report to a file");

  auto* sound = app.add_subcommand("soundness", "Optimal test and success probabilities over priors");
  sound->add_option("--mu", raw.mu, "Promise partition, e.g. 3,1");
  sound->add_option("--n", n, "All partitions of n with at least two parts");
  sound->add_option("--d", d, "Local dimension reported in the table");
  sound->add_option("--p", raw.p, "Prior as p/q; default grid includes p*");

  auto* gt = app.add_subcommand("gtest", "G-test soundness by formula and operator trace");
  gt->add_option("--group", raw.group, "symmetric:N, cyclic:N or wreath:M")->required();
  gt->add_option("--mu", raw.mu, "Promise partition")->required();
  gt->add_option("--d", d, "Local dimension");

  auto* is = app.add_subcommand("ist", "Iterated Swap Tree: exact soundness, bound and wreath trace");
  is->set_help_flag("--help", "Print this help message and exit");
  is->add_option("--n", n, "Number of registers (power of two)");
  is->add_option("--h", h, "Minority weight, 1 <= h <= n/2");
  is->add_option("--d", d, "Local dimension");
  is->add_option("--word", c.word, "Single arrangement, e.g. 1,0,0,0,1,0,1,1");

  auto* reg = app.add_subcommand("region", "Boundary of the achievable (alpha, beta) region");
  reg->add_option("--mu", raw.mu, "Promise partition")->required();
  reg->add_option("--alpha-steps", c.alpha_steps, "Samples alpha = i/steps");

  auto* ver = app.add_subcommand("verify", "Run invariant suites; exit 1 names the first failing cell");
  std::vector<std::string> suite_names{"all"};
  for (auto s : verify::all_suites()) suite_names.push_back(verify::to_string(s));
  ver->add_option("suite", raw.suite, "Suite name or all")->check(CLI::IsMember(suite_names));
  ver->add_option("--n-max", c.sweep.n_max, "Largest n in the sweep");
  ver->add_option("--d-max", c.sweep.d_max, "Largest local dimension");
  ver->add_option("--h-max", c.sweep.h_max, "Largest minority weight");
  ver->add_option("--m-max", c.sweep.m_max, "Largest tree depth");
  ver->add_option("--mu", raw.mu, "Promise partition (region suite)");
  ver->add_option("--jobs", c.sweep.jobs, "Worker threads, 0 for all cores");

  auto* cmp = app.add_subcommand("compare-swap", "Parallel Swap tests vs permutation test");
  cmp->add_option("--n-max", c.pairs_max, "Largest number of pairs");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(sound)) c.command = Command::soundness;
    else if (app.got_subcommand(gt)) c.command = Command::gtest;
    else if (app.got_subcommand(is)) c.command = Command::ist;
    else if (app.got_subcommand(reg)) c.command = Command::region;
    else if (app.got_subcommand(ver)) c.command = Command::verify;
    else c.command = Command::compare_swap;

    c.format = raw.format == "csv" ? Format::csv : raw.format == "table" ? Format::table : Format::json;
    if (n >= 0) c.n = n;
    if (d >= 0) c.d = d;
    if (h >= 0) c.h = h;
    c.mu = convert<Partition>(raw.mu, parse_partition);
    c.p = convert<Rational>(raw.p, parse_rational);
    c.group = convert<SubgroupSpec>(raw.group, parse_subgroup);
    c.sweep.mu = c.mu;
    if (raw.suite != "all") c.suite = verify::parse_suite(raw.suite);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'qsi --help' for usage\n";
    return kUsage;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return run(c, out, err);
}

}  // namespace qsi::cli
