#include "qsi/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "qsi/analytic.hpp"
#include "qsi/sdp.hpp"
#include "qsi/serialize.hpp"
#include "qsi/symgroup.hpp"

namespace qsi::verify {

namespace {

using qsi::to_string;

struct SuiteName {
  Suite suite;
  const char* name;
};

constexpr SuiteName kNames[] = {
    {Suite::lemma1, "lemma1"},         {Suite::pair_optimality, "pair-optimality"},
    {Suite::sdp, "sdp"},               {Suite::gtest, "gtest"},
    {Suite::circle, "circle"},         {Suite::ist, "ist"},
    {Suite::recurrence, "recurrence"}, {Suite::gamma, "gamma"},
    {Suite::wreath, "wreath"},         {Suite::region, "region"},
    {Suite::swap, "swap"},
};

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

std::string mu_key(const Partition& p) { return partition_json(p).dump(); }

bool fits(int n, int d, std::size_t budget) {
  try {
    tensor_dimension(n, d, budget);
    return true;
  } catch (const BudgetError&) {
    return false;
  }
}

std::string dim_text(int n, int d) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
  return std::to_string(d) + "^" + std::to_string(n) + " = " + v.get_str();
}

Cell make_cell(std::string key, bool pass, std::string detail) { return {std::move(key), pass, std::move(detail)}; }

std::string eq_detail(const Rational& got, const Rational& want) {
  return "got " + to_string(got) + (got == want ? " == " : " != ") + "expected " + to_string(want);
}

// Runs independent tasks on a small pool. Results are stored by task index,
// so the flattened output is identical for any thread count.
using Task = std::function<std::vector<Cell>()>;

std::vector<Cell> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<Cell>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Cell> flat;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(flat));
  return flat;
}

// ---------------------------------------------------------------------------

SuiteResult lemma1(const Options& o) {
  SuiteResult res{Suite::lemma1, {}, {}};
  std::vector<Task> tasks;
  for (int n = 2; n <= pick(o.n_max, 5); ++n)
    for (int d = 1; d <= pick(o.d_max, 3); ++d)
      for (const auto& mu : partitions_of(n, d)) {
        std::string key = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " mu=" + mu_key(mu);
        if (!fits(n, d, o.dim_budget)) {
          res.skipped.push_back(key + " (" + dim_text(n, d) + ")");
          continue;
        }
        tasks.push_back([=] {
          const auto oracle = commutant_projection(product_state(canonical_word(mu), d, o.dim_budget));
          const auto closed = rho_states(mu, d, o.dim_budget).rho_neq;
          std::size_t mismatched = 0;
          for (std::size_t i = 0; i < oracle.op.entries().size(); ++i)
            if (oracle.op.entries()[i] != closed.op.entries()[i]) ++mismatched;
          return std::vector{make_cell(key, mismatched == 0,
                                       std::to_string(oracle.dim()) + "x" + std::to_string(oracle.dim()) + ", " +
                                           std::to_string(mismatched) + " entries differ")};
        });
      }
  res.cells = run_tasks(tasks, o.jobs);
  return res;
}

SuiteResult pair_optimality(const Options& o) {
  SuiteResult res{Suite::pair_optimality, {}, {}};
  std::vector<Task> tasks;
  for (int n = 2; n <= pick(o.n_max, 8); ++n)
    for (int h = 1; 2 * h <= n; ++h) {
      const Partition mu{n - h, h};
      std::string key = "n=" + std::to_string(n) + " h=" + std::to_string(h);
      if (!fits(n, 2, o.dim_budget)) {
        res.skipped.push_back(key + " (" + dim_text(n, 2) + ")");
        continue;
      }
      tasks.push_back([=] {
        const auto states = make_states(mu, 2, o.dim_budget);
        const auto sym = isotypic_projector(Partition{n}, 2, o.dim_budget);
        const Rational soundness = 1 - trace_of_product(sym.op, states->rho_neq.op);
        const Rational want_sound = 1 - ratio(1, binomial(n, h));
        const auto cert = certify(build_dual_witness(states, mu, Rational(1, 2)));
        const Rational want_value = 1 - ratio(1, 2 * binomial(n, h));
        return std::vector{
            make_cell(key + " soundness", soundness == want_sound, eq_detail(soundness, want_sound)),
            make_cell(key + " dual p=1/2", cert.feasible && cert.gap == 0 && cert.dual_value == want_value,
                      std::string("psd ") + (cert.eq_slack.is_psd() && cert.neq_slack.is_psd() ? "yes" : "no") +
                          ", gap " + to_string(cert.gap) + ", " + eq_detail(cert.dual_value, want_value))};
      });
    }
  res.cells = run_tasks(tasks, o.jobs);
  return res;
}

std::vector<Rational> prior_grid(const Partition& mu) {
  const Rational ps = p_star(mu);
  return {Rational(0), ps / 2, ps, (1 + ps) / 2, Rational(1)};
}

SuiteResult sdp(const Options& o) {
  SuiteResult res{Suite::sdp, {}, {}};
  std::vector<Task> tasks;
  for (int n = 2; n <= pick(o.n_max, 6); ++n)
    for (const auto& mu : partitions_of(n, pick(o.d_max, 3))) {
      if (mu.length() < 2) continue;
      for (int d = mu.length(); d <= pick(o.d_max, 3); ++d) {
        const std::string base = "mu=" + mu_key(mu) + " d=" + std::to_string(d);
        if (!fits(n, d, o.dim_budget)) {
          res.skipped.push_back(base + " (" + dim_text(n, d) + ")");
          continue;
        }
        tasks.push_back([=] {
          std::vector<Cell> cells;
          const auto states = make_states(mu, d, o.dim_budget);
          for (const auto& p : prior_grid(mu)) {
            const auto w = build_dual_witness(states, mu, p);
            const auto cert = certify(w);
            const Rational analytic = perm_test_report(mu, p).avg_success;
            cells.push_back(make_cell(
                base + " p=" + to_string(p), cert.feasible && cert.gap == 0 && cert.dual_value == analytic,
                to_string(w.regime) + ", psd " + (cert.eq_slack.is_psd() && cert.neq_slack.is_psd() ? "yes" : "no") +
                    ", gap " + to_string(cert.gap) + ", Tr[Y] " + to_string(cert.dual_value) + " vs analytic " +
                    to_string(analytic)));
          }
          return cells;
        });
      }
    }
  res.cells = run_tasks(tasks, o.jobs);
  return res;
}

SuiteResult gtest(const Options& o) {
  SuiteResult res{Suite::gtest, {}, {}};
  std::vector<std::pair<SubgroupSpec, int>> groups;
  const int n_max = pick(o.n_max, 8);
  for (int n = 2; n <= n_max; ++n) {
    groups.emplace_back(SubgroupSpec::symmetric(n), n);
    groups.emplace_back(SubgroupSpec::cyclic(n), n);
  }
  for (int m = 1; (1 << m) <= n_max; ++m) groups.emplace_back(SubgroupSpec::iterated_wreath_2(m), 1 << m);
  std::vector<Task> tasks;
  for (const auto& [spec, n] : groups)
    for (const auto& mu : partitions_of(n, 2)) {
      if (mu.length() < 2) continue;
      std::string key = spec.name() + " mu=" + mu_key(mu);
      if (!fits(n, 2, o.dim_budget)) {
        res.skipped.push_back(key + " (" + dim_text(n, 2) + ")");
        continue;
      }
      tasks.push_back([=] {
        const Rational formula = gtest_soundness(spec, mu, 2);
        const Rational trace = gtest_soundness_trace(spec, mu, 2, o.dim_budget);
        return std::vector{make_cell(key, formula == trace,
                                     "formula " + to_string(formula) + ", trace " + to_string(trace))};
      });
    }
  res.cells = run_tasks(tasks, o.jobs);
  return res;
}

SuiteResult circle(const Options& o) {
  SuiteResult res{Suite::circle, {}, {}};
  for (int n = 1; n <= pick(o.n_max, 8); ++n)
    for (const auto& lambda : partitions_of(n)) {
      const Rational b = circle_rate(lambda, CircleRoute::burnside);
      const Rational m = circle_rate(lambda, CircleRoute::maj);
      const Rational t = circle_rate(lambda, CircleRoute::totient);
      res.cells.push_back(make_cell("n=" + std::to_string(n) + " lambda=" + mu_key(lambda), b == m && m == t,
                                    "burnside " + to_string(b) + ", maj " + to_string(m) + ", totient " +
                                        to_string(t)));
    }
  for (int n = 2; n <= pick(o.n_max, 8); ++n) {
    const BigInt top = trivial_multiplicity(SubgroupSpec::cyclic(n), Partition{n});
    const BigInt hook = trivial_multiplicity(SubgroupSpec::cyclic(n), Partition{n - 1, 1});
    res.cells.push_back(make_cell("n=" + std::to_string(n) + " r[(n)]", top == 1, "r = " + top.get_str()));
    res.cells.push_back(make_cell("n=" + std::to_string(n) + " r[(n-1,1)]", hook == 0, "r = " + hook.get_str()));
  }
  return res;
}

std::string word_text(const std::vector<int>& w) { return Arrangement{w}.str(); }

SuiteResult ist(const Options& o) {
  SuiteResult res{Suite::ist, {}, {}};
  const int n_max = pick(o.n_max, 16);
  const int h_max = pick(o.h_max, 4);
  for (int n = 2; n <= n_max; n *= 2) {
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    word[0] = 1;
    std::string key = "single n=" + std::to_string(n);
    if (!fits(n, 2, o.state_budget)) {
      res.skipped.push_back(key + " (" + dim_text(n, 2) + ")");
      continue;
    }
    const Rational got = ist_accept_prob(Arrangement{word}, 2, o.state_budget);
    res.cells.push_back(make_cell(key, got == Rational(1, n), eq_detail(got, Rational(1, n))));
  }
  const int clicks = click_lower_bound(Arrangement::parse("1,0,0,0,1,0,1,1"));
  res.cells.push_back(make_cell("clicks 1,0,0,0,1,0,1,1", clicks == 5, "counted " + std::to_string(clicks)));

  std::vector<Task> tasks;
  for (int n = 2; n <= n_max; n *= 2)
    for (int h = 0; h <= std::min(h_max, n); ++h) {
      std::string key = "undercount n=" + std::to_string(n) + " h=" + std::to_string(h);
      if (!fits(n, 2, o.state_budget)) {
        res.skipped.push_back(key + " (" + dim_text(n, 2) + ")");
        continue;
      }
      tasks.push_back([=] {
        std::size_t checked = 0;
        for (const auto& w : words_of_weight(n, h)) {
          const Arrangement a{w};
          const Rational accept = ist_accept_prob(a, 2, o.state_budget);
          Rational cap(1);
          cap.get_den() <<= static_cast<unsigned>(click_lower_bound(a));
          if (accept > cap)
            return std::vector{make_cell(key, false,
                                         "word " + word_text(w) + ": accept " + to_string(accept) + " > " +
                                             to_string(cap))};
          ++checked;
        }
        return std::vector{make_cell(key, true, std::to_string(checked) + " words")};
      });
    }
  auto cells = run_tasks(tasks, o.jobs);
  std::move(cells.begin(), cells.end(), std::back_inserter(res.cells));
  return res;
}

SuiteResult recurrence(const Options& o) {
  SuiteResult res{Suite::recurrence, {}, {}};
  const int m_max = pick(o.m_max, 4);
  const int h_max = pick(o.h_max, 4);
  for (int m = 0; m <= m_max; ++m) {
    const int n = 1 << m;
    for (int h = 0; h <= std::min(h_max, n); ++h) {
      Rational sum = 0;
      for (const auto& w : words_of_weight(n, h)) {
        Rational term(1);
        term.get_den() <<= static_cast<unsigned>(click_lower_bound(Arrangement{w}));
        sum += term;
      }
      const Rational want(gamma(h, m));
      res.cells.push_back(make_cell("clicks h=" + std::to_string(h) + " m=" + std::to_string(m), sum == want,
                                    "C(n,h)*mean " + eq_detail(sum, want)));
    }
  }
  for (int n = 2; n <= pick(o.n_max, 8); n *= 2)
    for (int h = 1; 2 * h <= n; ++h) {
      std::string key = "bound n=" + std::to_string(n) + " h=" + std::to_string(h);
      if (!fits(n, 2, o.state_budget)) {
        res.skipped.push_back(key + " (" + dim_text(n, 2) + ")");
        continue;
      }
      const Rational exact = ist_soundness_exact(n, h, 2, o.state_budget);
      const Rational bound = ist_soundness_bound(n, h);
      res.cells.push_back(make_cell(key, bound <= exact,
                                    "bound " + to_string(bound) + " <= exact " + to_string(exact) + ", slack " +
                                        to_string(exact - bound)));
    }
  return res;
}

SuiteResult gamma_suite(const Options& o) {
  SuiteResult res{Suite::gamma, {}, {}};
  const int m_max = pick(o.m_max, 12);
  for (int h = 1; h <= pick(o.h_max, 5); ++h) {
    std::vector<BigInt> row;
    for (int m = 0; m <= m_max; ++m) row.push_back(gamma(h, m));
    for (int k = 0; k < h; ++k)
      for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.resize(static_cast<std::size_t>(std::max(0, m_max + 1 - h)));
    const bool zero = std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v == 0; });
    res.cells.push_back(make_cell("difference h=" + std::to_string(h), zero,
                                  std::to_string(row.size()) + " h-th differences over m <= " +
                                      std::to_string(m_max) + (zero ? " vanish" : " do not vanish")));
    bool vanish = true;
    for (int m = 0; (1 << m) < h && m <= m_max; ++m) vanish = vanish && gamma(h, m) == 0;
    res.cells.push_back(make_cell("vanishing h=" + std::to_string(h), vanish, "gamma(h,m) = 0 while 2^m < h"));
  }
  for (int m = 0; m <= std::min(m_max, 6); ++m) {
    bool ok = true;
    for (int h = 0; h <= (1 << m); ++h) ok = ok && gamma(h, m) == gamma((1 << m) - h, m);
    res.cells.push_back(make_cell("symmetry m=" + std::to_string(m), ok, "gamma(h,m) = gamma(2^m-h,m)"));
  }
  for (int m = 0; m <= m_max; ++m) {
    const BigInt g2 = gamma(2, m), g3 = gamma(3, m);
    const BigInt w3 = BigInt(m) * (m - 1) / 2;
    res.cells.push_back(make_cell("closed forms m=" + std::to_string(m), g2 == m && g3 == w3,
                                  "gamma(2,m) = " + g2.get_str() + ", gamma(3,m) = " + g3.get_str()));
  }
  return res;
}

SuiteResult wreath(const Options& o) {
  SuiteResult res{Suite::wreath, {}, {}};
  std::vector<Task> tasks;
  for (int m = 1; (1 << m) <= pick(o.n_max, 8); ++m) {
    const int n = 1 << m;
    for (int h = 1; 2 * h <= n; ++h) {
      std::string key = "n=" + std::to_string(n) + " h=" + std::to_string(h);
      if (!fits(n, 2, o.dim_budget)) {
        res.skipped.push_back(key + " (" + dim_text(n, 2) + ")");
        continue;
      }
      tasks.push_back([=] {
        const Rational tree = ist_mean_accept(n, h, 2, o.state_budget);
        const Rational group = 1 - gtest_soundness_trace(SubgroupSpec::iterated_wreath_2(m), Partition{n - h, h}, 2,
                                                         o.dim_budget);
        return std::vector{make_cell(key, tree == group,
                                     "tree mean " + to_string(tree) + (tree == group ? " == " : " != ") +
                                         "Tr[Pi_G rho] " + to_string(group) +
                                         (tree == group ? "" : ", discrepancy " + to_string(tree - group)))};
      });
    }
  }
  res.cells = run_tasks(tasks, o.jobs);
  return res;
}

SuiteResult region(const Options& o) {
  SuiteResult res{Suite::region, {}, {}};
  const Partition mu = o.mu.value_or(Partition{3, 1});
  const int n = mu.size();
  const int d = std::max(mu.length(), 2);
  if (mu.length() < 2) throw PromiseViolation("region suite needs mu with at least two parts");
  tensor_dimension(n, d, o.dim_budget);
  const auto states = rho_states(mu, d, o.dim_budget);
  const Matrix sym = isotypic_projector(Partition{n}, d, o.dim_budget).op;
  const Matrix id = Matrix::identity(sym.rows());

  // (α, β) reached by the measurement {Π_=, I − Π_=}.
  auto measure = [&](const Matrix& pi_eq) {
    return RegionPoint{1 - trace_of_product(pi_eq, states.rho_eq.op), trace_of_product(pi_eq, states.rho_neq.op)};
  };
  auto point_text = [](const RegionPoint& p) { return "(" + to_string(p.alpha) + ", " + to_string(p.beta) + ")"; };

  for (const Rational& alpha : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
    const auto slice = region_boundary(mu, alpha);
    for (const auto& [side, beta0] : {std::pair{"low", slice.beta_low}, std::pair{"high", slice.beta_high}}) {
      const Rational t = region_mixture_weight(mu, alpha, beta0);
      const Matrix pi_eq = sym * (1 - alpha) + (id - sym) * t;
      const auto got = measure(pi_eq);
      const bool valid = t >= 0 && t <= 1 && psd_certificate(pi_eq).is_psd() && psd_certificate(id - pi_eq).is_psd();
      res.cells.push_back(make_cell("alpha=" + to_string(alpha) + " " + side, valid && got.alpha == alpha && got.beta == beta0,
                                    "t " + to_string(t) + ", measured " + point_text(got) + ", target (" +
                                        to_string(alpha) + ", " + to_string(beta0) + ")"));
    }
  }
  const char* names[] = {"perm-test", "trivial", "always-equal", "anti-test"};
  const Matrix corners[] = {sym, Matrix::zero(sym.rows()), id, id - sym};
  const auto vertices = region_vertices(mu);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto got = measure(corners[i]);
    res.cells.push_back(make_cell(std::string("vertex ") + names[i],
                                  got.alpha == vertices[i].alpha && got.beta == vertices[i].beta,
                                  "measured " + point_text(got) + ", reported " + point_text(vertices[i])));
  }
  return res;
}

SuiteResult swap(const Options& o) {
  SuiteResult res{Suite::swap, {}, {}};
  for (int k = 1; k <= pick(o.n_max, 10); ++k) {
    const auto cmp = swap_vs_perm(k);
    const std::string key = "pairs=" + std::to_string(k);
    Rational want_swap(1);
    want_swap.get_den() <<= static_cast<unsigned>(k + 1);
    want_swap = 1 - want_swap;
    const Rational want_perm = 1 - ratio(1, 2 * binomial(2 * k, k));

    // Independent value: accept iff every pair-swap stabilizes the input word
    // 0^k 1^k, averaged over the group the k swaps generate.
    std::vector<Perm> gens;
    for (int i = 0; i < k; ++i) gens.push_back(Perm::from_cycles(2 * k, {{i + 1, k + i + 1}}));
    const auto group = expand_subgroup(SubgroupSpec::generated(2 * k, gens));
    std::vector<int> word(static_cast<std::size_t>(2 * k), 0);
    std::fill(word.begin() + k, word.end(), 1);
    std::size_t fixing = 0;
    for (const auto& g : group) {
      bool fixes = true;
      for (int r = 0; r < 2 * k && fixes; ++r) fixes = word[static_cast<std::size_t>(g(r))] == word[static_cast<std::size_t>(r)];
      fixing += fixes ? 1 : 0;
    }
    const Rational sim_swap = Rational(1, 2) + (1 - ratio(BigInt(static_cast<unsigned long>(fixing)), BigInt(static_cast<unsigned long>(group.size())))) / 2;
    const Rational analytic_perm = perm_test_report(Partition{k, k}, Rational(1, 2)).avg_success;

    res.cells.push_back(make_cell(key + " p_swap", cmp.p_swap == want_swap && sim_swap == want_swap,
                                  "table " + to_string(cmp.p_swap) + ", group count " + to_string(sim_swap) +
                                      ", expected " + to_string(want_swap)));
    std::string perm_detail = "table " + to_string(cmp.p_perm) + ", optimum " + to_string(analytic_perm);
    bool perm_ok = cmp.p_perm == want_perm && analytic_perm == want_perm;
    if (fits(2 * k, 2, o.dim_budget) && 2 * k <= 8) {
      const Rational primal = primal_value(Partition{k, k}, Rational(1, 2), 2, PrimalTest::permutation, o.dim_budget);
      perm_detail += ", operator trace " + to_string(primal);
      perm_ok = perm_ok && primal == want_perm;
    }
    res.cells.push_back(make_cell(key + " p_perm", perm_ok, perm_detail + ", expected " + to_string(want_perm)));
    const bool order = k == 1 ? cmp.p_perm == cmp.p_swap : cmp.p_perm > cmp.p_swap;
    res.cells.push_back(make_cell(key + " order", order, k == 1 ? "p_perm == p_swap" : "p_perm > p_swap"));
  }
  return res;
}

}  // namespace

std::string to_string(Suite s) {
  for (const auto& [suite, name] : kNames)
    if (suite == s) return name;
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [suite, n] : kNames)
    if (name == n) return suite;
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> v;
    for (const auto& [suite, name] : kNames) v.push_back(suite);
    return v;
  }();
  return suites;
}

bool SuiteResult::pass() const { return first_failure() == nullptr; }

const Cell* SuiteResult::first_failure() const {
  for (const auto& c : cells)
    if (!c.pass) return &c;
  return nullptr;
}

SuiteResult run(Suite suite, const Options& opts) {
  switch (suite) {
    case Suite::lemma1: return lemma1(opts);
    case Suite::pair_optimality: return pair_optimality(opts);
    case Suite::sdp: return sdp(opts);
    case Suite::gtest: return gtest(opts);
    case Suite::circle: return circle(opts);
    case Suite::ist: return ist(opts);
    case Suite::recurrence: return recurrence(opts);
    case Suite::gamma: return gamma_suite(opts);
    case Suite::wreath: return wreath(opts);
    case Suite::region: return region(opts);
    case Suite::swap: return swap(opts);
  }
  throw InternalError("unknown suite");
}

}  // namespace qsi::verify
