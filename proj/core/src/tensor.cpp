#include "qsi/tensor.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>

namespace qsi {

std::size_t tensor_dimension(int n, int d, std::size_t budget) {
  if (n < 0 || d < 1) throw DomainError("tensor_dimension: need n >= 0 and d >= 1");
  BigInt dim;
  mpz_ui_pow_ui(dim.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
  if (dim > budget) {
    const std::size_t requested = dim.fits_ulong_p() ? dim.get_ui() : SIZE_MAX;
    throw BudgetError("tensor dimension d^n = " + dim.get_str() + " exceeds the dimension budget", requested, budget);
  }
  return dim.get_ui();
}

std::vector<std::size_t> basis_action(const Perm& p, int d) {
  const int n = p.degree();
  std::size_t dim = 1;
  for (int k = 0; k < n; ++k) dim *= static_cast<std::size_t>(d);
  std::vector<std::size_t> place(static_cast<std::size_t>(n));  // d^(n-1-k)
  for (int k = n - 1, w = 1; k >= 0; --k, w *= d) place[static_cast<std::size_t>(k)] = static_cast<std::size_t>(w);

  std::vector<std::size_t> out(dim);
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  for (std::size_t y = 0; y < dim; ++y) {
    std::size_t x = 0;
    for (int k = 0; k < n; ++k) x += digits[static_cast<std::size_t>(k)] * place[static_cast<std::size_t>(p(k))];
    out[y] = x;
    for (int k = n - 1; k >= 0; --k) {
      auto& dk = digits[static_cast<std::size_t>(k)];
      if (++dk < static_cast<std::size_t>(d)) break;
      dk = 0;
    }
  }
  return out;
}

namespace {

// scale · Σ_g weight(g) ψ(g), accumulated in machine integers first.
template <typename WeightFn>
Matrix weighted_sum(const std::vector<Perm>& perms, int d, std::size_t dim, WeightFn weight, const Rational& scale) {
  std::vector<std::int64_t> acc(dim * dim, 0);
  for (const auto& g : perms) {
    const std::int64_t w = weight(g);
    if (w == 0) continue;
    const auto map = basis_action(g, d);
    for (std::size_t y = 0; y < dim; ++y) acc[map[y] * dim + y] += w;
  }
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (const auto v = acc[i * dim + j]; v != 0) m(i, j) = Rational(BigInt(static_cast<long>(v))) * scale;
  return m;
}

}  // namespace

TensorOperator perm_operator(const Perm& p, int d, std::size_t budget) {
  const std::size_t dim = tensor_dimension(p.degree(), d, budget);
  Matrix m(dim, dim);
  const auto map = basis_action(p, d);
  for (std::size_t y = 0; y < dim; ++y) m(map[y], y) = 1;
  return {std::move(m), p.degree(), d};
}

TensorOperator isotypic_projector(const Partition& lambda, int d, std::size_t budget) {
  const int n = lambda.size();
  const std::size_t dim = tensor_dimension(n, d, budget);
  if (lambda.length() > d) return {Matrix(dim, dim), n, d};
  const auto group = expand_subgroup(SubgroupSpec::symmetric(n));
  std::map<CycleType, std::int64_t> chi;
  for (const auto& [type, count] : cycle_type_histogram(group)) chi[type] = character(lambda, type).get_si();
  const Rational scale = ratio(dim_symmetric(lambda), factorial(n));
  return {weighted_sum(
              group, d, dim, [&](const Perm& g) { return chi.at(cycle_type(g)); }, scale),
          n, d};
}

TensorOperator group_average(const std::vector<Perm>& group, int d, std::size_t budget) {
  if (group.empty()) throw DomainError("group_average: empty group");
  const int n = group.front().degree();
  const std::size_t dim = tensor_dimension(n, d, budget);
  const Rational scale = ratio(1, BigInt(static_cast<unsigned long>(group.size())));
  return {weighted_sum(
              group, d, dim, [](const Perm&) { return std::int64_t{1}; }, scale),
          n, d};
}

TensorOperator group_projector(const SubgroupSpec& spec, int d, std::size_t budget) {
  tensor_dimension(spec.degree(), d, budget);
  return group_average(expand_subgroup(spec), d, budget);
}

TensorOperator block_symmetrizer(const std::vector<int>& block_sizes, int d, std::size_t budget) {
  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  tensor_dimension(n, d, budget);
  return group_average(close_under_product(n, young_subgroup_generators(block_sizes)), d, budget);
}

TensorOperator product_state(const std::vector<int>& word, int d, std::size_t budget) {
  const int n = static_cast<int>(word.size());
  const std::size_t dim = tensor_dimension(n, d, budget);
  std::size_t x = 0;
  for (int label : word) {
    if (label < 0 || label >= d) throw DomainError("product_state: label outside [0, d)");
    x = x * static_cast<std::size_t>(d) + static_cast<std::size_t>(label);
  }
  Matrix m(dim, dim);
  m(x, x) = 1;
  return {std::move(m), n, d};
}

std::vector<int> canonical_word(const Partition& mu) {
  std::vector<int> word;
  for (int label = 0; label < mu.length(); ++label)
    word.insert(word.end(), static_cast<std::size_t>(mu[static_cast<std::size_t>(label)]), label);
  return word;
}

TensorOperator rho_eq(int n, int d, std::size_t budget) {
  auto sym = isotypic_projector(Partition({n}), d, budget);
  sym.op *= Rational(1) / Rational(binomial(n + d - 1, n));
  return sym;
}

TensorOperator rho_neq_twirled(const Partition& mu, int d, std::size_t budget) {
  const int n = mu.size();
  if (mu.length() > d) throw DomainError("rho_neq_twirled: partition " + mu.str() + " has more than d parts");
  const std::size_t dim = tensor_dimension(n, d, budget);
  Matrix twirled(dim, dim);
  for (const auto& lambda : partitions_of(n, d)) {
    const auto k = kostka(lambda, mu);
    if (k == 0) continue;
    twirled += isotypic_projector(lambda, d, budget).op *
               ratio(BigInt(static_cast<unsigned long>(k)), dim_unitary(lambda, d));
  }
  twirled *= Rational(1) / Rational(multinomial(mu));
  return {std::move(twirled), n, d};
}

RhoStates rho_states(const Partition& mu, int d, std::size_t budget) {
  const int n = mu.size();
  if (mu.length() > d) throw DomainError("rho_states: partition " + mu.str() + " has more than d parts");
  const std::size_t dim = tensor_dimension(n, d, budget);

  const Rational inv_multinomial = Rational(1) / Rational(multinomial(mu));
  Matrix weighted(dim, dim);  // Σ_λ (d_λ / m_λ) Π_λ
  Matrix twirled(dim, dim);   // Σ_λ (K_λμ / m_λ) Π_λ
  Matrix symmetric;
  for (const auto& lambda : partitions_of(n, d)) {
    const auto proj = isotypic_projector(lambda, d, budget);
    const BigInt m = dim_unitary(lambda, d);
    weighted += proj.op * ratio(dim_symmetric(lambda), m);
    if (const auto k = kostka(lambda, mu); k != 0) twirled += proj.op * ratio(BigInt(static_cast<unsigned long>(k)), m);
    if (lambda.length() == 1) symmetric = proj.op;
  }
  const auto blocks = block_symmetrizer(mu.parts(), d, budget);

  RhoStates out;
  out.rho_neq = {blocks.op * weighted * inv_multinomial, n, d};
  out.rho_neq_twirled = {twirled * inv_multinomial, n, d};
  out.rho_eq = {symmetric * (Rational(1) / Rational(binomial(n + d - 1, n))), n, d};
  return out;
}

TensorOperator symmetric_group_twirl(const TensorOperator& x) {
  const std::size_t dim = x.dim();
  const auto group = expand_subgroup(SubgroupSpec::symmetric(x.n));
  std::vector<std::pair<std::size_t, std::size_t>> support;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (sgn(x.op(i, j)) != 0) support.emplace_back(i, j);
  Matrix out(dim, dim);
  for (const auto& g : group) {
    const auto map = basis_action(g, x.d);
    for (auto [i, j] : support) out(map[i], map[j]) += x.op(i, j);
  }
  out *= ratio(1, BigInt(static_cast<unsigned long>(group.size())));
  return {std::move(out), x.n, x.d};
}

TensorOperator commutant_projection(const TensorOperator& x, std::size_t gram_budget) {
  const std::size_t dim = x.dim();
  const auto group = expand_subgroup(SubgroupSpec::symmetric(x.n), gram_budget);
  const std::size_t k = group.size();
  std::vector<std::vector<std::size_t>> maps;
  maps.reserve(k);
  for (const auto& g : group) maps.push_back(basis_action(g, x.d));

  // <ψ(π), X> and <ψ(π), ψ(σ)>, both as Tr[A^T B] over index maps.
  std::vector<Rational> rhs(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t y = 0; y < dim; ++y) rhs[a] += x.op(maps[a][y], y);
  Matrix gram(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      unsigned long agree = 0;
      for (std::size_t y = 0; y < dim; ++y) agree += maps[a][y] == maps[b][y];
      gram(a, b) = agree;
      gram(b, a) = agree;
    }

  const auto coeff = solve_consistent(std::move(gram), std::move(rhs));
  Matrix out(dim, dim);
  for (std::size_t a = 0; a < k; ++a) {
    if (sgn(coeff[a]) == 0) continue;
    for (std::size_t y = 0; y < dim; ++y) out(maps[a][y], y) += coeff[a];
  }
  return {std::move(out), x.n, x.d};
}

Matrix tensor_power(const Matrix& o, int n, std::size_t budget) {
  if (!o.is_square()) throw ShapeError("tensor_power: factor must be square");
  tensor_dimension(n, static_cast<int>(o.rows()), budget);
  Matrix acc = Matrix::identity(1);
  for (int k = 0; k < n; ++k) {
    Matrix next(acc.rows() * o.rows(), acc.cols() * o.cols());
    for (std::size_t i = 0; i < acc.rows(); ++i)
      for (std::size_t j = 0; j < acc.cols(); ++j) {
        if (sgn(acc(i, j)) == 0) continue;
        for (std::size_t p = 0; p < o.rows(); ++p)
          for (std::size_t q = 0; q < o.cols(); ++q) next(i * o.rows() + p, j * o.cols() + q) = acc(i, j) * o(p, q);
      }
    acc = std::move(next);
  }
  return acc;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace qsi
