#include "qsi/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qsi {

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw DomainError("empty rational literal");
  std::size_t slash = text.find('/');
  auto valid_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw DomainError("malformed rational literal '" + std::string(text) + "' (expected p/q)");
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  BigInt p(num_s, 10);
  BigInt q(std::string(den), 10);
  if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& x, int digits) {
  BigInt num = abs(x.get_num());
  const BigInt& den = x.get_den();
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = (sgn(x) < 0 ? "-" : "") + whole.get_str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      BigInt digit = rem / den;
      rem %= den;
      out += digit.get_str();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ShapeError("ragged rows in Matrix::from_rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational Matrix::trace() const {
  if (!is_square()) throw ShapeError("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(other.data_[k]) != 0) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(other.data_[k]) != 0) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    for (auto& x : data_) x = 0;
    return *this;
  }
  for (auto& x : data_)
    if (sgn(x) != 0) x *= s;
  return *this;
}

namespace {

std::vector<std::vector<std::size_t>> row_supports(const Matrix& m) {
  std::vector<std::vector<std::size_t>> support(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) support[i].push_back(j);
  return support;
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  const auto a_support = row_supports(a);
  const auto b_support = row_supports(b);
  Rational term;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k : a_support[i]) {
      const Rational& aik = a(i, k);
      for (std::size_t j : b_support[k]) {
        mpq_mul(term.get_mpq_t(), aik.get_mpq_t(), b(k, j).get_mpq_t());
        out(i, j) += term;
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Rational> Matrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

Rational Matrix::quadratic_form(std::span<const Rational> x) const {
  if (!is_square()) throw ShapeError("quadratic form of non-square matrix");
  auto y = apply(x);
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += x[i] * y[i];
  return s;
}

Rational hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("hs_inner shape mismatch");
  Rational s = 0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k)
    if (sgn(ea[k]) != 0 && sgn(eb[k]) != 0) s += ea[k] * eb[k];
  return s;
}

Rational trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw ShapeError("trace_of_product shape mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(b(j, i)) != 0) s += a(i, j) * b(j, i);
  return s;
}

// ---------------------------------------------------------------------------
// PSD certificate

std::optional<Rational> PsdCertificate::min_pivot() const {
  if (pivots.empty()) return std::nullopt;
  return *std::min_element(pivots.begin(), pivots.end());
}

namespace {

// Connected components of the graph with an edge (i, j) per nonzero m(i, j).
std::vector<std::vector<std::size_t>> components(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sgn(m(i, j)) != 0) {
        auto ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (slot[r] == n) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

struct BlockOutcome {
  LdlBlock block;
  std::optional<std::vector<Rational>> local_witness;
};

BlockOutcome factor_block(const Matrix& m, const std::vector<std::size_t>& idx) {
  const std::size_t b = idx.size();
  Matrix w(b, b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) w(i, j) = m(idx[i], idx[j]);

  std::vector<bool> active(b, true);
  std::vector<std::size_t> order;
  std::vector<std::vector<Rational>> lcols;
  std::vector<Rational> diag;
  order.reserve(b);

  // Lifts a vector y on the active coordinates to x with x^T M x = y^T W y.
  auto lift = [&](std::vector<Rational> x) {
    for (std::size_t s = lcols.size(); s-- > 0;) {
      Rational acc = 0;
      for (std::size_t t = 0; t < b; ++t)
        if (sgn(lcols[s][t]) != 0 && sgn(x[t]) != 0) acc += lcols[s][t] * x[t];
      x[order[s]] = -acc;
    }
    return x;
  };

  BlockOutcome out;
  for (std::size_t step = 0; step < b; ++step) {
    std::optional<std::size_t> pivot;
    for (std::size_t q = 0; q < b; ++q) {
      if (!active[q]) continue;
      int s = sgn(w(q, q));
      if (s < 0) {
        std::vector<Rational> y(b);
        y[q] = 1;
        out.local_witness = lift(std::move(y));
        break;
      }
      if (s == 0) {
        for (std::size_t r = 0; r < b; ++r) {
          if (r == q || !active[r] || sgn(w(q, r)) == 0) continue;
          // y = t e_q + e_r gives 2 t W_qr + W_rr = W_rr - |W_rr| - 1 < 0.
          std::vector<Rational> y(b);
          y[q] = -(abs(w(r, r)) + 1) / (2 * w(q, r));
          y[r] = 1;
          out.local_witness = lift(std::move(y));
          break;
        }
        if (out.local_witness) break;
      } else if (!pivot) {
        pivot = q;
      }
    }
    if (out.local_witness) break;
    if (!pivot) {
      // Remaining Schur complement is identically zero.
      for (std::size_t q = 0; q < b; ++q) {
        if (!active[q]) continue;
        std::vector<Rational> col(b);
        col[q] = 1;
        lcols.push_back(std::move(col));
        order.push_back(q);
        diag.emplace_back(0);
        active[q] = false;
      }
      break;
    }

    const std::size_t p = *pivot;
    const Rational piv = w(p, p);
    std::vector<Rational> col(b);
    col[p] = 1;
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < b; ++i)
      if (active[i] && i != p && sgn(w(i, p)) != 0) {
        col[i] = w(i, p) / piv;
        touched.push_back(i);
      }
    Rational term;
    for (std::size_t i : touched)
      for (std::size_t j : touched) {
        mpq_mul(term.get_mpq_t(), col[i].get_mpq_t(), w(p, j).get_mpq_t());
        w(i, j) -= term;
      }
    active[p] = false;
    order.push_back(p);
    diag.push_back(piv);
    lcols.push_back(std::move(col));
  }

  out.block.diag = std::move(diag);
  const std::size_t k = order.size();
  out.block.lower = Matrix(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out.block.lower(r, c) = lcols[c][order[r]];
  for (std::size_t q : order) out.block.indices.push_back(idx[q]);
  return out;
}

}  // namespace

PsdCertificate psd_certificate(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("psd_certificate: matrix is not square");
  if (!m.is_symmetric()) throw ShapeError("psd_certificate: matrix is not symmetric");

  PsdCertificate cert;
  for (const auto& group : components(m)) {
    auto outcome = factor_block(m, group);
    cert.pivots.insert(cert.pivots.end(), outcome.block.diag.begin(), outcome.block.diag.end());
    if (outcome.local_witness) {
      std::vector<Rational> x(m.rows());
      for (std::size_t t = 0; t < group.size(); ++t) x[group[t]] = (*outcome.local_witness)[t];
      cert.verdict = PsdCertificate::Verdict::not_psd;
      cert.witness = std::move(x);
      cert.blocks.push_back(std::move(outcome.block));
      return cert;
    }
    cert.blocks.push_back(std::move(outcome.block));
  }
  return cert;
}

Matrix reconstruct(const PsdCertificate& cert, std::size_t n) {
  Matrix m(n, n);
  for (const auto& blk : cert.blocks) {
    const std::size_t k = blk.indices.size();
    if (blk.lower.rows() != k) throw ShapeError("reconstruct: incomplete block");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Rational s = 0;
        for (std::size_t t = 0; t <= std::min(i, j); ++t)
          if (sgn(blk.diag[t]) != 0) s += blk.lower(i, t) * blk.diag[t] * blk.lower(j, t);
        m(blk.indices[i], blk.indices[j]) = s;
      }
  }
  return m;
}

std::vector<Rational> solve_consistent(Matrix a, std::vector<Rational> b) {
  if (a.rows() != b.size()) throw ShapeError("solve_consistent: rhs length mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  Rational term;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(a(i, c)) != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) swap(a(sel, j), a(r, j));
      swap(b[sel], b[r]);
    }
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(a(r, j)) != 0) a(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a(r, j)) != 0) {
          mpq_mul(term.get_mpq_t(), f.get_mpq_t(), a(r, j).get_mpq_t());
          a(i, j) -= term;
        }
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) throw DomainError("solve_consistent: inconsistent linear system");
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
  return x;
}

}  // namespace qsi
