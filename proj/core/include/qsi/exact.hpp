#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qsi/error.hpp"

namespace qsi {

/// Arbitrary-precision rational. GMP keeps every value canonical (lowest
/// terms, positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// canonicalize, so every exact quotient goes through here.
Rational ratio(const BigInt& num, const BigInt& den);

/// Renders as "p/q" in lowest terms, always with a denominator ("0/1", "3/1").
std::string to_string(const Rational& x);
/// Parses "p/q" or a bare integer "p". Rejects decimals and zero denominators.
Rational parse_rational(std::string_view text);
/// Approximate decimal rendering, for human-facing columns only.
std::string to_decimal(const Rational& x, int digits = 12);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> diag);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> entries() const { return data_; }

  bool is_symmetric() const;
  bool is_zero() const;
  Rational trace() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  /// Product that skips structural zeros; cost scales with the nonzero pattern.
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::vector<Rational> apply(std::span<const Rational> x) const;
  /// x^T M x.
  Rational quadratic_form(std::span<const Rational> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Tr[A^T B]. All operators handled here are real, so this is the
/// Hilbert-Schmidt inner product.
Rational hs_inner(const Matrix& a, const Matrix& b);

/// Tr[A B] without forming the product.
Rational trace_of_product(const Matrix& a, const Matrix& b);

/// One diagonal block of an LDL^T factorization. `indices` are the global
/// row indices of the block in pivot order; `lower` is unit lower triangular
/// in that order.
struct LdlBlock {
  std::vector<std::size_t> indices;
  Matrix lower;
  std::vector<Rational> diag;
};

struct PsdCertificate {
  enum class Verdict { psd, not_psd };

  Verdict verdict = Verdict::psd;
  /// Pivots in elimination order, concatenated over blocks.
  std::vector<Rational> pivots;
  /// Present iff verdict is not_psd; satisfies x^T M x < 0.
  std::optional<std::vector<Rational>> witness;
  /// Complete factorization when psd; partial when not_psd.
  std::vector<LdlBlock> blocks;

  bool is_psd() const { return verdict == Verdict::psd; }
  /// Smallest pivot, or nullopt for an empty matrix.
  std::optional<Rational> min_pivot() const;
};

/// Exact positive-semidefiniteness test by symmetric LDL^T with diagonal
/// pivoting, run independently on each connected component of the nonzero
/// pattern. Throws ShapeError for non-square or asymmetric input.
PsdCertificate psd_certificate(const Matrix& m);

/// Rebuilds P^T L D L^T P from a psd certificate.
Matrix reconstruct(const PsdCertificate& cert, std::size_t n);

/// Solves A x = b exactly by Gauss-Jordan elimination. A may be singular as
/// long as the system is consistent; free variables are set to zero.
/// Throws DomainError when the system is inconsistent.
std::vector<Rational> solve_consistent(Matrix a, std::vector<Rational> b);

}  // namespace qsi
