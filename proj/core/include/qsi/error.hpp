#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched or non-square shapes, asymmetric input where symmetry is required.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input violates the problem promise (e.g. a partition with a single part
/// where at least two distinct states are required).
class PromiseViolation : public Error {
 public:
  using Error::Error;
};

/// A requested point lies outside the achievable region.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded a configured size limit.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::size_t requested, std::size_t limit)
      : Error(what + " (requested " + std::to_string(requested) + ", limit " +
              std::to_string(limit) + ")"),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// A self-consistency check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsi
