#include "qsi/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qsi {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_content(std::vector<int> content) {
  for (int c : content)
    if (c < 0) throw DomainError("content has a negative entry");
  std::sort(content.begin(), content.end(), std::greater<>());
  return Partition(std::move(content));
}

Partition Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int row : parts_)
    for (int j = 0; j < row; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

bool Partition::dominates(const Partition& other) const {
  if (size_ != other.size_) throw DomainError("dominance compares partitions of equal size");
  int a = 0, b = 0;
  const std::size_t len = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += (*this)[i];
    b += other[i];
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<int> StandardTableau::descents() const {
  const int n = shape.size();
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int v : rows[r]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

int StandardTableau::major_index() const {
  auto d = descents();
  return std::accumulate(d.begin(), d.end(), 0);
}

std::vector<Partition> partitions_of(int n, int max_len) {
  if (n < 0) throw DomainError("partitions_of: negative n");
  if (max_len < 1) throw DomainError("partitions_of: max_len must be at least 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  const auto& lam = shape.parts();
  const int n = shape.size();
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(lam.size());
  std::function<void(int)> place = [&](int next) {
    if (next > n) {
      out.push_back({shape, rows});
      return;
    }
    for (std::size_t r = 0; r < lam.size(); ++r) {
      const auto len = static_cast<int>(rows[r].size());
      if (len >= lam[r]) continue;
      if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
      rows[r].push_back(next);
      place(next + 1);
      rows[r].pop_back();
    }
  };
  place(1);
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

BigInt dim_symmetric(const Partition& lambda) {
  const auto conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  return factorial(lambda.size()) / hooks;
}

BigInt dim_unitary(const Partition& lambda, int d) {
  if (d < 1) throw DomainError("dim_unitary: d must be positive");
  if (lambda.length() > d) throw DomainError("dim_unitary: partition " + lambda.str() + " has more than d rows");
  BigInt num = 1, den = 1;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      num *= lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  return num / den;
}

std::uint64_t kostka(const Partition& lambda, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw DomainError("kostka: negative content");
    total += c;
  }
  if (total != lambda.size()) throw DomainError("kostka: |lambda| != |mu|");

  const auto& lam = lambda.parts();
  const std::size_t len = lam.size();
  std::vector<int> shape(len, 0);
  std::uint64_t count = 0;

  // Letters are placed one value at a time; each value occupies a horizontal
  // strip, so a chain of strips is exactly one semistandard filling.
  std::function<void(std::size_t)> next_letter;
  std::function<void(std::size_t, std::size_t, int, const std::vector<int>&)> strip =
      [&](std::size_t letter, std::size_t row, int left, const std::vector<int>& prev) {
        if (left == 0) {
          next_letter(letter + 1);
          return;
        }
        if (row >= len) return;
        const int cap = row == 0 ? lam[0] : std::min(lam[row], prev[row - 1]);
        const int room = cap - prev[row];
        for (int take = std::min(room, left); take >= 0; --take) {
          shape[row] = prev[row] + take;
          strip(letter, row + 1, left - take, prev);
        }
        shape[row] = prev[row];
      };

  next_letter = [&](std::size_t letter) {
    if (letter == content.size()) {
      if (std::equal(shape.begin(), shape.end(), lam.begin())) ++count;
      return;
    }
    const std::vector<int> prev = shape;
    strip(letter, 0, content[letter], prev);
    shape = prev;
  };
  next_letter(0);
  return count;
}

BigInt multinomial(const Partition& mu) {
  BigInt r = factorial(mu.size());
  for (int part : mu.parts()) r /= factorial(part);
  return r;
}

std::uint64_t count_maj_zero(const Partition& lambda, int n) {
  if (lambda.size() != n) throw DomainError("count_maj_zero: |lambda| != n");
  if (n == 0) return 1;
  std::uint64_t count = 0;
  for (const auto& t : standard_tableaux(lambda))
    if (t.major_index() % n == 0) ++count;
  return count;
}

}  // namespace qsi
