#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "flowcalc/arith.hpp"

namespace flowcalc {

/// Dense square matrix of exact integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_nonnegative() const;
  Integer trace() const;
  Integer entry_sum() const;
  IntMatrix power(unsigned k) const;
  /// Exact determinant by fraction-free (Bareiss) elimination.
  Integer determinant() const;
  /// I - A.
  IntMatrix identity_minus() const;
  /// P A P^{-1} for the permutation sending index i to perm[i].
  IntMatrix permuted(const std::vector<std::size_t>& perm) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

}  // namespace flowcalc
