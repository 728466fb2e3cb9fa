#include "flowcalc/matrix.hpp"

#include <stdexcept>

namespace flowcalc {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = 1;
  if (slash != std::string::npos) {
    den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), entries_(rows.size() * rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("matrix is not square");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows)
    : n_(rows.size()), entries_(rows.size() * rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_nonnegative() const {
  for (const auto& v : entries_)
    if (v < 0) return false;
  return true;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Integer IntMatrix::entry_sum() const {
  Integer t = 0;
  for (const auto& v : entries_) t += v;
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix IntMatrix::power(unsigned k) const {
  IntMatrix result = identity(n_);
  IntMatrix base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

Integer IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<Integer> m = entries_;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n_ + j]; };
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n_ && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = v;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

IntMatrix IntMatrix::identity_minus() const {
  IntMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (i == j ? 1 : 0) - (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
  IntMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(perm[i], perm[j]) = (*this)(i, j);
  return m;
}

}  // namespace flowcalc
