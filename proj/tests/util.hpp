#pragma once

// Small brute-force helpers shared by the unit tests.  Nothing here calls the
// library's elimination code, so results can be compared against it.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pcc/field.hpp"
#include "pcc/matrix.hpp"

namespace testutil {

using pcc::Elem;
using pcc::FieldPtr;
using pcc::Matrix;

inline Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, f->size() - 1);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Leibniz expansion.
inline Elem det_leibniz(const Matrix& a) {
  const auto& F = *a.field();
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Elem total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Elem term = 1;
    for (std::size_t i = 0; i < n; ++i) term = F.mul(term, a(i, perm[i]));
    total = (inversions % 2) ? F.sub(total, term) : F.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Matrix random_invertible(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (n <= 6 ? det_leibniz(m) != 0 : pcc::is_invertible(m)) return m;
  }
}

// Plain triple loop.
inline Matrix naive_mul(const Matrix& a, const Matrix& b) {
  const auto& F = *a.field();
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elem s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = F.add(s, F.mul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

// Every matrix of the given shape, as a flat list (small cases only).
inline std::vector<Matrix> all_matrices(const FieldPtr& f, std::size_t r, std::size_t c) {
  std::vector<Matrix> out;
  const std::size_t cells = r * c;
  std::vector<Elem> digits(cells, 0);
  for (;;) {
    out.emplace_back(f, r, c, digits);
    std::size_t k = 0;
    while (k < cells && ++digits[k] == f->size()) digits[k++] = 0;
    if (k == cells) break;
  }
  return out;
}

}  // namespace testutil
