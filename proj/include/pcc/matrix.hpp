#pragma once

// Dense matrices over a finite field with exact Gaussian elimination.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcc/field.hpp"
#include "pcc/poly.hpp"

namespace pcc {

class Matrix {
 public:
  Matrix(FieldPtr f, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(FieldPtr f, std::size_t n);
  /// Rows separated by ';', entries by spaces: "0 1; 1 0".
  static Matrix parse(const FieldPtr& f, std::string_view text);

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const std::vector<Elem>& entries() const { return a_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix scaled(Elem c) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.f_->same_as(*b.f_) && a.a_ == b.a_;
  }

  /// "r;r;..." with space-separated entries.
  std::string to_string() const;

 private:
  FieldPtr f_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

std::size_t rank(const Matrix& a);
/// Basis of the right null space {x : a x = 0}, as column vectors packed into
/// a cols x k matrix.
Matrix kernel_basis(const Matrix& a);
Matrix inverse(const Matrix& a);
bool is_invertible(const Matrix& a);
Matrix power(const Matrix& a, std::uint64_t e);
/// p(A) for a polynomial over the matrix field.
Matrix evaluate(const Poly& p, const Matrix& a);

/// Block-diagonal direct sum.
Matrix direct_sum(std::span<const Matrix> blocks);
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Assembles a grid of blocks; every block in a grid row has equal height and
/// every block in a grid column equal width.
Matrix block_assemble(const std::vector<std::vector<Matrix>>& grid);

/// det(tI - A), by reduction to upper Hessenberg form.
Poly char_poly(const Matrix& a);

enum class Similarity { Found, NotSimilar, Undetermined };

struct ConjugatorResult {
  Similarity status = Similarity::Undetermined;
  std::optional<Matrix> conjugator;  // X with X A X^{-1} = B when Found
};

/// Searches the solution space of XA = BX for an invertible element:
/// exhaustively when |F|^dim <= 2^20, otherwise by seeded random sampling
/// (at most `max_samples` draws).  NotSimilar is reported only when the
/// generalized-eigenvalue rank data of A and B differ.
ConjugatorResult conjugator(const Matrix& a, const Matrix& b, std::uint64_t seed = 0,
                            int max_samples = 256);

}  // namespace pcc
