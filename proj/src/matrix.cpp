#include "pcc/matrix.hpp"

#include <random>
#include <sstream>

namespace pcc {

Matrix::Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) throw DimensionError("entry count does not match dimensions");
  for (Elem e : a_)
    if (e >= f_->size()) throw FieldError("matrix entry out of range");
}

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
  Matrix m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::parse(const FieldPtr& f, std::string_view text) {
  std::vector<std::vector<Elem>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto semi = text.find(';', start);
    auto row = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    std::vector<Elem> r;
    std::istringstream in{std::string(row)};
    std::string tok;
    while (in >> tok) r.push_back(f->parse(tok));
    if (!r.empty() || semi != std::string_view::npos) rows.push_back(std::move(r));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (rows.empty()) throw DimensionError("empty matrix");
  const std::size_t nc = rows.front().size();
  std::vector<Elem> all;
  for (auto& r : rows) {
    if (r.size() != nc || nc == 0) throw DimensionError("ragged or empty matrix rows");
    all.insert(all.end(), r.begin(), r.end());
  }
  return Matrix(f, rows.size(), nc, std::move(all));
}

bool Matrix::is_zero() const {
  for (Elem e : a_)
    if (e) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix m = *this;
  for (auto& e : m.a_) e = f_->mul(e, c);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Matrix b(f_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("dimension mismatch in +");
  if (!a.f_->same_as(*b.f_)) throw FieldError("field mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.f_->add(a.a_[i], b.a_[i]);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("dimension mismatch in -");
  if (!a.f_->same_as(*b.f_)) throw FieldError("field mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.f_->sub(a.a_[i], b.a_[i]);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("dimension mismatch in *");
  if (!a.f_->same_as(*b.f_)) throw FieldError("field mismatch");
  const auto& F = *a.f_;
  Matrix m(a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = F.add(m(i, j), F.mul(x, b(k, j)));
    }
  return m;
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += f_->format((*this)(r, c));
    }
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  const auto& F = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Elem inv = F.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = F.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Elem f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = F.sub(m(r, c), F.mul(f, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return rref(m).size();
}

Matrix kernel_basis(const Matrix& a) {
  Matrix m = a;
  const auto pivots = rref(m);
  const auto& F = *a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(a.field(), a.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k(free_cols[j], j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], j) = F.neg(m(i, free_cols[j]));
  }
  return k;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(a.field(), n));
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix();
  return aug.block(0, n, n, n);
}

bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

Matrix power(const Matrix& a, std::uint64_t e) {
  if (!a.is_square()) throw DimensionError("power of a non-square matrix");
  Matrix r = Matrix::identity(a.field(), a.rows());
  Matrix b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Matrix evaluate(const Poly& p, const Matrix& a) {
  if (!a.is_square()) throw DimensionError("polynomial of a non-square matrix");
  const auto& F = *a.field();
  Matrix r(a.field(), a.rows(), a.cols());
  for (int i = p.degree(); i >= 0; --i) {
    r = r * a;
    const Elem c = p.coeff(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < a.rows(); ++k) r(k, k) = F.add(r(k, k), c);
  }
  return r;
}

Matrix direct_sum(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw DimensionError("direct sum of nothing");
  std::size_t nr = 0, nc = 0;
  for (auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  Matrix m(blocks.front().field(), nr, nc);
  std::size_t r = 0, c = 0;
  for (auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  const Matrix both[] = {a, b};
  return direct_sum(both);
}

Matrix block_assemble(const std::vector<std::vector<Matrix>>& grid) {
  if (grid.empty() || grid.front().empty()) throw DimensionError("empty block grid");
  std::size_t nr = 0, nc = 0;
  for (auto& row : grid) nr += row.front().rows();
  for (auto& b : grid.front()) nc += b.cols();
  Matrix m(grid.front().front().field(), nr, nc);
  std::size_t r = 0;
  for (auto& row : grid) {
    if (row.size() != grid.front().size()) throw DimensionError("ragged block grid");
    std::size_t c = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].rows() != row.front().rows() || row[j].cols() != grid.front()[j].cols())
        throw DimensionError("inconsistent block sizes");
      m.set_block(r, c, row[j]);
      c += row[j].cols();
    }
    r += row.front().rows();
  }
  return m;
}

Poly char_poly(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const auto& F = *a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  // similarity transforms to upper Hessenberg form
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(m, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    const Elem t = F.inv(h(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      const Elem u = F.mul(h(r, m - 1), t);
      if (!u) continue;
      for (std::size_t c = 0; c < n; ++c) h(r, c) = F.sub(h(r, c), F.mul(u, h(m, c)));
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, m) = F.add(h(rr, m), F.mul(u, h(rr, r)));
    }
  }
  // p[k] is the characteristic polynomial of the leading k x k block
  std::vector<Poly> p;
  p.push_back(Poly::constant(a.field(), 1));
  const Poly t = Poly::monomial(a.field(), 1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    Poly next = (t - Poly::constant(a.field(), h(k, k))) * p[k];
    Elem prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = F.mul(prod, h(i + 1, i));
      const Elem coef = F.mul(prod, h(i, k));
      if (coef) next = next - p[i].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

namespace {

bool same_rank_data(const Matrix& a, const Matrix& b) {
  const Poly ca = char_poly(a);
  if (ca != char_poly(b)) return false;
  for (auto& [p, mult] : poly_factor(ca)) {
    const Matrix pa = evaluate(p, a), pb = evaluate(p, b);
    Matrix xa = pa, xb = pb;
    for (int i = 1; i <= mult; ++i) {
      if (rank(xa) != rank(xb)) return false;
      xa = xa * pa;
      xb = xb * pb;
    }
  }
  return true;
}

Matrix combine(const Matrix& basis, const std::vector<Elem>& coef, std::size_t n) {
  const auto& F = *basis.field();
  Matrix x(basis.field(), n, n);
  for (std::size_t j = 0; j < coef.size(); ++j) {
    if (!coef[j]) continue;
    for (std::size_t i = 0; i < n * n; ++i)
      x(i / n, i % n) = F.add(x(i / n, i % n), F.mul(coef[j], basis(i, j)));
  }
  return x;
}

}  // namespace

ConjugatorResult conjugator(const Matrix& a, const Matrix& b, std::uint64_t seed, int max_samples) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("conjugator needs square matrices of equal size");
  if (!same_rank_data(a, b)) return {Similarity::NotSimilar, std::nullopt};
  const auto& F = *a.field();
  const std::size_t n = a.rows();
  // unknown x_{rs} at index r*n+s; equation (XA - BX)_{rc} = 0 at index r*n+c
  Matrix sys(a.field(), n * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t eq = r * n + c;
      for (std::size_t s = 0; s < n; ++s) {
        sys(eq, r * n + s) = F.add(sys(eq, r * n + s), a(s, c));
        sys(eq, s * n + c) = F.sub(sys(eq, s * n + c), b(r, s));
      }
    }
  const Matrix basis = kernel_basis(sys);
  const std::size_t d = basis.cols();
  double space = 1;
  for (std::size_t i = 0; i < d; ++i) space *= F.size();
  if (space <= double(1u << 20)) {
    std::vector<Elem> coef(d, 0);
    while (true) {
      // odometer, lowest index fastest
      std::size_t i = 0;
      while (i < d && ++coef[i] == F.size()) coef[i++] = 0;
      if (i == d) break;
      Matrix x = combine(basis, coef, n);
      if (is_invertible(x)) return {Similarity::Found, std::move(x)};
    }
    return {Similarity::Undetermined, std::nullopt};  // unreachable when rank data agree
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> dist(0, F.size() - 1);
  std::vector<Elem> coef(d);
  for (int attempt = 0; attempt < max_samples; ++attempt) {
    for (auto& c : coef) c = dist(rng);
    Matrix x = combine(basis, coef, n);
    if (is_invertible(x)) return {Similarity::Found, std::move(x)};
  }
  return {Similarity::Undetermined, std::nullopt};
}

}  // namespace pcc
