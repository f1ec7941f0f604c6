#pragma once

// The algebra M[K,x]_lambda: s x s matrices whose (i,j) entry lies in
// K[x]_{lambda_i} and is divisible by x^{lambda_i - lambda_j} when
// lambda_i > lambda_j.  It is isomorphic to the centralizer of
// J_lambda(C_p) when K = k[t]/(p).

#include <string>
#include <vector>

#include "pcc/canonical.hpp"
#include "pcc/field.hpp"
#include "pcc/matrix.hpp"

namespace pcc {

/// K = k[t]/(p) for a monic irreducible p over k; k itself when deg p = 1.
/// Results are cached, so repeated calls return the same field object.
FieldPtr extension_for(const Poly& p);

/// An element stored as coefficient windows.  Block (i,j) keeps only its
/// min(lambda_i, lambda_j) legal coefficients, for exponents starting at
/// offset(i,j).
class TruncAlgElement {
 public:
  static TruncAlgElement zero(FieldPtr K, Partition lambda);
  static TruncAlgElement identity(FieldPtr K, Partition lambda);

  const FieldPtr& field() const { return K_; }
  const Partition& partition() const { return lambda_; }
  std::size_t size() const { return lambda_.length(); }

  /// Truncation degree of entry (i,j), which is lambda_i.
  int modulus_degree(std::size_t i, std::size_t) const { return lambda_[i]; }
  int offset(std::size_t i, std::size_t j) const;
  int window(std::size_t i, std::size_t j) const;

  /// Coefficient of x^e in entry (i,j); zero below the window.
  Elem coeff(std::size_t i, std::size_t j, int e) const;
  /// Throws std::out_of_range outside the legal window.
  void set_coeff(std::size_t i, std::size_t j, int e, Elem c);
  /// Full entry as coefficients of x^0 .. x^{modulus_degree-1}.
  std::vector<Elem> entry(std::size_t i, std::size_t j) const;
  /// Sets an entry; throws if it violates the divisibility constraint.
  void set_entry(std::size_t i, std::size_t j, const std::vector<Elem>& poly);

  /// All windows concatenated in row-major block order.
  const std::vector<Elem>& data() const { return data_; }
  std::vector<Elem>& data() { return data_; }

  friend bool operator==(const TruncAlgElement& a, const TruncAlgElement& b) {
    return a.lambda_ == b.lambda_ && a.K_->same_as(*b.K_) && a.data_ == b.data_;
  }

 private:
  TruncAlgElement(FieldPtr K, Partition lambda);
  std::size_t start(std::size_t i, std::size_t j) const { return starts_[i * size() + j]; }

  FieldPtr K_;
  Partition lambda_;
  std::vector<std::size_t> starts_;
  std::vector<Elem> data_;
};

TruncAlgElement alg_mul(const TruncAlgElement& a, const TruncAlgElement& b);
TruncAlgElement alg_add(const TruncAlgElement& a, const TruncAlgElement& b);
inline TruncAlgElement operator*(const TruncAlgElement& a, const TruncAlgElement& b) { return alg_mul(a, b); }
inline TruncAlgElement operator+(const TruncAlgElement& a, const TruncAlgElement& b) { return alg_add(a, b); }

/// Invertible exactly when each constant-term diagonal block (one per
/// distinct part size) is.
bool alg_is_unit(const TruncAlgElement& b);
/// Constant-term l_r x l_r matrices over K, one per distinct part size r.
std::vector<Matrix> constant_blocks(const TruncAlgElement& b);

/// D(B)_ij = x^{lambda_i - lambda_j} B_ji.  An involutive anti-automorphism:
/// D(ab) = D(b) D(a).  On windows it is a plain transpose.
TruncAlgElement d_twist(const TruncAlgElement& b);

enum class GenKind { Scale, Swap, ShearLe, ShearGe };

/// Row/col are part indices (0-based, into lambda.parts()).  Scale uses
/// row == col.  Swap exchanges two parts of equal size.  ShearLe puts
/// `param` at (row, col) where lambda_row < lambda_col; ShearGe puts
/// x^{lambda_row - lambda_col} * param there where lambda_row >= lambda_col.
struct Generator {
  GenKind kind;
  std::size_t row = 0, col = 0;
  std::vector<Elem> param;  // low-to-high coefficients
  TruncAlgElement realized;

  /// "M_{i,a}(l)", "E_i(l,m)", "A_{i<=j,a}(l,m)" or "A_{i>=j,a}(l,m)" with
  /// part sizes i, j and 1-based copy indices l, m.
  std::string label() const;
};

/// One generator with validated parameters.  `shear` picks ShearLe or
/// ShearGe from the part sizes.
Generator make_generator(GenKind kind, std::size_t row, std::size_t col, std::vector<Elem> param,
                         const Partition& lambda, const FieldPtr& K);
Generator shear(std::size_t row, std::size_t col, std::vector<Elem> param, const Partition& lambda,
                const FieldPtr& K);

/// Every generator of the four families with all parameters: units of
/// K[x]_i for scalings, unordered pairs of equal parts for swaps, nonzero
/// parameters for shears.
std::vector<Generator> generators(const Partition& lambda, const FieldPtr& K);
/// A smaller generating set of the same group.  Scalings use a primitive
/// element or 1 + b x^t; swaps are adjacent; shears use b x^t.  Here b runs
/// over an F_p-basis of K.
std::vector<Generator> generating_set(const Partition& lambda, const FieldPtr& K);

/// The matrix over k = p.field() of b acting on k^{|lambda| deg p}; commutes
/// with jordan_block(p, lambda).
Matrix embed(const TruncAlgElement& b, const Poly& p);
/// d x d matrix over k of multiplication by c in K = k[t]/(p).
Matrix multiplication_matrix(const FieldPtr& K, Elem c, const Poly& p);

/// k-dimension of the centralizer of J_lambda(C_p) with deg p = d.
int centralizer_dim(const Partition& lambda, int d);

}  // namespace pcc
