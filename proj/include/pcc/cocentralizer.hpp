#pragma once

// The orbit space M[K,x]_{mu x nu} = U/[U,h] for h = J_mu(C_p) + J_nu(C_p):
// entry (i,j) lies in K[x]_{l_ij}, l_ij = min(mu_i, nu_j).  M[K,x]_mu acts on
// the left by matrix multiplication; M[K,x]_nu acts on the right through
// D, i.e. (v.h)_ij = sum_k v_ik x^{nu_j - nu_k} h_kj.

#include <string>
#include <vector>

#include "pcc/canonical.hpp"
#include "pcc/centralizer.hpp"

namespace pcc {

class CocentShape {
 public:
  CocentShape(Partition mu, Partition nu, FieldPtr K);

  const Partition& mu() const { return mu_; }
  const Partition& nu() const { return nu_; }
  const FieldPtr& field() const { return K_; }
  std::size_t rows() const { return mu_.length(); }
  std::size_t cols() const { return nu_.length(); }
  int l(std::size_t i, std::size_t j) const { return std::min(mu_[i], nu_[j]); }
  /// Position of entry (i,j)'s constant coefficient in the flat layout.
  std::size_t start(std::size_t i, std::size_t j) const { return starts_[i * cols() + j]; }
  /// Number of K-coefficients, sum of l_ij.
  std::size_t dimension() const { return dim_; }

  friend bool operator==(const CocentShape& a, const CocentShape& b) {
    return a.mu_ == b.mu_ && a.nu_ == b.nu_ && a.K_->same_as(*b.K_);
  }

 private:
  Partition mu_, nu_;
  FieldPtr K_;
  std::vector<std::size_t> starts_;
  std::size_t dim_ = 0;
};

/// Entries flattened row-major by (i,j), each low-to-high in x.
class CocentElement {
 public:
  explicit CocentElement(CocentShape shape);
  CocentElement(CocentShape shape, std::vector<Elem> data);

  const CocentShape& shape() const { return shape_; }
  const FieldPtr& field() const { return shape_.field(); }
  const std::vector<Elem>& data() const { return data_; }
  std::vector<Elem>& data() { return data_; }

  /// Coefficient of x^e in entry (i,j); zero at or above l_ij.
  Elem coeff(std::size_t i, std::size_t j, int e) const;
  void set_coeff(std::size_t i, std::size_t j, int e, Elem c);
  std::vector<Elem> entry(std::size_t i, std::size_t j) const;
  /// Truncates at l_ij.
  void set_entry(std::size_t i, std::size_t j, const std::vector<Elem>& poly);

  bool is_zero() const;
  /// Every coefficient is 0 or 1.
  bool is_01() const;
  /// "[[c0,c1 c0;...]]": rows separated by ';', entries by spaces, each
  /// entry its coefficient list.
  std::string to_string() const;

  friend bool operator==(const CocentElement& a, const CocentElement& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }
  /// Lexicographic on the flat coefficient sequence (element codes).
  friend bool operator<(const CocentElement& a, const CocentElement& b) { return a.data_ < b.data_; }

 private:
  CocentShape shape_;
  std::vector<Elem> data_;
};

CocentElement act_left(const TruncAlgElement& g, const CocentElement& v);
CocentElement act_right(const CocentElement& v, const TruncAlgElement& h);
inline CocentElement act_left(const Generator& g, const CocentElement& v) { return act_left(g.realized, v); }
inline CocentElement act_right(const CocentElement& v, const Generator& h) { return act_right(v, h.realized); }

struct EigenBlockProblem {
  Poly p;
  Partition mu, nu;
  FieldPtr K;
  CocentShape shape() const { return CocentShape(mu, nu, K); }
};

/// One problem per irreducible shared by both forms, in factor order.
std::vector<EigenBlockProblem> reduce_levi_pair(const Gjnf& ga, const Gjnf& gb);

enum class LiftRule {
  /// kappa x^c in entry (i,j) goes to row block c, column block nu_j - 1 of
  /// the (i,j) block.  Its image is a complement of [U,h].
  LastColumn,
  /// kappa x^c placed along the pattern X^{c + max(0, mu_i - nu_j)}.  Kept
  /// for comparison only: under subdiagonal Jordan blocks most of these
  /// patterns already lie in [U,h].
  Diagonal,
};

/// The |mu| d x |nu| d matrix over k = p.field() representing v.
Matrix lift(const CocentElement& v, const Poly& p, LiftRule rule = LiftRule::LastColumn);

/// Columns E_rc B - A E_rc, flattened row-major, spanning [U,h].
Matrix commutator_space(const Matrix& a, const Matrix& b);
bool in_commutator_space(const Matrix& w, const Matrix& a, const Matrix& b);

/// The element v with lift(v) = V modulo [U,h], for A = J_mu(C_p) and
/// B = J_nu(C_p).
CocentElement project(const Matrix& V, const Poly& p, const Partition& mu, const Partition& nu);

}  // namespace pcc
