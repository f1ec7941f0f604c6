#pragma once

// Conjugacy classes of the maximal parabolic P^(m,n) = [[GL_m, *],[0, GL_n]]
// and of AGL_n = [[1, e],[0, GL_n]] (e a row vector).

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcc/canonical.hpp"
#include "pcc/matproblem.hpp"

namespace pcc {

using BigInt = boost::multiprecision::cpp_int;

std::vector<std::pair<Gjnf, Gjnf>> levi_reps(int m, int n, const FieldPtr& f);

/// Number of orbits for one eigenvalue block.  Finite-type shapes are
/// counted once over `base` and reused for every extension; other shapes are
/// counted over K itself.  Results are cached process-wide.
std::uint64_t block_orbit_count(const Partition& mu, const Partition& nu, const FieldPtr& K, const FieldPtr& base,
                                std::uint64_t budget = kDefaultBudget);

std::uint64_t parabolic_class_count(int m, int n, const FieldPtr& f, unsigned threads = 1,
                                    std::uint64_t budget = kDefaultBudget);

struct ClassBlock {
  Poly poly;
  CocentElement rep;
};

struct ClassRep {
  Gjnf levi_a, levi_b;
  std::vector<ClassBlock> blocks;  // shared eigenvalues, in factor order of levi_a
  Matrix matrix;
};

/// [[assemble(a), sum of lifts],[0, assemble(b)]], each lift placed at the
/// block offsets of its eigenvalue.
Matrix assemble_class(const Gjnf& a, const Gjnf& b, const std::vector<ClassBlock>& blocks);

void for_each_parabolic_rep(int m, int n, const FieldPtr& f, const std::function<void(const ClassRep&)>& visit,
                            std::uint64_t budget = kDefaultBudget);
std::vector<ClassRep> parabolic_class_reps(int m, int n, const FieldPtr& f, std::uint64_t budget = kDefaultBudget);

/// c_n; c_0 = 1.
std::uint64_t gl_class_count(int n, const FieldPtr& f);

std::vector<Matrix> agl_class_reps(int n, const FieldPtr& f);
/// c_n + c_{n-1} + ... + c_0.
std::uint64_t agl_class_count(int n, const FieldPtr& f);

inline constexpr std::uint64_t kOracleBudget = 1'000'000;

/// Brute-force classes of P^(m,n)(F), or of AGL_n when `affine` (m must be 1,
/// the GL_1 corner pinned to 1).  Classes are closures under conjugation by
/// elementary generators of the Levi factors plus the unipotent E_{i,m+j}.
class Oracle {
 public:
  Oracle(int m, int n, FieldPtr f, bool affine = false, std::uint64_t budget = kOracleBudget);

  std::uint64_t group_order() const { return class_of_.size(); }
  std::size_t count() const { return count_; }
  /// Class index of a group element, in order of first appearance.
  std::size_t class_of(const Matrix& g) const;
  bool conjugate(const Matrix& a, const Matrix& b) const { return class_of(a) == class_of(b); }
  /// One element per class, the first in enumeration order.
  std::vector<Matrix> class_reps() const;

 private:
  std::uint64_t index(const Matrix& g) const;
  Matrix element(std::uint64_t idx) const;

  int m_, n_;
  FieldPtr f_;
  bool affine_;
  std::vector<Matrix> gl_m_, gl_n_;
  std::vector<std::int64_t> code_m_, code_n_;  // matrix code -> index in gl_*, or -1
  std::uint64_t vq_ = 1;                        // q^{mn}
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint64_t> first_;
  std::size_t count_ = 0;
};

class CountPolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CountPoly {
  std::vector<BigInt> coeffs;  // low-to-high in q
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;  // (q, count) used or checked
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigInt eval(std::uint64_t q) const;
  std::string to_string() const;
};

/// Prime powers 2, 3, 4, 5, 7, 8, 9, ...
std::vector<std::uint64_t> prime_powers(std::size_t count);

/// Fits a polynomial through exact samples of `count_at`, adding nodes until
/// two consecutive fits agree and two further nodes check out.
CountPoly interpolate_counts(const std::function<std::uint64_t(std::uint64_t)>& count_at, int initial_degree,
                             int max_nodes = 24);
CountPoly count_poly(int m, int n, unsigned threads = 1);

}  // namespace pcc
