#pragma once

// Generalized Jordan normal form: sum over generalized eigenvalues p of
// J_lambda(C_p), Jordan blocks built on companion matrices with identity
// blocks on the block subdiagonal.

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcc/field.hpp"
#include "pcc/matrix.hpp"
#include "pcc/poly.hpp"

namespace pcc {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int total() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  /// (part size, multiplicity) pairs, largest part first.
  std::vector<std::pair<int, int>> multiplicities() const;

  std::string to_string() const;  // "4,2"
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, largest first part first, reverse-lexicographic.
std::vector<Partition> partitions_of(int n);

struct GjnfFactor {
  Poly poly;
  Partition partition;
  friend bool operator==(const GjnfFactor&, const GjnfFactor&) = default;
};

class Gjnf {
 public:
  explicit Gjnf(FieldPtr f) : f_(std::move(f)) {}
  /// Sorts factors canonically and validates them.
  Gjnf(FieldPtr f, std::vector<GjnfFactor> factors);

  const FieldPtr& field() const { return f_; }
  const std::vector<GjnfFactor>& factors() const { return factors_; }
  int dimension() const;
  bool is_invertible() const;
  /// Partition attached to p, or an empty partition.
  Partition partition_of(const Poly& p) const;
  /// Row offset of p's block inside assemble(*this); -1 if absent.
  int offset_of(const Poly& p) const;

  friend bool operator==(const Gjnf& a, const Gjnf& b) { return a.factors_ == b.factors_; }
  friend bool operator<(const Gjnf& a, const Gjnf& b);

 private:
  FieldPtr f_;
  std::vector<GjnfFactor> factors_;
};

/// Multiplication by a root of p on the basis {1, a, ..., a^{d-1}}.
Matrix companion(const Poly& p);
/// J_n(C_p): C_p on the diagonal, I_d on the block subdiagonal.
Matrix jordan_block(const Poly& p, int n);
/// J_lambda(C_p) as the direct sum of J_{lambda_i}(C_p).
Matrix jordan_block(const Poly& p, const Partition& lambda);

Gjnf gjnf(const Matrix& a, std::uint64_t seed = 0);
Matrix assemble(const Gjnf& g);

/// Visits every GJNF of total dimension n exactly once, in a fixed order.
void for_each_gjnf(int n, const FieldPtr& f, bool invertible_only,
                   const std::function<void(const Gjnf&)>& visit);
std::vector<Gjnf> enumerate_gjnf(int n, const FieldPtr& f, bool invertible_only);

}  // namespace pcc
