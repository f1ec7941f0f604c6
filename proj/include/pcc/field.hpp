#pragma once

// Finite fields F_{p^e} with table-driven arithmetic on compact element codes.
//
// An element of a field of degree d over its base is stored as the integer
// code sum_i c_i * |base|^i, where (c_0, ..., c_{d-1}) are its coefficients
// in the power basis {1, w, ..., w^{d-1}} of the generator w.  The code is a
// bijective encoding of the coefficient sequence, so element order by code is
// lexicographic order of coefficients read high-to-low.  Towers (an extension
// of an extension) use the same layout recursively.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcc {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Field {
 public:
  /// Largest field size for which arithmetic tables are built.
  static constexpr std::uint32_t kMaxSize = 1024;

  static FieldPtr prime(std::uint32_t p);
  /// Extension base[w]/(modulus).  `modulus` is monic, given low-to-high
  /// as base-field codes, and must be irreducible over the base.
  static FieldPtr extension(FieldPtr base, std::vector<Elem> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t size() const { return q_; }
  /// Degree over the prime field.
  std::uint32_t degree() const { return degree_; }
  /// Degree over the immediate base (1 for a prime field).
  std::uint32_t relative_degree() const { return rel_degree_; }
  const FieldPtr& base() const { return base_; }
  bool is_prime() const { return base_ == nullptr; }
  /// Monic modulus over the base, low-to-high.  Empty for a prime field.
  const std::vector<Elem>& modulus() const { return modulus_; }
  int depth() const { return base_ ? base_->depth() + 1 : 0; }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem inv(Elem a) const {
    if (a == 0) throw FieldError("inverse of zero");
    return inv_[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of an integer under Z -> F_p -> this field.
  Elem from_int(std::int64_t v) const;
  /// Coefficients over the immediate base, length relative_degree().
  std::vector<Elem> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const Elem> c) const;
  /// Coefficients over the prime field, length degree().
  std::vector<std::uint32_t> prime_coeffs(Elem a) const;

  /// The adjoined root w (code of t); for a prime field, 1.
  Elem generator() const { return is_prime() ? 1 : base_->size(); }
  /// Smallest-code generator of the multiplicative group.
  Elem primitive() const { return primitive_; }
  /// An F_p-basis of the field, as codes.
  std::vector<Elem> prime_basis() const;

  /// Elements of a prime field print as integers; extension elements print
  /// as "a0+a1*w+a2*w^2" (all coefficients), with nested parentheses for a
  /// tower.  Tower levels above the first use generator names w2, w3, ...
  std::string format(Elem a) const;
  Elem parse(std::string_view text) const;

  bool same_as(const Field& other) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  void build_inverses();

  std::uint32_t p_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t degree_ = 1;
  std::uint32_t rel_degree_ = 1;
  FieldPtr base_;
  std::vector<Elem> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  Elem primitive_ = 1;
};

bool is_prime_number(std::uint64_t n);

/// F_{p^e} over F_p with the lexicographically least monic irreducible
/// modulus of degree e (coefficients compared low-to-high).
FieldPtr ff_make(std::uint32_t p, std::uint32_t e);

/// Splits q = p^e; throws unless q is a prime power.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

/// Value wrapper with operator syntax; arithmetic across different fields
/// throws FieldError.
class FieldElement {
 public:
  FieldElement(FieldPtr f, Elem v) : f_(std::move(f)), v_(v) {}

  const FieldPtr& field() const { return f_; }
  Elem code() const { return v_; }
  std::vector<Elem> coeffs() const { return f_->coeffs(v_); }
  bool is_zero() const { return v_ == 0; }

  FieldElement inv() const { return {f_, f_->inv(v_)}; }
  FieldElement pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
  std::string to_string() const { return f_->format(v_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.check(b), a.f_->add(a.v_, b.v_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.check(b), a.f_->sub(a.v_, b.v_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.check(b), a.f_->mul(a.v_, b.v_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return {a.check(b), a.f_->div(a.v_, b.v_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_->same_as(*b.f_) && a.v_ == b.v_;
  }

 private:
  const FieldPtr& check(const FieldElement& o) const {
    if (!f_->same_as(*o.f_)) throw FieldError("field mismatch");
    return f_;
  }
  FieldPtr f_;
  Elem v_;
};

}  // namespace pcc
