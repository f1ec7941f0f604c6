#pragma once

// Dense univariate polynomials over a Field, plus factorization.

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcc/field.hpp"

namespace pcc {

class Poly {
 public:
  explicit Poly(FieldPtr f) : f_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr f, Elem c) { return Poly(std::move(f), {c}); }
  /// c * t^n
  static Poly monomial(FieldPtr f, Elem c, std::size_t n);
  /// t - a
  static Poly linear(const FieldPtr& f, Elem a);

  const FieldPtr& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  /// Equal to the polynomial t.
  bool is_t() const { return c_.size() == 2 && c_[0] == 0 && c_[1] == 1; }

  Poly monic() const;
  Poly derivative() const;
  Elem eval(Elem x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Elem c) const;

  /// Returns (quotient, remainder).  Throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.f_->same_as(*b.f_) && a.c_ == b.c_;
  }
  /// Canonical order: degree first, then coefficients low-to-high.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  /// Comma-separated prime-field-coded coefficients low-to-high, "1,1,1".
  /// Extension-field coefficients use Field::format.
  std::string to_string() const;
  static Poly parse(const FieldPtr& f, std::string_view text);

 private:
  void normalize();
  void check(const Poly& o) const;

  FieldPtr f_;
  std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
/// base^(|F|^k) mod `mod` via repeated Frobenius.
Poly frobenius_power(const Poly& base, unsigned k, const Poly& mod);

bool is_irreducible(const Poly& f);

using Factorization = std::vector<std::pair<Poly, int>>;

/// Monic irreducible factors with multiplicity, sorted canonically.  The
/// product of the factors times lead(f) equals f.  The random stream used by
/// equal-degree splitting is seeded from `seed`.
Factorization poly_factor(const Poly& f, std::uint64_t seed = 0);

/// All monic irreducibles of degree d, in canonical order.
std::vector<Poly> irreducibles(const FieldPtr& f, int d, bool exclude_t = false);

/// Lexicographically least monic irreducible of degree d.
Poly least_irreducible(const FieldPtr& f, int d);

}  // namespace pcc
