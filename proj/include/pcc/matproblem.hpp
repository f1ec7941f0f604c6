#pragma once

// Orbits of M[K,x]_mu^x x M[K,x]_nu^x on M[K,x]_{mu x nu} over a finite K.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcc/cocentralizer.hpp"

namespace pcc {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_, budget_;
};

struct OrbitSet {
  CocentShape shape;
  std::vector<CocentElement> reps;  // increasing
  std::vector<std::uint64_t> sizes;
  std::uint64_t total = 0;
  std::size_t count() const { return reps.size(); }
};

/// Elements are visited in increasing lexicographic order; each unvisited
/// one starts a closure and is the minimum of its orbit.  Throws
/// BudgetExceeded when |K|^dim exceeds `budget`.
OrbitSet enumerate_orbits(const Partition& mu, const Partition& nu, const FieldPtr& K,
                          std::uint64_t budget = kDefaultBudget);
/// Same closure without materializing representatives.
std::uint64_t orbit_count(const Partition& mu, const Partition& nu, const FieldPtr& K,
                          std::uint64_t budget = kDefaultBudget);

/// Lexicographic minimum of v's orbit.  Throws BudgetExceeded once the orbit
/// grows past `budget`.
CocentElement canonical_form(const CocentElement& v, std::uint64_t budget = kDefaultBudget);

struct StructuredResult {
  CocentElement result;
  std::vector<std::string> log;  // one line per generator applied
};

/// Greedy pivot reduction for mu = (r) and mu = (r, 1^a).  Every step is a
/// generator action, so the result stays in v's orbit; its coefficients are
/// all 0 or 1.
StructuredResult reduce_structured(const CocentElement& v);
bool structured_supported(const Partition& mu);

enum class TypeKind { Finite, Infinite, Unknown };

struct TypeVerdict {
  TypeKind kind;
  std::string rule;
};

TypeVerdict type_classify(const Partition& mu, const Partition& nu);
std::string to_string(TypeKind k);

/// alpha beta^-1 gamma^-1 delta for mu = nu = (4,2) and v of the form
/// [[alpha x^2 + ..., beta x + ...], [gamma x + ..., delta + ...]] with all
/// four leading coefficients nonzero; empty otherwise.
std::optional<Elem> wild_invariant(const CocentElement& v);

}  // namespace pcc
