#include "pcc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcc {

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  for (Elem c : c_)
    if (c >= f_->size()) throw FieldError("polynomial coefficient out of range");
  normalize();
}

Poly Poly::monomial(FieldPtr f, Elem c, std::size_t n) {
  std::vector<Elem> v(n + 1, 0);
  v[n] = c;
  return Poly(std::move(f), std::move(v));
}

Poly Poly::linear(const FieldPtr& f, Elem a) { return Poly(f, {f->neg(a), 1}); }

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check(const Poly& o) const {
  if (!f_->same_as(*o.f_)) throw FieldError("polynomials over different fields");
}

Poly Poly::monic() const {
  if (is_zero()) throw FieldError("zero polynomial has no monic associate");
  return scaled(f_->inv(lead()));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_->mul(c_[i], c);
  return Poly(f_, std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(f_);
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = f_->mul(f_->from_int(std::int64_t(i)), c_[i]);
  return Poly(f_, std::move(v));
}

Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_->neg(c_[i]);
  return Poly(f_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  a.check(b);
  const auto& F = *a.f_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(a.f_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  a.check(b);
  const auto& F = *a.f_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(a.f_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.f_);
  const auto& F = *a.f_;
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return Poly(a.f_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check(d);
  if (d.is_zero()) throw FieldError("polynomial division by zero");
  const auto& F = *f_;
  if (degree() < d.degree()) return {Poly(f_), *this};
  std::vector<Elem> r = c_;
  std::vector<Elem> q(c_.size() - d.c_.size() + 1, 0);
  const Elem li = F.inv(d.lead());
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = r.size(); k-- > dd;) {
    Elem top = r[k];
    if (top == 0) continue;
    Elem m = F.mul(top, li);
    q[k - dd] = m;
    for (std::size_t i = 0; i <= dd; ++i) r[k - dd + i] = F.sub(r[k - dd + i], F.mul(m, d.c_[i]));
  }
  r.resize(dd);
  return {Poly(f_, std::move(q)), Poly(f_, std::move(r))};
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += f_->format(c_[i]);
  }
  return out;
}

Poly Poly::parse(const FieldPtr& f, std::string_view text) {
  std::vector<Elem> v;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    v.push_back(f->parse(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(f, std::move(v));
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly r = Poly::constant(base.field(), 1) % mod;
  Poly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return r;
}

Poly frobenius_power(const Poly& base, unsigned k, const Poly& mod) {
  Poly r = base % mod;
  for (unsigned i = 0; i < k; ++i) r = powmod(r, base.field()->size(), mod);
  return r;
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const auto& F = f.field();
  Poly g = f.monic();
  Poly t = Poly::monomial(F, 1, 1);
  if (frobenius_power(t, static_cast<unsigned>(n), g) != t % g) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0 || !is_prime_number(static_cast<std::uint64_t>(r))) continue;
    Poly h = frobenius_power(t, static_cast<unsigned>(n / r), g) - t;
    if (gcd(h, g).degree() != 0) return false;
  }
  return true;
}

namespace {

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const auto& F = *f.field();
  const std::uint32_t p = F.characteristic();
  const std::uint64_t root_exp = F.size() / p;  // c^(q/p) is the p-th root of c
  std::vector<Elem> v(f.degree() / p + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.pow(f.coeff(i * p), root_exp);
  return Poly(f.field(), std::move(v));
}

void squarefree(const Poly& f, int mult, Factorization& out) {
  if (f.degree() < 1) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<int>(f.field()->characteristic()), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0)
    squarefree(pth_root(c.monic()), mult * static_cast<int>(f.field()->characteristic()), out);
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const auto& F = f.field();
  Poly t = Poly::monomial(F, 1, 1);
  Poly h = t % f;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = powmod(h, F->size(), f);
    Poly g = gcd(h - t, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

Poly random_poly(const FieldPtr& F, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, F->size() - 1);
  std::vector<Elem> v(static_cast<std::size_t>(below_degree));
  for (auto& c : v) c = dist(rng);
  return Poly(F, std::move(v));
}

// Splitting polynomial whose gcd with f separates roots into two classes.
Poly splitter(const Poly& a, int d, const Poly& f) {
  const auto& F = *f.field();
  if (F.characteristic() == 2) {
    // absolute trace: sum of a^(2^i), i < degree(F) * d
    Poly acc = a % f;
    Poly term = acc;
    const unsigned steps = F.degree() * static_cast<unsigned>(d);
    for (unsigned i = 1; i < steps; ++i) {
      term = (term * term) % f;
      acc = acc + term;
    }
    return acc;
  }
  // a^((Q^d - 1)/2) = (a^(1 + Q + ... + Q^(d-1)))^((Q-1)/2)
  Poly norm = Poly::constant(f.field(), 1);
  Poly conj = a % f;
  for (int i = 0; i < d; ++i) {
    norm = (norm * conj) % f;
    if (i + 1 < d) conj = powmod(conj, F.size(), f);
  }
  return powmod(norm, (F.size() - 1) / 2, f) - Poly::constant(f.field(), 1);
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  constexpr int kMaxTries = 2000;
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    Poly a = random_poly(f.field(), f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly g = gcd(splitter(a, d, f), f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
  throw std::runtime_error("equal-degree splitting did not converge");
}

}  // namespace

Factorization poly_factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw FieldError("cannot factor the zero polynomial");
  Factorization sqf;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(seed);
  Factorization out;
  for (auto& [part, mult] : sqf) {
    for (auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irr;
      equal_degree(block, d, rng, irr);
      for (auto& p : irr) out.emplace_back(std::move(p), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge equal factors coming from different squarefree layers
  Factorization merged;
  for (auto& [p, m] : out) {
    if (!merged.empty() && merged.back().first == p)
      merged.back().second += m;
    else
      merged.emplace_back(std::move(p), m);
  }
  return merged;
}

std::vector<Poly> irreducibles(const FieldPtr& f, int d, bool exclude_t) {
  if (d < 1) throw FieldError("degree must be >= 1");
  std::vector<Poly> out;
  const std::uint64_t q = f->size();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  std::vector<Elem> c(static_cast<std::size_t>(d) + 1, 0);
  c[static_cast<std::size_t>(d)] = 1;
  // counter with c_0 as the most significant digit gives lex order low-to-high
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t r = k;
    for (int i = d - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = static_cast<Elem>(r % q);
      r /= q;
    }
    Poly p(f, c);
    if (exclude_t && p.is_t()) continue;
    if (d == 1 || (c[0] != 0 && is_irreducible(p))) out.push_back(std::move(p));
  }
  return out;
}

Poly least_irreducible(const FieldPtr& f, int d) {
  if (d < 1) throw FieldError("degree must be >= 1");
  const std::uint64_t q = f->size();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  std::vector<Elem> c(static_cast<std::size_t>(d) + 1, 0);
  c[static_cast<std::size_t>(d)] = 1;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t r = k;
    for (int i = d - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = static_cast<Elem>(r % q);
      r /= q;
    }
    Poly p(f, c);
    if (is_irreducible(p)) return p;
  }
  throw FieldError("no irreducible polynomial found");
}

}  // namespace pcc
