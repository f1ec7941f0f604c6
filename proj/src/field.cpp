#include "pcc/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pcc/poly.hpp"

namespace pcc {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  if (q < 2) throw FieldError("field size must be a prime power >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw FieldError("not a prime power: " + std::to_string(q));
  return {static_cast<std::uint32_t>(p), e};
}

FieldPtr Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw FieldError("not a prime: " + std::to_string(p));
  if (p > kMaxSize) throw FieldError("field too large");
  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->q_ = p;
  f->add_.resize(std::size_t(p) * p);
  f->mul_.resize(std::size_t(p) * p);
  f->neg_.resize(p);
  for (std::uint32_t a = 0; a < p; ++a) {
    f->neg_[a] = (p - a) % p;
    for (std::uint32_t b = 0; b < p; ++b) {
      f->add_[a * p + b] = (a + b) % p;
      f->mul_[a * p + b] = static_cast<Elem>((std::uint64_t(a) * b) % p);
    }
  }
  f->build_inverses();
  return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Elem> modulus) {
  if (!base) throw FieldError("null base field");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw FieldError("extension modulus must be monic of degree >= 1");
  const std::uint32_t d = static_cast<std::uint32_t>(modulus.size() - 1);
  if (d == 1) throw FieldError("degree-1 extension is the base field itself");
  if (!is_irreducible(Poly(base, modulus)))
    throw FieldError("extension modulus is reducible");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    q *= base->size();
    if (q > kMaxSize) throw FieldError("field too large");
  }
  std::shared_ptr<Field> f(new Field());
  const Field& B = *base;
  const std::uint32_t qb = B.size();
  f->p_ = B.p_;
  f->q_ = static_cast<std::uint32_t>(q);
  f->degree_ = B.degree_ * d;
  f->rel_degree_ = d;
  f->base_ = base;
  f->modulus_ = modulus;
  const std::uint32_t Q = f->q_;

  auto digits = [&](Elem a) {
    std::vector<Elem> c(d);
    for (std::uint32_t i = 0; i < d; ++i) {
      c[i] = a % qb;
      a /= qb;
    }
    return c;
  };
  auto encode = [&](const std::vector<Elem>& c) {
    Elem a = 0;
    for (std::uint32_t i = d; i-- > 0;) a = a * qb + c[i];
    return a;
  };

  f->add_.resize(std::size_t(Q) * Q);
  f->mul_.resize(std::size_t(Q) * Q);
  f->neg_.resize(Q);
  std::vector<std::vector<Elem>> dig(Q);
  for (Elem a = 0; a < Q; ++a) dig[a] = digits(a);
  for (Elem a = 0; a < Q; ++a) {
    std::vector<Elem> n(d);
    for (std::uint32_t i = 0; i < d; ++i) n[i] = B.neg(dig[a][i]);
    f->neg_[a] = encode(n);
  }
  std::vector<Elem> prod(2 * d - 1), c(d);
  for (Elem a = 0; a < Q; ++a) {
    for (Elem b = 0; b < Q; ++b) {
      for (std::uint32_t i = 0; i < d; ++i) c[i] = B.add(dig[a][i], dig[b][i]);
      f->add_[a * Q + b] = encode(c);
      std::fill(prod.begin(), prod.end(), 0);
      for (std::uint32_t i = 0; i < d; ++i) {
        if (dig[a][i] == 0) continue;
        for (std::uint32_t j = 0; j < d; ++j)
          prod[i + j] = B.add(prod[i + j], B.mul(dig[a][i], dig[b][j]));
      }
      // reduce modulo the monic modulus, top degree first
      for (std::uint32_t k = 2 * d - 1; k-- > d;) {
        Elem top = prod[k];
        if (top == 0) continue;
        prod[k] = 0;
        for (std::uint32_t i = 0; i < d; ++i)
          prod[k - d + i] = B.sub(prod[k - d + i], B.mul(top, modulus[i]));
      }
      std::copy(prod.begin(), prod.begin() + d, c.begin());
      f->mul_[a * Q + b] = encode(c);
    }
  }
  f->build_inverses();
  return f;
}

void Field::build_inverses() {
  inv_.assign(q_, 0);
  for (Elem a = 1; a < q_; ++a) {
    if (inv_[a] != 0) continue;
    for (Elem b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) {
        inv_[a] = b;
        inv_[b] = a;
        break;
      }
    }
  }
  // multiplicative generator: order q-1
  const std::uint32_t n = q_ - 1;
  std::vector<std::uint32_t> primes;
  for (std::uint32_t r = 2, m = n; r <= m; ++r) {
    if (m % r == 0) {
      primes.push_back(r);
      while (m % r == 0) m /= r;
    }
  }
  for (Elem g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto r : primes)
      if (pow(g, n / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      primitive_ = g;
      break;
    }
  }
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % std::int64_t(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);  // prime-field codes embed as the constant digit
}

std::vector<Elem> Field::coeffs(Elem a) const {
  if (is_prime()) return {a};
  std::vector<Elem> c(rel_degree_);
  for (auto& x : c) {
    x = a % base_->size();
    a /= base_->size();
  }
  return c;
}

Elem Field::from_coeffs(std::span<const Elem> c) const {
  if (is_prime()) {
    if (c.size() != 1 || c[0] >= q_) throw FieldError("bad prime-field coefficients");
    return c[0];
  }
  if (c.size() != rel_degree_) throw FieldError("coefficient count must equal the extension degree");
  Elem a = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= base_->size()) throw FieldError("coefficient out of range");
    a = a * base_->size() + c[i];
  }
  return a;
}

std::vector<std::uint32_t> Field::prime_coeffs(Elem a) const {
  if (is_prime()) return {a};
  std::vector<std::uint32_t> out;
  for (Elem c : coeffs(a)) {
    auto sub = base_->prime_coeffs(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<Elem> Field::prime_basis() const {
  if (is_prime()) return {1};
  std::vector<Elem> out;
  auto bb = base_->prime_basis();
  Elem scale = 1;
  for (std::uint32_t i = 0; i < rel_degree_; ++i) {
    for (Elem b : bb) out.push_back(b * scale);
    scale *= base_->size();
  }
  return out;
}

namespace {
std::string generator_name(int depth) {
  return depth == 1 ? std::string("w") : "w" + std::to_string(depth);
}
}  // namespace

std::string Field::format(Elem a) const {
  if (is_prime()) return std::to_string(a);
  const auto c = coeffs(a);
  const std::string g = generator_name(depth());
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += '+';
    std::string cs = base_->format(c[i]);
    if (!base_->is_prime()) cs = "(" + cs + ")";
    out += cs;
    if (i >= 1) out += "*" + g;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Splits on '+' at parenthesis depth zero.
std::vector<std::string_view> split_terms(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '+' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

}  // namespace

Elem Field::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw FieldError("empty field element");
  if (is_prime()) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw FieldError("malformed field element: " + std::string(text));
    return from_int(v);
  }
  // A bare integer is the image of Z.
  {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc() && ptr == text.data() + text.size()) return from_int(v);
  }
  const std::string g = generator_name(depth());
  std::vector<Elem> c(rel_degree_, 0);
  for (auto term : split_terms(text)) {
    std::size_t power = 0;
    std::string_view coef = term;
    auto star = term.rfind('*');
    std::string_view tail = term;
    if (star != std::string_view::npos) {
      coef = trim(term.substr(0, star));
      tail = trim(term.substr(star + 1));
    } else if (term.substr(0, g.size()) == g && (term.size() == g.size() || term[g.size()] == '^')) {
      coef = "1";
    } else {
      tail = {};
    }
    if (!tail.empty()) {
      if (tail.substr(0, g.size()) != g) throw FieldError("malformed field element: " + std::string(text));
      tail.remove_prefix(g.size());
      if (tail.empty()) {
        power = 1;
      } else {
        if (tail.front() != '^') throw FieldError("malformed field element: " + std::string(text));
        tail.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), power);
        if (ec != std::errc() || ptr != tail.data() + tail.size())
          throw FieldError("malformed exponent: " + std::string(text));
      }
    }
    if (power >= rel_degree_) throw FieldError("exponent exceeds extension degree: " + std::string(text));
    if (!coef.empty() && coef.front() == '(' && coef.back() == ')')
      coef = coef.substr(1, coef.size() - 2);
    c[power] = base_->add(c[power], base_->parse(coef));
  }
  return from_coeffs(c);
}

bool Field::same_as(const Field& other) const {
  if (this == &other) return true;
  if (q_ != other.q_ || p_ != other.p_ || modulus_ != other.modulus_) return false;
  if (is_prime() || other.is_prime()) return is_prime() && other.is_prime();
  return base_->same_as(*other.base_);
}

FieldPtr ff_make(std::uint32_t p, std::uint32_t e) {
  if (e < 1) throw FieldError("extension degree must be >= 1");
  auto fp = Field::prime(p);
  if (e == 1) return fp;
  return Field::extension(fp, least_irreducible(fp, static_cast<int>(e)).coeffs());
}

}  // namespace pcc
