#include "pcc/centralizer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pcc {

FieldPtr extension_for(const Poly& p) {
  if (!p.is_monic() || !is_irreducible(p)) throw std::invalid_argument("extension_for needs a monic irreducible");
  if (p.degree() == 1) return p.field();
  static std::mutex mu;
  static std::map<std::pair<const Field*, std::vector<Elem>>, std::pair<FieldPtr, FieldPtr>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(p.field().get(), p.coeffs());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second.second;
  auto K = Field::extension(p.field(), p.coeffs());
  cache.emplace(key, std::make_pair(p.field(), K));  // keeps the base alive so the key stays unique
  return K;
}

TruncAlgElement::TruncAlgElement(FieldPtr K, Partition lambda) : K_(std::move(K)), lambda_(std::move(lambda)) {
  if (lambda_.empty()) throw std::invalid_argument("empty partition");
  const std::size_t s = size();
  starts_.resize(s * s);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      starts_[i * s + j] = pos;
      pos += static_cast<std::size_t>(window(i, j));
    }
  data_.assign(pos, 0);
}

TruncAlgElement TruncAlgElement::zero(FieldPtr K, Partition lambda) {
  return TruncAlgElement(std::move(K), std::move(lambda));
}

TruncAlgElement TruncAlgElement::identity(FieldPtr K, Partition lambda) {
  TruncAlgElement e(std::move(K), std::move(lambda));
  for (std::size_t i = 0; i < e.size(); ++i) e.set_coeff(i, i, 0, 1);
  return e;
}

int TruncAlgElement::offset(std::size_t i, std::size_t j) const {
  return std::max(0, lambda_[i] - lambda_[j]);
}

int TruncAlgElement::window(std::size_t i, std::size_t j) const { return std::min(lambda_[i], lambda_[j]); }

Elem TruncAlgElement::coeff(std::size_t i, std::size_t j, int e) const {
  const int off = offset(i, j);
  if (e < off || e >= off + window(i, j)) return 0;
  return data_[start(i, j) + static_cast<std::size_t>(e - off)];
}

void TruncAlgElement::set_coeff(std::size_t i, std::size_t j, int e, Elem c) {
  const int off = offset(i, j);
  if (e < off || e >= off + window(i, j)) {
    if (c == 0) return;
    throw std::out_of_range("coefficient outside the legal window");
  }
  data_[start(i, j) + static_cast<std::size_t>(e - off)] = c;
}

std::vector<Elem> TruncAlgElement::entry(std::size_t i, std::size_t j) const {
  std::vector<Elem> out(static_cast<std::size_t>(modulus_degree(i, j)), 0);
  for (int e = 0; e < modulus_degree(i, j); ++e) out[static_cast<std::size_t>(e)] = coeff(i, j, e);
  return out;
}

void TruncAlgElement::set_entry(std::size_t i, std::size_t j, const std::vector<Elem>& poly) {
  const int n = modulus_degree(i, j);
  for (std::size_t e = static_cast<std::size_t>(n); e < poly.size(); ++e)
    if (poly[e]) throw std::out_of_range("entry exceeds the truncation degree");
  const int off = offset(i, j);
  for (int e = 0; e < off && e < static_cast<int>(poly.size()); ++e)
    if (poly[static_cast<std::size_t>(e)]) throw std::out_of_range("entry violates the divisibility constraint");
  for (int e = off; e < n; ++e)
    set_coeff(i, j, e, e < static_cast<int>(poly.size()) ? poly[static_cast<std::size_t>(e)] : 0);
}

namespace {

void check_compatible(const TruncAlgElement& a, const TruncAlgElement& b) {
  if (a.partition() != b.partition())
    throw std::invalid_argument("algebra elements of different shapes");
  if (!a.field()->same_as(*b.field())) throw FieldError("algebra elements over different fields");
}

}  // namespace

TruncAlgElement alg_mul(const TruncAlgElement& a, const TruncAlgElement& b) {
  check_compatible(a, b);
  const auto& K = *a.field();
  const std::size_t s = a.size();
  auto out = TruncAlgElement::zero(a.field(), a.partition());
  std::vector<Elem> acc;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const int n = out.modulus_degree(i, j);
      acc.assign(static_cast<std::size_t>(n), 0);
      for (std::size_t k = 0; k < s; ++k) {
        const int ao = a.offset(i, k), aw = a.window(i, k);
        const int bo = b.offset(k, j), bw = b.window(k, j);
        for (int x = ao; x < ao + aw && x < n; ++x) {
          const Elem ca = a.coeff(i, k, x);
          if (!ca) continue;
          for (int y = bo; y < bo + bw && x + y < n; ++y) {
            const Elem cb = b.coeff(k, j, y);
            if (cb) acc[static_cast<std::size_t>(x + y)] = K.add(acc[static_cast<std::size_t>(x + y)], K.mul(ca, cb));
          }
        }
      }
      out.set_entry(i, j, acc);
    }
  return out;
}

TruncAlgElement alg_add(const TruncAlgElement& a, const TruncAlgElement& b) {
  check_compatible(a, b);
  auto out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] = a.field()->add(a.data()[i], b.data()[i]);
  return out;
}

std::vector<Matrix> constant_blocks(const TruncAlgElement& b) {
  const auto& lam = b.partition();
  std::vector<Matrix> out;
  std::size_t first = 0;
  for (auto [part, count] : lam.multiplicities()) {
    Matrix m(b.field(), static_cast<std::size_t>(count), static_cast<std::size_t>(count));
    for (std::size_t r = 0; r < static_cast<std::size_t>(count); ++r)
      for (std::size_t c = 0; c < static_cast<std::size_t>(count); ++c) m(r, c) = b.coeff(first + r, first + c, 0);
    out.push_back(std::move(m));
    first += static_cast<std::size_t>(count);
  }
  return out;
}

bool alg_is_unit(const TruncAlgElement& b) {
  auto blocks = constant_blocks(b);
  return std::all_of(blocks.begin(), blocks.end(), [](const Matrix& m) { return is_invertible(m); });
}

TruncAlgElement d_twist(const TruncAlgElement& b) {
  auto out = TruncAlgElement::zero(b.field(), b.partition());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const int shift = b.offset(j, i) - out.offset(i, j);
      for (int e = b.offset(j, i); e < b.offset(j, i) + b.window(j, i); ++e)
        out.set_coeff(i, j, e - shift, b.coeff(j, i, e));
    }
  return out;
}

std::string Generator::label() const {
  const auto& lam = realized.partition();
  auto copy = [&](std::size_t idx) {
    std::size_t first = idx;
    while (first > 0 && lam[first - 1] == lam[idx]) --first;
    return std::to_string(idx - first + 1);
  };
  const std::string i = std::to_string(lam[row]), j = std::to_string(lam[col]);
  switch (kind) {
    case GenKind::Scale: return "M_{" + i + ",a}(" + copy(row) + ")";
    case GenKind::Swap: return "E_" + i + "(" + copy(row) + "," + copy(col) + ")";
    case GenKind::ShearLe: return "A_{" + i + "<=" + j + ",a}(" + copy(row) + "," + copy(col) + ")";
    case GenKind::ShearGe: return "A_{" + i + ">=" + j + ",a}(" + copy(row) + "," + copy(col) + ")";
  }
  return {};
}

Generator make_generator(GenKind kind, std::size_t row, std::size_t col, std::vector<Elem> param,
                         const Partition& lambda, const FieldPtr& K) {
  if (row >= lambda.length() || col >= lambda.length()) throw std::out_of_range("generator index out of range");
  for (Elem c : param)
    if (c >= K->size()) throw FieldError("generator parameter is not a field element");
  const auto window = static_cast<std::size_t>(std::min(lambda[row], lambda[col]));
  switch (kind) {
    case GenKind::Scale:
      if (row != col || param.size() != window || param[0] == 0)
        throw std::invalid_argument("scaling needs a unit of K[x]_i");
      break;
    case GenKind::Swap:
      if (row == col || lambda[row] != lambda[col] || !param.empty())
        throw std::invalid_argument("swap needs two distinct parts of equal size");
      break;
    case GenKind::ShearLe:
      if (!(lambda[row] < lambda[col]) || param.size() != window)
        throw std::invalid_argument("A_{i<=j} needs i < j and a parameter in K[x]_i");
      break;
    case GenKind::ShearGe:
      if (row == col || !(lambda[row] >= lambda[col]) || param.size() != window)
        throw std::invalid_argument("A_{i>=j} needs distinct parts, i >= j and a parameter in K[x]_j");
      break;
  }
  auto e = TruncAlgElement::identity(K, lambda);
  switch (kind) {
    case GenKind::Scale:
      for (std::size_t t = 0; t < param.size(); ++t) e.set_coeff(row, row, static_cast<int>(t), param[t]);
      break;
    case GenKind::Swap:
      e.set_coeff(row, row, 0, 0);
      e.set_coeff(col, col, 0, 0);
      e.set_coeff(row, col, 0, 1);
      e.set_coeff(col, row, 0, 1);
      break;
    case GenKind::ShearLe:
    case GenKind::ShearGe: {
      const int off = e.offset(row, col);
      for (std::size_t t = 0; t < param.size(); ++t) e.set_coeff(row, col, off + static_cast<int>(t), param[t]);
      break;
    }
  }
  return Generator{kind, row, col, std::move(param), std::move(e)};
}

Generator shear(std::size_t row, std::size_t col, std::vector<Elem> param, const Partition& lambda,
                const FieldPtr& K) {
  if (row >= lambda.length() || col >= lambda.length()) throw std::out_of_range("generator index out of range");
  const GenKind kind = lambda[row] < lambda[col] ? GenKind::ShearLe : GenKind::ShearGe;
  return make_generator(kind, row, col, std::move(param), lambda, K);
}

namespace {

// Calls f on every coefficient vector of length n (first digit fastest).
template <class F>
void for_each_poly(const Field& K, int n, F&& f) {
  std::vector<Elem> c(static_cast<std::size_t>(n), 0);
  for (;;) {
    f(c);
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == K.size()) c[k++] = 0;
    if (k == c.size()) break;
  }
}

GenKind shear_kind(const Partition& lam, std::size_t r, std::size_t c) {
  return lam[r] < lam[c] ? GenKind::ShearLe : GenKind::ShearGe;
}

}  // namespace

std::vector<Generator> generators(const Partition& lambda, const FieldPtr& K) {
  if (lambda.empty()) throw std::invalid_argument("empty partition");
  std::vector<Generator> out;
  const std::size_t s = lambda.length();
  for (std::size_t r = 0; r < s; ++r)
    for_each_poly(*K, lambda[r], [&](const std::vector<Elem>& a) {
      if (a[0] != 0) out.push_back(make_generator(GenKind::Scale, r, r, a, lambda, K));
    });
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = r + 1; c < s; ++c)
      if (lambda[r] == lambda[c]) out.push_back(make_generator(GenKind::Swap, r, c, {}, lambda, K));
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c) {
      if (r == c) continue;
      for_each_poly(*K, std::min(lambda[r], lambda[c]), [&](const std::vector<Elem>& a) {
        if (std::any_of(a.begin(), a.end(), [](Elem v) { return v != 0; }))
          out.push_back(make_generator(shear_kind(lambda, r, c), r, c, a, lambda, K));
      });
    }
  return out;
}

std::vector<Generator> generating_set(const Partition& lambda, const FieldPtr& K) {
  if (lambda.empty()) throw std::invalid_argument("empty partition");
  std::vector<Generator> out;
  const std::size_t s = lambda.length();
  const auto basis = K->prime_basis();
  for (std::size_t r = 0; r < s; ++r) {
    const auto n = static_cast<std::size_t>(lambda[r]);
    if (K->primitive() != 1) {
      std::vector<Elem> a(n, 0);
      a[0] = K->primitive();
      out.push_back(make_generator(GenKind::Scale, r, r, a, lambda, K));
    }
    for (std::size_t t = 1; t < n; ++t)
      for (Elem b : basis) {
        std::vector<Elem> a(n, 0);
        a[0] = 1;
        a[t] = b;
        out.push_back(make_generator(GenKind::Scale, r, r, a, lambda, K));
      }
  }
  for (std::size_t r = 0; r + 1 < s; ++r)
    if (lambda[r] == lambda[r + 1]) out.push_back(make_generator(GenKind::Swap, r, r + 1, {}, lambda, K));
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c) {
      if (r == c) continue;
      const auto w = static_cast<std::size_t>(std::min(lambda[r], lambda[c]));
      for (std::size_t t = 0; t < w; ++t)
        for (Elem b : basis) {
          std::vector<Elem> a(w, 0);
          a[t] = b;
          out.push_back(make_generator(shear_kind(lambda, r, c), r, c, a, lambda, K));
        }
    }
  return out;
}

Matrix multiplication_matrix(const FieldPtr& K, Elem c, const Poly& p) {
  const auto d = static_cast<std::size_t>(p.degree());
  if (d == 1) {
    if (!K->same_as(*p.field())) throw FieldError("field does not match a linear eigenvalue");
    return Matrix(p.field(), 1, 1, {c});
  }
  if (K->is_prime() || !K->base()->same_as(*p.field()) || K->modulus() != p.coeffs())
    throw FieldError("field is not k[t]/(p)");
  Matrix m(p.field(), d, d);
  Elem basis_elem = 1;
  for (std::size_t s = 0; s < d; ++s) {
    auto col = K->coeffs(K->mul(c, basis_elem));
    for (std::size_t r = 0; r < d; ++r) m(r, s) = col[r];
    basis_elem = K->mul(basis_elem, K->generator());
  }
  return m;
}

Matrix embed(const TruncAlgElement& b, const Poly& p) {
  const auto d = static_cast<std::size_t>(p.degree());
  const auto& lam = b.partition();
  const auto n = static_cast<std::size_t>(lam.total()) * d;
  Matrix out(p.field(), n, n);
  std::vector<std::size_t> first(lam.length() + 1, 0);
  for (std::size_t i = 0; i < lam.length(); ++i) first[i + 1] = first[i] + static_cast<std::size_t>(lam[i]);
  for (std::size_t i = 0; i < lam.length(); ++i)
    for (std::size_t j = 0; j < lam.length(); ++j)
      for (int a = b.offset(i, j); a < b.offset(i, j) + b.window(i, j); ++a) {
        const Elem c = b.coeff(i, j, a);
        if (!c) continue;
        const Matrix m = multiplication_matrix(b.field(), c, p);
        // X^a pattern: block (r, s) with r = s + a
        for (int s = 0; s < lam[j]; ++s) {
          const int r = s + a;
          if (r >= lam[i]) break;
          out.set_block((first[i] + static_cast<std::size_t>(r)) * d, (first[j] + static_cast<std::size_t>(s)) * d, m);
        }
      }
  return out;
}

int centralizer_dim(const Partition& lambda, int d) {
  int total = 0;
  for (int a : lambda.parts())
    for (int b : lambda.parts()) total += std::min(a, b);
  return total * d;
}

}  // namespace pcc
