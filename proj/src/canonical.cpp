#include "pcc/canonical.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace pcc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be decreasing");
  }
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed partition: " + std::string(text));
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

Gjnf::Gjnf(FieldPtr f, std::vector<GjnfFactor> factors) : f_(std::move(f)), factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const GjnfFactor& a, const GjnfFactor& b) { return a.poly < b.poly; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& fac = factors_[i];
    if (!fac.poly.field()->same_as(*f_)) throw FieldError("GJNF factor over a different field");
    if (!fac.poly.is_monic() || !is_irreducible(fac.poly))
      throw std::invalid_argument("GJNF factor is not monic irreducible");
    if (fac.partition.empty()) throw std::invalid_argument("GJNF factor with empty partition");
    if (i && factors_[i - 1].poly == fac.poly) throw std::invalid_argument("repeated GJNF factor");
  }
}

int Gjnf::dimension() const {
  int n = 0;
  for (auto& f : factors_) n += f.partition.total() * f.poly.degree();
  return n;
}

bool Gjnf::is_invertible() const {
  return std::none_of(factors_.begin(), factors_.end(), [](const GjnfFactor& f) { return f.poly.is_t(); });
}

Partition Gjnf::partition_of(const Poly& p) const {
  for (auto& f : factors_)
    if (f.poly == p) return f.partition;
  return {};
}

int Gjnf::offset_of(const Poly& p) const {
  int off = 0;
  for (auto& f : factors_) {
    if (f.poly == p) return off;
    off += f.partition.total() * f.poly.degree();
  }
  return -1;
}

bool operator<(const Gjnf& a, const Gjnf& b) {
  return std::lexicographical_compare(
      a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
      [](const GjnfFactor& x, const GjnfFactor& y) {
        if (x.poly != y.poly) return x.poly < y.poly;
        return x.partition < y.partition;
      });
}

Matrix companion(const Poly& p) {
  if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("companion matrix needs a monic polynomial");
  const auto& F = *p.field();
  const auto d = static_cast<std::size_t>(p.degree());
  Matrix c(p.field(), d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = F.neg(p.coeff(i));
  return c;
}

Matrix jordan_block(const Poly& p, int n) {
  if (n < 1) throw std::invalid_argument("Jordan block size must be >= 1");
  if (!p.is_monic() || !is_irreducible(p)) throw std::invalid_argument("Jordan block needs a monic irreducible");
  const Matrix c = companion(p);
  const std::size_t d = c.rows();
  Matrix j(p.field(), d * n, d * n);
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    j.set_block(k * d, k * d, c);
    if (k + 1 < static_cast<std::size_t>(n))
      for (std::size_t i = 0; i < d; ++i) j((k + 1) * d + i, k * d + i) = 1;
  }
  return j;
}

Matrix jordan_block(const Poly& p, const Partition& lambda) {
  std::vector<Matrix> blocks;
  for (int part : lambda.parts()) blocks.push_back(jordan_block(p, part));
  return direct_sum(blocks);
}

Gjnf gjnf(const Matrix& a, std::uint64_t seed) {
  if (!a.is_square()) throw DimensionError("GJNF of a non-square matrix");
  std::vector<GjnfFactor> factors;
  const auto n = static_cast<std::size_t>(a.rows());
  for (auto& [p, mult] : poly_factor(char_poly(a), seed)) {
    const std::size_t d = static_cast<std::size_t>(p.degree());
    const Matrix pa = evaluate(p, a);
    // at_least[i] = number of Jordan blocks of size >= i
    std::vector<int> at_least(static_cast<std::size_t>(mult) + 2, 0);
    std::size_t prev = n;
    Matrix pw = pa;
    for (int i = 1; i <= mult; ++i) {
      const std::size_t r = rank(pw);
      at_least[static_cast<std::size_t>(i)] = static_cast<int>((prev - r) / d);
      prev = r;
      pw = pw * pa;
    }
    std::vector<int> parts;
    for (int i = mult; i >= 1; --i) {
      const int exact = at_least[static_cast<std::size_t>(i)] - at_least[static_cast<std::size_t>(i) + 1];
      for (int k = 0; k < exact; ++k) parts.push_back(i);
    }
    factors.push_back({p, Partition(std::move(parts))});
  }
  Gjnf g(a.field(), std::move(factors));
  if (g.dimension() != static_cast<int>(n)) throw std::logic_error("GJNF dimension mismatch");
  return g;
}

Matrix assemble(const Gjnf& g) {
  std::vector<Matrix> blocks;
  for (auto& f : g.factors()) blocks.push_back(jordan_block(f.poly, f.partition));
  if (blocks.empty()) return Matrix(g.field(), 0, 0);
  return direct_sum(blocks);
}

void for_each_gjnf(int n, const FieldPtr& f, bool invertible_only,
                   const std::function<void(const Gjnf&)>& visit) {
  if (n < 0) throw std::invalid_argument("dimension must be >= 0");
  std::vector<Poly> irr;
  for (int d = 1; d <= n; ++d) {
    auto level = irreducibles(f, d, invertible_only);
    irr.insert(irr.end(), level.begin(), level.end());
  }
  std::vector<std::vector<Partition>> parts(static_cast<std::size_t>(n) + 1);
  for (int s = 0; s <= n; ++s) parts[static_cast<std::size_t>(s)] = partitions_of(s);
  std::vector<GjnfFactor> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      Gjnf g(f);
      g = Gjnf(f, cur);
      visit(g);
      return;
    }
    for (std::size_t i = start; i < irr.size(); ++i) {
      const int d = irr[i].degree();
      if (d > remaining) break;  // irreducibles are sorted by degree
      for (int s = 1; s * d <= remaining; ++s) {
        for (auto& lam : parts[static_cast<std::size_t>(s)]) {
          cur.push_back({irr[i], lam});
          rec(i + 1, remaining - s * d);
          cur.pop_back();
        }
      }
    }
  };
  rec(0, n);
}

std::vector<Gjnf> enumerate_gjnf(int n, const FieldPtr& f, bool invertible_only) {
  std::vector<Gjnf> out;
  for_each_gjnf(n, f, invertible_only, [&](const Gjnf& g) { out.push_back(g); });
  return out;
}

}  // namespace pcc
