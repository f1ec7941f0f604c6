#include "pcc/classes.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcc/centralizer.hpp"
#include "pcc/cocentralizer.hpp"

namespace pcc {

using boost::multiprecision::cpp_rational;

std::vector<std::pair<Gjnf, Gjnf>> levi_reps(int m, int n, const FieldPtr& f) {
  if (m < 1 || n < 1) throw std::invalid_argument("parabolic blocks need m, n >= 1");
  const auto as = enumerate_gjnf(m, f, true);
  const auto bs = enumerate_gjnf(n, f, true);
  std::vector<std::pair<Gjnf, Gjnf>> out;
  out.reserve(as.size() * bs.size());
  for (auto& a : as)
    for (auto& b : bs) out.emplace_back(a, b);
  return out;
}

namespace {

using ShapeKey = std::tuple<Partition, Partition, std::uint32_t>;

std::mutex cache_mutex;
std::map<ShapeKey, std::uint64_t> count_cache;
std::map<ShapeKey, OrbitSet> orbit_cache;

const OrbitSet& cached_orbits(const Partition& mu, const Partition& nu, const FieldPtr& K, std::uint64_t budget) {
  const ShapeKey key{mu, nu, K->size()};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = orbit_cache.find(key); it != orbit_cache.end() && it->second.shape.field()->same_as(*K))
      return it->second;
  }
  OrbitSet s = enumerate_orbits(mu, nu, K, budget);
  std::lock_guard lock(cache_mutex);
  return orbit_cache.insert_or_assign(key, std::move(s)).first->second;
}

}  // namespace

std::uint64_t block_orbit_count(const Partition& mu, const Partition& nu, const FieldPtr& K, const FieldPtr& base,
                                std::uint64_t budget) {
  const bool finite = type_classify(mu, nu).kind == TypeKind::Finite;
  const FieldPtr& F = finite ? base : K;
  const ShapeKey key{mu, nu, F->size()};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = count_cache.find(key); it != count_cache.end()) return it->second;
  }
  const std::uint64_t c = orbit_count(mu, nu, F, budget);
  std::lock_guard lock(cache_mutex);
  count_cache[key] = c;
  return c;
}

std::uint64_t parabolic_class_count(int m, int n, const FieldPtr& f, unsigned threads, std::uint64_t budget) {
  const auto pairs = levi_reps(m, n, f);
  auto per_pair = [&](const std::pair<Gjnf, Gjnf>& pr) {
    std::uint64_t c = 1;
    for (auto& fa : pr.first.factors()) {
      const Partition nu = pr.second.partition_of(fa.poly);
      if (nu.empty()) continue;
      c *= block_orbit_count(fa.partition, nu, extension_for(fa.poly), f, budget);
    }
    return c;
  };
  threads = std::max(1u, threads);
  std::atomic<std::size_t> next{0};
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      for (std::size_t i; (i = next++) < pairs.size();) partial[t] += per_pair(pairs[i]);
    } catch (...) {
      errors[t] = std::current_exception();
      next = pairs.size();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

Matrix assemble_class(const Gjnf& a, const Gjnf& b, const std::vector<ClassBlock>& blocks) {
  const std::size_t m = static_cast<std::size_t>(a.dimension()), n = static_cast<std::size_t>(b.dimension());
  Matrix out(a.field(), m + n, m + n);
  out.set_block(0, 0, assemble(a));
  out.set_block(m, m, assemble(b));
  for (auto& blk : blocks) {
    const int r = a.offset_of(blk.poly), c = b.offset_of(blk.poly);
    if (r < 0 || c < 0) throw std::invalid_argument("block eigenvalue missing from a Levi factor");
    const Matrix l = lift(blk.rep, blk.poly);
    out.set_block(static_cast<std::size_t>(r), m + static_cast<std::size_t>(c),
                  out.block(static_cast<std::size_t>(r), m + static_cast<std::size_t>(c), l.rows(), l.cols()) + l);
  }
  return out;
}

void for_each_parabolic_rep(int m, int n, const FieldPtr& f, const std::function<void(const ClassRep&)>& visit,
                            std::uint64_t budget) {
  for (auto& [a, b] : levi_reps(m, n, f)) {
    std::vector<const OrbitSet*> sets;
    std::vector<Poly> polys;
    for (auto& prob : reduce_levi_pair(a, b)) {
      sets.push_back(&cached_orbits(prob.mu, prob.nu, prob.K, budget));
      polys.push_back(prob.p);
    }
    std::vector<std::size_t> pick(sets.size(), 0);
    while (true) {
      ClassRep rep{a, b, {}, Matrix(f, 0, 0)};
      for (std::size_t k = 0; k < sets.size(); ++k) rep.blocks.push_back({polys[k], sets[k]->reps[pick[k]]});
      rep.matrix = assemble_class(a, b, rep.blocks);
      visit(rep);
      std::size_t k = sets.size();
      while (k > 0 && ++pick[k - 1] == sets[k - 1]->count()) pick[--k] = 0;
      if (k == 0) break;
    }
  }
}

std::vector<ClassRep> parabolic_class_reps(int m, int n, const FieldPtr& f, std::uint64_t budget) {
  std::vector<ClassRep> out;
  for_each_parabolic_rep(m, n, f, [&](const ClassRep& r) { out.push_back(r); }, budget);
  return out;
}

std::uint64_t gl_class_count(int n, const FieldPtr& f) {
  if (n == 0) return 1;
  std::uint64_t c = 0;
  for_each_gjnf(n, f, true, [&](const Gjnf&) { ++c; });
  return c;
}

std::vector<Matrix> agl_class_reps(int n, const FieldPtr& f) {
  if (n < 1) throw std::invalid_argument("AGL_n needs n >= 1");
  const Poly one = Poly::linear(f, 1);
  std::vector<Matrix> out;
  for_each_gjnf(n, f, true, [&](const Gjnf& g) {
    Matrix base(f, static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    base(0, 0) = 1;
    base.set_block(1, 1, assemble(g));
    out.push_back(base);
    const Partition lam = g.partition_of(one);
    int start = g.offset_of(one);
    int prev = 0;
    for (int d : lam.parts()) {
      if (d != prev) {
        Matrix r = base;
        r(0, 1 + static_cast<std::size_t>(start + d - 1)) = 1;  // last coordinate of the block
        out.push_back(r);
        prev = d;
      }
      start += d;
    }
  });
  return out;
}

std::uint64_t agl_class_count(int n, const FieldPtr& f) {
  if (n < 1) throw std::invalid_argument("AGL_n needs n >= 1");
  std::uint64_t c = 0;
  for (int d = 0; d <= n; ++d) c += gl_class_count(n - d, f);
  return c;
}

// ---- oracle ----

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
    r *= b;
  }
  return r;
}

void list_gl(int k, const FieldPtr& f, std::vector<Matrix>& mats, std::vector<std::int64_t>& codes) {
  const std::size_t kk = static_cast<std::size_t>(k);
  const std::uint64_t total = ipow(f->size(), kk * kk);
  if (total > (std::uint64_t{1} << 26)) throw BudgetExceeded(total, std::uint64_t{1} << 26);
  codes.assign(total, -1);
  std::vector<Elem> e(kk * kk);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t x = c;
    for (std::size_t t = e.size(); t-- > 0;) {
      e[t] = static_cast<Elem>(x % f->size());
      x /= f->size();
    }
    Matrix a(f, kk, kk, e);
    if (!is_invertible(a)) continue;
    codes[c] = static_cast<std::int64_t>(mats.size());
    mats.push_back(std::move(a));
  }
}

std::uint64_t block_code(const Matrix& g, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  std::uint64_t c = 0;
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t s = 0; s < nc; ++s) c = c * g.field()->size() + g(r0 + r, c0 + s);
  return c;
}

}  // namespace

Oracle::Oracle(int m, int n, FieldPtr f, bool affine, std::uint64_t budget)
    : m_(m), n_(n), f_(std::move(f)), affine_(affine) {
  if (m < 1 || n < 1) throw std::invalid_argument("oracle needs m, n >= 1");
  if (affine && m != 1) throw std::invalid_argument("affine oracle needs m = 1");
  const std::size_t M = static_cast<std::size_t>(m), N = static_cast<std::size_t>(n), D = M + N;
  const auto q = f_->size();
  if (affine) {
    gl_m_.push_back(Matrix::identity(f_, 1));
    code_m_.assign(q, -1);
    code_m_[1] = 0;
  } else {
    list_gl(m, f_, gl_m_, code_m_);
  }
  list_gl(n, f_, gl_n_, code_n_);
  vq_ = ipow(q, M * N);
  const std::uint64_t order = gl_m_.size() * gl_n_.size() * vq_;
  if (order > budget) throw BudgetExceeded(order, budget);

  std::vector<std::pair<Matrix, Matrix>> gens;  // (g, g^-1)
  const Elem z = f_->primitive();
  auto add_levi = [&](std::size_t off, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (z != 1) {
        Matrix d = Matrix::identity(f_, D), di = Matrix::identity(f_, D);
        d(off + i, off + i) = z;
        di(off + i, off + i) = f_->inv(z);
        gens.emplace_back(d, di);
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        Matrix t = Matrix::identity(f_, D), ti = Matrix::identity(f_, D);
        t(off + i, off + j) = 1;
        ti(off + i, off + j) = f_->neg(1);
        gens.emplace_back(t, ti);
      }
    }
  };
  if (!affine) add_levi(0, M);
  add_levi(M, N);
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (Elem b : f_->prime_basis()) {
        Matrix u = Matrix::identity(f_, D), ui = Matrix::identity(f_, D);
        u(i, M + j) = b;
        ui(i, M + j) = f_->neg(b);
        gens.emplace_back(u, ui);
      }

  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  class_of_.assign(order, kUnset);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t s = 0; s < order; ++s) {
    if (class_of_[s] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(count_++);
    first_.push_back(s);
    class_of_[s] = cls;
    stack.push_back(s);
    while (!stack.empty()) {
      const Matrix x = element(stack.back());
      stack.pop_back();
      for (auto& [g, gi] : gens) {
        const std::uint64_t y = index(g * x * gi);
        if (class_of_[y] == kUnset) {
          class_of_[y] = cls;
          stack.push_back(y);
        }
      }
    }
  }
}

std::uint64_t Oracle::index(const Matrix& g) const {
  const std::size_t M = static_cast<std::size_t>(m_), N = static_cast<std::size_t>(n_);
  if (g.rows() != M + N || g.cols() != M + N) throw DimensionError("matrix is not in the oracle's group");
  if (!g.block(M, 0, N, M).is_zero()) throw std::invalid_argument("matrix is not block upper triangular");
  const std::int64_t ia = code_m_[block_code(g, 0, 0, M, M)];
  const std::int64_t ib = code_n_[block_code(g, M, M, N, N)];
  if (ia < 0 || ib < 0) throw std::invalid_argument("matrix is not in the oracle's group");
  return (static_cast<std::uint64_t>(ia) * gl_n_.size() + static_cast<std::uint64_t>(ib)) * vq_ +
         block_code(g, 0, M, M, N);
}

Matrix Oracle::element(std::uint64_t idx) const {
  const std::size_t M = static_cast<std::size_t>(m_), N = static_cast<std::size_t>(n_);
  std::uint64_t v = idx % vq_;
  idx /= vq_;
  Matrix g(f_, M + N, M + N);
  g.set_block(0, 0, gl_m_[idx / gl_n_.size()]);
  g.set_block(M, M, gl_n_[idx % gl_n_.size()]);
  for (std::size_t t = M * N; t-- > 0;) {
    g(t / N, M + t % N) = static_cast<Elem>(v % f_->size());
    v /= f_->size();
  }
  return g;
}

std::size_t Oracle::class_of(const Matrix& g) const { return class_of_[index(g)]; }

std::vector<Matrix> Oracle::class_reps() const {
  std::vector<Matrix> out;
  for (auto s : first_) out.push_back(element(s));
  return out;
}

// ---- count polynomials ----

BigInt CountPoly::eval(std::uint64_t q) const {
  BigInt r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * q + coeffs[i];
  return r;
}

std::string CountPoly::to_string() const {
  std::ostringstream s;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    BigInt c = coeffs[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    s << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (c != 1 || i == 0) s << c;
    if (i > 0) s << (c != 1 ? "*" : "") << "q" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : s.str();
}

std::vector<std::uint64_t> prime_powers(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; out.size() < count; ++k) {
    std::uint64_t p = 2;
    while (k % p) ++p;
    std::uint64_t x = k;
    while (x % p == 0) x /= p;
    if (x == 1) out.push_back(k);
  }
  return out;
}

namespace {

// Newton form, expanded to monomial coefficients.
std::vector<cpp_rational> fit(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pts) {
  const std::size_t n = pts.size();
  std::vector<cpp_rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = cpp_rational(pts[i].second);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i)
      dd[i] = (dd[i] - dd[i - 1]) / cpp_rational(BigInt(pts[i].first) - BigInt(pts[i - k].first));
  std::vector<cpp_rational> c{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // c <- c * (q - x_k) + dd[k]
    std::vector<cpp_rational> nc(c.size() + 1);
    const cpp_rational x(pts[k].first);
    for (std::size_t i = 0; i < c.size(); ++i) {
      nc[i + 1] += c[i];
      nc[i] -= c[i] * x;
    }
    nc[0] += dd[k];
    c = std::move(nc);
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

cpp_rational eval_rational(const std::vector<cpp_rational>& c, std::uint64_t q) {
  cpp_rational r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * q + c[i];
  return r;
}

}  // namespace

CountPoly interpolate_counts(const std::function<std::uint64_t(std::uint64_t)>& count_at, int initial_degree,
                             int max_nodes) {
  const auto nodes = prime_powers(static_cast<std::size_t>(max_nodes));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
  std::size_t next = 0;
  auto sample = [&] {
    if (next >= nodes.size()) throw CountPolyError("count polynomial did not stabilize within the node budget");
    const auto q = nodes[next++];
    return std::pair{q, count_at(q)};
  };
  while (pts.size() < static_cast<std::size_t>(initial_degree) + 1) pts.push_back(sample());
  auto prev = fit(pts);
  while (true) {
    pts.push_back(sample());
    auto cur = fit(pts);
    if (cur != prev) {
      prev = std::move(cur);
      continue;
    }
    // two held-out nodes must agree before accepting
    auto h1 = sample(), h2 = sample();
    pts.push_back(h1);
    pts.push_back(h2);
    if (eval_rational(cur, h1.first) != h1.second || eval_rational(cur, h2.first) != h2.second) {
      prev = fit(pts);
      continue;
    }
    CountPoly out;
    for (auto& r : cur) {
      if (denominator(r) != 1) throw CountPolyError("count polynomial has a non-integer coefficient");
      out.coeffs.push_back(numerator(r));
    }
    out.samples = pts;
    return out;
  }
}

CountPoly count_poly(int m, int n, unsigned threads) {
  if (m >= 6 && n >= 6) throw std::invalid_argument("count polynomial needs m < 6 or n < 6");
  return interpolate_counts(
      [&](std::uint64_t q) {
        const auto [p, e] = split_prime_power(q);
        return parabolic_class_count(m, n, ff_make(p, e), threads);
      },
      m + n + 2);
}

}  // namespace pcc
