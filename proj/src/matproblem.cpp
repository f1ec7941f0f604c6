#include "pcc/matproblem.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace pcc {

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("budget exceeded: need " + std::to_string(required) + " elements, budget " +
                         std::to_string(budget)),
      required_(required),
      budget_(budget) {}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_power(std::uint64_t q, std::size_t d) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (r > kSaturated / q) return kSaturated;
    r *= q;
  }
  return r;
}

// A generator action as a sparse K-linear map on the flat coefficient vector;
// only coordinates that actually change are listed.
struct Action {
  std::vector<std::uint32_t> targets;
  std::vector<std::uint32_t> ptr{0};
  std::vector<std::uint32_t> src;
  std::vector<Elem> coef;
};

class Engine {
 public:
  explicit Engine(const CocentShape& sh) : sh_(sh), K_(*sh.field()), q_(K_.size()), dim_(sh.dimension()) {
    total_ = checked_power(q_, dim_);
    pw_.assign(dim_, 1);
    for (std::size_t k = dim_; k-- > 1;) pw_[k - 1] = pw_[k] * q_;  // first coordinate most significant
    for (auto& g : generating_set(sh.mu(), sh.field())) compile([&](const CocentElement& e) { return act_left(g, e); });
    for (auto& h : generating_set(sh.nu(), sh.field())) compile([&](const CocentElement& e) { return act_right(e, h); });
  }

  std::uint64_t total() const { return total_; }
  std::size_t dim() const { return dim_; }

  void decode(std::uint64_t code, Elem* v) const {
    for (std::size_t k = dim_; k-- > 0;) {
      v[k] = static_cast<Elem>(code % q_);
      code /= q_;
    }
  }

  std::uint64_t encode(const std::vector<Elem>& v) const {
    std::uint64_t c = 0;
    for (Elem x : v) c = c * q_ + x;
    return c;
  }

  template <class F>
  void neighbors(std::uint64_t code, const Elem* v, F&& f) const {
    for (auto& a : actions_) {
      std::uint64_t nc = code;
      for (std::size_t t = 0; t < a.targets.size(); ++t) {
        Elem acc = 0;
        for (std::uint32_t i = a.ptr[t]; i < a.ptr[t + 1]; ++i) acc = K_.add(acc, K_.mul(a.coef[i], v[a.src[i]]));
        const std::uint32_t tg = a.targets[t];
        nc = nc + acc * pw_[tg] - v[tg] * pw_[tg];  // wraps correctly in unsigned arithmetic
      }
      f(nc);
    }
  }

 private:
  template <class Act>
  void compile(Act&& act) {
    std::vector<std::vector<Elem>> cols(dim_);
    for (std::size_t s = 0; s < dim_; ++s) {
      CocentElement e(sh_);
      e.data()[s] = 1;
      cols[s] = act(e).data();
    }
    Action a;
    for (std::size_t t = 0; t < dim_; ++t) {
      bool unit_row = true;
      for (std::size_t s = 0; s < dim_; ++s)
        if (cols[s][t] != (s == t ? 1u : 0u)) unit_row = false;
      if (unit_row) continue;
      a.targets.push_back(static_cast<std::uint32_t>(t));
      for (std::size_t s = 0; s < dim_; ++s)
        if (cols[s][t]) {
          a.src.push_back(static_cast<std::uint32_t>(s));
          a.coef.push_back(cols[s][t]);
        }
      a.ptr.push_back(static_cast<std::uint32_t>(a.src.size()));
    }
    if (!a.targets.empty()) actions_.push_back(std::move(a));
  }

  CocentShape sh_;
  const Field& K_;
  std::uint64_t q_;
  std::size_t dim_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> pw_;
  std::vector<Action> actions_;
};

class Bitset {
 public:
  explicit Bitset(std::uint64_t n) : w_((n + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> w_;
};

// Visits orbits in increasing order of their minimum.
template <class OnOrbit>
void for_each_orbit(const Engine& eng, std::uint64_t budget, OnOrbit&& on_orbit) {
  if (eng.total() > budget) throw BudgetExceeded(eng.total(), budget);
  if (eng.total() > std::numeric_limits<std::uint32_t>::max()) throw BudgetExceeded(eng.total(), budget);
  Bitset seen(eng.total());
  std::vector<std::uint32_t> stack;
  std::vector<Elem> v(eng.dim());
  for (std::uint64_t c = 0; c < eng.total(); ++c) {
    if (seen.test(c)) continue;
    seen.set(c);
    stack.push_back(static_cast<std::uint32_t>(c));
    std::uint64_t size = 0;
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      ++size;
      eng.decode(cur, v.data());
      eng.neighbors(cur, v.data(), [&](std::uint64_t n) {
        if (!seen.test(n)) {
          seen.set(n);
          stack.push_back(static_cast<std::uint32_t>(n));
        }
      });
    }
    on_orbit(c, size);
  }
}

}  // namespace

OrbitSet enumerate_orbits(const Partition& mu, const Partition& nu, const FieldPtr& K, std::uint64_t budget) {
  CocentShape sh(mu, nu, K);
  Engine eng(sh);
  OrbitSet out{sh, {}, {}, eng.total()};
  std::vector<Elem> v(eng.dim());
  for_each_orbit(eng, budget, [&](std::uint64_t rep, std::uint64_t size) {
    eng.decode(rep, v.data());
    out.reps.emplace_back(sh, v);
    out.sizes.push_back(size);
  });
  return out;
}

std::uint64_t orbit_count(const Partition& mu, const Partition& nu, const FieldPtr& K, std::uint64_t budget) {
  Engine eng(CocentShape(mu, nu, K));
  std::uint64_t n = 0;
  for_each_orbit(eng, budget, [&](std::uint64_t, std::uint64_t) { ++n; });
  return n;
}

CocentElement canonical_form(const CocentElement& v, std::uint64_t budget) {
  Engine eng(v.shape());
  if (eng.total() == kSaturated) throw BudgetExceeded(eng.total(), budget);
  const std::uint64_t start = eng.encode(v.data());
  std::vector<std::uint64_t> stack{start};
  std::vector<Elem> buf(eng.dim());
  std::uint64_t best = start;
  auto close = [&](auto&& insert) {
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      best = std::min(best, cur);
      eng.decode(cur, buf.data());
      eng.neighbors(cur, buf.data(), [&](std::uint64_t n) {
        if (insert(n)) stack.push_back(n);
      });
    }
  };
  if (eng.total() <= budget) {
    // dense visited set when the whole space fits
    Bitset seen(eng.total());
    seen.set(start);
    close([&](std::uint64_t n) {
      if (seen.test(n)) return false;
      seen.set(n);
      return true;
    });
  } else {
    std::unordered_set<std::uint64_t> seen{start};
    close([&](std::uint64_t n) {
      if (!seen.insert(n).second) return false;
      if (seen.size() > budget) throw BudgetExceeded(seen.size(), budget);
      return true;
    });
  }
  eng.decode(best, buf.data());
  return CocentElement(v.shape(), buf);
}

// ---- structured reduction ----

bool structured_supported(const Partition& mu) {
  for (std::size_t i = 1; i < mu.length(); ++i)
    if (mu[i] != 1) return false;
  return !mu.empty();
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class Reducer {
 public:
  explicit Reducer(const CocentElement& v) : v_(v), sh_(v.shape()), K_(*v.field()) {}

  StructuredResult run() {
    solve_unit_rows();
    solve_top_row();
    return {v_, log_};
  }

 private:
  void left(const Generator& g) {
    v_ = act_left(g, v_);
    log_.push_back("left " + describe(g));
  }
  void right(const Generator& g) {
    v_ = act_right(v_, g);
    log_.push_back("right " + describe(g));
  }
  std::string describe(const Generator& g) const {
    std::string s = g.label();
    if (!g.param.empty()) {
      s += " a=";
      for (std::size_t i = 0; i < g.param.size(); ++i) s += (i ? "," : "") + K_.format(g.param[i]);
    }
    return s;
  }

  Elem c(std::size_t row, std::size_t col) const { return v_.coeff(row, col, 0); }

  // Rows 1.. all have part size 1: reduce their constant matrix to a partial
  // permutation, columns in order of decreasing nu.
  void solve_unit_rows() {
    const auto& mu = sh_.mu();
    const auto& nu = sh_.nu();
    const std::size_t rows = sh_.rows(), cols = sh_.cols();
    pivot_row_.assign(cols, -1);
    std::vector<bool> used(rows, false);
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t k = 1;
      while (k < rows && (used[k] || c(k, j) == 0)) ++k;
      if (k >= rows) continue;
      used[k] = true;
      pivot_row_[j] = static_cast<int>(k);
      if (c(k, j) != 1) left(make_generator(GenKind::Scale, k, k, {K_.inv(c(k, j))}, mu, sh_.field()));
      for (std::size_t k2 = 1; k2 < rows; ++k2)
        if (k2 != k && c(k2, j) != 0) left(shear(k2, k, {K_.neg(c(k2, j))}, mu, sh_.field()));
      for (std::size_t j2 = j + 1; j2 < cols; ++j2) {
        if (c(k, j2) == 0) continue;
        std::vector<Elem> a(static_cast<std::size_t>(std::min(nu[j], nu[j2])), 0);
        a[0] = K_.neg(c(k, j2));
        right(shear(j, j2, a, nu, sh_.field()));
      }
    }
  }

  int val(std::size_t j) const {
    for (int e = 0; e < sh_.l(0, j); ++e)
      if (v_.coeff(0, j, e)) return e;
    return kInf;
  }

  bool shaded(std::size_t j) const { return pivot_row_[j] >= 0; }

  // Truncated inverse of the unit u (u[0] != 0), n coefficients.
  std::vector<Elem> series_inverse(const std::vector<Elem>& u, std::size_t n) const {
    std::vector<Elem> w(n, 0);
    const Elem inv0 = K_.inv(u[0]);
    for (std::size_t k = 0; k < n; ++k) {
      Elem s = k == 0 ? 1 : 0;
      for (std::size_t i = 1; i <= k && i < u.size(); ++i) s = K_.sub(s, K_.mul(u[i], w[k - i]));
      w[k] = K_.mul(s, inv0);
    }
    return w;
  }

  void normalize(std::size_t j, int e) {
    const auto& nu = sh_.nu();
    const int l = sh_.l(0, j);
    std::vector<Elem> u;
    for (int t = e; t < l; ++t) u.push_back(v_.coeff(0, j, t));
    auto w = series_inverse(u, static_cast<std::size_t>(nu[j]));
    bool trivial = w[0] == 1;
    for (std::size_t t = 1; t < u.size(); ++t) trivial = trivial && w[t] == 0;
    if (trivial) return;
    right(make_generator(GenKind::Scale, j, j, w, nu, sh_.field()));
    if (shaded(j)) {
      const auto k = static_cast<std::size_t>(pivot_row_[j]);
      left(make_generator(GenKind::Scale, k, k, {K_.inv(c(k, j))}, sh_.mu(), sh_.field()));
    }
  }

  void solve_top_row() {
    const auto& mu = sh_.mu();
    const auto& nu = sh_.nu();
    const int r = mu[0];
    const std::size_t cols = sh_.cols();
    std::vector<bool> done(cols, false);
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (done[j] || val(j) == kInf) continue;
        if (best == cols) {
          best = j;
          continue;
        }
        auto key = [&](std::size_t x) { return std::make_tuple(val(x), shaded(x) ? 1 : 0, -nu[x], x); };
        if (key(j) < key(best)) best = j;
      }
      if (best == cols) break;
      const std::size_t j = best;
      const int e = val(j);
      done[j] = true;
      if (shaded(j) && nu[j] >= r && e == r - 1) {
        // the unit row holding this column's pivot reaches level r-1
        const auto k = static_cast<std::size_t>(pivot_row_[j]);
        left(shear(0, k, {K_.neg(v_.coeff(0, j, e))}, mu, sh_.field()));
        continue;
      }
      normalize(j, e);
      for (std::size_t j2 = 0; j2 < cols; ++j2) {
        if (done[j2]) continue;
        const int e2 = val(j2);
        if (e2 == kInf) continue;
        const int s = std::max(0, nu[j2] - nu[j]);
        if (e2 - e < s) continue;
        const bool touches_units = shaded(j) && e2 == e && s == 0;
        if (touches_units && !shaded(j2)) continue;
        std::vector<Elem> a(static_cast<std::size_t>(std::min(nu[j], nu[j2])), 0);
        for (std::size_t t = 0; t < a.size(); ++t) a[t] = K_.neg(v_.coeff(0, j2, e + s + static_cast<int>(t)));
        right(shear(j, j2, a, nu, sh_.field()));
        if (touches_units) {
          const auto k = static_cast<std::size_t>(pivot_row_[j]);
          const auto k2 = static_cast<std::size_t>(pivot_row_[j2]);
          left(shear(k, k2, {K_.neg(c(k, j2))}, mu, sh_.field()));
        }
      }
    }
  }

  CocentElement v_;
  CocentShape sh_;
  const Field& K_;
  std::vector<int> pivot_row_;
  std::vector<std::string> log_;
};

}  // namespace

StructuredResult reduce_structured(const CocentElement& v) {
  if (!structured_supported(v.shape().mu()))
    throw std::invalid_argument("structured reduction supports mu = (r) or (r,1^a) only");
  return Reducer(v).run();
}

// ---- classification ----

namespace {

bool two_one_family(const Partition& p) { return p.largest() <= 2; }
bool hook_family(const Partition& p) { return p.length() < 2 || p[1] == 1; }
bool three_two(const Partition& p) { return p == Partition({3, 2}); }
bool contains_four_two(const Partition& p) { return p.length() >= 2 && p[0] >= 4 && p[1] >= 2; }

std::optional<std::string> finite_rule(const Partition& p, const char* side) {
  const std::string s = side;
  if (p.total() < 6) return s + " has size < 6";
  if (two_one_family(p)) return s + " of the form (2^a,1^b)";
  if (hook_family(p)) return s + " of the form (r,1^b)";
  if (three_two(p)) return s + " = (3,2)";
  return std::nullopt;
}

}  // namespace

TypeVerdict type_classify(const Partition& mu, const Partition& nu) {
  if (auto r = finite_rule(mu, "mu")) return {TypeKind::Finite, *r};
  if (auto r = finite_rule(nu, "nu")) return {TypeKind::Finite, *r};
  if (contains_four_two(mu) && contains_four_two(nu))
    return {TypeKind::Infinite, "both mu and nu contain the (4,2) configuration"};
  return {TypeKind::Unknown, "no finite-type family and no (4,2) x (4,2) configuration"};
}

std::string to_string(TypeKind k) {
  switch (k) {
    case TypeKind::Finite: return "finite";
    case TypeKind::Infinite: return "infinite";
    case TypeKind::Unknown: return "unknown";
  }
  return {};
}

std::optional<Elem> wild_invariant(const CocentElement& v) {
  const auto& sh = v.shape();
  const Partition p42({4, 2});
  if (sh.mu() != p42 || sh.nu() != p42) return std::nullopt;
  const auto& K = *v.field();
  const Elem alpha = v.coeff(0, 0, 2), beta = v.coeff(0, 1, 1), gamma = v.coeff(1, 0, 1), delta = v.coeff(1, 1, 0);
  if (v.coeff(0, 0, 0) || v.coeff(0, 0, 1) || v.coeff(0, 1, 0) || v.coeff(1, 0, 0)) return std::nullopt;
  if (!alpha || !beta || !gamma || !delta) return std::nullopt;
  return K.mul(K.mul(alpha, delta), K.inv(K.mul(beta, gamma)));
}

}  // namespace pcc
