#include "pcc/cocentralizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcc {

CocentShape::CocentShape(Partition mu, Partition nu, FieldPtr K)
    : mu_(std::move(mu)), nu_(std::move(nu)), K_(std::move(K)) {
  if (mu_.empty() || nu_.empty()) throw std::invalid_argument("cocentralizer shape needs nonempty partitions");
  starts_.resize(rows() * cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      starts_[i * cols() + j] = dim_;
      dim_ += static_cast<std::size_t>(l(i, j));
    }
}

CocentElement::CocentElement(CocentShape shape) : shape_(std::move(shape)), data_(shape_.dimension(), 0) {}

CocentElement::CocentElement(CocentShape shape, std::vector<Elem> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != shape_.dimension()) throw DimensionError("coefficient count does not match the shape");
  for (Elem c : data_)
    if (c >= shape_.field()->size()) throw FieldError("coefficient is not a field element");
}

Elem CocentElement::coeff(std::size_t i, std::size_t j, int e) const {
  if (e < 0 || e >= shape_.l(i, j)) return 0;
  return data_[shape_.start(i, j) + static_cast<std::size_t>(e)];
}

void CocentElement::set_coeff(std::size_t i, std::size_t j, int e, Elem c) {
  if (e < 0 || e >= shape_.l(i, j)) throw std::out_of_range("exponent outside the entry window");
  data_[shape_.start(i, j) + static_cast<std::size_t>(e)] = c;
}

std::vector<Elem> CocentElement::entry(std::size_t i, std::size_t j) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(shape_.start(i, j));
  return {first, first + shape_.l(i, j)};
}

void CocentElement::set_entry(std::size_t i, std::size_t j, const std::vector<Elem>& poly) {
  for (int e = 0; e < shape_.l(i, j); ++e)
    set_coeff(i, j, e, static_cast<std::size_t>(e) < poly.size() ? poly[static_cast<std::size_t>(e)] : 0);
}

bool CocentElement::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem c) { return c == 0; });
}

bool CocentElement::is_01() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem c) { return c <= 1; });
}

std::string CocentElement::to_string() const {
  const auto& K = *field();
  std::string s = "[[";
  for (std::size_t i = 0; i < shape_.rows(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < shape_.cols(); ++j) {
      if (j) s += ' ';
      auto e = entry(i, j);
      for (std::size_t t = 0; t < e.size(); ++t) {
        if (t) s += ',';
        s += K.is_prime() ? std::to_string(e[t]) : "(" + K.format(e[t]) + ")";
      }
    }
  }
  return s + "]]";
}

CocentElement act_left(const TruncAlgElement& g, const CocentElement& v) {
  const auto& sh = v.shape();
  if (g.partition() != sh.mu()) throw std::invalid_argument("left action: partition mismatch");
  if (!g.field()->same_as(*sh.field())) throw FieldError("left action: field mismatch");
  const auto& K = *sh.field();
  CocentElement out(sh);
  for (std::size_t i = 0; i < sh.rows(); ++i)
    for (std::size_t j = 0; j < sh.cols(); ++j) {
      const int n = sh.l(i, j);
      for (std::size_t k = 0; k < sh.rows(); ++k)
        for (int x = g.offset(i, k); x < g.offset(i, k) + g.window(i, k) && x < n; ++x) {
          const Elem a = g.coeff(i, k, x);
          if (!a) continue;
          for (int y = 0; y < sh.l(k, j) && x + y < n; ++y) {
            const Elem b = v.coeff(k, j, y);
            if (b) out.set_coeff(i, j, x + y, K.add(out.coeff(i, j, x + y), K.mul(a, b)));
          }
        }
    }
  return out;
}

CocentElement act_right(const CocentElement& v, const TruncAlgElement& h) {
  const auto& sh = v.shape();
  if (h.partition() != sh.nu()) throw std::invalid_argument("right action: partition mismatch");
  if (!h.field()->same_as(*sh.field())) throw FieldError("right action: field mismatch");
  const auto& K = *sh.field();
  const auto& nu = sh.nu();
  CocentElement out(sh);
  for (std::size_t i = 0; i < sh.rows(); ++i)
    for (std::size_t j = 0; j < sh.cols(); ++j) {
      const int n = sh.l(i, j);
      for (std::size_t k = 0; k < sh.cols(); ++k) {
        const int shift = nu[j] - nu[k];
        for (int y = h.offset(k, j); y < h.offset(k, j) + h.window(k, j); ++y) {
          const Elem b = h.coeff(k, j, y);
          const int ys = y + shift;  // >= 0 by the divisibility constraint
          if (!b || ys >= n) continue;
          for (int x = 0; x < sh.l(i, k) && x + ys < n; ++x) {
            const Elem a = v.coeff(i, k, x);
            if (a) out.set_coeff(i, j, x + ys, K.add(out.coeff(i, j, x + ys), K.mul(a, b)));
          }
        }
      }
    }
  return out;
}

std::vector<EigenBlockProblem> reduce_levi_pair(const Gjnf& ga, const Gjnf& gb) {
  if (!ga.field()->same_as(*gb.field())) throw FieldError("Levi pair over different fields");
  std::vector<EigenBlockProblem> out;
  for (auto& fa : ga.factors()) {
    auto nu = gb.partition_of(fa.poly);
    if (nu.empty()) continue;
    out.push_back({fa.poly, fa.partition, nu, extension_for(fa.poly)});
  }
  return out;
}

Matrix lift(const CocentElement& v, const Poly& p, LiftRule rule) {
  const auto& sh = v.shape();
  const auto d = static_cast<std::size_t>(p.degree());
  const auto& mu = sh.mu();
  const auto& nu = sh.nu();
  std::vector<std::size_t> r0(sh.rows() + 1, 0), c0(sh.cols() + 1, 0);
  for (std::size_t i = 0; i < sh.rows(); ++i) r0[i + 1] = r0[i] + static_cast<std::size_t>(mu[i]);
  for (std::size_t j = 0; j < sh.cols(); ++j) c0[j + 1] = c0[j] + static_cast<std::size_t>(nu[j]);
  Matrix out(p.field(), r0.back() * d, c0.back() * d);
  for (std::size_t i = 0; i < sh.rows(); ++i)
    for (std::size_t j = 0; j < sh.cols(); ++j)
      for (int c = 0; c < sh.l(i, j); ++c) {
        const Elem kappa = v.coeff(i, j, c);
        if (!kappa) continue;
        const Matrix m = multiplication_matrix(sh.field(), kappa, p);
        if (rule == LiftRule::LastColumn) {
          out.set_block((r0[i] + static_cast<std::size_t>(c)) * d, (c0[j] + static_cast<std::size_t>(nu[j] - 1)) * d, m);
        } else {
          const int a = c + std::max(0, mu[i] - nu[j]);
          for (int s = 0; s < nu[j] && s + a < mu[i]; ++s)
            out.set_block((r0[i] + static_cast<std::size_t>(s + a)) * d, (c0[j] + static_cast<std::size_t>(s)) * d, m);
        }
      }
  return out;
}

Matrix commutator_space(const Matrix& a, const Matrix& b) {
  const std::size_t m = a.rows(), n = b.rows();
  if (!a.is_square() || !b.is_square()) throw DimensionError("commutator space needs square blocks");
  const auto& F = *a.field();
  Matrix cols(a.field(), m * n, m * n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t col = r * n + c;
      // E_rc B has row r equal to row c of B; A E_rc has column c equal to column r of A
      for (std::size_t s = 0; s < n; ++s) cols(r * n + s, col) = F.add(cols(r * n + s, col), b(c, s));
      for (std::size_t t = 0; t < m; ++t) cols(t * n + c, col) = F.sub(cols(t * n + c, col), a(t, r));
    }
  return cols;
}

bool in_commutator_space(const Matrix& w, const Matrix& a, const Matrix& b) {
  if (w.rows() != a.rows() || w.cols() != b.rows()) throw DimensionError("corner block has the wrong shape");
  Matrix span = commutator_space(a, b);
  Matrix aug(a.field(), span.rows(), span.cols() + 1);
  aug.set_block(0, 0, span);
  for (std::size_t i = 0; i < w.entries().size(); ++i) aug(i, span.cols()) = w.entries()[i];
  return rank(aug) == rank(span);
}

CocentElement project(const Matrix& V, const Poly& p, const Partition& mu, const Partition& nu) {
  const FieldPtr K = extension_for(p);
  const CocentShape sh(mu, nu, K);
  const Matrix a = jordan_block(p, mu), b = jordan_block(p, nu);
  if (V.rows() != a.rows() || V.cols() != b.rows()) throw DimensionError("corner block has the wrong shape");
  const auto& F = *p.field();
  const std::size_t d = static_cast<std::size_t>(p.degree());
  const std::size_t cells = V.rows() * V.cols();
  const std::size_t nv = sh.dimension() * d;
  const Matrix span = commutator_space(a, b);
  // columns: lifts of (slot, basis element), then [U,h], then -V
  Matrix sys(p.field(), cells, nv + span.cols() + 1);
  std::vector<Elem> basis(d);
  basis[0] = 1;
  for (std::size_t t = 1; t < d; ++t) basis[t] = K->mul(basis[t - 1], K->generator());
  for (std::size_t slot = 0; slot < sh.dimension(); ++slot)
    for (std::size_t t = 0; t < d; ++t) {
      CocentElement e(sh);
      e.data()[slot] = basis[t];
      const Matrix l = lift(e, p);
      for (std::size_t i = 0; i < cells; ++i) sys(i, slot * d + t) = l.entries()[i];
    }
  sys.set_block(0, nv, span);
  for (std::size_t i = 0; i < cells; ++i) sys(i, sys.cols() - 1) = F.neg(V.entries()[i]);
  const Matrix ker = kernel_basis(sys);
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    const Elem last = ker(ker.rows() - 1, k);
    if (!last) continue;
    const Elem scale = F.inv(last);
    CocentElement out(sh);
    for (std::size_t slot = 0; slot < sh.dimension(); ++slot) {
      std::vector<Elem> c(d);
      for (std::size_t t = 0; t < d; ++t) c[t] = F.mul(ker(slot * d + t, k), scale);
      out.data()[slot] = d == 1 ? c[0] : K->from_coeffs(c);
    }
    return out;
  }
  throw std::logic_error("lift image does not span U/[U,h]");
}

}  // namespace pcc
