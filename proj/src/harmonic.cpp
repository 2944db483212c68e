#include "cdw/harmonic.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cdw {

namespace {

// exact Gauss-Jordan solve G x = rhs for SPD rational G
std::vector<RationalC> solve_exact(const RationalMatrix& g, std::vector<RationalC> rhs) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) a[i] = g[i];
  std::vector<RationalC> x = std::move(rhs);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::runtime_error("solve_exact: singular Gram");
    std::swap(a[c], a[p]);
    std::swap(x[c], x[p]);
    const Rational piv = a[c][c];
    for (int j = 0; j < n; ++j) a[c][j] /= piv;
    x[c] = x[c] * RationalC(Rational(1) / piv);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (int j = 0; j < n; ++j) a[r][j] -= f * a[c][j];
      x[r] -= RationalC(f) * x[c];
    }
  }
  return x;
}

}  // namespace

AngularBasis::AngularBasis(int l) : l_(l) {
  if (l < 0) throw std::invalid_argument("AngularBasis: l < 0");
  // (p1 + i p2)^m split into real/imaginary parts, times p3^(l-m), projected
  // onto the top harmonic component.
  for (int m = 0; m <= l; ++m) {
    Poly3 re = Poly3::one();
    Poly3 im;
    for (int t = 0; t < m; ++t) {
      Poly3 re2 = re * Poly3::variable(0) - im * Poly3::variable(1);
      Poly3 im2 = re * Poly3::variable(1) + im * Poly3::variable(0);
      re = re2;
      im = im2;
    }
    const Poly3 p3pow = Poly3::monomial({0, 0, l - m}, RationalC(1));
    for (const Poly3* part : {&re, &im}) {
      if (part == &im && m == 0) continue;
      Poly3 y = harmonic_part(*part * p3pow, l);
      if (y.is_zero() || !y.laplacian().is_zero()) throw std::logic_error("AngularBasis: projection failed");
      elements_.push_back(std::move(y));
    }
  }
  if (static_cast<int>(elements_.size()) != dim()) throw std::logic_error("AngularBasis: wrong dimension");
  gram_.assign(dim(), std::vector<Rational>(dim()));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      RationalC v = sphere_inner(elements_[i], elements_[j]);
      if (v.im != 0) throw std::logic_error("AngularBasis: complex Gram entry");
      gram_[i][j] = v.re;
    }
}

std::vector<RationalC> AngularBasis::expand(const Poly3& y) const {
  if (y.is_zero()) return std::vector<RationalC>(dim());
  if (y.degree() != l_ || !y.laplacian().is_zero())
    throw std::invalid_argument("AngularBasis::expand: not harmonic of matching degree");
  std::vector<RationalC> rhs(dim());
  for (int i = 0; i < dim(); ++i) rhs[i] = sphere_inner(elements_[i], y);
  return solve_exact(gram_, std::move(rhs));
}

AngularBasis& harmonic_basis(int l) {
  static std::mutex mu;
  static std::map<int, AngularBasis> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(l);
  if (it == cache.end()) it = cache.emplace(l, AngularBasis(l)).first;
  return it->second;
}

PkSplit multiply_pk(const Poly3& y, int k) {
  if (!y.homogeneous() || !y.laplacian().is_zero())
    throw std::invalid_argument("multiply_pk: input must be harmonic homogeneous");
  const int l = y.degree();
  PkSplit s;
  s.lower = y.derivative(k);
  s.lower_coeff = Rational(1, 2 * l + 1);
  s.upper = Poly3::variable(k) * y - Poly3::radius_sq() * s.lower * RationalC(s.lower_coeff);
  return s;
}

Poly3 gradient(const Poly3& y, int k) { return y.derivative(k); }

Poly3 rotation_action(const Poly3& y, int k, int l) {
  return Poly3::variable(k) * y.derivative(l) - Poly3::variable(l) * y.derivative(k);
}

TracelessTensorFamily::TracelessTensorFamily(int h) : h_(h) {
  if (h < 0) throw std::invalid_argument("TracelessTensorFamily: h < 0");
  if (h == 0) {
    comp_[{}] = Poly3::one();
    return;
  }
  TracelessTensorFamily prev(h - 1);
  std::vector<std::vector<int>> keys;
  std::vector<int> idx(h, 0);
  // all sorted index tuples
  while (true) {
    keys.push_back(idx);
    int p = h - 1;
    while (p >= 0 && idx[p] == 2) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < h; ++q) idx[q] = idx[p];
  }
  for (auto& key : keys) {
    std::vector<int> rest(key.begin() + 1, key.end());
    const Poly3& base = prev.component(rest);
    // (p_n - |p|^2/(2h-1) d_n) with n = key[0]
    comp_[key] = Poly3::variable(key[0]) * base -
                 Poly3::radius_sq() * base.derivative(key[0]) * RationalC(Rational(1, 2 * h - 1));
  }
}

const Poly3& TracelessTensorFamily::component(std::vector<int> idx) const {
  std::sort(idx.begin(), idx.end());
  auto it = comp_.find(idx);
  if (it == comp_.end()) throw std::out_of_range("TracelessTensorFamily: bad index tuple");
  return it->second;
}

bool TracelessTensorFamily::traceless() const {
  if (h_ < 2) return true;
  std::vector<int> rest(h_ - 2, 0);
  while (true) {
    Poly3 tr;
    for (int n = 0; n < 3; ++n) {
      std::vector<int> idx = {n, n};
      idx.insert(idx.end(), rest.begin(), rest.end());
      tr = tr + component(idx);
    }
    if (!tr.is_zero()) return false;
    int p = h_ - 3;
    while (p >= 0 && rest[p] == 2) --p;
    if (p < 0) break;
    ++rest[p];
    for (int q = p + 1; q < h_ - 2; ++q) rest[q] = 0;
  }
  return true;
}

bool curl_identity_check(int h) {
  if (h < 1) throw std::invalid_argument("curl_identity_check: h < 1");
  TracelessTensorFamily fam(h);
  std::vector<int> rest(h - 1, 0);
  while (true) {
    for (int m = 0; m < 3; ++m) {
      Poly3 lhs;
      for (int n = 0; n < 3; ++n) {
        std::vector<int> idx = {n};
        idx.insert(idx.end(), rest.begin(), rest.end());
        const Poly3& y = fam.component(idx);
        lhs = lhs + (Poly3::variable(n) * y.derivative(m) - Poly3::variable(m) * y.derivative(n));
      }
      std::vector<int> midx = {m};
      midx.insert(midx.end(), rest.begin(), rest.end());
      Poly3 rhs = fam.component(midx) * RationalC(Rational(-(h + 1)));
      if (!(lhs == rhs)) return false;
    }
    int p = h - 2;
    while (p >= 0 && rest[p] == 2) --p;
    if (p < 0) break;
    ++rest[p];
    for (int q = p + 1; q < h - 1; ++q) rest[q] = 0;
  }
  return true;
}

bool epsilon_identity_check(int l) {
  if (l < 0) throw std::invalid_argument("epsilon_identity_check: l < 0");
  const AngularBasis& basis = harmonic_basis(l);
  for (const Poly3& y : basis.elements()) {
    for (int k = 0; k < 3; ++k) {
      for (int ll = 0; ll < 3; ++ll) {
        Poly3 lhs;
        for (int m = 0; m < 3; ++m) {
          for (int n = 0; n < 3; ++n) {
            const int c = epsilon3(ll, m, n);
            const int d = epsilon3(k, m, n);
            if (c == 0 && d == 0) continue;
            Poly3 factor = Poly3::variable(k) * RationalC(c) - Poly3::variable(ll) * RationalC(d);
            lhs = lhs + factor * (Poly3::variable(m) * y.derivative(n));
          }
        }
        Poly3 rhs;
        for (int j = 0; j < 3; ++j) {
          const int e = epsilon3(j, k, ll);
          if (e == 0) continue;
          rhs = rhs + Poly3::variable(j) * y * RationalC(Rational(l * e));
        }
        if (!(harmonic_part(lhs, l + 1) == harmonic_part(rhs, l + 1))) return false;
      }
    }
  }
  return true;
}

namespace {
std::vector<std::vector<RationalC>> columns_to_matrix(int rows, std::vector<std::vector<RationalC>> cols) {
  std::vector<std::vector<RationalC>> m(rows, std::vector<RationalC>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) m[r][c] = cols[c][r];
  return m;
}
}  // namespace

std::vector<std::vector<RationalC>> up_matrix(int k, int l) {
  const AngularBasis& src = harmonic_basis(l);
  const AngularBasis& dst = harmonic_basis(l + 1);
  std::vector<std::vector<RationalC>> cols;
  for (const Poly3& y : src.elements()) cols.push_back(dst.expand(multiply_pk(y, k).upper));
  return columns_to_matrix(dst.dim(), std::move(cols));
}

std::vector<std::vector<RationalC>> low_matrix(int k, int l) {
  if (l == 0) return {};
  const AngularBasis& src = harmonic_basis(l);
  const AngularBasis& dst = harmonic_basis(l - 1);
  std::vector<std::vector<RationalC>> cols;
  for (const Poly3& y : src.elements()) cols.push_back(dst.expand(y.derivative(k)));
  return columns_to_matrix(dst.dim(), std::move(cols));
}

std::vector<std::vector<RationalC>> rot_matrix(int k, int l, int deg) {
  const AngularBasis& basis = harmonic_basis(deg);
  std::vector<std::vector<RationalC>> cols;
  for (const Poly3& y : basis.elements()) cols.push_back(basis.expand(rotation_action(y, k, l)));
  return columns_to_matrix(basis.dim(), std::move(cols));
}

}  // namespace cdw
