#include "cdw/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cdw {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

Poly3 Poly3::variable(int k) {
  Mono m{0, 0, 0};
  m[k] = 1;
  return monomial(m, RationalC(1));
}

Poly3 Poly3::monomial(const Mono& m, RationalC c) {
  Poly3 p;
  p.add_term(m, c);
  return p;
}

Poly3 Poly3::radius_sq() {
  Poly3 p;
  p.add_term({2, 0, 0}, RationalC(1));
  p.add_term({0, 2, 0}, RationalC(1));
  p.add_term({0, 0, 2}, RationalC(1));
  return p;
}

int Poly3::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

bool Poly3::homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  for (const auto& [m, c] : terms_)
    if (m[0] + m[1] + m[2] != d) return false;
  return true;
}

void Poly3::add_term(const Mono& m, const RationalC& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RationalC Poly3::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalC() : it->second;
}

Poly3 Poly3::operator+(const Poly3& o) const {
  Poly3 r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly3 Poly3::operator-(const Poly3& o) const {
  Poly3 r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly3 Poly3::operator*(const Poly3& o) const {
  Poly3 r;
  for (const auto& [m, c] : terms_)
    for (const auto& [n, d] : o.terms_)
      r.add_term({m[0] + n[0], m[1] + n[1], m[2] + n[2]}, c * d);
  return r;
}

Poly3 Poly3::operator*(const RationalC& c) const {
  Poly3 r;
  if (c.is_zero()) return r;
  for (const auto& [m, d] : terms_) r.add_term(m, c * d);
  return r;
}

Poly3 Poly3::operator-() const { return *this * RationalC(-1); }

Poly3 Poly3::derivative(int k) const {
  Poly3 r;
  for (const auto& [m, c] : terms_) {
    if (m[k] == 0) continue;
    Mono n = m;
    n[k] -= 1;
    r.add_term(n, c * RationalC(m[k]));
  }
  return r;
}

Poly3 Poly3::laplacian() const {
  Poly3 r;
  for (int k = 0; k < 3; ++k) r = r + derivative(k).derivative(k);
  return r;
}

Poly3 Poly3::conjugate() const {
  Poly3 r;
  for (const auto& [m, c] : terms_) r.add_term(m, c.conj());
  return r;
}

std::string Poly3::str() const {
  if (terms_.empty()) return "0";
  // graded-lex descending for a stable canonical form
  std::vector<std::pair<Mono, RationalC>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1] + a.first[2];
    const int db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    if (!first) os << " + ";
    first = false;
    if (c.im == 0) {
      os << to_string(c.re);
    } else if (c.re == 0) {
      os << "(" << to_string(c.im) << " i)";
    } else {
      os << "(" << to_string(c.re) << " + " << to_string(c.im) << " i)";
    }
    for (int k = 0; k < 3; ++k) {
      if (m[k] == 0) continue;
      os << " * p" << (k + 1);
      if (m[k] > 1) os << "^" << m[k];
    }
  }
  return os.str();
}

std::vector<std::pair<int, Poly3>> harmonic_decompose(const Poly3& p) {
  if (!p.homogeneous()) throw std::invalid_argument("harmonic_decompose: polynomial is not homogeneous");
  std::vector<std::pair<int, Poly3>> out;
  if (p.is_zero()) return out;
  const int r = p.degree();
  Poly3 lap = p.laplacian();
  if (lap.is_zero()) {
    out.emplace_back(0, p);
    return out;
  }
  // Delta(|p|^(2j) Y_s) = 2j(2s+2j+1) |p|^(2(j-1)) Y_s lifts the decomposition
  // of Delta(P) back one rung.
  auto sub = harmonic_decompose(lap);
  std::map<int, Poly3> parts;
  for (auto& [jp, z] : sub) {
    const int j = jp + 1;
    const int s = r - 2 * j;
    parts[j] = z * RationalC(Rational(1, 2 * j * (2 * s + 2 * j + 1)));
  }
  Poly3 rho = Poly3::radius_sq();
  Poly3 top = p;
  for (auto& [j, y] : parts) {
    Poly3 rhoj = Poly3::one();
    for (int t = 0; t < j; ++t) rhoj = rhoj * rho;
    top = top - rhoj * y;
  }
  if (!top.is_zero()) out.emplace_back(0, top);
  for (auto& [j, y] : parts) out.emplace_back(j, y);
  return out;
}

Poly3 harmonic_part(const Poly3& p, int deg) {
  for (auto& [j, y] : harmonic_decompose(p))
    if (y.degree() == deg) return y;
  return {};
}

namespace {
// (e-1)!! with (-1)!! = 1
Rational double_factorial(int e) {
  Rational r = 1;
  for (int k = e; k > 1; k -= 2) r *= k;
  return r;
}
}  // namespace

RationalC sphere_inner(const Poly3& a, const Poly3& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() != b.degree()) return {};
  RationalC s;
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [n, d] : b.terms()) {
      const int e0 = m[0] + n[0], e1 = m[1] + n[1], e2 = m[2] + n[2];
      if (e0 % 2 || e1 % 2 || e2 % 2) continue;
      Rational mom = double_factorial(e0 - 1) * double_factorial(e1 - 1) * double_factorial(e2 - 1) /
                     double_factorial(e0 + e1 + e2 + 1);
      s += c.conj() * d * RationalC(mom);
    }
  }
  return s;
}

}  // namespace cdw
