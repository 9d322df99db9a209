#pragma once

#include <map>
#include <stdexcept>

#include "bsw/matf.hpp"

namespace bsw {

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

// psi(x, z) = e^{xz} * M(x, z). The exponential prefactor is never stored;
// differential operators act on M through the rewrite rules
// d_x -> (z + d_x), d_z -> (x + d_z).
struct WaveFunction {
  int n;
  MatF M;
  WaveFunction(int n_, MatF m) : n(n_), M(std::move(m)) {
    if (M.n() != n) throw std::invalid_argument("WaveFunction: size mismatch");
    if (M.is_zero()) throw std::invalid_argument("WaveFunction: matrix part must be nonzero");
  }
  // Results of applying operators may legitimately be zero.
  static WaveFunction unchecked(int n_, MatF m) {
    WaveFunction w(n_, MatF::identity(n_));
    w.M = std::move(m);
    return w;
  }
};

namespace detail {

// order -> coefficient matrix, zero coefficients dropped.
using OpTerms = std::map<int, MatF>;

inline void op_add_term(OpTerms& t, int order, const MatF& m) {
  if (m.is_zero()) return;
  auto it = t.find(order);
  if (it == t.end()) {
    t.emplace(order, m);
  } else {
    it->second = it->second + m;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace detail

// L = sum_i a_i(x) d_x^i, acting from the left.
struct OperatorX {
  int n;
  detail::OpTerms terms;

  explicit OperatorX(int n_) : n(n_) {}

  OperatorX& add(int order, const MatF& coeff) {
    if (order < 0) throw std::invalid_argument("OperatorX: negative order");
    if (coeff.n() != n) throw std::invalid_argument("OperatorX: size mismatch");
    if (coeff.depends_on_z()) throw std::invalid_argument("OperatorX: coefficient depends on z");
    detail::op_add_term(terms, order, coeff);
    return *this;
  }
  int order() const { return terms.empty() ? -1 : terms.rbegin()->first; }
  MatF coeff(int order) const {
    auto it = terms.find(order);
    return it == terms.end() ? MatF(n) : it->second;
  }
  bool is_zero() const { return terms.empty(); }
};

// B with psi B = sum_j (d_z^j psi) b_j(z), acting from the right.
struct OperatorZ {
  int n;
  detail::OpTerms terms;

  explicit OperatorZ(int n_) : n(n_) {}

  OperatorZ& add(int order, const MatF& coeff) {
    if (order < 0) throw std::invalid_argument("OperatorZ: negative order");
    if (coeff.n() != n) throw std::invalid_argument("OperatorZ: size mismatch");
    if (coeff.depends_on_x()) throw std::invalid_argument("OperatorZ: coefficient depends on x");
    detail::op_add_term(terms, order, coeff);
    return *this;
  }
  int order() const { return terms.empty() ? -1 : terms.rbegin()->first; }
  MatF coeff(int order) const {
    auto it = terms.find(order);
    return it == terms.end() ? MatF(n) : it->second;
  }
  bool is_zero() const { return terms.empty(); }
};

inline bool operator==(const OperatorX& a, const OperatorX& b) {
  if (a.n != b.n) return false;
  int hi = std::max(a.order(), b.order());
  for (int i = 0; i <= hi; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}
inline bool operator!=(const OperatorX& a, const OperatorX& b) { return !(a == b); }
inline bool operator==(const OperatorZ& a, const OperatorZ& b) {
  if (a.n != b.n) return false;
  int hi = std::max(a.order(), b.order());
  for (int i = 0; i <= hi; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}
inline bool operator!=(const OperatorZ& a, const OperatorZ& b) { return !(a == b); }

inline OperatorX op_add(const OperatorX& a, const OperatorX& b) {
  if (a.n != b.n) throw std::invalid_argument("op_add: size mismatch");
  OperatorX r = a;
  for (const auto& [o, m] : b.terms) detail::op_add_term(r.terms, o, m);
  return r;
}
inline OperatorX op_sub(const OperatorX& a, const OperatorX& b) {
  if (a.n != b.n) throw std::invalid_argument("op_sub: size mismatch");
  OperatorX r = a;
  for (const auto& [o, m] : b.terms) detail::op_add_term(r.terms, o, -m);
  return r;
}
inline OperatorZ op_add(const OperatorZ& a, const OperatorZ& b) {
  if (a.n != b.n) throw std::invalid_argument("op_add: size mismatch");
  OperatorZ r = a;
  for (const auto& [o, m] : b.terms) detail::op_add_term(r.terms, o, m);
  return r;
}
inline OperatorZ op_sub(const OperatorZ& a, const OperatorZ& b) {
  if (a.n != b.n) throw std::invalid_argument("op_sub: size mismatch");
  OperatorZ r = a;
  for (const auto& [o, m] : b.terms) detail::op_add_term(r.terms, o, -m);
  return r;
}

// L psi: per term, e^{-xz} d_x^i (e^{xz} M) = (z + d_x)^i M, then a_i * (...).
inline WaveFunction apply_x(const OperatorX& L, const WaveFunction& psi) {
  if (L.n != psi.n) throw std::invalid_argument("apply_x: size mismatch");
  const BiFraction zf = BiFraction::var_z();
  MatF acc(psi.n);
  for (const auto& [i, a] : L.terms) {
    MatF t = psi.M;
    for (int k = 0; k < i; ++k) t = zf * t + t.dx();
    acc = acc + a * t;
  }
  return WaveFunction::unchecked(psi.n, acc);
}

// psi B: per term, e^{-xz} d_z^j (e^{xz} M) = (x + d_z)^j M, then (...) * b_j.
inline WaveFunction apply_z(const WaveFunction& psi, const OperatorZ& B) {
  if (B.n != psi.n) throw std::invalid_argument("apply_z: size mismatch");
  const BiFraction xf = BiFraction::var_x();
  MatF acc(psi.n);
  for (const auto& [j, b] : B.terms) {
    MatF t = psi.M;
    for (int k = 0; k < j; ++k) t = xf * t + t.dz();
    acc = acc + t * b;
  }
  return WaveFunction::unchecked(psi.n, acc);
}

inline bool check_left_eigen(const OperatorX& L, const WaveFunction& psi, const MatF& F) {
  if (F.depends_on_x()) throw std::invalid_argument("check_left_eigen: F must depend on z only");
  return apply_x(L, psi).M == psi.M * F;
}

inline bool check_right_eigen(const WaveFunction& psi, const OperatorZ& B, const MatF& theta) {
  if (theta.depends_on_z()) throw std::invalid_argument("check_right_eigen: theta must depend on x only");
  return apply_z(psi, B).M == theta * psi.M;
}

// (L1 L2)(f) = L1(L2(f)): d^i (A2 d^j) expands by Leibniz to
// sum_k C(i,k) A2^{(k)} d^{i-k+j}.
inline OperatorX compose_x(const OperatorX& L1, const OperatorX& L2) {
  if (L1.n != L2.n) throw std::invalid_argument("compose_x: size mismatch");
  OperatorX r(L1.n);
  for (const auto& [i, a1] : L1.terms)
    for (const auto& [j, a2] : L2.terms) {
      MatF der = a2;
      for (int k = 0; k <= i; ++k) {
        detail::op_add_term(r.terms, i - k + j, binomial(i, k) * (a1 * der));
        if (k < i) der = der.dx();
      }
    }
  return r;
}

// Right-operator product via the anti-isomorphism (psi B1) B2 = psi (B1 o B2):
// coefficient at order j+i picks up C(k,i) * b1_j^{(k-i)} * b2_k.
inline OperatorZ compose_z(const OperatorZ& B1, const OperatorZ& B2) {
  if (B1.n != B2.n) throw std::invalid_argument("compose_z: size mismatch");
  OperatorZ r(B1.n);
  for (const auto& [j, b1] : B1.terms)
    for (const auto& [k, b2] : B2.terms) {
      MatF der = b1;  // walks through b1^{(k-i)} as i descends from k
      for (int i = k; i >= 0; --i) {
        detail::op_add_term(r.terms, j + i, binomial(k, i) * (der * b2));
        if (i > 0) der = der.dz();
      }
    }
  return r;
}

inline OperatorX commutator_x(const OperatorX& a, const OperatorX& b) {
  return op_sub(compose_x(a, b), compose_x(b, a));
}
inline OperatorZ commutator_z(const OperatorZ& a, const OperatorZ& b) {
  return op_sub(compose_z(a, b), compose_z(b, a));
}

inline OperatorX ad_power(const OperatorX& L, const OperatorX& theta, int r) {
  if (r < 0) throw std::invalid_argument("ad_power: negative iterate");
  OperatorX cur = theta;
  for (int i = 0; i < r; ++i) cur = commutator_x(L, cur);
  return cur;
}
inline OperatorZ ad_power(const OperatorZ& F, const OperatorZ& B, int r) {
  if (r < 0) throw std::invalid_argument("ad_power: negative iterate");
  OperatorZ cur = B;
  for (int i = 0; i < r; ++i) cur = commutator_z(F, cur);
  return cur;
}

// d_x^r coefficient of [L, Theta] for polynomial-coefficient operators, from
// the closed double sum
//   a_r = sum_{k+s=r, 0<=k<=l, 0<=s<=m}
//         ( sum_{j=k}^{l} C(j,k) L_j Theta_s^{(j-k)}
//         - sum_{j=s}^{m} C(j,s) Theta_j L_k^{(j-s)} ).
// Out-of-range r gives 0 (empty sum).
inline MatF degad_coefficient(const OperatorX& L, const OperatorX& theta, int r) {
  if (L.n != theta.n) throw std::invalid_argument("degad_coefficient: size mismatch");
  for (const auto& [o, m] : L.terms)
    for (int i = 0; i < m.n(); ++i)
      for (int j = 0; j < m.n(); ++j)
        if (!m(i, j).is_polynomial())
          throw std::invalid_argument("degad_coefficient: non-polynomial coefficient");
  for (const auto& [o, m] : theta.terms)
    for (int i = 0; i < m.n(); ++i)
      for (int j = 0; j < m.n(); ++j)
        if (!m(i, j).is_polynomial())
          throw std::invalid_argument("degad_coefficient: non-polynomial coefficient");
  const int l = L.order(), m = theta.order();
  MatF acc(L.n);
  if (r < 0) return acc;
  for (int k = 0; k <= std::min(r, l); ++k) {
    const int s = r - k;
    if (s > m) continue;
    for (int j = k; j <= l; ++j) {
      MatF der = theta.coeff(s);
      for (int d = 0; d < j - k; ++d) der = der.dx();
      acc = acc + binomial(j, k) * (L.coeff(j) * der);
    }
    for (int j = s; j <= m; ++j) {
      MatF der = L.coeff(k);
      for (int d = 0; d < j - s; ++d) der = der.dx();
      acc = acc - binomial(j, s) * (theta.coeff(j) * der);
    }
  }
  return acc;
}

}  // namespace bsw
