#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bsw/bifraction.hpp"

namespace bsw {

// Square matrix over BiFraction.
class MatF {
 public:
  explicit MatF(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw std::invalid_argument("MatF: size must be >= 1");
  }

  static MatF identity(int n) {
    MatF m(n);
    for (int i = 0; i < n; ++i) m(i, i) = BiFraction::constant(1);
    return m;
  }

  // Matrix unit e_{ij} with 1-based indices; out-of-range indices give the
  // zero matrix (uniform convention used by all closed-form tables).
  static MatF unit(int n, int i, int j) {
    MatF m(n);
    if (i >= 1 && i <= n && j >= 1 && j <= n) m(i - 1, j - 1) = BiFraction::constant(1);
    return m;
  }

  static MatF scalar(int n, const BiFraction& c) {
    MatF m(n);
    for (int i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }

  int n() const { return n_; }
  BiFraction& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const BiFraction& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_zero() const {
    for (const auto& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }
  bool depends_on_x() const {
    for (const auto& v : e_)
      if (v.depends_on_x()) return true;
    return false;
  }
  bool depends_on_z() const {
    for (const auto& v : e_)
      if (v.depends_on_z()) return true;
    return false;
  }
  bool is_constant() const { return !depends_on_x() && !depends_on_z(); }

  friend MatF operator+(const MatF& a, const MatF& b) {
    check_same(a, b);
    MatF r(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend MatF operator-(const MatF& a) {
    MatF r(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = -a.e_[i];
    return r;
  }
  friend MatF operator-(const MatF& a, const MatF& b) { return a + (-b); }
  friend MatF operator*(const MatF& a, const MatF& b) {
    check_same(a, b);
    MatF r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) {
          if (b(k, j).is_zero()) continue;
          r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
      }
    return r;
  }
  friend MatF operator*(const BiFraction& c, const MatF& a) {
    MatF r(a.n_);
    if (c.is_zero()) return r;
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = c * a.e_[i];
    return r;
  }
  friend MatF operator*(const MatF& a, const BiFraction& c) {
    MatF r(a.n_);
    if (c.is_zero()) return r;
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] * c;
    return r;
  }
  friend MatF operator*(const Rational& c, const MatF& a) { return BiFraction::constant(c) * a; }
  friend MatF operator*(const MatF& a, const Rational& c) { return a * BiFraction::constant(c); }

  friend bool operator==(const MatF& a, const MatF& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const MatF& a, const MatF& b) { return !(a == b); }

  MatF pow(int e) const {
    if (e < 0) throw std::invalid_argument("MatF::pow: negative exponent");
    MatF r = identity(n_);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  MatF dx() const {
    MatF r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].dx();
    return r;
  }
  MatF dz() const {
    MatF r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].dz();
    return r;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      s += i ? ", [" : "[";
      for (int j = 0; j < n_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
      s += "]";
    }
    return s + "]";
  }

 private:
  static void check_same(const MatF& a, const MatF& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("MatF: dimension mismatch");
  }
  int n_;
  std::vector<BiFraction> e_;
};

inline MatF commutator(const MatF& a, const MatF& b) { return a * b - b * a; }

// x^j coefficient of a matrix whose entries are polynomials in x alone.
inline MatF coeff_x(const MatF& theta, int j) {
  MatF r(theta.n());
  for (int i = 0; i < theta.n(); ++i)
    for (int k = 0; k < theta.n(); ++k) {
      const BiFraction& f = theta(i, k);
      if (!f.is_polynomial() || f.num().depends_on_z())
        throw std::invalid_argument("coeff_x: not an x-polynomial");
      if (j >= 0) r(i, k) = BiFraction::constant(f.num().coeff(j, 0));
    }
  return r;
}

}  // namespace bsw
