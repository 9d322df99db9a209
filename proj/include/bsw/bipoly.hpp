#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "bsw/rational.hpp"

namespace bsw {

// Exponent pair of a monomial x^x z^z.
struct Mono {
  int x = 0;
  int z = 0;
  friend bool operator==(const Mono& a, const Mono& b) { return a.x == b.x && a.z == b.z; }
};

// Graded lexicographic order with x > z; maps sorted with this comparator keep
// the leading term last, so rbegin() is the graded-lex leading term.
struct MonoGrlex {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.x + a.z, db = b.x + b.z;
    if (da != db) return da < db;
    return a.x < b.x;
  }
};

// Sparse polynomial in x and z over Rational. Invariant: no zero coefficient
// is stored, so map equality is polynomial equality.
class BiPoly {
 public:
  using Terms = std::map<Mono, Rational, MonoGrlex>;

  BiPoly() = default;

  static BiPoly constant(const Rational& c) { return monomial(c, 0, 0); }
  static BiPoly monomial(const Rational& c, int xe, int ze) {
    if (xe < 0 || ze < 0) throw std::invalid_argument("BiPoly exponents must be non-negative");
    BiPoly p;
    if (c != 0) p.t_[{xe, ze}] = c;
    return p;
  }
  static BiPoly one() { return constant(1); }
  static BiPoly var_x() { return monomial(1, 1, 0); }
  static BiPoly var_z() { return monomial(1, 0, 1); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly& add_term(const Mono& m, const Rational& c) {
    if (c == 0) return *this;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
    return *this;
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a) {
    BiPoly r = a;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term({ma.x + mb.x, ma.z + mb.z}, ca * cb);
    return r;
  }
  friend BiPoly operator*(const Rational& c, const BiPoly& a) {
    BiPoly r;
    if (c == 0) return r;
    for (const auto& [m, cc] : a.t_) r.t_[m] = c * cc;
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const Rational& c) { return c * a; }

  BiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
    BiPoly r = one();
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  BiPoly dx() const {
    BiPoly r;
    for (const auto& [m, c] : t_)
      if (m.x > 0) r.t_[{m.x - 1, m.z}] = c * Rational(m.x);
    return r;
  }
  BiPoly dz() const {
    BiPoly r;
    for (const auto& [m, c] : t_)
      if (m.z > 0) r.t_[{m.x, m.z - 1}] = c * Rational(m.z);
    return r;
  }

  // Degree queries; the zero polynomial reports -1.
  int deg_x() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.x);
    return d;
  }
  int deg_z() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.z);
    return d;
  }
  int total_deg() const { return t_.empty() ? -1 : (t_.rbegin()->first.x + t_.rbegin()->first.z); }

  // Smallest exponent of x (resp. z) over all terms; 0 for the zero polynomial.
  int min_x() const {
    if (t_.empty()) return 0;
    int d = t_.begin()->first.x;
    for (const auto& [m, c] : t_) d = std::min(d, m.x);
    return d;
  }
  int min_z() const {
    if (t_.empty()) return 0;
    int d = t_.begin()->first.z;
    for (const auto& [m, c] : t_) d = std::min(d, m.z);
    return d;
  }

  bool depends_on_x() const {
    for (const auto& [m, c] : t_)
      if (m.x != 0) return true;
    return false;
  }
  bool depends_on_z() const {
    for (const auto& [m, c] : t_)
      if (m.z != 0) return true;
    return false;
  }

  // Divide every term by x^ax z^az (requires divisibility).
  BiPoly shift_down(int ax, int az) const {
    BiPoly r;
    for (const auto& [m, c] : t_) {
      if (m.x < ax || m.z < az) throw std::invalid_argument("BiPoly::shift_down: not divisible");
      r.t_[{m.x - ax, m.z - az}] = c;
    }
    return r;
  }

  Rational coeff(int xe, int ze) const {
    auto it = t_.find({xe, ze});
    return it == t_.end() ? Rational(0) : it->second;
  }

  // Graded-lex leading coefficient; 0 for the zero polynomial.
  Rational leading_coeff() const { return t_.empty() ? Rational(0) : t_.rbegin()->second; }

  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0}); }
  Rational constant_value() const {
    if (!is_constant()) throw std::invalid_argument("BiPoly: not a constant");
    return t_.empty() ? Rational(0) : t_.begin()->second;
  }

  // Human-readable form, terms in ascending graded-lex order, e.g. "1 - 2*x*z^2".
  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
      std::string cs = to_string(c < 0 ? Rational(-c) : c);
      s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      bool unit = (cs == "1") && (m.x != 0 || m.z != 0);
      if (!unit) s += cs;
      auto pow_str = [&](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty() && s.back() != ' ' && s.back() != '-') s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
      };
      pow_str("x", m.x);
      pow_str("z", m.z);
    }
    return s;
  }

 private:
  Terms t_;
};

}  // namespace bsw
