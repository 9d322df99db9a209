#pragma once

#include <stdexcept>
#include <string>

#include "bsw/bipoly.hpp"

namespace bsw {

// Exact rational function in (x, z): num/den of BiPoly. Normalization strips
// the common monomial factor x^a z^b and the common rational content, and
// makes den's graded-lex leading coefficient positive. No polynomial gcd is
// performed; equality is decided by cross-multiplication, which is exact
// regardless of remaining common factors.
class BiFraction {
 public:
  BiFraction() : num_(), den_(BiPoly::one()) {}
  BiFraction(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static BiFraction from_poly(BiPoly p) { return BiFraction(std::move(p), BiPoly::one()); }
  static BiFraction constant(const Rational& c) { return from_poly(BiPoly::constant(c)); }
  static BiFraction var_x() { return from_poly(BiPoly::var_x()); }
  static BiFraction var_z() { return from_poly(BiPoly::var_z()); }
  // x^xe z^ze with negative exponents allowed (they go to the denominator).
  static BiFraction monomial(const Rational& c, int xe, int ze) {
    BiPoly n = BiPoly::monomial(c, xe > 0 ? xe : 0, ze > 0 ? ze : 0);
    BiPoly d = BiPoly::monomial(1, xe < 0 ? -xe : 0, ze < 0 ? -ze : 0);
    return BiFraction(std::move(n), std::move(d));
  }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == BiPoly::one(); }
  bool depends_on_x() const { return num_.depends_on_x() || den_.depends_on_x(); }
  bool depends_on_z() const { return num_.depends_on_z() || den_.depends_on_z(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  friend BiFraction operator+(const BiFraction& a, const BiFraction& b) {
    return BiFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend BiFraction operator-(const BiFraction& a) {
    BiFraction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend BiFraction operator-(const BiFraction& a, const BiFraction& b) { return a + (-b); }
  friend BiFraction operator*(const BiFraction& a, const BiFraction& b) {
    return BiFraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend BiFraction operator*(const Rational& c, const BiFraction& a) {
    return BiFraction(c * a.num_, a.den_);
  }
  friend BiFraction operator*(const BiFraction& a, const Rational& c) { return c * a; }

  BiFraction inverse() const {
    if (is_zero()) throw std::domain_error("BiFraction: division by zero");
    return BiFraction(den_, num_);
  }
  friend BiFraction operator/(const BiFraction& a, const BiFraction& b) { return a * b.inverse(); }

  // Cross-multiplication equality: a/b = c/d iff ad - cb = 0.
  friend bool operator==(const BiFraction& a, const BiFraction& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
  }
  friend bool operator!=(const BiFraction& a, const BiFraction& b) { return !(a == b); }

  // Quotient-rule derivatives; monomial stripping in normalize() keeps
  // monomial denominators from growing.
  BiFraction dx() const { return BiFraction(num_.dx() * den_ - num_ * den_.dx(), den_ * den_); }
  BiFraction dz() const { return BiFraction(num_.dz() * den_ - num_ * den_.dz(), den_ * den_); }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("BiFraction: zero denominator");
    if (num_.is_zero()) {
      den_ = BiPoly::one();
      return;
    }
    int ax = std::min(num_.min_x(), den_.min_x());
    int az = std::min(num_.min_z(), den_.min_z());
    if (ax > 0 || az > 0) {
      num_ = num_.shift_down(ax, az);
      den_ = den_.shift_down(ax, az);
    }
    // Common rational content: scale so both parts have coprime integer
    // coefficients, then fix den's leading sign.
    Int lcm_den = 1;
    for (const auto& [m, c] : num_.terms()) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    for (const auto& [m, c] : den_.terms()) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    Int gcd_num = 0;
    for (const auto& [m, c] : num_.terms())
      gcd_num = boost::multiprecision::gcd(gcd_num, Int(numerator(c) * (lcm_den / denominator(c))));
    for (const auto& [m, c] : den_.terms())
      gcd_num = boost::multiprecision::gcd(gcd_num, Int(numerator(c) * (lcm_den / denominator(c))));
    Rational scale(lcm_den, gcd_num);
    if (den_.leading_coeff() < 0) scale = -scale;
    if (scale != 1) {
      num_ = scale * num_;
      den_ = scale * den_;
    }
  }

  BiPoly num_, den_;
};

inline bool frac_eq(const BiFraction& a, const BiFraction& b) { return a == b; }

}  // namespace bsw
