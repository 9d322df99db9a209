#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bsw {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: gcd(|num|, den) = 1 and den > 0.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) {
  Int n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

// Accepts "p" or "p/q" with optional sign on p; q must be a positive integer.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&]() -> Rational { throw std::runtime_error("malformed rational: \"" + s + "\""); };
  if (s.empty()) return bad();
  auto slash = s.find('/');
  auto is_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(s, true)) return bad();
      return Rational(Int(s));
    }
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!is_int(p, true) || !is_int(q, false)) return bad();
    Int qi(q);
    if (qi == 0) return bad();
    return Rational(Int(p), qi);
  } catch (const std::exception&) {
    return bad();
  }
}

}  // namespace bsw
