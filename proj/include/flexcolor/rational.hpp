// Exact rational arithmetic for verdicts; no floating point in any
// verdict path.
#pragma once

#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace flexcolor {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Smallest integer >= r, for r >= 0.
inline long long ceil_of(const Rational& r) {
  long long n = r.numerator();
  long long d = r.denominator();  // boost keeps d > 0
  if (n <= 0) return 0;
  return (n + d - 1) / d;
}

// Parses "p/q", "p", or a plain decimal like "0.5".
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long p = std::stoll(s.substr(0, slash));
    long long q = std::stoll(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(p, q);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    if (frac.size() > 12) frac = frac.substr(0, 12);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
    long long num = frac.empty() ? 0 : std::stoll(frac);
    bool neg = !s.empty() && s[0] == '-';
    Rational r = Rational(whole < 0 ? -whole : whole, 1) + Rational(num, den);
    return neg ? -r : r;
  }
  return Rational(std::stoll(s), 1);
}

}  // namespace flexcolor
