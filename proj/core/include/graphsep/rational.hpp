#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace graphsep {

/// Exact rational scalar. All decision-path arithmetic runs on these;
/// floating point is confined to the dense oracle.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "p", or a plain decimal like "0.36" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      neg = digits[0] == '-';
      digits.erase(digits.begin());
    }
    if (digits.empty()) throw std::invalid_argument("bad rational literal: " + text);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational r(neg ? -num : num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  r.canonicalize();
  return r;
}

/// Renders as "p/q" (or "p" when the denominator is 1).
inline std::string to_string(const Rational& r) { return r.get_str(); }

using RationalVec = std::vector<Rational>;

inline Rational vec_sum(const RationalVec& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace graphsep
