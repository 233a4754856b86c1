#pragma once

// Exact integer and rational arithmetic plus the small number-theoretic
// helpers (trial factorization, CRT, modular inverses) everything else
// builds on. Conductors and denominators stay desk-scale, so trial
// division is the right tool.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline Int to_int(const Rational& r) {
  if (!is_integer(r)) throw error("expected an integer, got " + r.str());
  return num(r);
}

inline long to_long(const Int& n) {
  if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min())
    throw error("integer too large for machine word: " + n.str());
  return static_cast<long>(n);
}

inline Int gcd_int(const Int& a, const Int& b) { return gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return lcm(a, b); }

/// Floor division for possibly-negative numerators.
inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw error("floor_div by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Int floor_rational(const Rational& r) { return floor_div(num(r), den(r)); }

/// a - floor(a), in [0, 1).
inline Rational frac_part(const Rational& a) { return a - Rational(floor_rational(a)); }

/// Inverse of a modulo m (m >= 1), via the extended Euclidean algorithm.
inline Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = mod_floor(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw error("not invertible: gcd(" + a.str() + "," + m.str() + ") != 1");
  return mod_floor(old_s, m);
}

/// Prime factorization by trial division; n >= 1.
inline std::map<Int, unsigned> factorize(Int n) {
  if (n < 1) throw error("factorize expects n >= 1");
  std::map<Int, unsigned> out;
  for (Int p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f.begin()->second == 1;
}

inline Int euler_phi(const Int& n) {
  Int phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    Int pe = 1;
    for (unsigned i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

inline Int pow_int(Int base, Int exp) {
  if (exp < 0) throw error("pow_int expects a nonnegative exponent");
  Int r = 1;
  while (exp > 0) {
    if (mod_floor(exp, 2) == 1) r *= base;
    base *= base;
    exp /= 2;
  }
  return r;
}

inline std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{1};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<Int> next;
    Int pe = 1;
    for (unsigned i = 0; i <= e; ++i) {
      for (const auto& d : out) next.push_back(d * pe);
      pe *= p;
    }
    out.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace hopfq
