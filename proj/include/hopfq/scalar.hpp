#pragma once

// The coefficient field for everything downstream: rational functions in
// one formal symbol t with cyclotomic coefficients. Values are kept in
// canonical form (gcd-reduced, monic denominator), so equality is a
// coefficient compare. A constant Scalar is just a Cyclotomic in disguise.

#include "hopfq/cyclotomic.hpp"
#include "hopfq/polynomial.hpp"

#include <optional>

namespace hopfq {

class Scalar {
 public:
  Scalar() : num_(), den_(Poly<Cyclotomic>::constant(Cyclotomic(1))) {}
  Scalar(int v) : Scalar(Cyclotomic(v)) {}
  Scalar(const Rational& v) : Scalar(Cyclotomic(v)) {}
  Scalar(Cyclotomic v)
      : num_(Poly<Cyclotomic>::constant(std::move(v))),
        den_(Poly<Cyclotomic>::constant(Cyclotomic(1))) {}

  /// The formal transcendental parameter.
  static Scalar t() {
    return Scalar(Poly<Cyclotomic>::monomial(Cyclotomic(1), 1),
                  Poly<Cyclotomic>::constant(Cyclotomic(1)));
  }
  static Scalar zeta(const Int& N) { return Scalar(Cyclotomic::zeta(N)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Cyclotomic as_cyclotomic() const {
    if (!is_constant()) throw error("scalar has a nonconstant t-part");
    return num_.constant_value();  // den is the monic constant 1
  }
  bool is_rational() const { return is_constant() && num_.constant_value().is_rational(); }
  Rational as_rational() const { return as_cyclotomic().as_rational(); }

  const Poly<Cyclotomic>& num() const { return num_; }
  const Poly<Cyclotomic>& den() const { return den_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.constant_pair() && b.constant_pair())
      return Scalar(a.num_.constant_value() + b.num_.constant_value());
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.constant_pair() && b.constant_pair())
      return Scalar(a.num_.constant_value() - b.num_.constant_value());
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a) {
    Scalar x = a;
    x.num_ = -x.num_;
    return x;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.constant_pair() && b.constant_pair())
      return Scalar(a.num_.constant_value() * b.num_.constant_value());
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw error("scalar division by zero");
    if (a.constant_pair() && b.constant_pair())
      return Scalar(a.num_.constant_value() / b.num_.constant_value());
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  Scalar inverse() const { return Scalar(1) / *this; }

  Scalar pow(Int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this, acc(1);
    while (e > 0) {
      if (mod_floor(e, 2) == 1) acc = acc * base;
      base = base * base;
      e /= 2;
    }
    return acc;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

 private:
  Poly<Cyclotomic> num_, den_;  // den monic and nonzero, gcd(num, den) = 1

  Scalar(Poly<Cyclotomic> n, Poly<Cyclotomic> d) : num_(std::move(n)), den_(std::move(d)) {
    canonicalize();
  }

  bool constant_pair() const { return num_.is_constant() && den_.is_constant(); }

  void canonicalize() {
    if (den_.is_zero()) throw error("scalar with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<Cyclotomic>::constant(Cyclotomic(1));
      return;
    }
    if (!den_.is_constant() || !num_.is_constant()) {
      Poly<Cyclotomic> g = Poly<Cyclotomic>::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    Cyclotomic lead = den_.leading();
    if (!lead.is_one()) {
      Cyclotomic inv = lead.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
};

/// Smallest n >= 1 with s^n = 1, or nullopt when s is not a root of unity.
/// Detection is structural: a nonconstant t-part, a non-unit rational, or a
/// cyclotomic value outside the unit-root list of its conductor all fail.
inline std::optional<Int> root_order(const Scalar& s) {
  if (s.is_zero()) throw error("root_order of zero");
  if (!s.is_constant()) return std::nullopt;
  return s.as_cyclotomic().root_of_unity_order();
}

/// Gaussian binomial coefficient, by the Pascal-type recurrence
///   [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q,
/// which stays exact at roots of unity.
inline Scalar qbinomial(unsigned n, unsigned k, const Scalar& q) {
  if (k > n) throw error("qbinomial requires k <= n");
  std::vector<Scalar> row(k + 1, Scalar(0));
  row[0] = Scalar(1);
  std::vector<Scalar> qpow(k + 1, Scalar(1));
  for (unsigned j = 1; j <= k; ++j) qpow[j] = qpow[j - 1] * q;
  for (unsigned i = 1; i <= n; ++i) {
    unsigned top = std::min(i, k);
    for (unsigned j = top; j >= 1; --j) {
      row[j] = row[j - 1] + qpow[j] * row[j];
      if (j == 1) break;
    }
  }
  return row[k];
}

}  // namespace hopfq
