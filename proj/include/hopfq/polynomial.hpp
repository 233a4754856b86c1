#pragma once

// Dense univariate polynomials over an exact field. Instantiated with
// Rational (cyclotomic internals) and with Cyclotomic (the rational
// function field k(t) behind Scalar). Degrees stay small throughout.

#include "hopfq/rational.hpp"

#include <vector>

namespace hopfq {

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
  /// The monomial c * t^d.
  static Poly monomial(K c, std::size_t d) {
    std::vector<K> v(d + 1, K(0));
    v[d] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& leading() const {
    if (c_.empty()) throw error("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_constant() const { return c_.size() <= 1; }
  K constant_value() const { return c_.empty() ? K(0) : c_[0]; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<K> v = a.c_;
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(v));
  }
  Poly scaled(const K& s) const {
    std::vector<K> v = c_;
    for (auto& x : v) x = x * s;
    return Poly(std::move(v));
  }

  /// Euclidean division; the divisor's leading coefficient must be a unit.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error("polynomial division by zero");
    std::vector<K> r = a.c_;
    std::vector<K> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, K(0));
    K inv_lead = K(1) / b.leading();
    std::size_t bdeg = b.c_.size() - 1;
    while (r.size() > bdeg) {
      if (r.back() == K(0)) {
        r.pop_back();
        continue;
      }
      std::size_t shift = r.size() - 1 - bdeg;
      K factor = r.back() * inv_lead;
      q[shift] = q[shift] + factor;
      for (std::size_t i = 0; i < bdeg; ++i) r[i + shift] = r[i + shift] - factor * b.c_[i];
      r.pop_back();  // leading term cancels exactly
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  friend Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw error("polynomial division is not exact");
    return q;
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(K(1) / leading());
  }

  /// Monic gcd via the Euclidean algorithm.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  std::vector<K> c_;  // c_[i] is the coefficient of t^i; no trailing zeros

  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
};

}  // namespace hopfq
