#pragma once

// Multiplicative characters into the scalar units and additive characters
// a -> lambda*a. Only finitely presented kinds are supported: trivial,
// cyclic with a chosen unit value, and the CRT kind pinned by primitive
// roots at 1/p_i^2. Evaluation domains are structural: a value must be
// reachable from the presenting data.

#include "hopfq/groups.hpp"
#include "hopfq/scalar.hpp"
#include "hopfq/scalar_io.hpp"

#include <map>
#include <optional>

namespace hopfq {

class MultiplicativeCharacter {
 public:
  enum class Kind { Trivial, Cyclic, Crt };

  static MultiplicativeCharacter trivial() { return MultiplicativeCharacter(); }

  static MultiplicativeCharacter cyclic(Rational generator, Scalar value) {
    if (generator == 0) throw error("cyclic character needs a nonzero generator");
    if (value.is_zero()) throw error("character value must be a unit");
    MultiplicativeCharacter c;
    c.kind_ = Kind::Cyclic;
    c.generator_ = std::move(generator);
    c.value_ = std::move(value);
    return c;
  }

  /// chi(1/p^2) = beta_p for each listed p; beta_p must be a primitive
  /// p-th root of unity, which forces chi(1/p) = chi(1) = 1.
  static MultiplicativeCharacter crt(std::map<Int, Scalar> roots) {
    MultiplicativeCharacter c;
    c.kind_ = Kind::Crt;
    for (const auto& [p, beta] : roots) {
      if (p < 2) throw error("crt character keys must be >= 2");
      auto ord = root_order(beta);
      if (!ord || *ord != p)
        throw error("crt character value at 1/" + p.str() + "^2 is not a primitive " + p.str() +
                    "-th root of unity");
    }
    for (auto it = roots.begin(); it != roots.end(); ++it)
      for (auto jt = std::next(it); jt != roots.end(); ++jt)
        if (gcd_int(it->first, jt->first) != 1)
          throw error("crt character keys must be pairwise coprime");
    c.roots_ = std::move(roots);
    return c;
  }

  Kind kind() const { return kind_; }
  const Rational& generator() const { return generator_; }
  const Scalar& value() const { return value_; }
  const std::map<Int, Scalar>& roots() const { return roots_; }

  bool defined_at(const Rational& a) const {
    switch (kind_) {
      case Kind::Trivial:
        return true;
      case Kind::Cyclic:
        return is_integer(a / generator_);
      case Kind::Crt: {
        Int d = 1;
        for (const auto& [p, beta] : roots_) d *= p * p;
        return mod_floor(d, den(a)) == 0;
      }
    }
    return false;
  }

  Scalar evaluate(const Rational& a) const {
    switch (kind_) {
      case Kind::Trivial:
        return Scalar(1);
      case Kind::Cyclic: {
        Rational n = a / generator_;
        if (!is_integer(n)) throw error("argument " + to_string(a) + " outside cyclic domain");
        return value_.pow(to_int(n));
      }
      case Kind::Crt: {
        // a = c + sum c_i / p_i^2 with the c_i pinned mod p_i^2 by CRT
        Int d = 1;
        for (const auto& [p, beta] : roots_) d *= p * p;
        if (mod_floor(d, den(a)) != 0)
          throw error("argument " + to_string(a) + " outside crt domain");
        Int u = num(a) * (d / den(a));
        Scalar out(1);
        for (const auto& [p, beta] : roots_) {
          Int p2 = p * p;
          Int ci = mod_floor(u * mod_inverse(d / p2, p2), p2);
          Int e = mod_floor(ci, p);  // beta has order p
          if (e != 0) out *= beta.pow(e);
        }
        return out;
      }
    }
    throw error("unreachable character kind");
  }

  friend bool operator==(const MultiplicativeCharacter& a, const MultiplicativeCharacter& b) {
    return a.kind_ == b.kind_ && a.generator_ == b.generator_ && a.value_ == b.value_ &&
           a.roots_ == b.roots_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::Trivial:
        return "trivial";
      case Kind::Cyclic:
        return "cyclic(" + to_string(generator_) + " -> " + scalar_str(value_) + ")";
      case Kind::Crt: {
        std::string s = "crt{";
        bool first = true;
        for (const auto& [p, beta] : roots_) {
          if (!first) s += ", ";
          first = false;
          s += p.str() + " -> " + scalar_str(beta);
        }
        return s + "}";
      }
    }
    return "?";
  }

 private:
  Kind kind_ = Kind::Trivial;
  Rational generator_;
  Scalar value_;
  std::map<Int, Scalar> roots_;
};

/// tau(a) = lambda * a; Hom(G, k) for G inside Q is exactly k by divisibility.
class AdditiveCharacter {
 public:
  AdditiveCharacter() : lambda_(0) {}
  explicit AdditiveCharacter(Scalar lambda) : lambda_(std::move(lambda)) {}

  const Scalar& lambda() const { return lambda_; }
  Scalar evaluate(const Rational& a) const { return lambda_ * Scalar(a); }
  bool is_zero() const { return lambda_.is_zero(); }

  friend bool operator==(const AdditiveCharacter& a, const AdditiveCharacter& b) {
    return a.lambda_ == b.lambda_;
  }

 private:
  Scalar lambda_;
};

struct BDataReport {
  bool pass = true;
  std::string first_violation;
};

/// The admissibility conditions on (G, {p_i}, chi) behind a type-B instance,
/// including the derived identities chi(1/p_i) = chi(1) = chi(1/p_ip_j) = 1.
inline BDataReport validate_bdata(const RationalSubgroup& G, const SubmonoidM& M,
                                  const MultiplicativeCharacter& chi) {
  BDataReport r;
  auto fail = [&r](std::string why) {
    r.pass = false;
    r.first_violation = std::move(why);
    return r;
  };
  const auto& ps = M.primes();
  if (ps.size() < 2)
    return fail("index set must have at least two elements; with one generator the "
                "algebra is isomorphic to A_G(e,chi)");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] < 2) return fail("generator denominators must be >= 2");
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (gcd_int(ps[i], ps[j]) != 1)
        return fail("not pairwise coprime: " + ps[i].str() + " and " + ps[j].str());
  }
  for (const auto& p : ps) {
    if (!G.contains(Rational(1) / Rational(p)))
      return fail("1/" + p.str() + " is not a member of G");
  }
  for (const auto& p : ps) {
    Rational arg = Rational(1) / Rational(p * p);
    if (!chi.defined_at(arg)) return fail("chi is undefined at 1/" + Int(p * p).str());
    auto ord = root_order(chi.evaluate(arg));
    if (!ord || *ord != p)
      return fail("chi(1/" + Int(p * p).str() + ") is not a primitive " + p.str() +
                  "-th root of unity");
  }
  for (const auto& p : ps) {
    if (chi.evaluate(Rational(1) / Rational(p)) != Scalar(1))
      return fail("derived identity chi(1/" + p.str() + ") = 1 fails");
  }
  if (chi.evaluate(1) != Scalar(1)) return fail("derived identity chi(1) = 1 fails");
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      Rational arg = Rational(1) / Rational(ps[i] * ps[j]);
      if (chi.evaluate(arg) != Scalar(1))
        return fail("derived identity chi(1/" + Int(ps[i] * ps[j]).str() + ") = 1 fails");
    }
  return r;
}

}  // namespace hopfq
