#pragma once

// Elements as finite sums of normal-form monomials with Scalar
// coefficients, together with the structure maps: family-specific
// multiplication rules, the coproduct (an algebra map on generators),
// the counit and the antipode (an anti-homomorphism). Tensor squares
// carry coproduct outputs; multiplication there is componentwise.

#include "hopfq/families.hpp"
#include "hopfq/monomial.hpp"

#include <sstream>

namespace hopfq {

class Element {
 public:
  Element() = default;
  explicit Element(InstancePtr inst) : inst_(std::move(inst)) {}
  Element(InstancePtr inst, const MonomialKey& k, Scalar c = Scalar(1))
      : inst_(std::move(inst)) {
    inst_->check_key(k);
    if (!c.is_zero()) terms_.emplace(k, std::move(c));
  }

  static Element zero(InstancePtr inst) { return Element(std::move(inst)); }
  static Element one(InstancePtr inst) {
    MonomialKey k;
    k.tag = inst->key_tag();
    return Element(std::move(inst), k);
  }

  const InstancePtr& instance() const { return inst_; }
  const std::map<MonomialKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const MonomialKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Element operator+(const Element& u, const Element& v) {
    require_same(u, v);
    Element out = u;
    for (const auto& [k, c] : v.terms_) out.add_term(k, c);
    return out;
  }
  friend Element operator-(const Element& u, const Element& v) {
    require_same(u, v);
    Element out = u;
    for (const auto& [k, c] : v.terms_) out.add_term(k, -c);
    return out;
  }
  friend Element operator-(const Element& u) {
    Element out = u;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }
  friend Element operator*(const Scalar& s, const Element& u) {
    Element out(u.inst_);
    if (s.is_zero()) return out;
    for (const auto& [k, c] : u.terms_) out.terms_.emplace(k, s * c);
    return out;
  }

  friend bool operator==(const Element& u, const Element& v) {
    return u.inst_ == v.inst_ && u.terms_ == v.terms_;
  }
  friend bool operator!=(const Element& u, const Element& v) { return !(u == v); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string mono = k.str();
      std::string cs = scalar_str(c);
      if (!first) os << " + ";
      first = false;
      if (mono == "1") {
        os << (cs.find_first_of("+-") != std::string::npos && cs.rfind("-", 0) != 0 ? "(" + cs + ")"
                                                                                    : cs);
      } else if (c == Scalar(1)) {
        os << mono;
      } else if (c == Scalar(-1)) {
        os << "-" << mono;
      } else {
        bool wrap = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        os << (wrap ? "(" + cs + ")" : cs) << "*" << mono;
      }
    }
    return os.str();
  }

  static void require_same(const Element& u, const Element& v) {
    if (u.inst_ != v.inst_) throw error("elements belong to different instances");
  }

 private:
  InstancePtr inst_;
  std::map<MonomialKey, Scalar> terms_;
};

class TensorElement {
 public:
  using Key = std::pair<MonomialKey, MonomialKey>;

  TensorElement() = default;
  explicit TensorElement(InstancePtr inst) : inst_(std::move(inst)) {}

  static TensorElement one(const InstancePtr& inst) {
    TensorElement t(inst);
    MonomialKey k;
    k.tag = inst->key_tag();
    t.terms_.emplace(Key{k, k}, Scalar(1));
    return t;
  }
  /// u (x) v for single monomials.
  static TensorElement pure(const InstancePtr& inst, const MonomialKey& l, const MonomialKey& r,
                            Scalar c = Scalar(1)) {
    TensorElement t(inst);
    if (!c.is_zero()) t.terms_.emplace(Key{l, r}, std::move(c));
    return t;
  }

  const InstancePtr& instance() const { return inst_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_product(const Element& left, const Element& right, const Scalar& c) {
    for (const auto& [kl, cl] : left.terms())
      for (const auto& [kr, cr] : right.terms()) add_term(Key{kl, kr}, c * cl * cr);
  }

  friend TensorElement operator+(const TensorElement& u, const TensorElement& v) {
    TensorElement out = u;
    for (const auto& [k, c] : v.terms_) out.add_term(k, c);
    return out;
  }
  friend TensorElement operator-(const TensorElement& u, const TensorElement& v) {
    TensorElement out = u;
    for (const auto& [k, c] : v.terms_) out.add_term(k, -c);
    return out;
  }
  friend bool operator==(const TensorElement& u, const TensorElement& v) {
    return u.terms_ == v.terms_;
  }
  friend bool operator!=(const TensorElement& u, const TensorElement& v) { return !(u == v); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      std::string cs = scalar_str(c);
      if (!(c == Scalar(1))) os << "(" << cs << ")*";
      os << k.first.str() << "(x)" << k.second.str();
    }
    return os.str();
  }

 private:
  InstancePtr inst_;
  std::map<Key, Scalar> terms_;
};

// ---------------------------------------------------------------------------
// Multiplication

namespace detail {

inline Int binomial_int(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= Int(n - k + i);
    r /= Int(i);
  }
  return r;
}

/// Left multiplication by z in a type-C algebra:
/// z * x^c z^j = x^c z^{j+1} + tau(c) (x^{c+e0} - x^c) z^j.
inline Element c_left_mul_z(const Element& u) {
  const auto& h = u.instance();
  Element out(h);
  for (const auto& [k, c] : u.terms()) {
    out.add_term(MonomialKey::ore(k.a, k.n + 1), c);
    Scalar t = h->tau.evaluate(k.a);
    if (!t.is_zero()) {
      out.add_term(MonomialKey::ore(k.a + h->e, k.n), c * t);
      out.add_term(MonomialKey::ore(k.a, k.n), -(c * t));
    }
  }
  return out;
}

inline Element mono_mul(const InstancePtr& h, const MonomialKey& k1, const MonomialKey& k2) {
  switch (h->family) {
    case Family::GroupQ:
      return Element(h, MonomialKey::group(k1.a + k2.a));
    case Family::GroupQ2:
      return Element(h, MonomialKey::pair(k1.a + k2.a, k1.b + k2.b));
    case Family::GroupSemidirect: {
      auto prod = h->semidirect->multiply({k1.a, k1.b}, {k2.a, k2.b});
      return Element(h, MonomialKey::pair(prod.first, prod.second));
    }
    case Family::EnvelopingAbelian:
      return Element(h, MonomialKey::pbw(k1.n + k2.n, k1.m + k2.m));
    case Family::EnvelopingNonabelian: {
      // y^j x^k = (x - j)^k y^j, so
      // (x^i y^j)(x^k y^l) = sum_r C(k,r) (-j)^{k-r} x^{i+r} y^{j+l}
      Element out(h);
      Int minus_j = -Int(k1.m);
      for (unsigned long r = 0; r <= k2.n; ++r) {
        Int coeff = binomial_int(k2.n, r) * pow_int(minus_j, Int(k2.n - r));
        out.add_term(MonomialKey::pbw(k1.n + r, k1.m + k2.m), Scalar(Rational(coeff)));
      }
      return out;
    }
    case Family::TypeA: {
      // (x^a z^n)(x^{a'} z^{n'}) = chi(a')^n x^{a+a'} z^{n+n'}
      Scalar c = k1.n == 0 ? Scalar(1) : h->chi.evaluate(k2.a).pow(Int(k1.n));
      return Element(h, MonomialKey::ore(k1.a + k2.a, k1.n + k2.n), c);
    }
    case Family::TypeC: {
      Element acc(h, MonomialKey::ore(k2.a, 0));
      for (unsigned long i = 0; i < k1.n; ++i) acc = c_left_mul_z(acc);
      // shift by x^{a} on the left and z^{n'} on the right
      Element out(h);
      for (const auto& [k, c] : acc.terms())
        out.add_term(MonomialKey::ore(k1.a + k.a, k.n + k2.n), c);
      return out;
    }
    case Family::TypeB: {
      // (x^a y^b)(x^{a'} y^{b'}) = chi(a' b)^{-1} x^{a+a'} y^{b+b'}
      Scalar c = k1.b == 0 || k2.a == 0 ? Scalar(1)
                                        : h->chi.evaluate(k2.a * k1.b).inverse();
      return Element(h, MonomialKey::smash(k1.a + k2.a, k1.b + k2.b), c);
    }
  }
  throw error("unreachable family in mono_mul");
}

}  // namespace detail

inline Element multiply(const Element& u, const Element& v) {
  Element::require_same(u, v);
  Element out(u.instance());
  for (const auto& [k1, c1] : u.terms())
    for (const auto& [k2, c2] : v.terms()) {
      Element part = detail::mono_mul(u.instance(), k1, k2);
      Scalar c = c1 * c2;
      for (const auto& [k, pc] : part.terms()) out.add_term(k, c * pc);
    }
  return out;
}

inline Element operator*(const Element& u, const Element& v) { return multiply(u, v); }

inline Element power(const Element& u, unsigned long n) {
  Element acc = Element::one(u.instance());
  for (unsigned long i = 0; i < n; ++i) acc = acc * u;
  return acc;
}

inline TensorElement tensor_mul(const TensorElement& u, const TensorElement& v) {
  const auto& h = u.instance() ? u.instance() : v.instance();
  TensorElement out(h);
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms()) {
      Element left = detail::mono_mul(h, ku.first, kv.first);
      Element right = detail::mono_mul(h, ku.second, kv.second);
      out.add_product(left, right, cu * cv);
    }
  return out;
}

inline TensorElement tensor_power(const InstancePtr& h, const TensorElement& u, unsigned long n) {
  TensorElement acc = TensorElement::one(h);
  for (unsigned long i = 0; i < n; ++i) acc = tensor_mul(acc, u);
  return acc;
}

// ---------------------------------------------------------------------------
// Coproduct, counit, antipode

namespace detail {

/// Coproduct of a smash monomial given an explicit monoid decomposition of
/// the y-exponent; the result is independent of the decomposition chosen
/// since the delta_i commute and delta_i^{p_i} agree.
inline TensorElement b_comul_with_decomposition(const InstancePtr& h, const MonomialKey& k,
                                                const std::map<Int, Int>& decomp) {
  TensorElement acc =
      TensorElement::pure(h, MonomialKey::smash(k.a, 0), MonomialKey::smash(k.a, 0));
  for (const auto& [p, c] : decomp) {
    Rational inv_p = Rational(1) / Rational(p);
    TensorElement delta(h);
    delta.add_term({MonomialKey::smash(0, inv_p), MonomialKey::smash(0, 0)}, Scalar(1));
    delta.add_term({MonomialKey::smash(inv_p, 0), MonomialKey::smash(0, inv_p)}, Scalar(1));
    acc = tensor_mul(acc, tensor_power(h, delta, static_cast<unsigned long>(to_long(c))));
  }
  return acc;
}

inline TensorElement mono_comul(const InstancePtr& h, const MonomialKey& k) {
  switch (h->family) {
    case Family::GroupQ:
    case Family::GroupQ2:
    case Family::GroupSemidirect:
      return TensorElement::pure(h, k, k);
    case Family::EnvelopingAbelian:
    case Family::EnvelopingNonabelian: {
      TensorElement dx(h), dy(h);
      dx.add_term({MonomialKey::pbw(1, 0), MonomialKey::pbw(0, 0)}, Scalar(1));
      dx.add_term({MonomialKey::pbw(0, 0), MonomialKey::pbw(1, 0)}, Scalar(1));
      dy.add_term({MonomialKey::pbw(0, 1), MonomialKey::pbw(0, 0)}, Scalar(1));
      dy.add_term({MonomialKey::pbw(0, 0), MonomialKey::pbw(0, 1)}, Scalar(1));
      return tensor_mul(tensor_power(h, dx, k.n), tensor_power(h, dy, k.m));
    }
    case Family::TypeA:
    case Family::TypeC: {
      TensorElement grp =
          TensorElement::pure(h, MonomialKey::ore(k.a, 0), MonomialKey::ore(k.a, 0));
      TensorElement dz(h);
      dz.add_term({MonomialKey::ore(0, 1), MonomialKey::ore(0, 0)}, Scalar(1));
      dz.add_term({MonomialKey::ore(h->e, 0), MonomialKey::ore(0, 1)}, Scalar(1));
      return tensor_mul(grp, tensor_power(h, dz, k.n));
    }
    case Family::TypeB:
      return b_comul_with_decomposition(h, k, h->decomposition(k.b));
  }
  throw error("unreachable family in mono_comul");
}

inline Scalar mono_counit(const InstancePtr& h, const MonomialKey& k) {
  switch (h->family) {
    case Family::GroupQ:
    case Family::GroupQ2:
    case Family::GroupSemidirect:
      return Scalar(1);
    case Family::EnvelopingAbelian:
    case Family::EnvelopingNonabelian:
      return k.n == 0 && k.m == 0 ? Scalar(1) : Scalar(0);
    case Family::TypeA:
    case Family::TypeC:
      return k.n == 0 ? Scalar(1) : Scalar(0);
    case Family::TypeB:
      return k.b == 0 ? Scalar(1) : Scalar(0);
  }
  throw error("unreachable family in mono_counit");
}

inline Element mono_antipode(const InstancePtr& h, const MonomialKey& k) {
  switch (h->family) {
    case Family::GroupQ:
      return Element(h, MonomialKey::group(-k.a));
    case Family::GroupQ2:
      return Element(h, MonomialKey::pair(-k.a, -k.b));
    case Family::GroupSemidirect: {
      auto inv = h->semidirect->inverse({k.a, k.b});
      return Element(h, MonomialKey::pair(inv.first, inv.second));
    }
    case Family::EnvelopingAbelian: {
      int sign = (k.n + k.m) % 2 == 0 ? 1 : -1;
      return Element(h, MonomialKey::pbw(k.n, k.m), Scalar(sign));
    }
    case Family::EnvelopingNonabelian: {
      // S(x^i y^j) = (-y)^j (-x)^i = (-1)^{i+j} y^j x^i
      int sign = (k.n + k.m) % 2 == 0 ? 1 : -1;
      Element prod = mono_mul(h, MonomialKey::pbw(0, k.m), MonomialKey::pbw(k.n, 0));
      return Scalar(sign) * prod;
    }
    case Family::TypeA:
    case Family::TypeC: {
      // S(z) = -x^{-e} z, extended anti-multiplicatively
      Element sz(h, MonomialKey::ore(-h->e, 1), Scalar(-1));
      Element acc = power(sz, k.n);
      Element shift(h, MonomialKey::ore(-k.a, 0));
      return acc * shift;
    }
    case Family::TypeB: {
      Element acc = Element::one(h);
      for (const auto& [p, c] : h->decomposition(k.b)) {
        Rational inv_p = Rational(1) / Rational(p);
        Element sy(h, MonomialKey::smash(-inv_p, inv_p), Scalar(-1));
        acc = acc * power(sy, static_cast<unsigned long>(to_long(c)));
      }
      return acc * Element(h, MonomialKey::smash(-k.a, 0));
    }
  }
  throw error("unreachable family in mono_antipode");
}

}  // namespace detail

inline TensorElement comultiply(const Element& u) {
  TensorElement out(u.instance());
  for (const auto& [k, c] : u.terms()) {
    TensorElement part = detail::mono_comul(u.instance(), k);
    for (const auto& [tk, tc] : part.terms()) out.add_term(tk, c * tc);
  }
  return out;
}

inline Scalar counit(const Element& u) {
  Scalar out(0);
  for (const auto& [k, c] : u.terms()) out += c * detail::mono_counit(u.instance(), k);
  return out;
}

inline Element antipode(const Element& u) {
  Element out(u.instance());
  for (const auto& [k, c] : u.terms()) {
    Element part = detail::mono_antipode(u.instance(), k);
    for (const auto& [pk, pc] : part.terms()) out.add_term(pk, c * pc);
  }
  return out;
}

/// Lossless promotion into another instance (e.g. a later chain stage);
/// every key is re-certified against the target.
inline Element promote(const Element& u, const InstancePtr& target) {
  Element out(target);
  for (const auto& [k, c] : u.terms()) {
    target->check_key(k);
    out.add_term(k, c);
  }
  return out;
}

}  // namespace hopfq
