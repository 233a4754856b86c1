#pragma once

// Exact Hopf axiom verification: coassociativity, both counit laws, both
// antipode laws, multiplicativity of the coproduct and counit, and
// anti-multiplicativity of the antipode, on stage generators plus seeded
// random elements. Everything is checked with zero tolerance.

#include "hopfq/element.hpp"

#include <array>
#include <random>

namespace hopfq {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;  // only on failure
};

struct Report {
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string witness = "") {
    checks.push_back({std::move(name), ok, ok ? "" : std::move(witness)});
  }
};

using TripleKey = std::array<MonomialKey, 3>;
using TripleTensor = std::map<TripleKey, Scalar>;

namespace detail {

inline void triple_add(TripleTensor& t, const TripleKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace detail

/// (Delta (x) id) applied to a tensor square.
inline TripleTensor delta_on_left(const TensorElement& t) {
  TripleTensor out;
  for (const auto& [k, c] : t.terms()) {
    TensorElement part = detail::mono_comul(t.instance(), k.first);
    for (const auto& [pk, pc] : part.terms())
      detail::triple_add(out, {pk.first, pk.second, k.second}, c * pc);
  }
  return out;
}

/// (id (x) Delta) applied to a tensor square.
inline TripleTensor delta_on_right(const TensorElement& t) {
  TripleTensor out;
  for (const auto& [k, c] : t.terms()) {
    TensorElement part = detail::mono_comul(t.instance(), k.second);
    for (const auto& [pk, pc] : part.terms())
      detail::triple_add(out, {k.first, pk.first, pk.second}, c * pc);
  }
  return out;
}

inline Element fold_counit_left(const TensorElement& t) {
  Element out(t.instance());
  for (const auto& [k, c] : t.terms())
    out.add_term(k.second, c * detail::mono_counit(t.instance(), k.first));
  return out;
}

inline Element fold_counit_right(const TensorElement& t) {
  Element out(t.instance());
  for (const auto& [k, c] : t.terms())
    out.add_term(k.first, c * detail::mono_counit(t.instance(), k.second));
  return out;
}

/// m(S (x) id) applied to a tensor square.
inline Element fold_antipode_left(const TensorElement& t) {
  Element out(t.instance());
  for (const auto& [k, c] : t.terms()) {
    Element s = detail::mono_antipode(t.instance(), k.first);
    Element prod = s * Element(t.instance(), k.second);
    for (const auto& [pk, pc] : prod.terms()) out.add_term(pk, c * pc);
  }
  return out;
}

/// m(id (x) S) applied to a tensor square.
inline Element fold_antipode_right(const TensorElement& t) {
  Element out(t.instance());
  for (const auto& [k, c] : t.terms()) {
    Element s = detail::mono_antipode(t.instance(), k.second);
    Element prod = Element(t.instance(), k.first) * s;
    for (const auto& [pk, pc] : prod.terms()) out.add_term(pk, c * pc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stage generators and seeded sampling

inline std::vector<Element> stage_generators(const InstancePtr& h) {
  std::vector<Element> out;
  switch (h->family) {
    case Family::GroupQ: {
      Rational g = h->group.stage_generator(h->stage_index);
      out.emplace_back(h, MonomialKey::group(g));
      out.emplace_back(h, MonomialKey::group(-g));
      break;
    }
    case Family::GroupQ2: {
      const auto& L = h->lattice->stage(h->stage_index);
      out.emplace_back(h, MonomialKey::pair(L.a11, L.a12));
      out.emplace_back(h, MonomialKey::pair(-L.a11, -L.a12));
      out.emplace_back(h, MonomialKey::pair(L.a21, L.a22));
      out.emplace_back(h, MonomialKey::pair(-L.a21, -L.a22));
      break;
    }
    case Family::GroupSemidirect: {
      Rational l = h->semidirect->left().stage_generator(h->stage_index);
      Rational r = h->semidirect->right().stage_generator(h->stage_index);
      out.emplace_back(h, MonomialKey::pair(l, 0));
      out.emplace_back(h, MonomialKey::pair(-l, 0));
      out.emplace_back(h, MonomialKey::pair(0, r));
      out.emplace_back(h, MonomialKey::pair(0, -r));
      break;
    }
    case Family::EnvelopingAbelian:
    case Family::EnvelopingNonabelian:
      out.emplace_back(h, MonomialKey::pbw(1, 0));
      out.emplace_back(h, MonomialKey::pbw(0, 1));
      break;
    case Family::TypeA:
    case Family::TypeC: {
      Rational g = h->group.stage_generator(h->stage_index);
      out.emplace_back(h, MonomialKey::ore(g, 0));
      out.emplace_back(h, MonomialKey::ore(-g, 0));
      out.emplace_back(h, MonomialKey::ore(0, 1));
      break;
    }
    case Family::TypeB: {
      Rational g = h->group.stage_generator(h->stage_index);
      out.emplace_back(h, MonomialKey::smash(g, 0));
      out.emplace_back(h, MonomialKey::smash(-g, 0));
      SubmonoidM active = h->active_monoid();
      for (const auto& p : active.primes())
        out.emplace_back(h, MonomialKey::smash(0, Rational(1) / Rational(p)));
      break;
    }
  }
  return out;
}

namespace detail {

/// Deterministic in-range draw; std::uniform_int_distribution is
/// implementation-defined, so reports would not be reproducible with it.
inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline MonomialKey random_key(const InstancePtr& h, std::mt19937_64& rng) {
  switch (h->family) {
    case Family::GroupQ:
      return MonomialKey::group(Rational(draw(rng, -6, 6)) *
                                h->group.stage_generator(h->stage_index));
    case Family::GroupQ2: {
      const auto& L = h->lattice->stage(h->stage_index);
      Rational c1(draw(rng, -3, 3)), c2(draw(rng, -3, 3));
      return MonomialKey::pair(c1 * L.a11 + c2 * L.a21, c1 * L.a12 + c2 * L.a22);
    }
    case Family::GroupSemidirect: {
      Rational l = Rational(draw(rng, -3, 3)) *
                   h->semidirect->left().stage_generator(h->stage_index);
      Rational r = Rational(draw(rng, -3, 3)) *
                   h->semidirect->right().stage_generator(h->stage_index);
      return MonomialKey::pair(l, r);
    }
    case Family::EnvelopingAbelian:
    case Family::EnvelopingNonabelian:
      return MonomialKey::pbw(static_cast<unsigned long>(draw(rng, 0, 3)),
                              static_cast<unsigned long>(draw(rng, 0, 3)));
    case Family::TypeA:
    case Family::TypeC:
      return MonomialKey::ore(Rational(draw(rng, -4, 4)) *
                                  h->group.stage_generator(h->stage_index),
                              static_cast<unsigned long>(draw(rng, 0, 3)));
    case Family::TypeB: {
      Rational b = 0;
      SubmonoidM active = h->active_monoid();
      for (const auto& p : active.primes())
        b += Rational(draw(rng, 0, to_long(p))) / Rational(p);
      return MonomialKey::smash(Rational(draw(rng, -6, 6)) *
                                    h->group.stage_generator(h->stage_index),
                                b);
    }
  }
  throw error("unreachable family in random_key");
}

}  // namespace detail

inline Element random_element(const InstancePtr& h, std::mt19937_64& rng) {
  Element out(h);
  long terms = detail::draw(rng, 1, 3);
  for (long i = 0; i < terms; ++i) {
    long numer = detail::draw(rng, -4, 4);
    if (numer == 0) numer = 1;
    Scalar c(Rational(numer, detail::draw(rng, 1, 3)));
    out.add_term(detail::random_key(h, rng), c);
  }
  if (out.is_zero()) out.add_term(detail::random_key(h, rng), Scalar(1));
  return out;
}

// ---------------------------------------------------------------------------
// The axiom suite

inline Report verify_axioms(const InstancePtr& h, unsigned sample_count, unsigned long seed) {
  Report report;
  std::vector<std::pair<std::string, Element>> subjects;
  for (const auto& g : stage_generators(h)) subjects.emplace_back(g.str(), g);
  std::mt19937_64 rng(seed);
  std::vector<Element> samples;
  for (unsigned i = 0; i < sample_count; ++i) {
    Element u = random_element(h, rng);
    samples.push_back(u);
    subjects.emplace_back("sample#" + std::to_string(i), u);
  }

  Element unit = Element::one(h);
  for (const auto& [label, u] : subjects) {
    TensorElement du = comultiply(u);
    bool coassoc = delta_on_left(du) == delta_on_right(du);
    report.add("coassociativity[" + label + "]", coassoc, u.str());
    bool cl = fold_counit_left(du) == u;
    report.add("counit-left[" + label + "]", cl, u.str());
    bool cr = fold_counit_right(du) == u;
    report.add("counit-right[" + label + "]", cr, u.str());
    Element eps_u = counit(u) * unit;
    bool al = fold_antipode_left(du) == eps_u;
    report.add("antipode-left[" + label + "]", al, u.str());
    bool ar = fold_antipode_right(du) == eps_u;
    report.add("antipode-right[" + label + "]", ar, u.str());
  }

  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    const Element& u = samples[i];
    const Element& v = samples[i + 1];
    std::string label = "pair#" + std::to_string(i / 2);
    Element uv = u * v;
    bool dm = comultiply(uv) == tensor_mul(comultiply(u), comultiply(v));
    report.add("coproduct-multiplicative[" + label + "]", dm, u.str() + " | " + v.str());
    bool em = counit(uv) == counit(u) * counit(v);
    report.add("counit-multiplicative[" + label + "]", em, u.str() + " | " + v.str());
    bool sa = antipode(uv) == antipode(v) * antipode(u);
    report.add("antipode-antimultiplicative[" + label + "]", sa, u.str() + " | " + v.str());
  }
  return report;
}

}  // namespace hopfq
