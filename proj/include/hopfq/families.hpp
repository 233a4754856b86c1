#pragma once

// Validated constructors for every family in the classification: group
// algebras kG for G inside Q, Q^2 or L x| R; enveloping algebras of the
// two 2-dimensional Lie algebras; the Hopf Ore extensions A_G(e,chi) and
// C_G(e0,tau); and the smash products B_G({p_i},chi). Non-finitely-
// generated data is handled through an ascending stage tower; affine
// stage recognition and the data-level isomorphism test live here too.

#include "hopfq/character.hpp"
#include "hopfq/groups.hpp"
#include "hopfq/monomial.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <sstream>

namespace hopfq {

enum class Family {
  GroupQ,
  GroupQ2,
  GroupSemidirect,
  EnvelopingAbelian,
  EnvelopingNonabelian,
  TypeA,
  TypeC,
  TypeB,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::GroupQ: return "groupQ";
    case Family::GroupQ2: return "groupQ2";
    case Family::GroupSemidirect: return "semidirect";
    case Family::EnvelopingAbelian: return "envelopingAbelian";
    case Family::EnvelopingNonabelian: return "envelopingNonabelian";
    case Family::TypeA: return "typeA";
    case Family::TypeC: return "typeC";
    case Family::TypeB: return "typeB";
  }
  return "?";
}

class HopfInstance;
using InstancePtr = std::shared_ptr<const HopfInstance>;

class HopfInstance {
 public:
  Family family = Family::GroupQ;
  RationalSubgroup group;                 // GroupQ, TypeA, TypeC, TypeB
  std::optional<RankTwoGroup> lattice;    // GroupQ2
  std::optional<SemidirectGroup> semidirect;  // GroupSemidirect
  SubmonoidM monoid;                      // TypeB
  MultiplicativeCharacter chi;            // TypeA, TypeB
  AdditiveCharacter tau;                  // TypeC
  Rational e;                             // TypeA: wgt exponent; TypeC: e0
  unsigned stage_index = 1;

  MonomialKey::Tag key_tag() const {
    switch (family) {
      case Family::GroupQ: return MonomialKey::Tag::Group;
      case Family::GroupQ2:
      case Family::GroupSemidirect: return MonomialKey::Tag::Pair;
      case Family::EnvelopingAbelian:
      case Family::EnvelopingNonabelian: return MonomialKey::Tag::PBW;
      case Family::TypeA:
      case Family::TypeC: return MonomialKey::Tag::Ore;
      case Family::TypeB: return MonomialKey::Tag::B;
    }
    return MonomialKey::Tag::Group;
  }

  /// Certifies that a key denotes a monomial of this algebra.
  void check_key(const MonomialKey& k) const {
    if (k.tag != key_tag()) throw error("monomial key tag does not match the family");
    switch (family) {
      case Family::GroupQ:
        if (!group.contains(k.a)) throw error("exponent " + to_string(k.a) + " leaves the group");
        break;
      case Family::GroupQ2:
        if (!lattice->contains(k.a, k.b)) throw error("pair exponent leaves the group");
        break;
      case Family::GroupSemidirect:
        if (!semidirect->contains({k.a, k.b})) throw error("pair exponent leaves the group");
        break;
      case Family::EnvelopingAbelian:
      case Family::EnvelopingNonabelian:
        break;
      case Family::TypeA:
      case Family::TypeC:
        if (!group.contains(k.a)) throw error("exponent " + to_string(k.a) + " leaves the group");
        break;
      case Family::TypeB:
        if (!group.contains(k.a)) throw error("exponent " + to_string(k.a) + " leaves the group");
        decomposition(k.b);  // throws when b is not a monoid member
        break;
    }
  }

  /// Cached monoid decomposition of a y-exponent.
  std::map<Int, Int> decomposition(const Rational& b) const {
    {
      std::lock_guard<std::mutex> lock(cache_mu_);
      auto it = decomp_cache_.find(b);
      if (it != decomp_cache_.end()) return it->second;
    }
    auto d = monoid.decompose(b);
    if (!d) throw error("exponent " + to_string(b) + " leaves the monoid");
    std::lock_guard<std::mutex> lock(cache_mu_);
    decomp_cache_.emplace(b, *d);
    return *d;
  }

  /// The active prime prefix at the current stage (Prop-2.3-style: stage n
  /// activates the first n+1 generators).
  SubmonoidM active_monoid() const { return monoid.prefix(stage_index + 1); }

  std::string str() const {
    std::ostringstream os;
    switch (family) {
      case Family::GroupQ: os << "k[" << group.str() << "]"; break;
      case Family::GroupQ2: os << "k[Q^2 tower, " << lattice->stage_count() << " stages]"; break;
      case Family::GroupSemidirect:
        os << "k[" << semidirect->left().str() << " x| " << semidirect->right().str() << "]";
        break;
      case Family::EnvelopingAbelian: os << "U(abelian 2-dim)"; break;
      case Family::EnvelopingNonabelian: os << "U(nonabelian 2-dim)"; break;
      case Family::TypeA:
        os << "A_G(e=" << to_string(e) << ", " << chi.str() << ") over " << group.str();
        break;
      case Family::TypeC:
        os << "C_G(e0=" << to_string(e) << ", lambda=" << scalar_str(tau.lambda()) << ") over "
           << group.str();
        break;
      case Family::TypeB: {
        os << "B_G({";
        bool first = true;
        for (const auto& p : monoid.primes()) {
          if (!first) os << ",";
          first = false;
          os << p;
        }
        os << "}, " << chi.str() << ") over " << group.str();
        break;
      }
    }
    return os.str();
  }

 private:
  mutable std::mutex cache_mu_;
  mutable std::map<Rational, std::map<Int, Int>> decomp_cache_;
};

// ---------------------------------------------------------------------------
// Constructors

inline InstancePtr make_group_algebra(RationalSubgroup G) {
  auto h = std::make_shared<HopfInstance>();
  h->family = Family::GroupQ;
  h->group = std::move(G);
  return h;
}

inline InstancePtr make_group_algebra(RankTwoGroup G) {
  auto h = std::make_shared<HopfInstance>();
  h->family = Family::GroupQ2;
  h->lattice = std::move(G);
  h->stage_index = static_cast<unsigned>(h->lattice->stage_count());
  return h;
}

inline InstancePtr make_group_algebra(SemidirectGroup G) {
  auto h = std::make_shared<HopfInstance>();
  h->family = Family::GroupSemidirect;
  h->semidirect = std::move(G);
  return h;
}

inline InstancePtr make_enveloping(bool abelian) {
  auto h = std::make_shared<HopfInstance>();
  h->family = abelian ? Family::EnvelopingAbelian : Family::EnvelopingNonabelian;
  return h;
}

inline InstancePtr make_A(RationalSubgroup G, Rational e, MultiplicativeCharacter chi) {
  if (!G.contains(e)) throw error("e = " + to_string(e) + " is not a member of G");
  if (!chi.defined_at(G.stage_generator(1)))
    throw error("character is undefined on the first stage of G");
  auto h = std::make_shared<HopfInstance>();
  h->family = Family::TypeA;
  h->group = std::move(G);
  h->e = std::move(e);
  h->chi = std::move(chi);
  return h;
}

inline InstancePtr make_C(RationalSubgroup G, Rational e0, AdditiveCharacter tau) {
  if (!G.contains(e0)) throw error("e0 = " + to_string(e0) + " is not a member of G");
  auto h = std::make_shared<HopfInstance>();
  h->family = Family::TypeC;
  h->group = std::move(G);
  h->e = std::move(e0);
  h->tau = std::move(tau);
  return h;
}

inline InstancePtr make_B(RationalSubgroup G, SubmonoidM P, MultiplicativeCharacter chi) {
  auto report = validate_bdata(G, P, chi);
  if (!report.pass) throw error(report.first_violation);
  auto h = std::make_shared<HopfInstance>();
  h->family = Family::TypeB;
  h->group = std::move(G);
  h->monoid = std::move(P);
  h->chi = std::move(chi);
  // stage n activates min(n+1, s) primes; start with all of a finite list
  if (h->monoid.size() >= 2) h->stage_index = static_cast<unsigned>(h->monoid.size()) - 1;
  return h;
}

/// A(n,q): generators x^{+-1}, z with xz = qzx, z of weight x^n. This is
/// A_Z(n, chi) for the character i -> q^{-i}.
inline InstancePtr affine_A(const Int& n, const Scalar& q) {
  if (n < 0) throw error("affine A(n,q) is normalized to n >= 0");
  if (q.is_zero()) throw error("q must be a unit");
  auto chi = q.is_one() ? MultiplicativeCharacter::trivial()
                        : MultiplicativeCharacter::cyclic(1, q.inverse());
  return make_A(RationalSubgroup::integers(), Rational(n), chi);
}

/// C(n): generators x^{+-1}, z with zx = xz + (x^{2-n} - x); z has weight
/// x^{1-n}. This is C_Z(1-n, i_1).
inline InstancePtr affine_C(const Int& n) {
  if (n < 2) throw error("affine C(n) is normalized to n >= 2");
  return make_C(RationalSubgroup::integers(), Rational(1 - n), AdditiveCharacter(Scalar(1)));
}

/// B(n, p0, p_1..p_s, q): the finitely generated presentation on x^{+-1/mn}
/// with x y_i = q^{m_i} y_i x. Realized as B over Z(1/mn) with the cyclic
/// character 1/m^2 n -> q; the stated (n, p0, q) data must be coherent.
inline InstancePtr affine_B(const Int& n, const Int& p0, const std::vector<Int>& primes,
                            const Scalar& q) {
  if (n < 1 || p0 < 1) throw error("affine B needs positive n and p0");
  Int m = 1;
  for (const auto& p : primes) m *= p;
  auto ell = root_order(q);
  if (!ell) throw error("q must be a root of unity for an affine B presentation");
  if (*ell * p0 != m * n) throw error("order of q must equal mn/p0");
  if (mod_floor(n, p0) != 0) throw error("p0 must divide n");
  for (const auto& p : primes)
    if (gcd_int(p0, p) != 1) throw error("p0 must be coprime to each p_i");
  auto chi = MultiplicativeCharacter::cyclic(Rational(1) / Rational(m * m * n), q);
  return make_B(RationalSubgroup::cyclic(m * n), SubmonoidM(primes), chi);
}

/// Same data, new current stage index.
inline InstancePtr at_stage(const InstancePtr& h, unsigned n) {
  if (n < 1) throw error("stage index starts at 1");
  auto copy = std::make_shared<HopfInstance>();
  copy->family = h->family;
  copy->group = h->group;
  copy->lattice = h->lattice;
  copy->semidirect = h->semidirect;
  copy->monoid = h->monoid;
  copy->chi = h->chi;
  copy->tau = h->tau;
  copy->e = h->e;
  copy->stage_index = n;
  return copy;
}

/// The finitely generated Hopf subalgebra B<n>: stage-n subgroup of G joined
/// with the reciprocals of the first min(n+1, s) monoid generators.
inline InstancePtr chain_stage(const InstancePtr& B, unsigned n) {
  if (B->family != Family::TypeB) throw error("chain_stage needs a type-B instance");
  if (n < 1) throw error("stage index starts at 1");
  SubmonoidM prefix = B->monoid.prefix(n + 1);
  Int m = 1;
  for (const auto& p : prefix.primes()) m *= p;
  // join stage subgroup with Z(1/m)
  std::map<Int, unsigned> data = B->group.stage_subgroup(n).steinitz();
  for (const auto& [p, eexp] : factorize(m)) {
    auto it = data.find(p);
    if (it == data.end() || (it->second != kOmega && it->second < eexp)) data[p] = eexp;
  }
  return make_B(RationalSubgroup(std::move(data)), std::move(prefix), B->chi);
}

/// True when the two instances present literally the same family data
/// (the testable alias equality, e.g. affine_A(1,1) vs make_A(Z,1,trivial)).
inline bool same_presentation(const HopfInstance& x, const HopfInstance& y) {
  if (x.family != y.family) return false;
  switch (x.family) {
    case Family::GroupQ: return x.group == y.group;
    case Family::GroupQ2: return x.lattice == y.lattice;
    case Family::GroupSemidirect: return x.semidirect == y.semidirect;
    case Family::EnvelopingAbelian:
    case Family::EnvelopingNonabelian: return true;
    case Family::TypeA: return x.group == y.group && x.e == y.e && x.chi == y.chi;
    case Family::TypeC: return x.group == y.group && x.e == y.e && x.tau == y.tau;
    case Family::TypeB:
      return x.group == y.group && x.monoid == y.monoid && x.chi == y.chi;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Affine recognition (the data of Lemma 2.2 for a finitely generated stage)

struct AffineRecognition {
  Int t;                  // stage group is Z(1/t)
  Int m;                  // product of the stage primes
  std::vector<Int> m_i;   // m / p_i
  Int n;                  // t / m
  Scalar q;               // chi(1/m^2 n)
  Int ell;                // multiplicative order of q
  Int p0;                 // mn / ell
  char recognized_type;   // 'A' when s = 1, else 'B'
};

/// Recognition on raw stage data; allows a singleton generator set, in
/// which case the stage is an A(n,q).
inline AffineRecognition recognize_affine_data(const RationalSubgroup& G, const SubmonoidM& P,
                                               const MultiplicativeCharacter& chi) {
  if (!G.is_finitely_generated())
    throw error("recognition needs a finitely generated stage group");
  if (P.size() == 0) throw error("recognition needs at least one monoid generator");
  AffineRecognition r;
  r.t = G.cyclic_denominator();
  r.m = 1;
  for (const auto& p : P.primes()) r.m *= p;
  if (mod_floor(r.t, r.m) != 0)
    throw error("inconsistent stage: m = " + r.m.str() + " does not divide t = " + r.t.str());
  r.n = r.t / r.m;
  for (const auto& p : P.primes()) r.m_i.push_back(r.m / p);
  Rational arg = Rational(1) / Rational(r.m * r.m * r.n);
  if (!chi.defined_at(arg))
    throw error("character is undefined at 1/m^2n = " + to_string(arg));
  r.q = chi.evaluate(arg);
  auto ord = root_order(r.q);
  if (!ord) throw error("q = chi(1/m^2n) is not a root of unity; recognition does not apply");
  r.ell = *ord;
  if (mod_floor(r.m * r.n, r.ell) != 0)
    throw error("inconsistent stage: ell does not divide mn");
  r.p0 = r.m * r.n / r.ell;
  if (mod_floor(r.n, r.p0) != 0) throw error("inconsistent stage: p0 does not divide n");
  for (const auto& p : P.primes())
    if (gcd_int(r.p0, p) != 1) throw error("inconsistent stage: gcd(p0, p_i) != 1");
  r.recognized_type = P.size() == 1 ? 'A' : 'B';
  return r;
}

inline AffineRecognition recognize_affine(const HopfInstance& stage) {
  if (stage.family != Family::TypeB) throw error("recognition needs a type-B stage");
  return recognize_affine_data(stage.group, stage.monoid, stage.chi);
}

// ---------------------------------------------------------------------------
// Isomorphism testing (data-level, complete for type B)

struct IsoResult {
  enum class Verdict { Isomorphic, NotIsomorphic, NotComparable };
  Verdict verdict;
  std::string certificate;

  bool isomorphic() const { return verdict == Verdict::Isomorphic; }
};

/// Two type-B instances are isomorphic iff G, the prime set, and chi agree;
/// chi is compared on the generating set {1/p_i^2} + stage-1 generators.
inline IsoResult is_isomorphic(const HopfInstance& B1, const HopfInstance& B2) {
  if (B1.family != B2.family)
    return {IsoResult::Verdict::NotComparable, "different families are not comparable here"};
  if (B1.family != Family::TypeB) {
    if (same_presentation(B1, B2))
      return {IsoResult::Verdict::Isomorphic, "identical presentation data"};
    return {IsoResult::Verdict::NotComparable,
            "only type-B instances have a data-level isomorphism test"};
  }
  if (!(B1.group == B2.group))
    return {IsoResult::Verdict::NotIsomorphic,
            "group differs: " + B1.group.str() + " vs " + B2.group.str()};
  std::vector<Int> p1 = B1.monoid.primes(), p2 = B2.monoid.primes();
  std::sort(p1.begin(), p1.end());
  std::sort(p2.begin(), p2.end());
  if (p1 != p2) return {IsoResult::Verdict::NotIsomorphic, "prime set differs"};
  std::vector<Rational> args;
  for (const auto& p : p1) args.emplace_back(Rational(1) / Rational(p * p));
  args.push_back(B1.group.stage_generator(1));
  args.emplace_back(1);
  for (const auto& a : args) {
    if (B1.chi.evaluate(a) != B2.chi.evaluate(a))
      return {IsoResult::Verdict::NotIsomorphic,
              "chi(" + to_string(a) + ") differs: " + scalar_str(B1.chi.evaluate(a)) + " vs " +
                  scalar_str(B2.chi.evaluate(a))};
  }
  return {IsoResult::Verdict::Isomorphic, ""};
}

}  // namespace hopfq
