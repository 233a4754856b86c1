#pragma once

// The groups and monoids that parameterize every family: subgroups of Q
// containing Z given by Steinitz denominator data, subgroups of Q^2 as
// ascending lattice towers, semidirect products L x| R, and the additive
// submonoid M = sum Z+ (1/p_i).

#include "hopfq/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace hopfq {

constexpr unsigned kOmega = std::numeric_limits<unsigned>::max();

/// Subgroup of (Q,+) containing Z: for each prime p, the exponent cap on
/// p-power denominators (omega = unbounded). G = { a/b : v_p(b) <= cap_p }.
class RationalSubgroup {
 public:
  RationalSubgroup() = default;
  explicit RationalSubgroup(std::map<Int, unsigned> steinitz) : data_(std::move(steinitz)) {
    for (auto it = data_.begin(); it != data_.end();) {
      if (!is_prime(it->first)) throw error("steinitz key " + it->first.str() + " is not prime");
      if (it->second == 0)
        it = data_.erase(it);
      else
        ++it;
    }
  }

  static RationalSubgroup integers() { return RationalSubgroup(); }
  /// Z[1/n]: every prime of n gets exponent omega.
  static RationalSubgroup localized(const Int& n) {
    std::map<Int, unsigned> m;
    for (const auto& [p, e] : factorize(n)) m[p] = kOmega;
    return RationalSubgroup(std::move(m));
  }
  /// Z * (1/n): the cyclic group generated by 1/n.
  static RationalSubgroup cyclic(const Int& n) {
    std::map<Int, unsigned> m;
    for (const auto& [p, e] : factorize(n)) m[p] = e;
    return RationalSubgroup(std::move(m));
  }

  const std::map<Int, unsigned>& steinitz() const { return data_; }

  bool contains(const Rational& a) const {
    for (const auto& [p, e] : factorize(den(a))) {
      auto it = data_.find(p);
      if (it == data_.end() || (it->second != kOmega && e > it->second)) return false;
    }
    return true;
  }

  bool contains_group(const RationalSubgroup& other) const {
    for (const auto& [p, e] : other.data_) {
      auto it = data_.find(p);
      if (it == data_.end()) return false;
      if (it->second != kOmega && (e == kOmega || e > it->second)) return false;
    }
    return true;
  }

  /// True iff finitely generated (equivalently cyclic): no omega exponents.
  bool is_finitely_generated() const {
    for (const auto& [p, e] : data_)
      if (e == kOmega) return false;
    return true;
  }

  /// For f.g. groups, the denominator d with G = Z * (1/d).
  Int cyclic_denominator() const {
    if (!is_finitely_generated()) throw error("group is not finitely generated");
    Int d = 1;
    for (const auto& [p, e] : data_) d *= pow_int(p, e);
    return d;
  }

  /// Stage n is the cyclic subgroup Z * (1/d_n), d_n = prod p^min(e_p, n).
  /// Stages ascend and their union exhausts the group.
  Int stage_denominator(unsigned n) const {
    Int d = 1;
    for (const auto& [p, e] : data_) d *= pow_int(p, std::min(e, n));
    return d;
  }
  Rational stage_generator(unsigned n) const { return Rational(1) / Rational(stage_denominator(n)); }

  /// The f.g. subgroup corresponding to stage n.
  RationalSubgroup stage_subgroup(unsigned n) const {
    std::map<Int, unsigned> m;
    for (const auto& [p, e] : data_) m[p] = std::min(e, n);
    return RationalSubgroup(std::move(m));
  }

  /// Smallest stage containing a, if any.
  std::optional<unsigned> stage_of(const Rational& a) const {
    if (!contains(a)) return std::nullopt;
    unsigned s = 1;
    for (const auto& [p, e] : factorize(den(a))) s = std::max(s, e);
    return s;
  }

  friend bool operator==(const RationalSubgroup& a, const RationalSubgroup& b) {
    return a.data_ == b.data_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "Z";
    for (const auto& [p, e] : data_) {
      os << "[" << p << "^" << (e == kOmega ? std::string("inf") : std::to_string(e)) << "]";
    }
    return os.str();
  }

 private:
  std::map<Int, unsigned> data_;  // prime -> exponent cap; absent means 0
};

/// Subgroup of Q^2 containing Z^2, as an ascending tower of rank-2 lattices,
/// each given by two generating rows. Membership is decided per stage by
/// solving the 2x2 rational system for integer coordinates.
class RankTwoGroup {
 public:
  struct Lattice {
    Rational a11, a12, a21, a22;  // rows (a11,a12), (a21,a22)

    std::optional<std::pair<Rational, Rational>> coordinates(const Rational& x,
                                                             const Rational& y) const {
      Rational det = a11 * a22 - a12 * a21;
      if (det == 0) throw error("rank-two stage matrix is singular");
      // solve c1*(a11,a12) + c2*(a21,a22) = (x,y)
      Rational c1 = (x * a22 - y * a21) / det;
      Rational c2 = (a11 * y - a12 * x) / det;
      return std::make_pair(c1, c2);
    }
    bool contains(const Rational& x, const Rational& y) const {
      auto c = coordinates(x, y);
      return is_integer(c->first) && is_integer(c->second);
    }
  };

  explicit RankTwoGroup(std::vector<Lattice> stages) : stages_(std::move(stages)) {
    if (stages_.empty()) throw error("rank-two group needs at least one stage");
    for (std::size_t i = 0; i < stages_.size(); ++i) {
      if (!stages_[i].contains(1, 0) || !stages_[i].contains(0, 1))
        throw error("rank-two stage " + std::to_string(i + 1) + " does not contain Z^2");
      if (i + 1 < stages_.size()) {
        const auto& next = stages_[i + 1];
        if (!next.contains(stages_[i].a11, stages_[i].a12) ||
            !next.contains(stages_[i].a21, stages_[i].a22))
          throw error("rank-two stages are not ascending at stage " + std::to_string(i + 1));
      }
    }
  }

  std::size_t stage_count() const { return stages_.size(); }
  const Lattice& stage(std::size_t i) const { return stages_.at(i - 1); }

  bool contains(const Rational& x, const Rational& y) const {
    return stages_.back().contains(x, y);
  }

  friend bool operator==(const RankTwoGroup& a, const RankTwoGroup& b) {
    if (a.stages_.size() != b.stages_.size()) return false;
    for (std::size_t i = 0; i < a.stages_.size(); ++i) {
      const auto& x = a.stages_[i];
      const auto& y = b.stages_[i];
      if (x.a11 != y.a11 || x.a12 != y.a12 || x.a21 != y.a21 || x.a22 != y.a22) return false;
    }
    return true;
  }

 private:
  std::vector<Lattice> stages_;
};

/// G = L x|_phi R with L, R subgroups of Q, R inside Z_(2) (odd denominators)
/// and phi(r) = +1 exactly when r lies in 2 Z_(2).
class SemidirectGroup {
 public:
  using Element = std::pair<Rational, Rational>;  // (l, r)

  SemidirectGroup() = default;
  SemidirectGroup(RationalSubgroup left, RationalSubgroup right)
      : left_(std::move(left)), right_(std::move(right)) {
    if (right_.steinitz().count(2))
      throw error("right factor must lie in Z_(2): odd denominators only");
  }

  const RationalSubgroup& left() const { return left_; }
  const RationalSubgroup& right() const { return right_; }

  bool contains(const Element& g) const {
    return left_.contains(g.first) && right_.contains(g.second);
  }

  /// phi(r): +1 if r in 2 Z_(2) (even numerator over an odd denominator).
  static int twist(const Rational& r) { return mod_floor(num(r), 2) == 0 ? 1 : -1; }

  static Element identity() { return {Rational(0), Rational(0)}; }

  Element multiply(const Element& u, const Element& v) const {
    if (!contains(u) || !contains(v)) throw error("semidirect element outside the group");
    Rational l = twist(u.second) == 1 ? Rational(u.first + v.first)
                                      : Rational(u.first - v.first);
    return {l, u.second + v.second};
  }

  Element inverse(const Element& u) const {
    // phi(-r) = phi(r), so (l,r)^{-1} = (-phi(r) l, -r)
    Rational l = twist(u.second) == 1 ? Rational(-u.first) : u.first;
    return {l, -u.second};
  }

  friend bool operator==(const SemidirectGroup& a, const SemidirectGroup& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  RationalSubgroup left_, right_;
};

/// The additive submonoid M = sum_i Z+ (1/p_i) for pairwise coprime p_i >= 2.
/// A staged prefix view supports directed-union instances.
class SubmonoidM {
 public:
  SubmonoidM() = default;
  explicit SubmonoidM(std::vector<Int> primes) : primes_(std::move(primes)) {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (primes_[i] < 2) throw error("monoid generator 1/p needs p >= 2");
      for (std::size_t j = i + 1; j < primes_.size(); ++j)
        if (gcd_int(primes_[i], primes_[j]) != 1)
          throw error("monoid denominators are not pairwise coprime: " + primes_[i].str() +
                      ", " + primes_[j].str());
    }
  }

  const std::vector<Int>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

  SubmonoidM prefix(std::size_t count) const {
    std::vector<Int> p(primes_.begin(), primes_.begin() + std::min(count, primes_.size()));
    return SubmonoidM(std::move(p));
  }

  /// Decompose b = sum c_i / p_i with c_i in Z+, or report non-membership.
  /// Residues mod p_i pin each c_i up to multiples of p_i; the leftover
  /// integer part lands on the first generator.
  std::optional<std::map<Int, Int>> decompose(const Rational& b) const {
    if (b < 0) throw error("monoid membership needs b >= 0");
    std::map<Int, Int> out;
    if (b == 0) return out;
    if (primes_.empty()) return std::nullopt;
    Int m = 1;
    for (const auto& p : primes_) m *= p;
    if (mod_floor(m, den(b)) != 0) return std::nullopt;
    Int u = num(b) * (m / den(b));  // b = u/m
    Int acc = 0;
    for (const auto& p : primes_) {
      Int mi = m / p;
      Int ci = mod_floor(u * mod_inverse(mi, p), p);
      if (ci != 0) out[p] = ci;
      acc += ci * mi;
    }
    Int rem = u - acc;  // divisible by m exactly
    if (mod_floor(rem, m) != 0) throw error("monoid decomposition internal error");
    Int extra = rem / m;
    if (extra < 0) return std::nullopt;
    if (extra > 0) out[primes_[0]] += extra * primes_[0];
    return out;
  }

  bool contains(const Rational& b) const { return decompose(b).has_value(); }

  friend bool operator==(const SubmonoidM& a, const SubmonoidM& b) {
    return a.primes_ == b.primes_;
  }

 private:
  std::vector<Int> primes_;
};

}  // namespace hopfq
