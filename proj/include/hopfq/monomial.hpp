#pragma once

// Normal-form monomial keys, one flavor per family: group exponents,
// pairs for Q^2 and semidirect groups, Ore monomials x^a z^n, smash
// monomials x^a y^b, and PBW monomials x^i y^j. Keys are totally ordered
// so sums have a canonical term order.

#include "hopfq/rational.hpp"

#include <compare>
#include <sstream>

namespace hopfq {

struct MonomialKey {
  enum class Tag : unsigned char { Group, Pair, Ore, B, PBW };

  Tag tag = Tag::Group;
  Rational a;        // Group: exponent; Pair: first coord; Ore/B: x-exponent
  Rational b;        // Pair: second coord; B: y-exponent (a monoid member)
  unsigned long n = 0;  // Ore: z-degree; PBW: x-degree
  unsigned long m = 0;  // PBW: y-degree

  static MonomialKey group(Rational g) {
    MonomialKey k;
    k.tag = Tag::Group;
    k.a = std::move(g);
    return k;
  }
  static MonomialKey pair(Rational x, Rational y) {
    MonomialKey k;
    k.tag = Tag::Pair;
    k.a = std::move(x);
    k.b = std::move(y);
    return k;
  }
  static MonomialKey ore(Rational x, unsigned long zdeg) {
    MonomialKey k;
    k.tag = Tag::Ore;
    k.a = std::move(x);
    k.n = zdeg;
    return k;
  }
  static MonomialKey smash(Rational x, Rational y) {
    MonomialKey k;
    k.tag = Tag::B;
    k.a = std::move(x);
    k.b = std::move(y);
    return k;
  }
  static MonomialKey pbw(unsigned long i, unsigned long j) {
    MonomialKey k;
    k.tag = Tag::PBW;
    k.n = i;
    k.m = j;
    return k;
  }

  bool is_identity() const { return a == 0 && b == 0 && n == 0 && m == 0; }

  friend bool operator==(const MonomialKey& x, const MonomialKey& y) {
    return x.tag == y.tag && x.a == y.a && x.b == y.b && x.n == y.n && x.m == y.m;
  }
  friend bool operator<(const MonomialKey& x, const MonomialKey& y) {
    if (x.tag != y.tag) return x.tag < y.tag;
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.n != y.n) return x.n < y.n;
    return x.m < y.m;
  }

  std::string str() const {
    auto exp_str = [](const Rational& e) {
      std::string s = to_string(e);
      bool plain = is_integer(e) && e >= 0;
      return plain ? s : "(" + s + ")";
    };
    std::ostringstream os;
    switch (tag) {
      case Tag::Group:
        if (a == 0) return "1";
        if (a == 1) return "x";
        return "x^" + exp_str(a);
      case Tag::Pair:
        return "x^(" + to_string(a) + ";" + to_string(b) + ")";
      case Tag::Ore: {
        if (a == 0 && n == 0) return "1";
        bool star = false;
        if (a != 0) {
          os << (a == 1 ? "x" : "x^" + exp_str(a));
          star = true;
        }
        if (n > 0) {
          if (star) os << "*";
          os << (n == 1 ? "z" : "z^" + std::to_string(n));
        }
        return os.str();
      }
      case Tag::B: {
        if (a == 0 && b == 0) return "1";
        bool star = false;
        if (a != 0) {
          os << (a == 1 ? "x" : "x^" + exp_str(a));
          star = true;
        }
        if (b != 0) {
          if (star) os << "*";
          os << (b == 1 ? "y" : "y^" + exp_str(b));
        }
        return os.str();
      }
      case Tag::PBW: {
        if (n == 0 && m == 0) return "1";
        bool star = false;
        if (n > 0) {
          os << (n == 1 ? "x" : "x^" + std::to_string(n));
          star = true;
        }
        if (m > 0) {
          if (star) os << "*";
          os << (m == 1 ? "y" : "y^" + std::to_string(m));
        }
        return os.str();
      }
    }
    return "?";
  }
};

}  // namespace hopfq
