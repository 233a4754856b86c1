#include <catch2/catch_amalgamated.hpp>

#include "hopfq/character.hpp"
#include "hopfq/groups.hpp"

#include <random>

using namespace hopfq;

namespace {

// Exhaustive search for c_i >= 0 with sum c_i/p_i = b, used as the
// independent oracle for SubmonoidM::decompose.
bool brute_force_member(const std::vector<Int>& primes, const Rational& b) {
  // bound: c_i / p_i <= b, so c_i <= b * p_i
  std::vector<Int> caps;
  for (const auto& p : primes) caps.push_back(floor_rational(b * Rational(p)));
  std::vector<Int> c(primes.size(), 0);
  while (true) {
    Rational total = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      total += Rational(c[i]) / Rational(primes[i]);
    if (total == b) return true;
    std::size_t i = 0;
    while (i < c.size()) {
      if (c[i] < caps[i]) {
        ++c[i];
        break;
      }
      c[i] = 0;
      ++i;
    }
    if (i == c.size()) return false;
  }
}

}  // namespace

TEST_CASE("steinitz membership") {
  RationalSubgroup z_half = RationalSubgroup::localized(2);
  CHECK(z_half.contains(Rational(3, 8)));
  CHECK(!z_half.contains(Rational(1, 3)));
  CHECK(z_half.contains(0));
  CHECK(z_half.contains(-7));
  RationalSubgroup z = RationalSubgroup::integers();
  CHECK(z.contains(5));
  CHECK(!z.contains(Rational(1, 2)));
  CHECK(RationalSubgroup::localized(6).contains(Rational(5, 216)));
  CHECK(!RationalSubgroup::cyclic(6).contains(Rational(1, 36)));
  CHECK(RationalSubgroup::cyclic(6).contains(Rational(5, 6)));
}

TEST_CASE("stage groups ascend and exhaust") {
  RationalSubgroup g = RationalSubgroup::localized(6);
  CHECK(g.stage_generator(1) == Rational(1, 6));
  CHECK(g.stage_generator(2) == Rational(1, 36));
  RationalSubgroup z = RationalSubgroup::integers();
  CHECK(z.stage_generator(1) == 1);
  CHECK(z.stage_generator(9) == 1);
  RationalSubgroup quarter = RationalSubgroup::cyclic(4);  // 2 -> 2
  CHECK(quarter.stage_generator(5) == Rational(1, 4));
  // ascent: d_n | d_{n+1}
  for (unsigned n = 1; n < 6; ++n) {
    CHECK(mod_floor(g.stage_denominator(n + 1), g.stage_denominator(n)) == 0);
  }
  // every member lies in some stage
  Rational member(7, 216);  // 216 = 6^3
  CHECK(g.contains(member));
  CHECK(*g.stage_of(member) == 3);
  CHECK(RationalSubgroup::cyclic(6).stage_subgroup(1) == RationalSubgroup::cyclic(6));
}

TEST_CASE("monoid decomposition agrees with brute force") {
  SubmonoidM m({2, 3});
  auto d = m.decompose(Rational(5, 6));
  REQUIRE(d.has_value());
  CHECK((*d)[2] == 1);
  CHECK((*d)[3] == 1);
  CHECK(!m.decompose(Rational(1, 6)).has_value());
  CHECK(m.decompose(0)->empty());
  CHECK_THROWS_AS(m.decompose(Rational(-1, 2)), error);

  // oracle equivalence on every b with denominator <= 60
  std::vector<Int> primes{2, 3};
  for (int den = 1; den <= 60; ++den) {
    for (int num = 0; num <= 4 * den; ++num) {
      Rational b(num, den);
      auto got = m.decompose(b);
      bool expect = brute_force_member(primes, b);
      CHECK(got.has_value() == expect);
      if (got) {
        Rational total = 0;
        for (const auto& [p, c] : *got) {
          CHECK(c >= 0);
          total += Rational(c) / Rational(p);
        }
        CHECK(total == b);
      }
    }
  }

  // composite pairwise-coprime denominators work too
  SubmonoidM m49({4, 9});
  CHECK(m49.contains(Rational(1, 4)));
  CHECK(m49.contains(Rational(13, 36)));
  CHECK(!m49.contains(Rational(1, 36)));
  CHECK_THROWS_AS(SubmonoidM({2, 4}), error);
}

TEST_CASE("crt character evaluation and homomorphism law") {
  auto chi = MultiplicativeCharacter::crt(
      {{Int(2), Scalar(-1)}, {Int(3), Scalar::zeta(3)}});
  CHECK(chi.evaluate(1) == Scalar(1));
  CHECK(chi.evaluate(Rational(1, 6)) == Scalar(1));
  CHECK(chi.evaluate(Rational(1, 4)) == Scalar(-1));
  CHECK(chi.evaluate(Rational(1, 9)) == Scalar::zeta(3));
  // golden: chi(1/36) = -zeta(3), from 9c2 + 4c3 = 1 mod 36 -> c2 = 1, c3 = 7
  CHECK(chi.evaluate(Rational(1, 36)) == -Scalar::zeta(3));
  CHECK(chi.evaluate(Rational(1, 36)).pow(4) == chi.evaluate(Rational(1, 9)));
  CHECK_THROWS_AS(chi.evaluate(Rational(1, 72)), error);
  CHECK_THROWS_AS(
      MultiplicativeCharacter::crt({{Int(3), Scalar::zeta(6)}}), error);

  std::mt19937_64 rng(11u);
  for (int i = 0; i < 200; ++i) {
    Rational a(static_cast<long>(rng() % 145) - 72, 36);
    Rational b(static_cast<long>(rng() % 145) - 72, 36);
    CHECK(chi.evaluate(a + b) == chi.evaluate(a) * chi.evaluate(b));
  }
}

TEST_CASE("cyclic and trivial characters") {
  Scalar q = Scalar::zeta(5);
  auto chi = MultiplicativeCharacter::cyclic(1, q.inverse());  // i -> q^{-i}
  CHECK(chi.evaluate(3) == q.pow(-3));
  CHECK(chi.evaluate(-2) == q.pow(2));
  CHECK_THROWS_AS(chi.evaluate(Rational(1, 2)), error);
  auto fine = MultiplicativeCharacter::cyclic(Rational(1, 36), -Scalar::zeta(3));
  CHECK(fine.evaluate(Rational(1, 6)) == (-Scalar::zeta(3)).pow(6));
  auto triv = MultiplicativeCharacter::trivial();
  CHECK(triv.evaluate(Rational(22, 7)) == Scalar(1));

  std::mt19937_64 rng(13u);
  for (int i = 0; i < 200; ++i) {
    Rational a(static_cast<long>(rng() % 41) - 20, 36);
    Rational b(static_cast<long>(rng() % 41) - 20, 36);
    CHECK(fine.evaluate(a + b) == fine.evaluate(a) * fine.evaluate(b));
  }
}

TEST_CASE("additive characters are multiplication by lambda") {
  AdditiveCharacter tau(Scalar(Rational(3, 2)));
  CHECK(tau.evaluate(Rational(2, 3)) == Scalar(1));
  CHECK(tau.evaluate(0) == Scalar(0));
  AdditiveCharacter i1{Scalar(1)};
  CHECK(i1.evaluate(Rational(-5)) == Scalar(-5));
}

TEST_CASE("semidirect product multiplication and axioms") {
  SemidirectGroup g(RationalSubgroup::localized(3), RationalSubgroup::localized(3));
  CHECK(SemidirectGroup::twist(2) == 1);
  CHECK(SemidirectGroup::twist(Rational(1, 3)) == -1);
  CHECK(SemidirectGroup::twist(Rational(2, 3)) == 1);
  // golden: (1/3, 2)(1/5, 1/3) = (8/15, 7/3) needs 5 in the left group
  SemidirectGroup g2(RationalSubgroup::localized(15), RationalSubgroup::localized(3));
  auto prod = g2.multiply({Rational(1, 3), 2}, {Rational(1, 5), Rational(1, 3)});
  CHECK(prod.first == Rational(8, 15));
  CHECK(prod.second == Rational(7, 3));
  // (0,1)(l',0) = (-l', 1)
  auto flip = g.multiply({0, 1}, {Rational(2, 3), 0});
  CHECK(flip.first == Rational(-2, 3));
  CHECK(flip.second == 1);
  // L is abelian normal
  auto ab = g.multiply({Rational(1, 3), 0}, {Rational(1, 9), 0});
  CHECK(ab.first == Rational(4, 9));

  CHECK_THROWS_AS(SemidirectGroup(RationalSubgroup::integers(),
                                  RationalSubgroup::localized(2)),
                  error);

  std::mt19937_64 rng(17u);
  auto rand_elem = [&]() -> SemidirectGroup::Element {
    Rational l(static_cast<long>(rng() % 19) - 9, 9);
    Rational r(static_cast<long>(rng() % 19) - 9, 3);
    return {l, r};
  };
  for (int i = 0; i < 200; ++i) {
    auto a = rand_elem(), b = rand_elem(), c = rand_elem();
    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    CHECK(g.multiply(a, g.inverse(a)) == SemidirectGroup::identity());
    CHECK(g.multiply(g.inverse(a), a) == SemidirectGroup::identity());
    // (0,1)(l,0)(0,1)^{-1} = (-l, 0)
    auto conj = g.multiply(g.multiply({0, 1}, {a.first, 0}), g.inverse({0, 1}));
    CHECK(conj == SemidirectGroup::Element{-a.first, 0});
  }
}

TEST_CASE("rank-two lattice towers") {
  using L = RankTwoGroup::Lattice;
  RankTwoGroup g({L{1, 0, 0, 1}, L{Rational(1, 2), 0, 0, Rational(1, 3)}});
  CHECK(g.stage_count() == 2);
  CHECK(g.contains(Rational(1, 2), Rational(2, 3)));
  CHECK(!g.contains(Rational(1, 4), 0));
  CHECK(g.stage(1).contains(3, -2));
  CHECK(!g.stage(1).contains(Rational(1, 2), 0));
  // not containing Z^2 is rejected
  CHECK_THROWS_AS(RankTwoGroup({L{2, 0, 0, 1}}), error);
  // non-ascending towers are rejected
  CHECK_THROWS_AS(RankTwoGroup({L{Rational(1, 2), 0, 0, 1}, L{1, 0, 0, 1}}), error);
}

TEST_CASE("validate_bdata checks the construction data") {
  auto chi = MultiplicativeCharacter::crt(
      {{Int(2), Scalar(-1)}, {Int(3), Scalar::zeta(3)}});
  auto ok = validate_bdata(RationalSubgroup::localized(6), SubmonoidM({2, 3}), chi);
  CHECK(ok.pass);
  auto ok2 = validate_bdata(RationalSubgroup::cyclic(6), SubmonoidM({2, 3}), chi);
  CHECK(ok2.pass);

  auto one_gen = validate_bdata(RationalSubgroup::localized(2), SubmonoidM({2}), chi);
  CHECK(!one_gen.pass);
  CHECK(one_gen.first_violation.find("A_G(e,chi)") != std::string::npos);

  auto missing = validate_bdata(RationalSubgroup::localized(2), SubmonoidM({2, 3}), chi);
  CHECK(!missing.pass);
  CHECK(missing.first_violation.find("1/3") != std::string::npos);

  auto wrong_root = MultiplicativeCharacter::crt(
      {{Int(2), Scalar(-1)}, {Int(5), Scalar::zeta(5)}});
  auto bad = validate_bdata(RationalSubgroup::localized(6), SubmonoidM({2, 3}), wrong_root);
  CHECK(!bad.pass);
}
