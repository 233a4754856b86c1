#include <catch2/catch_amalgamated.hpp>

#include "hopfq/element.hpp"
#include "hopfq/verify.hpp"

#include <random>

using namespace hopfq;

namespace {

InstancePtr golden_b() {
  auto chi = MultiplicativeCharacter::crt(
      {{Int(2), Scalar(-1)}, {Int(3), Scalar::zeta(3)}});
  return make_B(RationalSubgroup::localized(6), SubmonoidM({2, 3}), chi);
}

Element mono(const InstancePtr& h, const MonomialKey& k, Scalar c = Scalar(1)) {
  return Element(h, k, std::move(c));
}

}  // namespace

TEST_CASE("group algebra multiplication is the group law") {
  auto h = make_group_algebra(RationalSubgroup::localized(2));
  Element a = mono(h, MonomialKey::group(Rational(1, 2)));
  Element b = mono(h, MonomialKey::group(Rational(3, 4)));
  CHECK(a * b == mono(h, MonomialKey::group(Rational(5, 4))));
  CHECK(Element::one(h) * a == a);
  CHECK(counit(a) == Scalar(1));
  CHECK(antipode(a) == mono(h, MonomialKey::group(Rational(-1, 2))));
  CHECK(comultiply(a) ==
        TensorElement::pure(h, MonomialKey::group(Rational(1, 2)),
                            MonomialKey::group(Rational(1, 2))));
  CHECK_THROWS_AS(mono(h, MonomialKey::group(Rational(1, 3))), error);
}

TEST_CASE("B family: smash relations from the presentation") {
  auto h = golden_b();
  Element x = mono(h, MonomialKey::smash(1, 0));
  Element y1 = mono(h, MonomialKey::smash(0, Rational(1, 2)));
  Element y2 = mono(h, MonomialKey::smash(0, Rational(1, 3)));
  Element y = mono(h, MonomialKey::smash(0, 1));

  // x^a y_i = chi(a/p_i) y_i x^a
  Rational a(5, 6);
  Element xa = mono(h, MonomialKey::smash(a, 0));
  CHECK(xa * y1 == h->chi.evaluate(a / 2) * (y1 * xa));
  CHECK(xa * y2 == h->chi.evaluate(a / 3) * (y2 * xa));
  // y_i y_j = y_j y_i and y_i^{p_i} = y_j^{p_j} = y
  CHECK(y1 * y2 == y2 * y1);
  CHECK(power(y1, 2) == y);
  CHECK(power(y2, 3) == y);
  // golden coefficient: (x^{1/2} y^{1/3})(x^{1/3} y^{1/2}) = zeta(3)^2 x^{5/6} y^{5/6}
  Element u = mono(h, MonomialKey::smash(Rational(1, 2), Rational(1, 3)));
  Element v = mono(h, MonomialKey::smash(Rational(1, 3), Rational(1, 2)));
  Element expect = mono(h, MonomialKey::smash(Rational(5, 6), Rational(5, 6)),
                        Scalar::zeta(3).pow(2));
  CHECK(u * v == expect);
  CHECK(h->chi.evaluate(Rational(1, 9)).inverse() == Scalar::zeta(3).pow(2));
}

TEST_CASE("B family: coproduct, counit, antipode on generators") {
  auto h = golden_b();
  MonomialKey ky1 = MonomialKey::smash(0, Rational(1, 2));
  MonomialKey kx1 = MonomialKey::smash(Rational(1, 2), 0);
  // Delta(y_i) = y_i (x) 1 + x_i (x) y_i
  TensorElement dy1 = comultiply(mono(h, ky1));
  TensorElement expect(h);
  expect.add_term({ky1, MonomialKey::smash(0, 0)}, Scalar(1));
  expect.add_term({kx1, ky1}, Scalar(1));
  CHECK(dy1 == expect);
  CHECK(counit(mono(h, ky1)) == Scalar(0));
  CHECK(counit(mono(h, MonomialKey::smash(Rational(-1, 6), 0))) == Scalar(1));
  CHECK(counit(Scalar(3) * Element::one(h) + Scalar(2) * mono(h, ky1)) == Scalar(3));
  // S(y_i) = -x_i^{-1} y_i
  CHECK(antipode(mono(h, ky1)) ==
        mono(h, MonomialKey::smash(Rational(-1, 2), Rational(1, 2)), Scalar(-1)));

  // Delta(y_i)^{p_i} = y (x) 1 + x (x) y   (q-binomial collapse)
  TensorElement dy_pow = tensor_power(h, dy1, 2);
  TensorElement dy_expect(h);
  dy_expect.add_term({MonomialKey::smash(0, 1), MonomialKey::smash(0, 0)}, Scalar(1));
  dy_expect.add_term({MonomialKey::smash(1, 0), MonomialKey::smash(0, 1)}, Scalar(1));
  CHECK(dy_pow == dy_expect);
  CHECK(tensor_power(h, comultiply(mono(h, MonomialKey::smash(0, Rational(1, 3)))), 3) ==
        dy_expect);
  // and it matches Delta(y^1) computed through the monoid decomposition
  CHECK(comultiply(mono(h, MonomialKey::smash(0, 1))) == dy_expect);

  // antipode power identity: (-x_i^{-1} y_i)^{p_i} = -y x^{-1}
  for (long p : {2L, 3L}) {
    Element sy = mono(h, MonomialKey::smash(Rational(-1, p), Rational(1, p)), Scalar(-1));
    Element got = power(sy, static_cast<unsigned long>(p));
    // -y^1 x^{-1} normalizes to -x^{-1} y^1 since chi(-1) = 1
    Element expect_pow = mono(h, MonomialKey::smash(-1, 1), Scalar(-1));
    CHECK(got == expect_pow);
  }

  // S^2(y_i) = chi(1/p_i^2)^{-1} y_i (e.g. beta_2^{-1} = -1, beta_3^{-1} = zeta(3)^2)
  Element y1 = mono(h, ky1);
  CHECK(antipode(antipode(y1)) == h->chi.evaluate(Rational(1, 4)).inverse() * y1);
  Element y2 = mono(h, MonomialKey::smash(0, Rational(1, 3)));
  CHECK(antipode(antipode(y2)) == h->chi.evaluate(Rational(1, 9)).inverse() * y2);
}

TEST_CASE("A family: Ore multiplication and structure maps") {
  Scalar q = Scalar::zeta(3);
  auto h = affine_A(2, q);
  Element x = mono(h, MonomialKey::ore(1, 0));
  Element z = mono(h, MonomialKey::ore(0, 1));
  // presentation x z = q z x, i.e. z x = q^{-1} x z
  CHECK(z * x == q.inverse() * (x * z));
  CHECK(x * z == q * (z * x));
  // multiplication table on a small basis: (x^a z^i)(x^b z^j) = q^{-ib} x^{a+b} z^{i+j}
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (unsigned long i = 0; i <= 2; ++i)
        for (unsigned long j = 0; j <= 2; ++j) {
          Element lhs = mono(h, MonomialKey::ore(a, i)) * mono(h, MonomialKey::ore(b, j));
          Element rhs = mono(h, MonomialKey::ore(a + b, i + j),
                             q.pow(-Int(i) * Int(b)));
          CHECK(lhs == rhs);
        }
  // Delta(z) = z (x) 1 + x^2 (x) z; S(z) = -x^{-2} z
  TensorElement dz = comultiply(z);
  TensorElement expect(h);
  expect.add_term({MonomialKey::ore(0, 1), MonomialKey::ore(0, 0)}, Scalar(1));
  expect.add_term({MonomialKey::ore(2, 0), MonomialKey::ore(0, 1)}, Scalar(1));
  CHECK(dz == expect);
  CHECK(antipode(z) == mono(h, MonomialKey::ore(-2, 1), Scalar(-1)));
  CHECK(counit(z) == Scalar(0));
}

TEST_CASE("C family: derivation rewriting") {
  auto h = affine_C(3);  // z x = x z + x^{-1} - x
  Element x = mono(h, MonomialKey::ore(1, 0));
  Element z = mono(h, MonomialKey::ore(0, 1));
  Element expect = mono(h, MonomialKey::ore(1, 1)) +
                   mono(h, MonomialKey::ore(-1, 0)) -
                   mono(h, MonomialKey::ore(1, 0));
  CHECK(z * x == expect);
  CHECK(x * z == mono(h, MonomialKey::ore(1, 1)));
  // e0 = -2: Delta(z) = z (x) 1 + x^{-2} (x) z
  TensorElement dz = comultiply(z);
  TensorElement dexpect(h);
  dexpect.add_term({MonomialKey::ore(0, 1), MonomialKey::ore(0, 0)}, Scalar(1));
  dexpect.add_term({MonomialKey::ore(-2, 0), MonomialKey::ore(0, 1)}, Scalar(1));
  CHECK(dz == dexpect);

  // tau = 0 degenerates to a central z
  auto h0 = make_C(RationalSubgroup::integers(), -2, AdditiveCharacter(Scalar(0)));
  Element z0 = mono(h0, MonomialKey::ore(0, 1));
  Element x0 = mono(h0, MonomialKey::ore(1, 0));
  CHECK(z0 * x0 == x0 * z0);
  // e0 = 0: the derivation vanishes as well
  auto hz = make_C(RationalSubgroup::integers(), 0, AdditiveCharacter(Scalar(1)));
  CHECK(mono(hz, MonomialKey::ore(0, 1)) * mono(hz, MonomialKey::ore(5, 0)) ==
        mono(hz, MonomialKey::ore(5, 1)));
}

TEST_CASE("enveloping algebras: PBW normal form") {
  auto ha = make_enveloping(true);
  auto hn = make_enveloping(false);
  Element xa = mono(ha, MonomialKey::pbw(1, 0));
  Element ya = mono(ha, MonomialKey::pbw(0, 1));
  CHECK(xa * ya == ya * xa);
  // nonabelian: y x = x y - y
  Element xn = mono(hn, MonomialKey::pbw(1, 0));
  Element yn = mono(hn, MonomialKey::pbw(0, 1));
  CHECK(yn * xn == xn * yn - yn);
  // primitives
  TensorElement dx = comultiply(xn);
  TensorElement expect(hn);
  expect.add_term({MonomialKey::pbw(1, 0), MonomialKey::pbw(0, 0)}, Scalar(1));
  expect.add_term({MonomialKey::pbw(0, 0), MonomialKey::pbw(1, 0)}, Scalar(1));
  CHECK(dx == expect);
  CHECK(counit(xn) == Scalar(0));
  CHECK(antipode(xn) == Scalar(-1) * xn);
  // S is an anti-homomorphism: S(xy) = S(y)S(x) = yx
  CHECK(antipode(xn * yn) == yn * xn);
}

TEST_CASE("semidirect group algebra follows the twisted group law") {
  SemidirectGroup g(RationalSubgroup::localized(3), RationalSubgroup::integers());
  auto h = make_group_algebra(g);
  Element a = mono(h, MonomialKey::pair(0, 1));
  Element l = mono(h, MonomialKey::pair(Rational(1, 3), 0));
  // a l a^{-1} = l^{-1}
  Element conj = a * l * antipode(a);
  CHECK(conj == mono(h, MonomialKey::pair(Rational(-1, 3), 0)));
  CHECK(a * antipode(a) == Element::one(h));
}

TEST_CASE("multiplication is associative on seeded random triples") {
  std::vector<InstancePtr> instances = {
      golden_b(),
      affine_A(2, Scalar::zeta(3)),
      affine_C(3),
      make_enveloping(false),
      make_group_algebra(SemidirectGroup(RationalSubgroup::localized(3),
                                         RationalSubgroup::integers())),
  };
  std::mt19937_64 rng(99u);
  for (const auto& h : instances) {
    for (int i = 0; i < 100; ++i) {
      Element a = random_element(h, rng);
      Element b = random_element(h, rng);
      Element c = random_element(h, rng);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("A(n, t) with a generic parameter multiplies exactly") {
  Scalar t = Scalar::t();
  auto h = affine_A(1, t);
  Element x = mono(h, MonomialKey::ore(1, 0));
  Element z = mono(h, MonomialKey::ore(0, 1));
  CHECK(x * z == t * (z * x));
  Element w = power(z * x, 3);
  CHECK(w == mono(h, MonomialKey::ore(3, 3), (t.inverse()).pow(6)));
}

TEST_CASE("instance mismatch and key certification errors") {
  auto h1 = golden_b();
  auto h2 = golden_b();  // same data, different instance object
  Element u = mono(h1, MonomialKey::smash(1, 0));
  Element v = mono(h2, MonomialKey::smash(1, 0));
  CHECK_THROWS_AS(u * v, error);
  CHECK_THROWS_AS(mono(h1, MonomialKey::smash(Rational(1, 5), 0)), error);
  CHECK_THROWS_AS(mono(h1, MonomialKey::smash(0, Rational(1, 6))), error);
  CHECK_THROWS_AS(mono(h1, MonomialKey::group(1)), error);
  // lossless promotion between stage instances
  auto s1 = chain_stage(h1, 1);
  auto s2 = chain_stage(h1, 2);
  for (const auto& g : stage_generators(s1)) CHECK_NOTHROW(promote(g, s2));
}

TEST_CASE("delta is independent of the monoid decomposition") {
  auto h = golden_b();
  // y^{5/6}: canonical decomposition {2->1, 3->1}; alternatives shift by
  // p_i units between the generators, e.g. 5/6 = 3*(1/2) + ... impossible
  // here, so use y^{3/2} = 3*(1/2) = 1*(1/2) + ... check via y^3:
  // 3 = 6*(1/2) = 2*(1/2) + 6*(1/3) etc.
  MonomialKey k = MonomialKey::smash(0, 3);
  std::map<Int, Int> alt1{{Int(2), Int(6)}};
  std::map<Int, Int> alt2{{Int(2), Int(2)}, {Int(3), Int(6)}};
  std::map<Int, Int> alt3{{Int(3), Int(9)}};
  TensorElement base = detail::b_comul_with_decomposition(h, k, alt1);
  CHECK(base == detail::b_comul_with_decomposition(h, k, alt2));
  CHECK(base == detail::b_comul_with_decomposition(h, k, alt3));
  CHECK(base == comultiply(Element(h, k)));
}

TEST_CASE("tampered character breaks coproduct multiplicativity") {
  // chi(1/4) = i is not a primitive square root of unity; the q-binomial
  // collapse fails and Delta stops being an algebra map across the
  // relation y_1^2 = y_2^3.
  auto h = std::make_shared<HopfInstance>();
  h->family = Family::TypeB;
  h->group = RationalSubgroup::localized(6);
  h->monoid = SubmonoidM({2, 3});
  h->chi = MultiplicativeCharacter::cyclic(Rational(1, 36), Scalar::zeta(4));
  InstancePtr hh = h;
  Element y2 = Element(hh, MonomialKey::smash(0, Rational(1, 3)));
  CHECK(comultiply(power(y2, 3)) != tensor_power(hh, comultiply(y2), 3));
  Report r = verify_axioms(hh, 40, 5);
  CHECK(!r.pass());
}
