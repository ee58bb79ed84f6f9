#include <random>

#include "doctest.h"
#include "tango/ideals.hpp"
#include "tango/ring.hpp"

using namespace tango;

namespace {

RingPtr gf2x(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  return GradedRing::polynomial_ring(2, v);
}

RingPtr quadric_ring() {
  std::vector<std::string> v;
  for (int i = 0; i < 7; ++i) v.push_back("z" + std::to_string(i));
  RingPtr amb = GradedRing::polynomial_ring(2, v);
  return amb->quotient_by(amb->parse("z0^2+z1*z2+z3*z4+z5*z6"));
}

Polynomial random_poly(const RingPtr& R, int deg, std::mt19937& rng, int nterms = 4) {
  Polynomial p = R->zero();
  std::uniform_int_distribution<int> dd(0, deg), dv(0, R->nvars() - 1),
      dc(1, int(R->field.p) - 1);
  for (int k = 0; k < nterms; ++k) {
    int d = dd(rng);
    Mono m;
    for (int i = 0; i < d; ++i) {
      int v = dv(rng);
      m.set(v, m.exponent(v) + 1);
    }
    p = p + R->monomial(m, unsigned(dc(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("monomial packing and grevlex") {
  Mono a = Mono::from_exponents(std::vector<int>{2, 0, 1});
  Mono b = Mono::from_exponents(std::vector<int>{1, 1, 1});
  CHECK(a.degree() == 3);
  CHECK((a * b).degree() == 6);
  CHECK((a * b).exponent(0) == 3);
  CHECK(b.divides(a * b));
  CHECK(!a.divides(b));
  CHECK(b.quotient_into(a * b) == a);
  // grevlex on x,y,z: x^2 > xy > y^2 > xz > yz > z^2
  auto m = [&](int i, int j, int k) {
    return Mono::from_exponents(std::vector<int>{i, j, k});
  };
  std::vector<Mono> expect = {m(2, 0, 0), m(1, 1, 0), m(0, 2, 0),
                              m(1, 0, 1), m(0, 1, 1), m(0, 0, 2)};
  std::vector<Mono> got = monomials_of_degree(3, 2);
  CHECK(got == expect);
}

TEST_CASE("monomial order axioms on random triples") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(0, 5);
  for (MonomialOrder::Kind kind :
       {MonomialOrder::Kind::Grevlex, MonomialOrder::Kind::Elimination}) {
    MonomialOrder ord{kind, 2, {}};
    for (int it = 0; it < 500; ++it) {
      std::vector<int> ea(4), eb(4), ec(4);
      for (int i = 0; i < 4; ++i) {
        ea[i] = d(rng);
        eb[i] = d(rng);
        ec[i] = d(rng);
      }
      Mono a = Mono::from_exponents(ea), b = Mono::from_exponents(eb),
           c = Mono::from_exponents(ec);
      // totality + antisymmetry
      auto ab = ord.compare(a, b);
      CHECK((ab == std::strong_ordering::equal) == (a == b));
      if (ab == std::strong_ordering::greater)
        CHECK(ord.compare(b, a) == std::strong_ordering::less);
      // transitivity
      if (ord.compare(a, b) >= 0 && ord.compare(b, c) >= 0)
        CHECK(ord.compare(a, c) >= 0);
      // multiplicative
      CHECK(ord.compare(a * c, b * c) == ab);
      // well-founded: 1 is minimal
      if (!(a == Mono::one())) CHECK(ord.compare(a, Mono::one()) > 0);
    }
  }
}

TEST_CASE("ring arithmetic basics") {
  RingPtr R = gf2x(7);
  // (z0+z1)^2 = z0^2 + z1^2 over GF(2)
  Polynomial p = R->parse("(x0+x1)^2");
  CHECK(p == R->parse("x0^2+x1^2"));
  // frobenius squares a 3-term quadric
  CHECK(R->parse("(x0*x1+x2*x3+x4*x5)^2") ==
        R->parse("x0^2*x1^2+x2^2*x3^2+x4^2*x5^2"));

  RingPtr Q = quadric_ring();
  CHECK((Q->parse("z0^2+z1*z2+z3*z4+z5*z6")).is_zero());
  CHECK(Q->parse("z0^2") == Q->parse("z1*z2+z3*z4+z5*z6"));

  // mixed-ring operands rejected
  CHECK_THROWS(void(R->parse("x0") + gf2x(7)->parse("x0")));
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(7);
  for (unsigned p : {2u, 3u}) {
    RingPtr R = GradedRing::polynomial_ring(p, {"a", "b", "c"});
    for (int it = 0; it < 40; ++it) {
      Polynomial x = random_poly(R, 3, rng), y = random_poly(R, 3, rng),
                 z = random_poly(R, 3, rng);
      CHECK((x + y) + z == x + (y + z));
      CHECK(x + y == y + x);
      CHECK(x * (y * z) == (x * y) * z);
      CHECK(x * (y + z) == x * y + x * z);
    }
  }
}

TEST_CASE("quotient ring: piece dims of S(Q5)") {
  RingPtr Q = quadric_ring();
  CHECK(Q->piece_dim(1) == 7);
  CHECK(Q->piece_dim(2) == 27);
  CHECK(int(Q->piece_basis(2).size()) == 27);
}

TEST_CASE("characteristic 2 frobenius squares have even exponents") {
  std::mt19937 rng(99);
  RingPtr R = gf2x(4);
  for (int it = 0; it < 30; ++it) {
    Polynomial p = random_poly(R, 3, rng, 5);
    Polynomial sq = p * p;
    for (const Term& t : sq.terms())
      for (int v = 0; v < 4; ++v) CHECK(t.m.exponent(v) % 2 == 0);
  }
}

TEST_CASE("ring maps: frobenius, tango cover, projection") {
  RingPtr P5 = gf2x(6);
  RingPtr Q5 = quadric_ring();

  RingMap f{Q5, P5, {}, 2};
  f.images.push_back(P5->parse("x0*x1+x2*x3+x4*x5"));
  for (int i = 0; i < 6; ++i)
    f.images.push_back(P5->parse("x" + std::to_string(i) + "^2"));
  CHECK(f.validate().first);

  // phi# on z1 (z_i -> z_i^2)
  std::vector<Polynomial> sq;
  for (int i = 0; i < 7; ++i) sq.push_back(Q5->parse("z" + std::to_string(i) + "^2"));
  RingMap phiQ{Q5, Q5, sq, 2};
  CHECK(phiQ.validate().first);
  CHECK(phiQ.apply(Q5->parse("z1")) == Q5->parse("z1^2"));

  // identity map
  std::vector<Polynomial> idv;
  for (int i = 0; i < 6; ++i) idv.push_back(P5->variable(i));
  RingMap idm{P5, P5, idv, 1};
  CHECK(idm.validate().first);
  std::mt19937 rng(3);
  Polynomial r = random_poly(P5, 3, rng);
  CHECK(idm.apply(r) == r);

  // pi#: x_i -> z_{i+1}, scale 1
  std::vector<Polynomial> pim;
  for (int i = 0; i < 6; ++i) pim.push_back(Q5->variable(i + 1));
  RingMap pi{P5, Q5, pim, 1};
  CHECK(pi.validate().first);

  // the same cover over GF(3) is not well defined
  RingPtr P5_3 = GradedRing::polynomial_ring(3, P5->var_names);
  RingPtr amb7_3 = GradedRing::polynomial_ring(3, Q5->var_names);
  RingPtr Q5_3 = amb7_3->quotient_by(amb7_3->parse("z0^2+z1*z2+z3*z4+z5*z6"));
  RingMap f3{Q5_3, P5_3, {}, 2};
  f3.images.push_back(P5_3->parse("x0*x1+x2*x3+x4*x5"));
  for (int i = 0; i < 6; ++i)
    f3.images.push_back(P5_3->parse("x" + std::to_string(i) + "^2"));
  CHECK(!f3.validate().first);

  // ring map is a homomorphism on random pairs
  for (int it = 0; it < 20; ++it) {
    Polynomial a = random_poly(Q5, 2, rng), b = random_poly(Q5, 2, rng);
    CHECK(f.apply(a * b) == f.apply(a) * f.apply(b));
    CHECK(f.apply(a + b) == f.apply(a) + f.apply(b));
  }

  // f# ∘ pi# = phi# on every variable of S(P5): the cover factors frobenius
  for (int i = 0; i < 6; ++i) {
    Polynomial via = f.apply(pi.apply(P5->variable(i)));
    CHECK(via == P5->parse("x" + std::to_string(i) + "^2"));
  }
}
