#include <unordered_map>
#include <random>

#include "doctest.h"
#include "tango/ideals.hpp"
#include "tango/linalg.hpp"

using namespace tango;

namespace {

RingPtr gf2(std::vector<std::string> v) { return GradedRing::polynomial_ring(2, v); }

RingPtr quadric_ring() {
  std::vector<std::string> v;
  for (int i = 0; i < 7; ++i) v.push_back("z" + std::to_string(i));
  RingPtr amb = GradedRing::polynomial_ring(2, v);
  return amb->quotient_by(amb->parse("z0^2+z1*z2+z3*z4+z5*z6"));
}

// Independent dimension oracle: dim of I_d from the rank of the coefficient
// matrix of { m*g : g generator, m monomial of degree d-deg(g) }, computed by
// plain row reduction straight from the generators.
long long ideal_piece_dim_oracle(const Ideal& I, int d) {
  const RingPtr& R = I.ring();
  std::vector<Mono> basis = R->piece_basis(d);
  std::unordered_map<Mono, size_t, MonoHash> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<uint8_t>> rows;
  for (const Polynomial& g : I.gens()) {
    auto gd = g.homogeneous_degree();
    REQUIRE(gd.has_value());
    if (*gd > d) continue;
    for (const Mono& m : R->piece_basis(d - *gd)) {
      Polynomial prod = g.term_multiple(m, 1).reduced();
      std::vector<uint8_t> row(basis.size(), 0);
      for (size_t i = 0; i < prod.terms().size(); ++i)
        row[index.at(prod.terms()[i].m)] ^= uint8_t(prod.coeffs()[i] & 1);
      rows.push_back(std::move(row));
    }
  }
  // gaussian elimination over GF(2), no shared code with the engine
  size_t rank = 0, cols = basis.size();
  for (size_t c = 0; c < cols; ++c) {
    size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (size_t j = c; j < cols; ++j) rows[r][j] ^= rows[rank][j];
    if (++rank == rows.size()) break;
  }
  return (long long)rank;
}

void check_dimension_oracle(const Ideal& I, int dmax = 8) {
  for (int d = 0; d <= dmax; ++d)
    CHECK(I.piece_dim(d) == ideal_piece_dim_oracle(I, d));
}

bool spoly_reduces_to_zero(const GBasis& gb) {
  for (size_t i = 0; i < gb.basis.size(); ++i)
    for (size_t j = i + 1; j < gb.basis.size(); ++j) {
      const Polynomial &a = gb.basis[i], &b = gb.basis[j];
      if (a.lead_term().comp != b.lead_term().comp) continue;
      Mono l = a.lead_term().m.lcm(b.lead_term().m);
      Polynomial s = a.term_multiple(a.lead_term().m.quotient_into(l), 1) -
                     b.term_multiple(b.lead_term().m.quotient_into(l), 1);
      if (!normal_form(gb, s.reduced()).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("normal forms and membership") {
  RingPtr R = gf2({"x", "y", "z"});
  Ideal I(R, {R->parse("x")});
  CHECK(normal_form(I.gb(), R->parse("x^2")).is_zero());

  RingPtr Q = quadric_ring();
  Ideal J(Q, {});  // ideal (q) is the ring relation itself: NF of z0^2
  CHECK(normal_form(J.gb(), Q->parse("z0^2")) == Q->parse("z1*z2+z3*z4+z5*z6"));
  // adding back: z0^2 - nf lies in (q), i.e. reduces to zero in the quotient
  CHECK((Q->parse("z0^2") - Q->parse("z1*z2+z3*z4+z5*z6")).is_zero());
}

TEST_CASE("groebner bases: small examples") {
  RingPtr R = gf2({"x", "y", "z"});
  SUBCASE("monomial ideal is its own basis") {
    Ideal I(R, {R->parse("x*y"), R->parse("x*z")});
    CHECK(I.gb().basis == std::vector<Polynomial>{R->parse("x*z"), R->parse("x*y")});
    // every generator has normal form zero
    for (const auto& g : I.gens()) CHECK(normal_form(I.gb(), g).is_zero());
  }
  SUBCASE("single polynomial") {
    RingPtr amb = gf2({"z0", "z1", "z2", "z3", "z4", "z5", "z6"});
    Polynomial q = amb->parse("z0^2+z1*z2+z3*z4+z5*z6");
    Ideal I(amb, {q});
    CHECK(I.gb().basis == std::vector<Polynomial>{q});
  }
  SUBCASE("twisted cubic style kernel, char 2") {
    Ideal I(R, {R->parse("x^2+y*z"), R->parse("y^2+x*z")});
    CHECK(spoly_reduces_to_zero(I.gb()));
    check_dimension_oracle(I);
  }
}

TEST_CASE("reduced groebner basis is unique under generator shuffles") {
  RingPtr R = gf2({"a", "b", "c", "d"});
  std::vector<Polynomial> gens = {R->parse("a*b+c^2"), R->parse("b*c+d^2"),
                                  R->parse("a*d+b^2"), R->parse("c*d+a^2")};
  Ideal I(R, gens);
  std::mt19937 rng(42);
  for (int it = 0; it < 5; ++it) {
    std::shuffle(gens.begin(), gens.end(), rng);
    Ideal J(R, gens);
    CHECK(I.gb().basis == J.gb().basis);
  }
  CHECK(spoly_reduces_to_zero(I.gb()));
  check_dimension_oracle(I, 7);
}

TEST_CASE("buchberger criterion holds for random ideals") {
  std::mt19937 rng(2024);
  RingPtr R = gf2({"x", "y", "z"});
  std::uniform_int_distribution<int> nd(1, 3);
  auto rand_homog = [&](int d) {
    Polynomial p = R->zero();
    for (const Mono& m : monomials_of_degree(3, d))
      if (rng() & 1) p = p + R->monomial(m);
    return p;
  };
  for (int it = 0; it < 10; ++it) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(rand_homog(nd(rng) + 1));
    Ideal I(R, gens);
    CHECK(spoly_reduces_to_zero(I.gb()));
    check_dimension_oracle(I, 6);
  }
}

TEST_CASE("syzygies") {
  RingPtr R = gf2({"x0", "x1"});
  SUBCASE("single column has no syzygies") {
    GBOptions o;
    o.track = true;
    GBasis gb = groebner(R, 1, {R->parse("x0^2+x0*x1")}, o);
    CHECK(gb.syzygies.empty());
  }
  SUBCASE("koszul syzygy of two variables") {
    GBOptions o;
    o.track = true;
    GBasis gb = groebner(R, 1, {R->parse("x0"), R->parse("x1")}, o);
    REQUIRE(gb.syzygies.size() == 1);
    // (x1, x0): x1*e0 + x0*e1 (char 2)
    Polynomial expect = R->parse("x1") + R->parse("x0").shift_component(1);
    CHECK(gb.syzygies[0] == expect);
  }
  SUBCASE("syzygies compose to zero against the generators") {
    std::mt19937 rng(5);
    RingPtr S = gf2({"x", "y", "z"});
    std::vector<Polynomial> gens = {S->parse("x*y+z^2"), S->parse("y^2+x*z"),
                                    S->parse("x^2+y*z"), S->parse("z^2+x*y")};
    GBOptions o;
    o.track = true;
    GBasis gb = groebner(S, 1, gens, o);
    for (const auto& s : gb.syzygies) {
      Polynomial acc = S->zero();
      for (uint32_t j = 0; j < gens.size(); ++j)
        acc = acc + s.component_part(j) * gens[j];
      CHECK(acc.is_zero());
    }
    CHECK(!gb.syzygies.empty());
  }
  SUBCASE("tags express the basis in the inputs") {
    RingPtr S = gf2({"x", "y"});
    std::vector<Polynomial> gens = {S->parse("x^2+y^2"), S->parse("x*y")};
    GBOptions o;
    o.track = true;
    GBasis gb = groebner(S, 1, gens, o);
    for (size_t i = 0; i < gb.basis.size(); ++i) {
      Polynomial acc = S->zero();
      for (uint32_t j = 0; j < gens.size(); ++j)
        acc = acc + gb.tags[i].component_part(j) * gens[j];
      CHECK(acc == gb.basis[i]);
    }
  }
}

TEST_CASE("module groebner over the quadric ring") {
  RingPtr Q = quadric_ring();
  // columns (z1, z3), (z2, z4) inside Q^2; syzygies exist only via the quadric
  GBOptions o;
  o.track = true;
  std::vector<Polynomial> cols = {
      Q->parse("z1") + Q->parse("z3").shift_component(1),
      Q->parse("z2") + Q->parse("z4").shift_component(1)};
  GBasis gb = groebner(Q, 2, cols, o);
  for (const auto& s : gb.syzygies) {
    Polynomial acc = Q->zero();
    for (uint32_t j = 0; j < cols.size(); ++j)
      acc = acc + s.component_part(j) * cols[j];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("ideal quotient") {
  RingPtr R = gf2({"x", "y", "z"});
  SUBCASE("((xy,xz) : (x)) = (y,z)") {
    Ideal I(R, {R->parse("x*y"), R->parse("x*z")});
    Ideal J(R, {R->parse("x")});
    Ideal Q = ideal_quotient(I, J);
    Ideal expect(R, {R->parse("y"), R->parse("z")});
    CHECK(Q.same_ideal_as(expect));
    check_dimension_oracle(Q, 6);
  }
  SUBCASE("(I : (1)) = I") {
    Ideal I(R, {R->parse("x*y+z^2")});
    Ideal Q = ideal_quotient(I, Ideal(R, {R->one()}));
    CHECK(Q.same_ideal_as(I));
  }
  SUBCASE("((q) : (z0)) = (q) in the ambient 7-variable ring") {
    RingPtr amb = gf2({"z0", "z1", "z2", "z3", "z4", "z5", "z6"});
    Polynomial q = amb->parse("z0^2+z1*z2+z3*z4+z5*z6");
    Ideal I(amb, {q});
    Ideal Q = ideal_quotient(I, Ideal(amb, {amb->parse("z0")}));
    CHECK(Q.same_ideal_as(I));
  }
}

TEST_CASE("saturation") {
  RingPtr R = gf2({"x0", "x1", "x2", "x3", "x4", "x5"});
  SUBCASE("x0 times all cubics saturates to (x0)") {
    std::vector<Polynomial> gens;
    for (const Mono& m : monomials_of_degree(6, 3))
      gens.push_back(R->variable(0).term_multiple(m, 1));
    Ideal I(R, gens);
    Ideal S = saturate(I);
    CHECK(S.same_ideal_as(Ideal(R, {R->parse("x0")})));
  }
  SUBCASE("unit ideal is a fixed point") {
    Ideal I(R, {R->one()});
    CHECK(saturate(I).is_unit_ideal());
  }
  SUBCASE("idempotent") {
    std::vector<Polynomial> gens = {R->parse("x0^2*x1"), R->parse("x0*x1^2"),
                                    R->parse("x2^3")};
    Ideal I(R, gens);
    Ideal S1 = saturate(I);
    Ideal S2 = saturate(S1);
    CHECK(S1.same_ideal_as(S2));
  }
}

TEST_CASE("ring map kernels") {
  SUBCASE("cuspidal cubic relation, char 2") {
    RingPtr S = gf2({"a", "b"});
    RingPtr T = gf2({"t"});
    RingMap m{S, T, {T->parse("t^2"), T->parse("t^3")}, 1};
    Ideal K = ring_map_kernel(m);
    CHECK(K.same_ideal_as(Ideal(S, {S->parse("a^3+b^2")})));
  }
  SUBCASE("projection has zero kernel onto the quadric ring") {
    RingPtr P5 = gf2({"x0", "x1", "x2", "x3", "x4", "x5"});
    RingPtr Q = quadric_ring();
    std::vector<Polynomial> pim;
    for (int i = 0; i < 6; ++i) pim.push_back(Q->variable(i + 1));
    RingMap pi{P5, Q, pim, 1};
    CHECK(ring_map_kernel(pi).is_zero_ideal());
  }
  SUBCASE("identity map has zero kernel") {
    RingPtr R = gf2({"x", "y"});
    RingMap id{R, R, {R->parse("x"), R->parse("y")}, 1};
    CHECK(ring_map_kernel(id).is_zero_ideal());
  }
}
