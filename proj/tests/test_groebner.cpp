#include <gtest/gtest.h>

#include "hilb/errors.hpp"
#include "hilb/parse.hpp"
#include "hilb/quotient.hpp"
#include "oracles.hpp"

using namespace hilb;

namespace {

std::vector<MultiPoly> polys(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

RingPtr s2_ring() { return PolyRing::make({"s1", "s2"}); }

// every S-polynomial of the basis reduces to zero
bool self_stable(const std::vector<MultiPoly>& g) {
  StepBudget budget(1'000'000);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Monomial l = g[i].lead().mono.lcm(g[j].lead().mono);
      Coeff one = g[i].lead().coeff.one();
      MultiPoly s = g[i].mul_term(l / g[i].lead().mono, one / g[i].lead().coeff) -
                    g[j].mul_term(l / g[j].lead().mono, one / g[j].lead().coeff);
      if (!reduce(s, g, budget).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const std::vector<MultiPoly>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].lead().coeff.is_one()) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i].terms()) {
        if (g[j].lead().mono.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Buchberger, MonomialIdealIsItsOwnBasis) {
  auto ring = PolyRing::make({"x", "y"});
  auto g = buchberger(polys(ring, {"x^2", "x*y"}));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], parse_poly("x*y", ring));
  EXPECT_EQ(g[1], parse_poly("x^2", ring));
}

TEST(Buchberger, DegrevlexBasisOfFirstFiltrationIdeal) {
  auto ring = s2_ring();
  Ideal I(ring, polys(ring, {"s1^2 - s2", "s1*s2"}));
  EXPECT_EQ(I.basis(), polys(ring, {"s2^2", "s1*s2", "s1^2 - s2"}));
  EXPECT_TRUE(I.contains(parse_poly("s1^3", ring)));
  EXPECT_TRUE(self_stable(I.basis()));
  EXPECT_TRUE(is_reduced(I.basis()));
}

TEST(Buchberger, LexWithS2LargestContainsCube) {
  // variables listed as [s2, s1] so lex eliminates s2 first
  auto ring = PolyRing::make({"s2", "s1"}, Domain::rationals(), TermOrder::lex());
  Ideal I(ring, polys(ring, {"s1^2 - s2", "s1*s2"}));
  EXPECT_EQ(I.basis(), polys(ring, {"s1^3", "s2 - s1^2"}));
  EXPECT_EQ(I.normal_form(parse_poly("s2", ring)), parse_poly("s1^2", ring));
}

TEST(Buchberger, SecondFiltrationIdealHasFiniteStaircase) {
  auto ring = s2_ring();
  Ideal J2(ring, polys(ring, {"s1^3 - 2*s1*s2", "s1^2*s2 - s2^2"}));
  auto stair = quotient_basis(J2);
  ASSERT_TRUE(stair.has_value());
  EXPECT_TRUE(self_stable(J2.basis()));
  EXPECT_TRUE(is_reduced(J2.basis()));
}

TEST(Buchberger, BudgetExhaustionThrows) {
  auto ring = PolyRing::make({"x", "y", "z"});
  auto gens = polys(ring, {"x^3 - y*z^2 + 1", "y^3 - x*z + 2", "z^3 - x^2*y - 3"});
  EXPECT_THROW(buchberger(gens, GroebnerOptions{5}), BudgetExceeded);
  EXPECT_NO_THROW(buchberger(gens));
}

TEST(Buchberger, UnitIdealAndZeroGenerators) {
  auto ring = s2_ring();
  Ideal unit(ring, polys(ring, {"s1 - 1", "s1"}));
  EXPECT_TRUE(unit.is_unit());
  EXPECT_EQ(quotient_basis(unit)->size(), 0u);
  Ideal zero(ring, {MultiPoly(ring)});
  EXPECT_TRUE(zero.basis().empty());
  EXPECT_FALSE(quotient_basis(zero).has_value());
}

TEST(Buchberger, RejectsMixedRings) {
  auto a = s2_ring();
  auto b = PolyRing::make({"s1", "s2"}, Domain::prime_field(7));
  EXPECT_THROW(buchberger({parse_poly("s1", a), parse_poly("s2", b)}), RingMismatch);
}

TEST(NormalForm, Examples) {
  auto ring = PolyRing::make({"s1"});
  EXPECT_TRUE(normal_form(parse_poly("s1^3", ring), Ideal(ring, polys(ring, {"s1^2"}))).is_zero());
  auto A = QuotientRing::truncated("u", 8);
  EXPECT_TRUE(A->variable("u").pow(8).is_zero());
  EXPECT_FALSE(A->variable("u").pow(7).is_zero());
}

TEST(NormalForm, DegrevlexKeepsS2) {
  auto ring = s2_ring();
  Ideal I(ring, polys(ring, {"s1^2 - s2", "s1*s2"}));
  EXPECT_EQ(I.normal_form(parse_poly("s2", ring)), parse_poly("s2", ring));
  EXPECT_EQ(I.normal_form(parse_poly("s1^2", ring)), parse_poly("s2", ring));
}

TEST(IdealContains, Examples) {
  auto ring = PolyRing::make({"x"});
  Ideal x2(ring, polys(ring, {"x^2"}));
  EXPECT_TRUE(ideal_contains(x2, Ideal(ring, polys(ring, {"x^3"}))));
  EXPECT_FALSE(ideal_contains(x2, Ideal(ring, polys(ring, {"x"}))));
  auto s = s2_ring();
  Ideal J1(s, polys(s, {"s1^2 - s2", "s1*s2"}));
  Ideal J2(s, polys(s, {"s1^3 - 2*s1*s2", "s1^2*s2 - s2^2"}));
  EXPECT_TRUE(ideal_contains(J1, J2));
  EXPECT_FALSE(ideal_contains(J2, J1));
  EXPECT_TRUE(ideal_equal(J1, Ideal(s, J1.basis())));
}

TEST(QuotientBasis, TruncatedPolynomialRing) {
  for (unsigned m = 0; m < 6; ++m) {
    auto ring = PolyRing::make({"u"});
    Ideal I(ring, {MultiPoly::variable(ring, 0).pow(m + 1)});
    auto stair = quotient_basis(I);
    ASSERT_TRUE(stair.has_value());
    ASSERT_EQ(stair->size(), m + 1);
    for (unsigned e = 0; e <= m; ++e) EXPECT_EQ((*stair)[e], Monomial{e});
  }
}

TEST(QuotientBasis, DimensionThreeStaircase) {
  auto ring = s2_ring();
  auto stair = quotient_basis(Ideal(ring, polys(ring, {"s1^2 - s2", "s1*s2"})));
  ASSERT_TRUE(stair.has_value());
  EXPECT_EQ(*stair, (std::vector<Monomial>{Monomial{0, 0}, Monomial{0, 1}, Monomial{1, 0}}));
}

TEST(QuotientBasis, ZeroIdealIsInfinite) {
  auto ring = PolyRing::make({"u"});
  EXPECT_FALSE(quotient_basis(Ideal(ring, {})).has_value());
  auto two = s2_ring();
  EXPECT_FALSE(quotient_basis(Ideal(two, polys(two, {"s1^2"}))).has_value());
}

TEST(Nilpotency, Examples) {
  auto A = QuotientRing::truncated("u", 8);
  EXPECT_EQ(is_nilpotent(A->variable("u")), 8u);
  EXPECT_EQ(is_nilpotent(A->one()), std::nullopt);
  EXPECT_EQ(is_nilpotent(A->zero()), 1u);
  auto H21 = QuotientRing::from_text({"s1", "s2"}, {"s1^2 - s2", "s1*s2"});
  EXPECT_EQ(is_nilpotent(H21->variable("s1")), 3u);
  EXPECT_EQ(is_nilpotent(H21->variable("s2")), 2u);
  EXPECT_TRUE(H21->is_local());
}

TEST(Nilpotency, InfiniteRingUnsupported) {
  auto A = QuotientRing::from_text({"u", "v"}, {"u^2"});
  EXPECT_FALSE(A->is_finite());
  EXPECT_THROW(is_nilpotent(A->variable("u")), Unsupported);
}

TEST(QuotientRingTest, LocalFlag) {
  EXPECT_TRUE(QuotientRing::field()->is_local());
  EXPECT_TRUE(QuotientRing::truncated("u", 3)->is_local());
  // two points: not local
  EXPECT_FALSE(QuotientRing::from_text({"u"}, {"u^2 - u"})->is_local());
  // a single point away from the origin
  EXPECT_FALSE(QuotientRing::from_text({"u"}, {"u - 1"})->is_local());
  EXPECT_EQ(QuotientRing::field()->dimension(), 1u);
}

TEST(QuotientRingTest, ElementsOfDifferentRingsDoNotMix) {
  auto A = QuotientRing::truncated("u", 2);
  auto B = QuotientRing::truncated("u", 2);
  EXPECT_THROW(A->one() + B->one(), RingMismatch);
}

TEST(GroebnerProperties, MembershipAgreesWithLinearAlgebra) {
  oracle::Rng rng(7);
  auto ring = PolyRing::make({"a", "b", "c"});
  int members = 0;
  for (int k = 0; k < 220; ++k) {
    std::vector<MultiPoly> gens;
    std::size_t ngens = std::size_t(rng.range(1, 3));
    for (std::size_t i = 0; i < ngens; ++i) {
      gens.push_back(oracle::random_homogeneous(rng, ring, unsigned(rng.range(1, 3)), std::size_t(rng.range(1, 3)), 3));
    }
    Ideal I(ring, gens);
    unsigned deg = unsigned(rng.range(2, 4));
    MultiPoly f = oracle::random_homogeneous(rng, ring, deg, 2, 3);
    if (rng.below(2)) {
      // bias toward members with a random combination of the generators
      f = MultiPoly(ring);
      for (const auto& g : gens) {
        if (g.is_zero() || g.total_degree() > deg) continue;
        f += g * oracle::random_homogeneous(rng, ring, deg - g.total_degree(), 2, 3);
      }
    }
    bool expected = oracle::member_up_to_degree(f, gens, deg);
    ASSERT_EQ(I.contains(f), expected) << format_poly(f);
    members += expected;
  }
  EXPECT_GT(members, 0);
}

TEST(GroebnerProperties, NormalFormIdempotentAndReduced) {
  oracle::Rng rng(8);
  auto ring = PolyRing::make({"a", "b", "c"});
  for (int k = 0; k < 100; ++k) {
    std::vector<MultiPoly> gens{oracle::random_poly(rng, ring, 3, 2, 3), oracle::random_poly(rng, ring, 3, 2, 3)};
    Ideal I(ring, gens);
    MultiPoly f = oracle::random_poly(rng, ring, 5, 4, 5);
    MultiPoly nf = I.normal_form(f);
    ASSERT_EQ(I.normal_form(nf), nf);
    ASSERT_TRUE(I.contains(f - nf));
    for (const auto& t : nf.terms()) {
      for (const auto& g : I.basis()) ASSERT_FALSE(g.lead().mono.divides(t.mono));
    }
    ASSERT_TRUE(self_stable(I.basis()));
    ASSERT_TRUE(is_reduced(I.basis()));
  }
}

TEST(GroebnerProperties, StaircaseStableUnderGeneratorPermutation) {
  oracle::Rng rng(9);
  auto ring = PolyRing::make({"a", "b"});
  for (int k = 0; k < 60; ++k) {
    std::vector<MultiPoly> gens{parse_poly("a^3", ring), parse_poly("b^3", ring), oracle::random_poly(rng, ring, 3, 2, 3),
                                oracle::random_poly(rng, ring, 3, 2, 3)};
    Ideal I(ring, gens);
    std::reverse(gens.begin(), gens.end());
    Ideal J(ring, gens);
    ASSERT_EQ(I.basis(), J.basis());
    ASSERT_EQ(quotient_basis(I)->size(), quotient_basis(J)->size());
  }
}

TEST(GroebnerProperties, NormalFormsSpannedByStaircase) {
  auto A = QuotientRing::from_text({"s1", "s2"}, {"s1^3 - 2*s1*s2", "s1^2*s2 - s2^2"});
  const auto& stair = *A->staircase();
  oracle::Rng rng(10);
  for (int k = 0; k < 50; ++k) {
    QuotElem e = A->element(oracle::random_poly(rng, A->ambient(), 4, 5, 4));
    for (const auto& t : e.normal_form().terms()) {
      ASSERT_NE(std::find(stair.begin(), stair.end(), t.mono), stair.end());
    }
  }
}
