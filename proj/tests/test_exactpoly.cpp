#include <gtest/gtest.h>

#include "hilb/errors.hpp"
#include "hilb/monic.hpp"
#include "hilb/parse.hpp"
#include "hilb/quotient.hpp"
#include "oracles.hpp"

using namespace hilb;

namespace {

RingPtr xt_ring() { return PolyRing::make({"t1", "x"}); }

MultiPoly P(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring); }

}  // namespace

TEST(Rational, LowestTermsPositiveDenominator) {
  Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, -7).to_string(), "0");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, PromotesPastInt64AndBack) {
  Rational big(std::int64_t(1) << 62);
  Rational sq = big * big;
  EXPECT_EQ(sq.to_string(), "21267647932558653966460912964485513216");
  Rational back = sq / big;
  EXPECT_EQ(back, big);
  EXPECT_TRUE(back.is_integer());
  EXPECT_EQ(Rational::from_string("-10/4"), Rational(-5, 2));
}

TEST(Coeff, PrimeFieldArithmetic) {
  Domain f7 = Domain::prime_field(7);
  Coeff a = Coeff::from_int(3, f7);
  EXPECT_EQ((a * a.inverse()), a.one());
  EXPECT_EQ((a + Coeff::from_int(4, f7)), a.zero());
  EXPECT_EQ(Coeff::from_int(-1, f7).to_string(), "-1");
  EXPECT_EQ(Coeff::from_rational(Rational(1, 2), f7), Coeff::from_int(4, f7));
  EXPECT_THROW(Domain::prime_field(9), std::invalid_argument);
  EXPECT_THROW(a + Coeff::from_int(1), RingMismatch);
}

TEST(Coeff, DomainParsing) {
  EXPECT_TRUE(Domain::parse("Q").is_rational());
  EXPECT_EQ(Domain::parse("Fp:5").characteristic(), 5u);
  EXPECT_EQ(Domain::parse("F2").characteristic(), 2u);
  EXPECT_THROW(Domain::parse("R"), std::invalid_argument);
}

TEST(PolyArith, AdditiveInverseIsZero) {
  auto ring = xt_ring();
  MultiPoly x = MultiPoly::variable(ring, "x");
  EXPECT_TRUE((x + (-x)).is_zero());
}

TEST(PolyArith, DifferenceOfSquares) {
  auto ring = xt_ring();
  EXPECT_EQ(P("x+t1", ring) * P("x-t1", ring), P("x^2-t1^2", ring));
}

TEST(PolyArith, TelescopingFactorAtP1) {
  auto ring = xt_ring();
  EXPECT_EQ(P("x-t1", ring) * P("x+t1", ring) * P("x^2+t1^2", ring), P("x^4-t1^4", ring));
}

TEST(PolyArith, MismatchedRingsThrow) {
  auto a = PolyRing::make({"x"});
  auto b = PolyRing::make({"x"}, Domain::prime_field(3));
  EXPECT_THROW(MultiPoly::variable(a, 0) + MultiPoly::variable(b, 0), RingMismatch);
}

TEST(PolyArith, PowAndDegrees) {
  auto ring = PolyRing::make({"s1", "s2"}, Domain::rationals(), TermOrder::degrevlex(), {1, 2});
  MultiPoly f = P("s1^2 - s2", ring);
  EXPECT_TRUE(f.is_weighted_homogeneous());
  EXPECT_EQ(f.weighted_degree(), 2u);
  EXPECT_EQ(f.pow(3).weighted_degree(), 6u);
  EXPECT_EQ(f.pow(0), MultiPoly::constant(ring, 1));
  EXPECT_EQ(f.total_degree(), 2u);
}

TEST(ApplyHom, SpecializesParameter) {
  auto src = PolyRing::make({"s1", "x"});
  auto dst = PolyRing::make({"e", "x"});
  PolyImages images{{"s1", MultiPoly::variable(dst, "e")}, {"x", MultiPoly::variable(dst, "x")}};
  EXPECT_EQ(apply_hom(P("x - s1", src), images, dst), P("x - e", dst));
}

TEST(ApplyHom, DeltaSpecializesToF) {
  auto src = PolyRing::make({"s1", "s2", "x"});
  auto dst = PolyRing::make({"u1", "u2", "x"});
  PolyImages images{{"s1", P("u1", dst)}, {"s2", P("u2", dst)}, {"x", P("x", dst)}};
  EXPECT_EQ(apply_hom(P("x^2 - s1*x + s2", src), images, dst), P("x^2 - u1*x + u2", dst));
}

TEST(ApplyHom, SubstitutesRecursionValues) {
  auto src = PolyRing::make({"s1", "s2", "y1", "y2"});
  auto dst = PolyRing::make({"s1", "s2"});
  PolyImages images{{"s1", P("s1", dst)}, {"s2", P("s2", dst)}, {"y1", P("s1", dst)}, {"y2", P("s1^2 - s2", dst)}};
  EXPECT_EQ(apply_hom(P("-y2*s1 + y1*s2", src), images, dst), P("-s1^3 + 2*s1*s2", dst));
}

TEST(ApplyHom, MissingImageThrows) {
  auto src = PolyRing::make({"a", "b"});
  PolyImages images{{"a", MultiPoly::variable(src, 0)}};
  EXPECT_THROW(apply_hom(P("a*b", src), images, src), PreconditionViolation);
  // an unused variable needs no image
  EXPECT_NO_THROW(apply_hom(P("a^2", src), images, src));
}

TEST(Parse, GoldenGenerator) {
  auto ring = PolyRing::make({"x", "y"});
  MultiPoly f = parse_poly("x^4 - 3*x^2*y + y^2", ring);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.coefficient(Monomial{2, 1}), Coeff::from_int(-3));
}

TEST(Parse, ZeroAndCanonicalReordering) {
  auto ring = PolyRing::make({"x", "y"});
  EXPECT_TRUE(parse_poly("0", ring).is_zero());
  EXPECT_EQ(format_poly(parse_poly("y^2 + x^4 - 3*x^2*y", ring)), "x^4 - 3*x^2*y + y^2");
  EXPECT_EQ(format_poly(MultiPoly(ring)), "0");
}

TEST(Parse, AcceptsVariantsAndFractions) {
  auto ring = PolyRing::make({"s1", "s2"});
  EXPECT_EQ(parse_poly("s_1 s_2 + 1/2", ring), parse_poly("s1*s2+1/2", ring));
  EXPECT_EQ(format_poly(parse_poly("-1/2*s1 + 3", ring)), "-1/2*s1 + 3");
}

TEST(Parse, ErrorsCarryPositions) {
  auto ring = PolyRing::make({"x"});
  try {
    parse_poly("x + z", ring);
    FAIL() << "unknown variable accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_poly("x +", ring), ParseError);
  EXPECT_THROW(parse_poly("x^", ring), ParseError);
  EXPECT_THROW(parse_poly("1/0", ring), ParseError);
  EXPECT_THROW(parse_poly("x ) 2", ring), ParseError);
}

TEST(Parse, InferredRingUsesNaturalOrder) {
  MultiPoly f = parse_poly("s10 + s2*s1");
  ASSERT_EQ(f.ring()->nvars(), 3u);
  EXPECT_EQ(f.ring()->vars()[0], "s1");
  EXPECT_EQ(f.ring()->vars()[2], "s10");
}

TEST(Parse, FormatRoundTripOnRandomPolys) {
  oracle::Rng rng(11);
  auto ring = PolyRing::make({"t1", "t2", "x"});
  for (int k = 0; k < 200; ++k) {
    MultiPoly f = oracle::random_poly(rng, ring, 5, 4, 9);
    EXPECT_EQ(parse_poly(format_poly(f), ring), f);
  }
}

TEST(PolyProperties, RingAxioms) {
  oracle::Rng rng(1);
  auto ring = PolyRing::make({"a", "b", "c"});
  for (int k = 0; k < 1000; ++k) {
    MultiPoly f = oracle::random_poly(rng, ring, 4, 3, 5);
    MultiPoly g = oracle::random_poly(rng, ring, 4, 3, 5);
    MultiPoly h = oracle::random_poly(rng, ring, 3, 2, 5);
    ASSERT_EQ((f + g) + h, f + (g + h));
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * g, g * f);
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ(f - f, MultiPoly(ring));
  }
}

TEST(PolyProperties, RingAxiomsModP) {
  oracle::Rng rng(2);
  auto ring = PolyRing::make({"a", "b"}, Domain::prime_field(5));
  for (int k = 0; k < 300; ++k) {
    MultiPoly f = oracle::random_poly(rng, ring, 4, 3, 7);
    MultiPoly g = oracle::random_poly(rng, ring, 4, 3, 7);
    MultiPoly h = oracle::random_poly(rng, ring, 3, 2, 7);
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ((f * g) * h, f * (g * h));
  }
}

TEST(PolyProperties, WeightedDegreeAdditive) {
  oracle::Rng rng(3);
  auto ring = PolyRing::make({"s1", "s2", "s3"}, Domain::rationals(), TermOrder::degrevlex(), {1, 2, 3});
  auto homogeneous = [&](unsigned d) {
    std::vector<Term> terms;
    for (const auto& m : oracle::monomials_up_to(3, d)) {
      if (m.weighted_degree(ring->weights()) == d && rng.below(2)) terms.push_back({m, Coeff::from_int(rng.range(1, 5))});
    }
    if (terms.empty()) terms.push_back({Monomial{d, 0, 0}, Coeff::from_int(1)});
    return MultiPoly::from_terms(ring, terms);
  };
  for (int k = 0; k < 200; ++k) {
    unsigned a = unsigned(rng.range(0, 5));
    unsigned b = unsigned(rng.range(0, 5));
    MultiPoly f = homogeneous(a);
    MultiPoly g = homogeneous(b);
    ASSERT_TRUE(f.is_weighted_homogeneous());
    MultiPoly fg = f * g;
    ASSERT_TRUE(fg.is_weighted_homogeneous());
    ASSERT_EQ(fg.weighted_degree(), a + b);
  }
}

TEST(PolyProperties, ApplyHomIsRingMap) {
  oracle::Rng rng(4);
  auto src = PolyRing::make({"a", "b"});
  auto dst = PolyRing::make({"p", "q", "r"});
  for (int k = 0; k < 200; ++k) {
    PolyImages images{{"a", oracle::random_poly(rng, dst, 3, 2, 4)}, {"b", oracle::random_poly(rng, dst, 3, 2, 4)}};
    MultiPoly f = oracle::random_poly(rng, src, 3, 2, 4);
    MultiPoly g = oracle::random_poly(rng, src, 3, 2, 4);
    ASSERT_EQ(apply_hom(f * g, images, dst), apply_hom(f, images, dst) * apply_hom(g, images, dst));
    ASSERT_EQ(apply_hom(f + g, images, dst), apply_hom(f, images, dst) + apply_hom(g, images, dst));
  }
}

TEST(MonicDivision, PureXPower) {
  Coeff c = Coeff::from_int(1);
  MonicPoly<Coeff> x2(std::vector<Coeff>{c.zero(), c.zero()});
  auto [q, r] = monic_divmod(UniPoly<Coeff>::x_power(c, 3), x2);
  EXPECT_EQ(q, UniPoly<Coeff>::x_power(c, 1));
  EXPECT_TRUE(r.is_zero());
}

TEST(MonicDivision, OverDualNumbers) {
  auto A = QuotientRing::truncated("u", 2);
  QuotElem u = A->variable("u");
  MonicPoly<QuotElem> F(std::vector<QuotElem>{u, A->zero()});  // x^2 - u x
  auto x3 = monic_divmod(UniPoly<QuotElem>::x_power(u, 3), F);
  EXPECT_EQ(x3.quotient, UniPoly<QuotElem>(u, {u, A->one()}));
  EXPECT_TRUE(x3.remainder.is_zero());
  auto x2 = monic_divmod(UniPoly<QuotElem>::x_power(u, 2), F);
  EXPECT_EQ(x2.quotient, UniPoly<QuotElem>(u, {A->one()}));
  EXPECT_EQ(x2.remainder, UniPoly<QuotElem>(u, {A->zero(), u}));
}

TEST(MonicDivision, XPowerModMatchesLongDivision) {
  auto A = QuotientRing::truncated("u", 4);
  QuotElem u = A->variable("u");
  MonicPoly<QuotElem> F(std::vector<QuotElem>{u, u.pow(2), A->zero()});
  for (std::size_t N = 0; N < 12; ++N) {
    EXPECT_EQ(x_power_mod(N, F), monic_divmod(UniPoly<QuotElem>::x_power(u, N), F).remainder) << N;
  }
}

TEST(MonicDivision, ReconstructionIdentity) {
  oracle::Rng rng(5);
  auto A = QuotientRing::from_text({"u", "v"}, {"u^3", "v^2", "u*v"});
  std::vector<QuotElem> basis{A->one(), A->variable("u"), A->variable("u").pow(2), A->variable("v")};
  auto random_elem = [&] {
    QuotElem e = A->zero();
    for (const auto& b : basis) e = e + b.scaled(Coeff::from_int(rng.range(-3, 3)));
    return e;
  };
  for (int k = 0; k < 200; ++k) {
    std::size_t n = std::size_t(rng.range(1, 4));
    std::vector<QuotElem> us;
    for (std::size_t i = 0; i < n; ++i) us.push_back(random_elem());
    MonicPoly<QuotElem> F(us);
    std::vector<QuotElem> coeffs;
    for (int i = 0, deg = int(rng.range(0, 8)); i <= deg; ++i) coeffs.push_back(random_elem());
    UniPoly<QuotElem> dividend(A->zero(), coeffs);
    auto [q, r] = monic_divmod(dividend, F);
    ASSERT_LT(r.degree(), long(n));
    ASSERT_EQ(q * F.expand() + r, dividend);
  }
}

TEST(MonicPolyTest, SignConventionAndRoundTrip) {
  Coeff one = Coeff::from_int(1);
  MonicPoly<Coeff> F(std::vector<Coeff>{Coeff::from_int(2), Coeff::from_int(3), Coeff::from_int(5)});
  UniPoly<Coeff> f = F.expand();
  // x^3 - 2x^2 + 3x - 5
  EXPECT_EQ(f, UniPoly<Coeff>(one, {Coeff::from_int(-5), Coeff::from_int(3), Coeff::from_int(-2), one}));
  EXPECT_EQ(MonicPoly<Coeff>::extract(f), F);
  EXPECT_THROW(MonicPoly<Coeff>::extract(UniPoly<Coeff>(one, {one, Coeff::from_int(2)})), PreconditionViolation);
  EXPECT_THROW(MonicPoly<Coeff>(std::vector<Coeff>{}), PreconditionViolation);
}
