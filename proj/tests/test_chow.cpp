#include <gtest/gtest.h>

#include "kuechle/chow.hpp"
#include "kuechle/error.hpp"
#include "support.hpp"

namespace kuechle {
namespace {

ChowClass parse(const GradedRing& r, const char* text) { return ChowClass::parse(r, text); }

TEST(Ring, ParseAndPrint) {
  EXPECT_EQ(GradedRing::parse("P3").to_string(), "P3");
  EXPECT_EQ(GradedRing::parse("P1^4").to_string(), "P1^4");
  EXPECT_EQ(GradedRing::parse("P1").generators(), 1u);
  EXPECT_THROW(GradedRing::parse("Q3"), Error);
  EXPECT_THROW(GradedRing::parse("P2^3"), Error);
  EXPECT_THROW(GradedRing::parse("P"), Error);
}

TEST(Classes, Examples) {
  const GradedRing p3 = GradedRing::projective(3);
  EXPECT_EQ(parse(p3, "4h") * parse(p3, "6h^2"), parse(p3, "24h^3"));
  EXPECT_TRUE((parse(p3, "h^2") * parse(p3, "h^2")).is_zero());
  const GradedRing p1p1 = GradedRing::p1_product(2);
  const ChowClass s = parse(p1p1, "h1 + h2");
  EXPECT_EQ((s * s).to_string(), "2h1*h2");
}

TEST(Classes, TextRoundTrip) {
  const GradedRing p4 = GradedRing::projective(4);
  for (const char* text : {"0", "7", "-h", "3h^2 - 2h^4", "1 + h + h^2"}) {
    const ChowClass c = parse(p4, text);
    EXPECT_EQ(parse(p4, c.to_string().c_str()), c) << text;
  }
  const GradedRing p13 = GradedRing::p1_product(3);
  const ChowClass c = parse(p13, "2h1*h3 - h2 + 5");
  EXPECT_EQ(c.to_string(), "5 - h2 + 2h1*h3");
  EXPECT_EQ(parse(p13, c.to_string().c_str()), c);
  EXPECT_EQ(parse(p13, "2 h1 * h3 - h2 + 5"), c);
}

TEST(Classes, ParseErrors) {
  const GradedRing p3 = GradedRing::projective(3);
  for (const char* bad : {"", "4x", "h^", "2h*", "h1*h2 ++", "3 4"}) EXPECT_THROW(parse(p3, bad), Error) << bad;
  EXPECT_THROW(parse(GradedRing::p1_product(2), "h3"), Error);
  EXPECT_THROW(parse(GradedRing::p1_product(2), "h"), Error);
}

TEST(Classes, RingMismatch) {
  try {
    (void)(parse(GradedRing::projective(3), "h") * parse(GradedRing::projective(4), "h"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
  }
}

ChowClass random_class(const GradedRing& r, Rng& rng) {
  ChowClass c(r);
  for (int t = 0; t < 4; ++t) {
    Exponents e(r.generators());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<unsigned>(rng.below(r.bound(i)));
    c += ChowClass::monomial(r, e, mpz_class(static_cast<long>(rng.between(-5, 5))));
  }
  return c;
}

TEST(Classes, RingAxioms) {
  for (const GradedRing& r : {GradedRing::projective(4), GradedRing::p1_product(3)}) {
    testing::for_all(60, 100, [&](Rng& rng, std::size_t) {
      const ChowClass a = random_class(r, rng), b = random_class(r, rng), c = random_class(r, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(a * ChowClass::constant(r, 1), a);
    });
  }
}

TEST(Degeneracy, QuarticSymmetricBundleOnP3) {
  const GradedRing p3 = GradedRing::projective(3);
  const auto d = degeneracy_classes(parse(p3, "4h"), parse(p3, "6h^2"), parse(p3, "4h^3"));
  EXPECT_EQ(d.discriminant.to_string(), "8h");
  EXPECT_EQ(d.corank2.to_string(), "80h^3");
}

TEST(Degeneracy, ZeroAndCancellation) {
  const GradedRing p3 = GradedRing::projective(3);
  const ChowClass zero(p3);
  const auto z = degeneracy_classes(zero, zero, zero);
  EXPECT_TRUE(z.discriminant.is_zero());
  EXPECT_TRUE(z.corank2.is_zero());
  const ChowClass c1 = parse(p3, "3h"), c2 = parse(p3, "5h^2");
  EXPECT_TRUE(degeneracy_classes(c1, c2, c1 * c2).corank2.is_zero());
}

TEST(Degeneracy, LinearInC3) {
  const GradedRing p3 = GradedRing::projective(3);
  const ChowClass c1 = parse(p3, "2h"), c2 = parse(p3, "h^2");
  const auto a = degeneracy_classes(c1, c2, parse(p3, "h^3"));
  const auto b = degeneracy_classes(c1, c2, parse(p3, "3h^3"));
  EXPECT_EQ(a.corank2 - b.corank2, parse(p3, "8h^3"));
}

TEST(Degeneracy, DegreeMismatch) {
  const GradedRing p3 = GradedRing::projective(3);
  try {
    degeneracy_classes(parse(p3, "h^2"), parse(p3, "h^2"), parse(p3, "h^3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
  EXPECT_THROW(degeneracy_classes(parse(p3, "h + 1"), parse(p3, "h^2"), parse(p3, "h^3")), Error);
}

TEST(Blowup, K0Rank) {
  EXPECT_EQ(blowup_k0_rank(5, 7, 4), 26);
  EXPECT_EQ(blowup_k0_rank(1, 0, 2), 1);
  EXPECT_EQ(blowup_k0_rank(16, 1, 2), 17);
  EXPECT_THROW(blowup_k0_rank(1, 1, 1), Error);
  EXPECT_THROW(blowup_k0_rank(-1, 1, 2), Error);
}

TEST(Ledgers, Totals) {
  EXPECT_EQ(ledger_b9().exceptional_part(), 48);
  EXPECT_EQ(ledger_d3().exceptional_part(), 16);
  EXPECT_EQ(ledger_c7().exceptional_part(), 6);
  EXPECT_EQ(ledger_b4().exceptional_part(), 4);
  EXPECT_TRUE(ledger_b9().symbolic().empty());
  EXPECT_EQ(ledger_d3().symbolic(), std::vector<std::string>{"D(K3)"});
  EXPECT_EQ(ledger_c7().symbolic().size(), 1u);
  EXPECT_EQ(ledger_b4().symbolic().size(), 1u);
  EXPECT_THROW(ledger("x1"), Error);
}

TEST(Ledgers, B9PointsAreLinePairs) {
  const SODLedger b9 = ledger_b9();
  ASSERT_EQ(b9.entries.size(), 3u);
  EXPECT_EQ(b9.entries[1].count, 7 * 6 / 2);
  EXPECT_EQ(b9.entries[2].count, 7 * 6 / 2 + 1);
}

}  // namespace
}  // namespace kuechle
