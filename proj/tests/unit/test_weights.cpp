#include <gtest/gtest.h>

#include <algorithm>

#include "lojex/parser.hpp"
#include "lojex/weights.hpp"

using namespace lojex;

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};
const std::vector<std::string> kZ = {"z1", "z2", "z3", "z4"};

Poly P(const std::string& text, const std::vector<std::string>& vars = kXYZ) {
  return parse_poly(text, vars);
}

bool contains(const std::vector<WeightVector>& v, const std::string& w) {
  return std::find(v.begin(), v.end(), parse_weights(w)) != v.end();
}

}  // namespace

TEST(Classify, NegativeWeightTypeOfMixedCubic) {
  Poly f = P("x*y + x^4*y^3 + (z+y)^3");
  auto c = classify(f, parse_weights("1;-2,3,1/3"));
  EXPECT_EQ(c.verdict, Verdict::WSQH);
  EXPECT_EQ(c.principal, P("x*y + x^4*y^3 + z^3"));
  EXPECT_EQ(c.tail, f - c.principal);
  EXPECT_TRUE(c.singular_principal);
}

TEST(Classify, EigenvalueExampleIsSqh) {
  Poly f = P("x*z + x*y*z^2 + x*y^3 + y^3*z^2 + y^5 + y^2*z^4 + z^8");
  auto c = classify(f, parse_weights("1;1/2,1/5,1/2"));
  EXPECT_EQ(c.verdict, Verdict::SQH);
  EXPECT_EQ(c.principal, P("x*z + y^5"));
  ASSERT_TRUE(c.principal_milnor);
  EXPECT_EQ(*c.principal_milnor, 4u);
}

TEST(Classify, QuadraticFormIsQh) {
  auto c = classify(P("x^2 + y^2", {"x", "y"}), parse_weights("1;1/2,1/2"));
  EXPECT_EQ(c.verdict, Verdict::QH);
  EXPECT_TRUE(c.tail.is_zero());
}

TEST(Classify, PositiveTypeWithBigWeightIsWeak) {
  auto c = classify(P("x*y + x^4*y^3 + (z+y)^3"), parse_weights("2/3,1/3,1/3"));
  EXPECT_EQ(c.verdict, Verdict::WSQH);
  auto q = classify(P("x*z + y^4"), parse_weights("1/3,1/4,2/3"));
  EXPECT_EQ(q.verdict, Verdict::WQH);
}

TEST(Classify, Rejections) {
  // monomial below level 1
  auto below = classify(P("x^2 + y^3"), parse_weights("1/2,1/2,1/2"));
  EXPECT_EQ(below.verdict, Verdict::NONE);
  EXPECT_FALSE(below.reason.empty());
  // non-isolated principal part x^2 y
  auto nonisolated = classify(P("x^2*y"), parse_weights("1/4,1/2,1/2"));
  EXPECT_EQ(nonisolated.verdict, Verdict::NONE);
  // empty principal part
  EXPECT_EQ(classify(P("x^3"), parse_weights("1/2,1/2,1/2")).verdict, Verdict::NONE);
  // level checks are done after normalization
  EXPECT_EQ(classify(P("x^2 + y^3", {"x", "y"}), parse_weights("6;3,2")).verdict, Verdict::QH);
}

TEST(Discover, MixedCubicHasBothPublishedTypes) {
  auto d = discover_types(P("x*y + x^4*y^3 + (z+y)^3"));
  EXPECT_TRUE(contains(d.types, "1;-2,3,1/3"));
  EXPECT_TRUE(contains(d.types, "1;2/3,1/3,1/3"));
  EXPECT_TRUE(d.inconclusive.empty());
  EXPECT_TRUE(std::is_sorted(d.types.begin(), d.types.end()));
}

TEST(Discover, DiagonalAndSingleMonomial) {
  EXPECT_TRUE(contains(discover_types(P("x^2 + y^3 + z^7")).types, "1;1/2,1/3,1/7"));
  EXPECT_TRUE(contains(discover_types(P("x^2", {"x"})).types, "1;1/2"));
}

TEST(Discover, EveryAcceptedTypeClassifies) {
  Poly f = P("x*z + x*y*z^2 + x*y^3 + y^3*z^2 + y^5 + y^2*z^4 + z^8");
  auto d = discover_types(f);
  EXPECT_TRUE(contains(d.types, "1;1/2,1/5,1/2"));
  for (const auto& w : d.types) EXPECT_NE(classify(f, w).verdict, Verdict::NONE) << to_string(w);
}

TEST(SaitoSymmetry, PairsNegativeWithLarge) {
  auto s = saito_symmetry_check(parse_weights("1;-2,3,1/3"));
  EXPECT_TRUE(s.consistent);
  ASSERT_EQ(s.pairs.size(), 1u);
  EXPECT_EQ(s.pairs[0], (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(SaitoSymmetry, InteriorWeightsNeedNoPairs) {
  auto s = saito_symmetry_check(parse_weights("1;1/2,1/5,1/2"));
  EXPECT_TRUE(s.consistent);
  EXPECT_TRUE(s.pairs.empty());
}

TEST(SaitoSymmetry, CountMismatchIsViolation) {
  EXPECT_FALSE(saito_symmetry_check(parse_weights("1;-1,1/3,1/3")).consistent);
  // equinumerous but the sums are wrong
  EXPECT_FALSE(saito_symmetry_check(parse_weights("1;-1,3,1/3")).consistent);
  // zero pairs with one
  EXPECT_TRUE(saito_symmetry_check(parse_weights("1;0,1,1/2")).consistent);
}

TEST(PartnerStructure, FourVariableGerm) {
  auto r = check_prop1_structure(P("z1*z2 + (1+z2)*(z3^4 + z3^2*z4^3 + z4^5)", kZ), 0);
  EXPECT_TRUE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, 1u);
}

TEST(PartnerStructure, DiagonalFormFails) {
  EXPECT_FALSE(check_prop1_structure(P("z1^2 + z2^2", {"z1", "z2"}), 0).holds);
}

TEST(PartnerStructure, SquareOfPartnerBlocks) {
  EXPECT_FALSE(check_prop1_structure(P("z1*z2 + z2^2 + z3^3", {"z1", "z2", "z3"}), 0).holds);
}
