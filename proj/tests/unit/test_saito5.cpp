#include <gtest/gtest.h>

#include "lojex/errors.hpp"
#include "lojex/parser.hpp"
#include "lojex/saito5.hpp"
#include "oracles.hpp"

using namespace lojex;

namespace {

const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

Poly P(const std::string& text, const std::vector<std::string>& vars = kXYZ) {
  return parse_poly(text, vars);
}

Rational Q(long p, long q = 1) { return make_rational(p, q); }

MembershipCertificate cofactors(std::vector<Poly> g) {
  MembershipCertificate c;
  c.cofactors = std::move(g);
  c.certified_degree = 4;
  return c;
}

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (auto r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

Interval total(const std::vector<Interval>& v) {
  Interval s(Q(0));
  for (const auto& i : v) s = s + i;
  return s;
}

}  // namespace

TEST(Jacobian, EulerCertificateIsDiagonal) {
  auto cert = euler_certificate(P("x^2 + y^3 + z^7"), parse_weights("1/2,1/3,1/7"));
  Matrix j = jacobian_at_zero(cert);
  Matrix expected(3, 3);
  expected(0, 0) = Q(1, 2);
  expected(1, 1) = Q(1, 3);
  expected(2, 2) = Q(1, 7);
  EXPECT_EQ(j, expected);
}

TEST(Jacobian, LinearExtraction) {
  EXPECT_EQ(jacobian_at_zero(cofactors({P("y", kXY), P("x", kXY)})), from_rows({{0, 1}, {1, 0}}));
  Matrix j = jacobian_at_zero(cofactors({P("1/2*x + x^2", kXY), P("1/3*y", kXY)}));
  EXPECT_EQ(j(0, 0), Q(1, 2));
  EXPECT_EQ(j(1, 1), Q(1, 3));
  EXPECT_EQ(j(0, 1), 0);
}

TEST(Jacobian, ConstantCofactorIsRejected) {
  EXPECT_THROW(jacobian_at_zero(cofactors({P("1 + x", kXY), P("y", kXY)})), DomainError);
}

TEST(EigenRealParts, TriangularIsExact) {
  Matrix m(3, 3);
  m(0, 0) = Q(1, 2);
  m(1, 1) = Q(1, 5);
  m(2, 2) = Q(1, 2);
  m(0, 2) = Q(7);
  auto e = eigen_real_parts(m);
  ASSERT_EQ(e.realparts.size(), 3u);
  EXPECT_EQ(e.realparts[0], Interval(Q(1, 5)));
  EXPECT_EQ(e.realparts[1], Interval(Q(1, 2)));
  EXPECT_EQ(e.realparts[2], Interval(Q(1, 2)));
  EXPECT_TRUE(e.converged);
}

TEST(EigenRealParts, Involution) {
  auto e = eigen_real_parts(from_rows({{0, 1}, {1, 0}}));
  ASSERT_EQ(e.realparts.size(), 2u);
  EXPECT_EQ(e.realparts[0], Interval(Q(-1)));
  EXPECT_EQ(e.realparts[1], Interval(Q(1)));
}

TEST(EigenRealParts, IrrationalRootsAreEnclosed) {
  // t^2 - t - 1
  auto e = eigen_real_parts(from_rows({{1, 1}, {1, 0}}));
  ASSERT_EQ(e.realparts.size(), 2u);
  EXPECT_TRUE(e.converged);
  const Rational tol = EigenOptions{}.tol;
  for (const auto& r : e.realparts) {
    EXPECT_LE(r.width(), tol * 2);
    // r contains a root of t^2 - t - 1: sign change across the interval
    auto value = [](const Rational& t) -> Rational { return t * t - t - 1; };
    EXPECT_LE(sign(value(r.lo)) * sign(value(r.hi)), 0);
  }
  EXPECT_TRUE(total(e.realparts).contains(Q(1)));
}

TEST(EigenRealParts, ComplexPairHasCommonRealPart) {
  // eigenvalues 1 +- 2i and 3
  auto e = eigen_real_parts(from_rows({{1, -2, 0}, {2, 1, 0}, {0, 0, 3}}));
  ASSERT_EQ(e.realparts.size(), 3u);
  EXPECT_TRUE(e.realparts[0].contains(Q(1)));
  EXPECT_TRUE(e.realparts[1].contains(Q(1)));
  EXPECT_EQ(e.realparts[2], Interval(Q(3)));
  EXPECT_TRUE(total(e.realparts).contains(Q(5)));
}

TEST(EigenRealParts, CharpolyIsCrossChecked) {
  Matrix m = from_rows({{2, -1, 3, 0}, {1, 0, 0, 5}, {-4, 2, 1, 1}, {0, 3, -2, 7}});
  auto e = eigen_real_parts(m);
  EXPECT_EQ(e.charpoly, lojex::testing::laplace_charpoly(m));
  std::uint32_t count = 0;
  for (const auto& a : e.alpha) count += a.multiplicity;
  EXPECT_EQ(count, 4u);
  EXPECT_TRUE(total(e.realparts).contains(m.trace()));
}

TEST(EigenRealParts, RepeatedIrrationalRoots) {
  // (t^2 - 2)^2 as a block matrix
  Matrix m(4, 4);
  m(0, 1) = 1; m(1, 0) = 2; m(2, 3) = 1; m(3, 2) = 2;
  auto e = eigen_real_parts(m);
  ASSERT_EQ(e.realparts.size(), 4u);
  EXPECT_LT(e.realparts[1].hi, 0);
  EXPECT_GT(e.realparts[2].lo, 0);
  EXPECT_TRUE(total(e.realparts).contains(Q(0)));
}

TEST(Theorem5, EigenvalueExampleGivesFour) {
  Poly f = P("x*z + x*y*z^2 + x*y^3 + y^3*z^2 + y^5 + y^2*z^4 + z^8");
  auto r = theorem5_exponent(f, std::nullopt);
  EXPECT_EQ(r.value, 4);
  EXPECT_TRUE(r.certificate_constructed);
  EXPECT_TRUE(verify_certificate(r.certificate));
  ASSERT_EQ(r.eigen.realparts.size(), 3u);
  Interval extremes = r.eigen.realparts.front() + r.eigen.realparts.back();
  EXPECT_TRUE(extremes.contains(Q(1)));
}

TEST(Theorem5, EulerCertificateOfDiagonalGerm) {
  Poly f = P("x^2 + y^3 + z^7");
  auto r = theorem5_exponent(f, euler_certificate(f, parse_weights("1/2,1/3,1/7")));
  EXPECT_EQ(r.value, 6);
  EXPECT_EQ(r.exponent.l_min, Interval(Q(1, 7)));
  EXPECT_FALSE(r.certificate_constructed);
}

TEST(Theorem5, QuadraticForm) {
  Poly f = P("x^2 + y^2", kXY);
  EXPECT_EQ(theorem5_exponent(f, euler_certificate(f, parse_weights("1/2,1/2"))).value, 1);
}

TEST(Theorem5, CertificateForAnotherGermIsRejected) {
  Poly f = P("x^2 + y^3", kXY);
  auto cert = euler_certificate(P("x^2 + y^5", kXY), parse_weights("1/2,1/5"));
  EXPECT_THROW(theorem5_exponent(f, cert), DomainError);
}

TEST(Theorem5, GermOutsideItsGradientIdeal) {
  // x^4 + y^5 + x^2*y^3: not quasihomogeneous in any coordinates
  EXPECT_THROW(theorem5_exponent(P("x^4 + y^5 + x^2*y^3", kXY), std::nullopt), DomainError);
}
