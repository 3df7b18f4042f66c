#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "lojex/curves.hpp"
#include "lojex/exponent.hpp"
#include "lojex/localring.hpp"
#include "lojex/parser.hpp"
#include "lojex/reduce.hpp"
#include "lojex/saito5.hpp"
#include "lojex/weights.hpp"
#include "oracles.hpp"

using namespace lojex;
using namespace lojex::testing;

namespace {

Poly random_poly(std::size_t n, std::size_t terms, unsigned max_degree, std::mt19937_64& rng) {
  Poly p(n);
  for (std::size_t k = 0; k < terms; ++k) {
    Exponent e(n, 0);
    unsigned d = static_cast<unsigned>(rng() % (max_degree + 1));
    for (unsigned j = 0; j < d; ++j) ++e[rng() % n];
    p.add_term(e, random_coefficient(rng));
  }
  return p;
}

Rational random_weight(std::mt19937_64& rng) {
  long den = 2 + static_cast<long>(rng() % 11);
  return make_rational(1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den / 2)), den);
}

// Random weight vector satisfying the pairing condition: some (a, 1 - a)
// pairs with a anywhere, plus weights in (0, 1/2].
WeightVector random_paired_weights(std::mt19937_64& rng) {
  std::vector<Rational> l;
  std::size_t pairs = rng() % 3, free = 1 + rng() % 3;
  for (std::size_t j = 0; j < pairs; ++j) {
    long den = 1 + static_cast<long>(rng() % 9);
    Rational a = make_rational(static_cast<long>(rng() % static_cast<std::uint64_t>(5 * den)) - 2 * den, den);
    l.push_back(a);
    l.push_back(1 - a);
  }
  for (std::size_t j = 0; j < free; ++j) l.push_back(random_weight(rng));
  std::shuffle(l.begin(), l.end(), rng);
  return WeightVector(l);
}

}  // namespace

TEST(PolyProperties, RingAxiomsAndLeibniz) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    Poly a = random_poly(3, 5, 4, rng), b = random_poly(3, 5, 4, rng), c = random_poly(3, 4, 3, rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_EQ((a * b).partial(i), a.partial(i) * b + a * b.partial(i));
  }
}

TEST(PolyProperties, TextRoundTrip) {
  std::mt19937_64 rng(102);
  const std::vector<std::string> names = {"u", "v", "w", "t1"};
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(4, 6, 7, rng);
    EXPECT_EQ(parse_poly(to_string(a, names), names), a);
  }
}

TEST(PolyProperties, SubstitutionIsAHomomorphism) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = random_poly(2, 4, 3, rng), b = random_poly(2, 4, 3, rng);
    std::vector<Poly> map = {random_poly(3, 3, 2, rng), random_poly(3, 3, 2, rng)};
    EXPECT_EQ(substitute(a * b, map), substitute(a, map) * substitute(b, map));
    EXPECT_EQ(substitute(a + b, map), substitute(a, map) + substitute(b, map));
    std::vector<Poly> id = {Poly::variable(2, 0), Poly::variable(2, 1)};
    EXPECT_EQ(substitute(a, id), a);
  }
}

TEST(GradingProperties, WeightedOrderIsAdditive) {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 60; ++trial) {
    Poly a = random_poly(3, 4, 5, rng), b = random_poly(3, 4, 5, rng);
    if (a.is_zero() || b.is_zero()) continue;
    Rational p = make_rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
    WeightVector w({p, 1 - p, random_weight(rng)});
    EXPECT_EQ(*weighted_order(a * b, w), *weighted_order(a, w) + *weighted_order(b, w));
  }
}

TEST(ExponentProperties, PermutationAndSquareInvariance) {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 300; ++trial) {
    WeightVector w = random_paired_weights(rng);
    Rational value = loj_wsqh(w).exact_value();
    std::vector<Rational> shuffled = w.weights();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(loj_wsqh(WeightVector(shuffled)).exact_value(), value);
    EXPECT_EQ(loj_wsqh(add_square(w)).exact_value(), value);
    EXPECT_EQ(reference_multiset_exponent(w.weights()), value) << to_string(w);
  }
}

TEST(ExponentProperties, PositiveWeightsReduceToMaxReciprocal) {
  std::mt19937_64 rng(106);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> l;
    std::size_t n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i) l.push_back(random_weight(rng));
    WeightVector w(l);
    Rational low = *std::min_element(l.begin(), l.end());
    EXPECT_EQ(loj_wsqh(w).exact_value(), loj_sqh(w));
    EXPECT_EQ(loj_sqh(w), 1 / low - 1);
  }
}

TEST(ExponentProperties, AtLeastOneWithEqualityForQuadraticMinimum) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 300; ++trial) {
    auto d = loj_wsqh(random_paired_weights(rng));
    EXPECT_GE(d.exact_value(), 1);
    EXPECT_EQ(d.exact_value() == 1, d.l_min == Interval(make_rational(1, 2)));
  }
}

TEST(MilnorProperties, DiagonalProductFormula) {
  for (const auto& a : bp_tuples()) {
    if (a.size() > 3) continue;
    EXPECT_EQ(*milnor_number(bp_germ(a)).value, bp_milnor(a));
  }
}

TEST(MilnorProperties, PrincipalPartDeterminesMilnorNumber) {
  for (const auto& g : sqh_corpus()) {
    if (g.f.nvars() > 3) continue;
    auto c = classify(g.f, g.w);
    ASSERT_NE(c.verdict, Verdict::NONE) << g.name;
    EXPECT_EQ(*milnor_number(g.f).value, *c.principal_milnor) << g.name;
  }
}

TEST(MilnorProperties, AgreesWithNakayamaOracleOnRandomTwoVariableGerms) {
  std::mt19937_64 rng(108);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_saito_type(rng);
    if (g.family == "pair") continue;
    auto oracle = nakayama_milnor(g.germ, 9);
    if (!oracle) continue;
    EXPECT_EQ(*milnor_number(g.germ).value, *oracle) << to_string(g.germ, default_names(3));
  }
}

TEST(StableEquivalence, AddingASquareKeepsInvariants) {
  for (const auto& g : named_germs()) {
    Poly f2 = add_square(g.f);
    WeightVector w2 = add_square(g.w);
    EXPECT_EQ(*milnor_number(f2).value, *milnor_number(g.f).value) << g.name;
    EXPECT_NE(classify(f2, w2).verdict, Verdict::NONE) << g.name;
    EXPECT_EQ(loj_wsqh(w2).exact_value(), loj_wsqh(g.w).exact_value()) << g.name;
  }
}

TEST(SplittingProperties, RandomGermsKeepStateInvariants) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_splitting_germ(rng);
    std::size_t states = 0;
    ReduceOptions o;
    o.observer = [&](const ReductionState& s) {
      ++states;
      auto v = check_state(s);
      EXPECT_TRUE(v.empty()) << (v.empty() ? "" : v.front());
    };
    auto r = splitting_reduce(g.f, g.w, g.pairing, o);
    EXPECT_GE(states, 2u);
    EXPECT_EQ(loj_wsqh(r.weights).exact_value(), loj_wsqh(g.w).exact_value());
    EXPECT_EQ(*milnor_number(r.core).value, *milnor_number(g.f0).value);
  }
}

TEST(InverseMapProperties, RandomTriangularChanges) {
  std::mt19937_64 rng(110);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> map;
    for (std::size_t i = 0; i < 3; ++i) {
      Poly higher = random_poly(3, 3, 3, rng);
      Poly nonlinear(3);
      for (const auto& [e, c] : higher)
        if (total_degree(e) >= 2) nonlinear.add_term(e, c);
      map.push_back(Poly::variable(3, i) * random_coefficient(rng) + nonlinear);
    }
    auto inv = invert_map(map, 5);
    ASSERT_TRUE(inv);
    EXPECT_TRUE(verify_inverse(map, *inv, 5));
  }
}

TEST(EigenProperties, RealPartsSumContainsTrace) {
  std::mt19937_64 rng(111);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + rng() % 4;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    auto e = eigen_real_parts(m);
    Interval sum(Rational(0));
    for (const auto& r : e.realparts) sum = sum + r;
    EXPECT_TRUE(sum.contains(m.trace()));
    EXPECT_EQ(e.realparts.size(), n);
    EXPECT_EQ(e.charpoly, laplace_charpoly(m));
  }
}

TEST(EigenProperties, EulerCertificateReproducesSqhFormula) {
  std::mt19937_64 rng(112);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_saito_type(rng);
    if (g.family == "pair") continue;
    Poly principal = classify(g.germ, g.w).principal;
    auto r = theorem5_exponent(principal, euler_certificate(principal, g.w));
    EXPECT_EQ(r.value, loj_sqh(g.w));
  }
}

TEST(CurveProperties, LowerBoundNeverExceedsFormula) {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_saito_type(rng);
    Rational value = loj_wsqh(g.w).exact_value();
    auto lb = lower_bound_search(g.germ, 4, 8, static_cast<std::uint64_t>(trial));
    EXPECT_LE(lb.value, value) << to_string(g.germ, default_names(3)) << " " << to_string(g.w);
    EXPECT_EQ(curve_ratio(g.germ, lb.witness), lb.value);
  }
}
