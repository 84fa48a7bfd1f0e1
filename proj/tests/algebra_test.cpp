#include <gtest/gtest.h>

#include <random>

#include "fuzzymin/algebra.hpp"
#include "fuzzymin/errors.hpp"
#include "support.hpp"

using namespace fuzzymin;
using fuzzymin::testing::deg;

namespace {

mpq_class q(long p, long d) {
    mpq_class r(p, d);
    r.canonicalize();
    return r;
}

const Algebra kFamilies[] = {Algebra::godel(), Algebra::product(), Algebra::lukasiewicz()};

} // namespace

TEST(Degree, ParsesDecimalsAndFractionsExactly) {
    EXPECT_EQ(deg("0.8").value(), q(4, 5));
    EXPECT_EQ(deg("7/10").value(), q(7, 10));
    EXPECT_EQ(deg(".5"), deg("1/2"));
    EXPECT_EQ(deg("1"), Degree::one());
    EXPECT_EQ(deg("0.000"), Degree::zero());
    EXPECT_THROW(deg("1.5"), ParseError);
    EXPECT_THROW(deg("3/2"), ParseError);
    EXPECT_THROW(deg("0.x"), ParseError);
    EXPECT_THROW(deg("1/0"), ParseError);
    EXPECT_THROW(deg(""), ParseError);
    EXPECT_THROW(Degree::fraction(-1, 2), UsageError);
}

TEST(Degree, Printing) {
    EXPECT_EQ(deg("0.5").to_string(), "1/2");
    EXPECT_EQ(deg("0.5").to_decimal_string(), "0.5");
    EXPECT_EQ(deg("0.504").to_decimal_string(), "0.504");
    EXPECT_EQ(deg("1/3").to_decimal_string(), "1/3");
    EXPECT_EQ(deg("1/16").to_decimal_string(), "0.0625");
    EXPECT_EQ(Degree::one().to_decimal_string(), "1");
    EXPECT_EQ(Degree::zero().to_decimal_string(), "0");
}

TEST(Degree, OrderIsExact) {
    EXPECT_LT(deg("1/3"), deg("0.3334"));
    EXPECT_GT(deg("1/3"), deg("0.3333"));
    EXPECT_EQ(deg("2/6"), deg("1/3"));
}

TEST(Algebra, Tnorm) {
    EXPECT_EQ(Algebra::godel().tnorm(deg("0.7"), deg("0.6")), deg("0.6"));
    EXPECT_EQ(Algebra::lukasiewicz().tnorm(deg("0.7"), deg("0.6")).value(), q(7, 10) + q(6, 10) - 1);
    EXPECT_EQ(Algebra::product().tnorm(deg("0.7"), deg("0.6")).value(), q(7, 10) * q(6, 10));
    for (const auto &alg : kFamilies) EXPECT_EQ(alg.tnorm(deg("0.37"), Degree::one()), deg("0.37"));
}

TEST(Algebra, Snorm) {
    EXPECT_EQ(Algebra::product().snorm(deg("0.5"), deg("0.5")).value(), q(1, 2) + q(1, 2) - q(1, 4));
    EXPECT_EQ(Algebra::godel().snorm(deg("0.2"), deg("0.9")), deg("0.9"));
    for (const auto &alg : kFamilies) EXPECT_EQ(alg.snorm(deg("0.37"), Degree::zero()), deg("0.37"));
    EXPECT_EQ(Algebra::lukasiewicz().snorm(deg("0.7"), deg("0.6")), Degree::one());
}

TEST(Algebra, Residuum) {
    EXPECT_EQ(Algebra::product().residuum(deg("0.8"), deg("0.4")).value(), q(4, 10) / q(8, 10));
    EXPECT_EQ(Algebra::lukasiewicz().residuum(deg("0.9"), deg("0.4")).value(), 1 - q(9, 10) + q(4, 10));
    EXPECT_EQ(Algebra::godel().residuum(deg("0.9"), deg("0.4")), deg("0.4"));
    for (const auto &alg : kFamilies) EXPECT_EQ(alg.residuum(deg("0.3"), deg("0.5")), Degree::one());
}

TEST(Algebra, Negation) {
    EXPECT_EQ(Algebra::lukasiewicz().negation(deg("0.3")).value(), 1 - q(3, 10));
    EXPECT_EQ(Algebra::godel().negation(Degree::zero()), Degree::one());
    EXPECT_EQ(Algebra::godel().negation(deg("0.3")), Algebra::godel().residuum(deg("0.3"), Degree::zero()));
    EXPECT_EQ(Algebra::godel().negation(deg("0.3")), Degree::zero());
    EXPECT_EQ(Algebra::product().negation(deg("0.3")), Degree::zero());
}

TEST(Algebra, Baaz) {
    for (const auto &alg : kFamilies) {
        EXPECT_EQ(alg.baaz(Degree::one()), Degree::one());
        EXPECT_EQ(alg.baaz(deg("0.999")), Degree::zero());
        EXPECT_EQ(alg.baaz(Degree::zero()), Degree::zero());
    }
    const auto chain = Algebra::finite_lukasiewicz(5);
    EXPECT_EQ(chain.baaz(chain.element(3)), Degree::zero());
    EXPECT_EQ(chain.baaz(chain.element(4)), Degree::one());
}

TEST(Algebra, BigOtimes) {
    EXPECT_EQ(Algebra::godel().big_otimes({}), Degree::one());
    const Degree gs[] = {deg("0.8"), deg("0.5"), deg("0.9")};
    EXPECT_EQ(Algebra::godel().big_otimes(gs), std::min({gs[0], gs[1], gs[2]}));
    const Degree ps[] = {deg("0.5"), deg("0.5")};
    EXPECT_EQ(Algebra::product().big_otimes(ps).value(), q(1, 2) * q(1, 2));
    const Degree one[] = {deg("0.42")};
    for (const auto &alg : kFamilies) EXPECT_EQ(alg.big_otimes(one), deg("0.42"));
    const Degree a[] = {deg("0.3"), deg("0.9"), deg("0.8")}, b[] = {deg("0.8"), deg("0.3"), deg("0.9")};
    for (const auto &alg : kFamilies) EXPECT_EQ(alg.big_otimes(a), alg.big_otimes(b));
}

TEST(Algebra, FiniteChainMembership) {
    const auto chain = Algebra::finite_godel(3);
    EXPECT_EQ(chain.name(), "chain-3");
    EXPECT_EQ(chain.element(1), deg("1/2"));
    EXPECT_TRUE(chain.contains(deg("0.5")));
    EXPECT_FALSE(chain.contains(deg("0.3")));
    EXPECT_THROW(chain.tnorm(deg("0.3"), Degree::one()), UsageError);
    EXPECT_EQ(chain.tnorm(deg("0.5"), Degree::one()), deg("0.5"));
}

TEST(Axioms, FamiliesPassAnalytically) {
    for (const auto &alg : kFamilies) EXPECT_TRUE(check_axioms(alg).empty()) << alg.name();
}

TEST(Axioms, BooleanTwoChainPasses) { EXPECT_TRUE(check_axioms(Algebra::finite_godel(2)).empty()); }

TEST(Axioms, AsymmetricTnormIsReported) {
    ChainTables t = Algebra::finite_godel(3).tables();
    t.tnorm[1][2] = 0; // now 1 (x) 2 != 2 (x) 1
    const auto violations = check_axioms(Algebra::finite_chain(t));
    ASSERT_FALSE(violations.empty());
    EXPECT_TRUE(std::any_of(violations.begin(), violations.end(),
                            [](const AxiomViolation &v) { return v.axiom == "commutativity"; }));
}

TEST(Axioms, FiniteChainsUpToTwelve) {
    for (std::size_t n = 2; n <= 12; ++n) {
        EXPECT_TRUE(check_axioms(Algebra::finite_godel(n)).empty()) << n;
        EXPECT_TRUE(check_axioms(Algebra::finite_lukasiewicz(n)).empty()) << n;
    }
}

TEST(Axioms, RandomTriplesOverFamilies) {
    std::mt19937_64 rng(11);
    auto pick = [&] { return Degree::fraction(static_cast<std::int64_t>(rng() % 101), 100); };
    for (const auto &alg : kFamilies)
        for (int k = 0; k < 2000; ++k) {
            const Degree x = pick(), y = pick(), z = pick(), t = pick();
            ASSERT_TRUE(check_axioms_at(alg, x, y, z, t).empty()) << alg.name();
            const Degree xy = alg.tnorm(x, y);
            ASSERT_LE(xy, x);
            ASSERT_LE(xy, y);
            ASSERT_EQ(xy.is_one(), x.is_one() && y.is_one());
            ASSERT_EQ(alg.residuum(x, y).is_one(), x <= y);
        }
}

TEST(TboxMinimality, Premises) {
    EXPECT_TRUE(supports_tbox_minimality(Algebra::godel()));
    EXPECT_TRUE(supports_tbox_minimality(Algebra::lukasiewicz()));
    EXPECT_TRUE(supports_tbox_minimality(Algebra::product()));
    EXPECT_TRUE(supports_tbox_minimality(Algebra::finite_godel(4)));
    ChainTables t = Algebra::finite_godel(3).tables();
    for (auto &row : t.snorm) std::fill(row.begin(), row.end(), 0);
    EXPECT_FALSE(supports_tbox_minimality(Algebra::finite_chain(t)));
}
