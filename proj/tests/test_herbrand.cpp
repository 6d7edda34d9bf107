#include <gtest/gtest.h>

#include <random>

#include "ramtower/errors.hpp"
#include "ramtower/herbrand.hpp"

using namespace ramtower;

namespace {

BreakFiltration random_filtration(std::mt19937_64& rng) {
    const std::uint64_t primes[] = {2, 3, 5};
    const std::size_t count = rng() % 4;
    std::vector<Break> breaks;
    Rat at(static_cast<long>(rng() % 3));
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < count; ++k) {
        const std::uint64_t drop = primes[rng() % 3];
        breaks.push_back(Break{at, drop});
        total *= drop;
        at += make_rat(static_cast<long>(1 + rng() % 12), static_cast<long>(1 + rng() % 3));
    }
    return BreakFiltration(total, breaks);
}

} // namespace

TEST(Phi, SingleBreak) {
    const PiecewiseLinear phi = phi_from_filtration(BreakFiltration::single(Rat(3), 2));
    EXPECT_EQ(phi(Rat(2)), Rat(2));
    EXPECT_EQ(phi(Rat(3)), Rat(3));
    EXPECT_EQ(phi(Rat(15)), Rat(9));
    EXPECT_EQ(phi.final_slope(), make_rat(1, 2));
}

TEST(Phi, TrivialIsIdentity) {
    EXPECT_EQ(phi_from_filtration(BreakFiltration::trivial()), PiecewiseLinear());
    EXPECT_EQ(phi_from_filtration(BreakFiltration(2, {{Rat(0), 2}})).final_slope(), make_rat(1, 2));
}

TEST(Phi, TwoBreaks) {
    const PiecewiseLinear phi = phi_from_filtration(BreakFiltration(4, {{Rat(1), 2}, {Rat(3), 2}}));
    EXPECT_EQ(phi(Rat(3)), Rat(2));
    EXPECT_EQ(phi.slope_after(Rat(3)), make_rat(1, 4));
}

TEST(Filtration, Validation) {
    EXPECT_THROW(BreakFiltration(4, {{Rat(3), 2}}), DomainError);
    EXPECT_THROW(BreakFiltration(4, {{Rat(3), 2}, {Rat(3), 2}}), DomainError);
    EXPECT_THROW(BreakFiltration(2, {{Rat(-1), 2}}), DomainError);
    EXPECT_THROW(BreakFiltration(1, {{Rat(1), 1}}), DomainError);
    const BreakFiltration f(4, {{Rat(1), 2}, {Rat(3), 2}});
    EXPECT_EQ(f.order_at(Rat(1)), 4U);
    EXPECT_EQ(f.order_at(make_rat(3, 2)), 2U);
    EXPECT_EQ(f.order_at(Rat(4)), 1U);
}

TEST(ComposeTower, Examples) {
    const BreakFiltration l1 = BreakFiltration::single(Rat(3), 2);
    EXPECT_EQ(compose_tower({l1}), phi_from_filtration(l1));
    EXPECT_EQ(compose_tower({l1, BreakFiltration::single(Rat(15), 2)})(Rat(63)), Rat(21));
    EXPECT_EQ(compose_tower({l1, BreakFiltration::trivial()}), compose_tower({l1}));
    EXPECT_EQ(compose_tower({}), PiecewiseLinear());
}

TEST(Numbering, LowerToUpper) {
    EXPECT_EQ(lower_to_upper(BreakFiltration::single(Rat(7), 3)), (std::vector<Rat>{Rat(7)}));
    EXPECT_EQ(lower_to_upper(BreakFiltration(4, {{Rat(3), 2}, {Rat(15), 2}})), (std::vector<Rat>{Rat(3), Rat(9)}));
    EXPECT_TRUE(lower_to_upper(BreakFiltration::trivial()).empty());
}

TEST(Numbering, RestrictionIndex) {
    EXPECT_EQ(subgroup_restriction_index(Rat(5), PiecewiseLinear()), Rat(5));
    const PiecewiseLinear q = phi_from_filtration(BreakFiltration::single(Rat(3), 2));
    EXPECT_EQ(subgroup_restriction_index(Rat(9), q), Rat(15));
    EXPECT_EQ(subgroup_restriction_index(Rat(2), q), Rat(2));
    EXPECT_THROW(subgroup_restriction_index(Rat(-1), q), DomainError);
}

TEST(PiecewiseLinear, Validation) {
    EXPECT_THROW(PiecewiseLinear({{Rat(1), Rat(1)}}, Rat(1)), DomainError);
    EXPECT_THROW(PiecewiseLinear({{Rat(0), Rat(0)}}, Rat(0)), DomainError);
    EXPECT_THROW(PiecewiseLinear()(Rat(-1)), DomainError);
}

TEST(HerbrandProperty, PhiPsiInverse) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const PiecewiseLinear phi = phi_from_filtration(random_filtration(rng));
        const PiecewiseLinear inv = psi(phi);
        EXPECT_EQ(compose(phi, inv), PiecewiseLinear());
        EXPECT_EQ(compose(inv, phi), PiecewiseLinear());
        EXPECT_EQ(psi(inv), phi);
        const Rat x = make_rat(static_cast<long>(rng() % 100), 7);
        EXPECT_EQ(inv(phi(x)), x);
        EXPECT_EQ(phi.inverse_at(phi(x)), x);
    }
}

TEST(HerbrandProperty, PhiShape) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const BreakFiltration f = random_filtration(rng);
        const PiecewiseLinear phi = phi_from_filtration(f);
        EXPECT_EQ(phi(Rat(0)), Rat(0));
        EXPECT_EQ(phi.final_slope(), make_rat(1, static_cast<long>(f.total_order())));
        Rat prev = phi(Rat(0));
        for (int k = 1; k < 40; ++k) {
            const Rat x = make_rat(k, 2);
            EXPECT_GT(phi(x), prev);
            EXPECT_EQ(phi.slope_after(x), make_rat(static_cast<long>(f.order_at(x + make_rat(1, 1000))),
                                                   static_cast<long>(f.total_order())));
            prev = phi(x);
        }
    }
}

TEST(HerbrandProperty, UpperLowerRoundTrip) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const BreakFiltration f = random_filtration(rng);
        std::vector<std::uint64_t> drops;
        for (const Break& b : f.breaks()) {
            drops.push_back(b.drop);
        }
        EXPECT_EQ(upper_to_lower(lower_to_upper(f), drops, f.total_order()), f);
    }
    EXPECT_THROW(upper_to_lower({Rat(3), Rat(2)}, {2, 2}, 4), DomainError);
    EXPECT_THROW(upper_to_lower({Rat(3)}, {2}, 4), DomainError);
}

// With breaks increasing bottom to top, each layer's break is also a lower
// break of the whole group, and the composed phi is that group's phi.
TEST(HerbrandProperty, CompositionMatchesFullFiltration) {
    std::mt19937_64 rng(4);
    const std::uint64_t primes[] = {2, 3, 5};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BreakFiltration> layers;
        std::vector<Break> full;
        std::uint64_t total = 1;
        Rat b(static_cast<long>(rng() % 4));
        for (int k = 0; k < 3; ++k) {
            const std::uint64_t drop = primes[rng() % 3];
            layers.push_back(BreakFiltration::single(b, drop));
            full.push_back(Break{b, drop});
            total *= drop;
            b += make_rat(static_cast<long>(1 + rng() % 20), static_cast<long>(1 + rng() % 2));
        }
        const PiecewiseLinear composed = compose_tower(layers);
        EXPECT_EQ(composed, phi_from_filtration(BreakFiltration(total, full))) << "trial " << trial;
        EXPECT_EQ(composed, compose(compose_tower({layers[0], layers[1]}), phi_from_filtration(layers[2])));
    }
}
