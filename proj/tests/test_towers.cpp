#include <gtest/gtest.h>

#include <random>

#include "ramtower/errors.hpp"
#include "ramtower/towers.hpp"

using namespace ramtower;

namespace {

TowerParams params(std::uint32_t p, std::uint64_t q, std::uint32_t g, long c, std::uint32_t N) {
    return TowerParams{p, q, g, 1, N, Rat(c)};
}

std::vector<std::optional<Rat>> vals(std::initializer_list<long> v) {
    std::vector<std::optional<Rat>> out;
    for (const long x : v) {
        out.emplace_back(x < 0 ? std::optional<Rat>() : std::optional<Rat>(Rat(x)));
    }
    return out;
}

} // namespace

TEST(Torsion, SimplestTrace) {
    const TorsionTrace tr = torsion_valuations(vals({1}), 1, 2, 8);
    ASSERT_GE(tr.valuations.size(), 9U);
    for (std::size_t n = 0; n < tr.valuations.size(); ++n) {
        EXPECT_EQ(tr.valuations[n], make_rat(1, 1L << n));
    }
    EXPECT_EQ(tr.m, 1U);
    EXPECT_EQ(tr.m_polygon, 1U);
}

TEST(Torsion, TwoCoefficients) {
    const TorsionTrace tr = torsion_valuations(vals({1, 1}), 1, 2, 4);
    EXPECT_EQ(tr.valuations[0], make_rat(1, 3));
    EXPECT_EQ(tr.polygons[0].sides().size(), 1U);
}

TEST(Torsion, RejectsBadInput) {
    EXPECT_THROW(torsion_valuations({}, 1, 2, 3), DomainError);
    EXPECT_THROW(torsion_valuations(vals({-1, 1}), 1, 2, 3), DomainError);
    EXPECT_THROW(torsion_valuations({Rat(1, 2)}, 1, 2, 3), DomainError);
    EXPECT_THROW(torsion_valuations(vals({1}), 1, 6, 3), DomainError);
    EXPECT_THROW(torsion_valuations(vals({1}), 1, 1, 3), DomainError);
    EXPECT_THROW(torsion_valuations(vals({1}), 0, 2, 3), DomainError);
}

TEST(Torsion, RatioLawProperty) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t q = 2 + rng() % 3;
        const std::size_t d = 1 + rng() % 4;
        std::vector<std::optional<Rat>> v;
        for (std::size_t j = 0; j < d; ++j) {
            if (j > 0 && rng() % 4 == 0) {
                v.emplace_back();
            } else {
                v.emplace_back(make_rat(static_cast<long>(1 + rng() % 12), static_cast<long>(1 + rng() % 3)));
                if (*v.back() < 1) {
                    v.back() = Rat(1);
                }
            }
        }
        const std::uint32_t g = 1 + static_cast<std::uint32_t>(rng() % 2);
        const TorsionTrace tr = torsion_valuations(v, g, q, 6);
        const Rat qd(ipow(q, d));
        ASSERT_GE(tr.m, 1U);
        ASSERT_GT(tr.m_polygon, 0U);
        EXPECT_LE(tr.m, tr.m_polygon);
        for (std::size_t n = tr.m; n < tr.valuations.size(); ++n) {
            EXPECT_EQ(tr.valuations[n] * qd, tr.valuations[n - 1]);
        }
        if (tr.m > 1) {
            EXPECT_NE(tr.valuations[tr.m - 1] * qd, tr.valuations[tr.m - 2]);
        }
        for (std::size_t n = 1; n < tr.valuations.size(); ++n) {
            EXPECT_LT(tr.valuations[n], tr.valuations[n - 1]);
        }
    }
}

TEST(Torsion, MinSelection) {
    const TorsionTrace hi = torsion_valuations(vals({4, 1}), 1, 2, 3, RootSelection::MaxValuation);
    const TorsionTrace lo = torsion_valuations(vals({4, 1}), 1, 2, 3, RootSelection::MinValuation);
    EXPECT_EQ(hi.valuations[0], Rat(3));
    EXPECT_EQ(lo.valuations[0], make_rat(1, 2));
}

TEST(Breaks, LowerValues) {
    const TowerParams P = params(2, 2, 1, 1, 0);
    EXPECT_EQ(layer_break_B(P, 1), Rat(3));
    EXPECT_EQ(layer_break_B(P, 2), Rat(15));
    EXPECT_EQ(layer_break_B(P, 3), Rat(63));
    EXPECT_EQ(layer_break_B(params(3, 3, 1, 1, 0), 1), make_rat(7, 2));
    EXPECT_THROW(layer_break_B(P, 0), DomainError);
}

TEST(Breaks, UpperValues) {
    const TowerParams P = params(2, 2, 1, 1, 0);
    EXPECT_EQ(upper_break_W(P, 1), Rat(3));
    EXPECT_EQ(upper_break_W(P, 2), Rat(9));
    EXPECT_EQ(upper_break_W(P, 3), Rat(21));
    for (std::uint32_t n = 1; n <= 3; ++n) {
        EXPECT_EQ(derive_W_by_composition(P, n), upper_break_W(P, n));
    }
    EXPECT_EQ(upper_break_W(params(2, 2, 2, 1, 0), 1), make_rat(5, 3));
    EXPECT_EQ(derive_W_by_composition(params(2, 2, 2, 1, 0), 1), make_rat(5, 3));
}

TEST(Breaks, FirstLayerIsLowerBreak) {
    for (const std::uint32_t p : {2U, 3U, 5U}) {
        for (const std::uint32_t g : {1U, 2U, 3U}) {
            for (const long c : {1L, 2L, 3L}) {
                const TowerParams P = params(p, p, g, c, 0);
                EXPECT_EQ(upper_break_W(P, 1), layer_break_B(P, 1));
                EXPECT_EQ(derive_W_by_composition(P, 1), layer_break_B(P, 1));
            }
        }
    }
}

// For N = 0 the closed form W agrees with composition at every level.
TEST(Breaks, CompositionAgreesFromBase) {
    const GridReport r = verify_grid({2, 3, 5}, {1, 2, 3}, {1, 2, 3}, {0}, 6);
    EXPECT_EQ(r.tuples, 162U);
    EXPECT_TRUE(r.ok()) << r.first_counterexample.value_or("");
}

TEST(Breaks, CompositionIsHerbrandOfWholeGroup) {
    for (const std::uint32_t N : {0U, 1U, 2U}) {
        const TowerParams P = params(3, 3, 2, 2, N);
        const PiecewiseLinear phi = phi_from_filtration(tower_lower_filtration(P, N + 5));
        for (std::uint32_t k = N + 1; k <= N + 5; ++k) {
            EXPECT_EQ(phi(layer_break_B(P, k)), derive_W_by_composition(P, k));
            EXPECT_EQ(psi(phi)(derive_W_by_composition(P, k)), layer_break_B(P, k));
        }
    }
}

TEST(Breaks, Monotone) {
    const TowerParams P = params(5, 5, 2, 3, 1);
    for (std::uint32_t n = 3; n <= 8; ++n) {
        EXPECT_GT(layer_break_B(P, n), layer_break_B(P, n - 1));
        EXPECT_GT(upper_break_W(P, n), upper_break_W(P, n - 1));
        EXPECT_LT(derive_W_by_composition(P, n), layer_break_B(P, n));
    }
}

TEST(Params, Validation) {
    EXPECT_THROW(params(4, 4, 1, 1, 0).validate(), DomainError);
    EXPECT_THROW(params(2, 6, 1, 1, 0).validate(), DomainError);
    EXPECT_THROW(params(2, 2, 0, 1, 0).validate(), DomainError);
    EXPECT_THROW(params(2, 2, 1, 0, 0).validate(), DomainError);
    EXPECT_NO_THROW(params(3, 9, 1, 1, 0).validate());
}

TEST(Schedule, Tables) {
    const BreakSchedule s = filtration_tables(params(2, 2, 1, 1, 0), 2);
    EXPECT_EQ(s.lower, (std::vector<Rat>{Rat(3), Rat(15)}));
    EXPECT_EQ(s.upper, (std::vector<Rat>{Rat(3), Rat(9)}));
    ASSERT_EQ(s.lower_table.size(), 3U);
    EXPECT_EQ(s.lower_table[0].lo, Rat(0));
    EXPECT_EQ(s.lower_table[0].hi, Rat(3));
    EXPECT_EQ(s.lower_table[0].order, 4U);
    EXPECT_EQ(s.lower_table[1].hi, Rat(15));
    EXPECT_EQ(s.lower_table[1].order, 2U);
    EXPECT_FALSE(s.lower_table[2].hi.has_value());
    EXPECT_EQ(s.lower_table[2].order, 1U);
    EXPECT_EQ(s.upper_table[1].hi, Rat(9));
    EXPECT_TRUE(s.lints.empty());
    EXPECT_EQ(filtration_tables(params(2, 2, 1, 1, 3), 4).lower.size(), 1U);
}

TEST(Schedule, NonIntegralLint) {
    const BreakSchedule s = filtration_tables(params(3, 3, 1, 1, 0), 2);
    ASSERT_FALSE(s.lints.empty());
    EXPECT_NE(s.lints[0].find("7/2"), std::string::npos);
}

TEST(OverK, Examples) {
    EXPECT_EQ(breaks_over_K(Rat(21), BottomLayer{}), Rat(21));
    EXPECT_EQ(breaks_over_K(Rat(9), BottomLayer{2, Rat(1), Rat(1)}), Rat(5));
    EXPECT_THROW(breaks_over_K(Rat(1), BottomLayer{2, Rat(1), Rat(1)}), GuardViolation);
    EXPECT_THROW(breaks_over_K(Rat(5), BottomLayer{0, Rat(0), Rat(0)}), DomainError);
    EXPECT_THROW(breaks_over_K(Rat(5), BottomLayer{1, Rat(2), Rat(1)}), DomainError);
}

TEST(Character, NormIndex) {
    EXPECT_EQ(norm_index(1, 2), 1U);
    EXPECT_EQ(norm_index(2, 2), 1U);
    EXPECT_EQ(norm_index(3, 2), 2U);
    for (std::uint64_t n = 1; n <= 20; ++n) {
        EXPECT_EQ(norm_index(n, 1), n);
    }
    EXPECT_THROW(norm_index(3, 0), DomainError);
}

TEST(Character, Breaks) {
    const CharacterBreak cb = character_breaks(params(2, 2, 1, 1, 0), 2);
    EXPECT_EQ(cb.upper, Rat(9));
    EXPECT_EQ(cb.level, 2U);
    for (std::uint32_t n = 1; n <= 5; ++n) {
        EXPECT_EQ(character_breaks(params(3, 3, 1, 2, 0), n).upper, upper_break_W(params(3, 3, 1, 2, 0), n));
    }
    EXPECT_EQ(character_breaks(params(2, 2, 2, 1, 0), 2).upper, upper_break_W(params(2, 2, 2, 1, 0), 4));
    EXPECT_THROW(character_breaks(params(2, 4, 1, 1, 0), 2), DomainError);
    EXPECT_THROW(character_breaks(params(2, 2, 1, 1, 3), 2), DomainError);
}
