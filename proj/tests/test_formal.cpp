#include <gtest/gtest.h>

#include <random>

#include "ramtower/errors.hpp"
#include "ramtower/formal.hpp"

using namespace ramtower;

namespace {

const RationalRing Q;

BivariateSeries<RationalRing> law_from(std::size_t D, const std::vector<std::tuple<std::size_t, std::size_t, long>>& t) {
    BivariateSeries<RationalRing> F(Q, D);
    for (const auto& [i, j, c] : t) {
        F.set(i, j, Rat(c));
    }
    return F;
}

PowerSeries<RationalRing> log_series(const std::vector<Rat>& b, std::uint64_t q, std::size_t D) {
    PowerSeries<RationalRing> f(Q, D);
    std::uint64_t e = 1;
    for (const Rat& c : b) {
        if (e > D) {
            break;
        }
        f.set(e, c);
        e *= q;
    }
    return f;
}

// F(tX, tY) = f^{-1}(f(tX) + f(tY)) as a series in t over Q[X, Y].
BivariateSeries<RationalRing> law_oracle(const std::vector<Rat>& b, std::uint64_t q, std::size_t D) {
    const MultiPolyRing R2(2);
    const PowerSeries<RationalRing> f = log_series(b, q, D);
    const PowerSeries<RationalRing> finv = comp_inverse(f, D);
    PowerSeries<MultiPolyRing> outer(R2, D);
    PowerSeries<MultiPolyRing> inner(R2, D);
    for (std::size_t n = 1; n <= D; ++n) {
        outer.set(n, R2.from_rat(finv.coeff(n)));
        if (f.coeff(n) != 0) {
            inner.set(n, MultiPoly::variable_power(2, 1, n, f.coeff(n)) + MultiPoly::variable_power(2, 2, n, f.coeff(n)));
        }
    }
    const PowerSeries<MultiPolyRing> F = compose(outer, inner);
    BivariateSeries<RationalRing> out(Q, D);
    for (std::size_t n = 1; n <= D; ++n) {
        for (const auto& [e, c] : F.coeff(n).terms()) {
            out.set(e[0], e[1], c);
        }
    }
    return out;
}

PowerSeries<FiniteFieldRing> monomial_fq(const FqFieldPtr& F, std::size_t D, std::size_t n) {
    return PowerSeries<FiniteFieldRing>::monomial(FiniteFieldRing(F), D, n, F->one());
}

} // namespace

TEST(GroupLaw, Examples) {
    EXPECT_TRUE(check_group_law(BivariateSeries<RationalRing>::additive(Q, 10)).ok);
    EXPECT_TRUE(check_group_law(law_from(10, {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}})).ok);
    const CheckReport bad = check_group_law(law_from(6, {{1, 0, 1}, {0, 1, 1}, {2, 0, 1}}));
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.check, "unit");
    EXPECT_EQ(bad.monomial, (std::vector<std::size_t>{2, 0}));
}

TEST(GroupLaw, DetectsNonAssociativity) {
    const CheckReport r = check_group_law(law_from(6, {{1, 0, 1}, {0, 1, 1}, {2, 1, 1}, {1, 2, 1}}));
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.check, "associativity");
    const CheckReport c = check_group_law(law_from(6, {{1, 0, 1}, {0, 1, 1}, {2, 1, 1}}));
    EXPECT_EQ(c.check, "commutativity");
}

TEST(Logarithm, UniversalCoefficients) {
    for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{2, 2}, {3, 3}, {2, 4}}) {
        const ADescriptor A = ADescriptor::make(p, q);
        const UniversalATypical L = atypical_logarithm(A, 2, 2);
        const Rat ip(1, p);
        EXPECT_EQ(L.b[0], MultiPoly::constant(2, Rat(1)));
        EXPECT_EQ(L.b[1], MultiPoly::variable_power(2, 1, 1, ip));
        const MultiPoly b2 = MultiPoly::variable_power(2, 2, 1, ip) + MultiPoly::variable_power(2, 1, q + 1, ip * ip);
        EXPECT_EQ(L.b[2], b2);
    }
    EXPECT_THROW(ADescriptor::make(4, 4), DomainError);
    EXPECT_THROW(ADescriptor::make(2, 6), DomainError);
}

TEST(Logarithm, SpecializationCommutes) {
    std::mt19937_64 rng(8);
    const ADescriptor A = ADescriptor::make(2, 2);
    const UniversalATypical L = atypical_logarithm(A, 3, 4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> vals;
        ATypicalSpec spec;
        for (std::size_t i = 1; i <= 3; ++i) {
            vals.push_back(make_rat(static_cast<long>(rng() % 7) - 3, 1 + 2 * static_cast<long>(rng() % 3)));
            spec[i] = vals.back();
        }
        const std::vector<Rat> b = specialized_logarithm(A, spec, 16);
        ASSERT_EQ(b.size(), 5U);
        for (std::size_t i = 0; i < b.size(); ++i) {
            EXPECT_EQ(L.b[i].evaluate(vals), b[i]) << i;
        }
    }
}

TEST(ATypical, MatchesDirectConstruction) {
    std::mt19937_64 rng(12);
    for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{2, 2}, {3, 3}, {2, 4}}) {
        const ADescriptor A = ADescriptor::make(p, q);
        for (int trial = 0; trial < 4; ++trial) {
            ATypicalSpec spec{{1, Rat(static_cast<long>(rng() % 5))}, {2, make_rat(static_cast<long>(rng() % 5), 5 + 2 * p)}};
            const std::size_t D = 9;
            const FormalModule<RationalRing> M = atypical_module(A, spec, D, {Rat(-1), Rat(3)});
            const std::vector<Rat> b = specialized_logarithm(A, spec, D);
            EXPECT_EQ(M.law, law_oracle(b, q, D));
            const PowerSeries<RationalRing> f = log_series(b, q, D);
            const PowerSeries<RationalRing> finv = comp_inverse(f, D);
            for (const Rat a : {Rat(p), Rat(-1), Rat(3)}) {
                ASSERT_NE(M.bracket(a), nullptr);
                EXPECT_EQ(*M.bracket(a), compose(finv, f.scaled(a))) << to_string(a);
            }
            EXPECT_TRUE(check_group_law(M.law).ok);
        }
    }
}

TEST(ATypical, AdditiveSpec) {
    const ADescriptor A = ADescriptor::make(3, 3);
    const FormalModule<RationalRing> M = atypical_module(A, {}, 12);
    EXPECT_EQ(M.law, BivariateSeries<RationalRing>::additive(Q, 12));
    EXPECT_EQ(M.pi_bracket(), PowerSeries<RationalRing>::monomial(Q, 12, 1, Rat(3)));
    EXPECT_TRUE(check_pi_congruence(M, {}, 2).ok);
}

TEST(ATypical, RejectsBadSpec) {
    const ADescriptor A = ADescriptor::make(2, 2);
    EXPECT_THROW(atypical_module(A, {{1, make_rat(1, 2)}}, 8), DomainError);
    EXPECT_THROW(atypical_module(A, {{0, Rat(1)}}, 8), DomainError);
    EXPECT_THROW(atypical_module(A, {}, 0), DomainError);
}

TEST(Honda, PiBracketIsFrobeniusPower) {
    for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{2, 2}, {3, 3}, {2, 4}}) {
        const ADescriptor A = ADescriptor::make(p, q);
        const auto F = fq_make(p, A.residue_degree());
        for (std::size_t h = 1; h <= 2; ++h) {
            const std::size_t D = static_cast<std::size_t>(checked_pow(q, h)) * 2;
            const FormalModule<RationalRing> M = atypical_module(A, honda_spec(h), D);
            const FormalModule<FiniteFieldRing> R = reduce_module(M, F);
            EXPECT_EQ(R.pi_bracket(), monomial_fq(F, D, checked_pow(q, h))) << p << " " << q << " " << h;
            EXPECT_EQ(height(R.pi_bracket(), q).height, h);
            EXPECT_TRUE(check_group_law(R.law).ok);
            EXPECT_TRUE(check_pi_congruence(M, honda_spec(h), h).ok);
        }
    }
}

TEST(Honda, FrobeniusIsEndomorphism) {
    const ADescriptor A = ADescriptor::make(2, 2);
    const auto F = fq_make(2, 1);
    const FormalModule<FiniteFieldRing> R = reduce_module(atypical_module(A, honda_spec(2), 16), F);
    EXPECT_TRUE(check_hom(monomial_fq(F, 16, 2), R, R).ok);
    EXPECT_TRUE(check_hom(monomial_fq(F, 16, 1), R, R).ok);
    PowerSeries<FiniteFieldRing> shifted = monomial_fq(F, 16, 1);
    shifted.set(0, F->one());
    EXPECT_THROW(check_hom(shifted, R, R), DomainError);
    PowerSeries<FiniteFieldRing> bad = monomial_fq(F, 16, 1);
    bad.set(2, F->one());
    EXPECT_FALSE(check_hom(bad, R, R).ok);
}

TEST(Height, Examples) {
    const auto F = fq_make(3, 1);
    EXPECT_EQ(height(monomial_fq(F, 30, 1), 3).height, 0U);
    EXPECT_EQ(height(monomial_fq(F, 30, 27), 3).height, 3U);
    EXPECT_FALSE(height(PowerSeries<FiniteFieldRing>(FiniteFieldRing(F), 30), 3).height.has_value());
    const AdditivityReport r = height_additivity_check(monomial_fq(F, 30, 3), monomial_fq(F, 30, 3), 3);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.ht_composite.height, 2U);
    const AdditivityReport id = height_additivity_check(monomial_fq(F, 30, 1), monomial_fq(F, 30, 9), 3);
    EXPECT_TRUE(id.ok);
}

TEST(Height, HondaTwice) {
    const ADescriptor A = ADescriptor::make(2, 2);
    const auto F = fq_make(2, 1);
    const FormalModule<FiniteFieldRing> R = reduce_module(atypical_module(A, honda_spec(2), 20), F);
    const AdditivityReport r = height_additivity_check(R.pi_bracket(), R.pi_bracket(), 2);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.ht_composite.height, 4U);
}

TEST(Congruence, UnitLeadingTerm) {
    const ADescriptor A = ADescriptor::make(3, 3);
    const FormalModule<RationalRing> M = atypical_module(A, {{1, Rat(2)}}, 9);
    const PowerSeries<RationalRing>& pi = M.pi_bracket();
    for (std::size_t n = 0; n < 3; ++n) {
        EXPECT_EQ(reduce_mod_p(pi.coeff(n), 3), 0U);
    }
    EXPECT_EQ(reduce_mod_p(pi.coeff(3), 3), 2U);
    EXPECT_TRUE(check_pi_congruence(M, {{1, Rat(2)}}, 1).ok);
    const CheckReport vacuous = check_pi_congruence(M, {{1, Rat(2)}}, 2);
    EXPECT_TRUE(vacuous.ok);
    EXPECT_FALSE(vacuous.detail.empty());
}

TEST(Congruence, RandomSpecs) {
    std::mt19937_64 rng(21);
    for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{2, 2}, {3, 3}}) {
        const ADescriptor A = ADescriptor::make(p, q);
        for (int trial = 0; trial < 6; ++trial) {
            ATypicalSpec spec;
            for (std::size_t i = 1; i <= 2; ++i) {
                spec[i] = Rat(static_cast<long>(p * (rng() % 3) + (trial % 2 == 0 ? 0 : rng() % p)));
            }
            const FormalModule<RationalRing> M = atypical_module(A, spec, checked_pow(q, 2));
            EXPECT_TRUE(check_pi_congruence(M, spec, 1).ok);
            EXPECT_TRUE(check_pi_congruence(M, spec, 2).ok);
        }
    }
}

TEST(Congruence, UniversalSmall) {
    for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{2, 2}, {3, 3}, {2, 4}}) {
        const ADescriptor A = ADescriptor::make(p, q);
        for (std::size_t i = 1; i <= 2; ++i) {
            EXPECT_TRUE(check_pi_congruence_universal(A, 2, i).ok) << p << " " << q << " " << i;
        }
    }
}

// Without eliminating v_1, [pi] mod (pi, x^{q^2+1}) must still be
// congruent to v_2 x^{q^2} after setting v_1 = 0 coefficientwise.
TEST(Congruence, UniversalEliminationCrossCheck) {
    const ADescriptor A = ADescriptor::make(2, 2);
    const MultiPolyRing R(2);
    const UniversalATypical L = atypical_logarithm(A, 2, 2);
    PowerSeries<MultiPolyRing> f(R, 4);
    f.set(1, L.b[0]);
    f.set(2, L.b[1]);
    f.set(4, L.b[2]);
    const PowerSeries<MultiPolyRing> pi = compose(comp_inverse(f, 4), f.scaled(R.from_int(2)));
    for (std::size_t n = 0; n <= 4; ++n) {
        const MultiPoly c = pi.coeff(n).without_variable(1);
        for (const auto& [e, v] : c.terms()) {
            ASSERT_TRUE(is_p_integral(v, 2)) << n;
            const bool leading = n == 4 && e == MultiPoly::Exponents{0, 1};
            EXPECT_EQ(reduce_mod_p(v, 2), leading ? 1U : 0U) << n;
        }
    }
    EXPECT_TRUE(check_pi_congruence_universal(A, 2, 2).ok);
}

TEST(PiPolynomialShape, Examples) {
    const auto F = fq_make(2, 1);
    const LaurentSeries t = LaurentSeries::t(F);
    PiPolynomial P{F, 2, 1, 1, {t}};
    EXPECT_EQ(v_polynomial(P), SeriesPoly::x(F).scaled(t) + SeriesPoly::x(F) * SeriesPoly::x(F));
    EXPECT_EQ(v_polynomial(P).substitute_power(2), pi_polynomial(P));
    EXPECT_EQ(v_twist(P, 0), v_polynomial(P));
    EXPECT_EQ(v_twist(P, 1).coeff(1), t * t);
    PiPolynomial P2{F, 2, 1, 2, {t, t * t * t}};
    const SeriesPoly V = v_polynomial(P2);
    EXPECT_EQ(V.degree(), 4);
    EXPECT_TRUE(V.coeff(3).is_exact_zero());
    EXPECT_FALSE(V.coeff(2).is_exact_zero());
    const SeriesPoly Vt = v_twist(P2, 2);
    EXPECT_EQ(*Vt.coeff(1).valuation(), 4);
    EXPECT_EQ(*Vt.coeff(2).valuation(), 12);
    PiPolynomial bad{F, 2, 1, 1, {LaurentSeries::constant(F, F->one())}};
    EXPECT_THROW(bad.validate(), DomainError);
    PiPolynomial wrong_q{F, 3, 1, 1, {t}};
    EXPECT_THROW(wrong_q.validate(), DomainError);
}
