#include <gtest/gtest.h>

#include "ramtower/errors.hpp"
#include "ramtower/tate.hpp"

using namespace ramtower;

namespace {

SeriesPoly trinomial(const FqFieldPtr& F, std::size_t n, std::int64_t c) {
    return SeriesPoly::from_terms(F, {{0, LaurentSeries::t(F)},
                                      {1, LaurentSeries::monomial(F, F->one(), c)},
                                      {n, LaurentSeries::constant(F, F->one())}});
}

// Hilbert's different formula for a degree-p Galois layer with one break b:
// v_L(f'(alpha)) = (p - 1)(b + 1).
Rat break_from_different(const EisensteinExtPtr& E) {
    const SeriesPoly& f = E->poly();
    std::vector<LaurentSeries> d;
    for (std::size_t k = 1; k < f.coeffs().size(); ++k) {
        d.push_back(f.coeff(k).scaled(E->field()->from_prime_field(static_cast<long long>(k))));
    }
    const ExtElement deriv(E, SeriesPoly(E->field(), d));
    const Rat n(static_cast<unsigned long>(E->degree()));
    return ext_valuation(deriv) / (n - 1) - 1;
}

} // namespace

TEST(Eisenstein, Validation) {
    const auto F = fq_make(2, 1);
    EXPECT_NO_THROW(EisensteinExt::make(trinomial(F, 2, 1)));
    const SeriesPoly x = SeriesPoly::x(F);
    const LaurentSeries t = LaurentSeries::t(F);
    EXPECT_THROW(EisensteinExt::make(x * x + SeriesPoly::constant(t * t)), DomainError);
    EXPECT_THROW(EisensteinExt::make(x * x + x + SeriesPoly::constant(t)), DomainError);
    EXPECT_THROW(EisensteinExt::make(x + SeriesPoly::constant(t)), DomainError);
    EXPECT_THROW(EisensteinExt::make((x * x).scaled(t) + SeriesPoly::constant(t)), DomainError);
}

TEST(ExtValuation, Examples) {
    const auto F = fq_make(2, 1);
    const EisensteinExtPtr E = EisensteinExt::make(trinomial(F, 2, 1));
    const ExtElement a = ExtElement::alpha(E);
    EXPECT_EQ(ext_valuation(a), Rat(1));
    EXPECT_EQ(ext_valuation(a * a), Rat(2));
    EXPECT_EQ(ext_valuation(ExtElement::from_base(E, LaurentSeries::t(F))), Rat(2));
    EXPECT_EQ(ext_valuation(a.pow(5)), Rat(5));
    EXPECT_THROW(ext_valuation(ExtElement(E, SeriesPoly(F))), DomainError);
}

TEST(RamificationPolynomial, QuadraticExample) {
    const auto F = fq_make(2, 1);
    const auto pts = ramification_polynomial(EisensteinExt::make(trinomial(F, 2, 1)));
    ASSERT_EQ(pts.size(), 2U);
    EXPECT_EQ(pts[0].valuation, Rat(1));
    EXPECT_EQ(pts[1].valuation, Rat(0));
}

TEST(TateBreaks, Trinomials) {
    for (const std::uint32_t p : {2U, 3U, 5U}) {
        const auto F = fq_make(p, 1);
        for (const std::int64_t c : {1, 2, 3}) {
            const EisensteinExtPtr E = EisensteinExt::make(trinomial(F, p, c));
            const TateResult r = tate_breaks(E);
            const Rat expected = closed_form_break(p, Rat(static_cast<long>(c)));
            EXPECT_EQ(r.breaks, (std::vector<Rat>{expected})) << p << " " << c;
            EXPECT_EQ(break_from_different(E), expected);
            EXPECT_TRUE(check_tate_hypothesis(E->poly()).holds);
        }
    }
    EXPECT_EQ(tate_breaks(EisensteinExt::make(trinomial(fq_make(2, 1), 2, 1))).breaks, (std::vector<Rat>{Rat(1)}));
    EXPECT_EQ(tate_breaks(EisensteinExt::make(trinomial(fq_make(3, 1), 3, 2))).breaks, (std::vector<Rat>{Rat(2)}));
}

TEST(TateBreaks, PrimePowerDegreeMatchesClosedForm) {
    for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}}) {
        const auto F = fq_make(p, m);
        const std::size_t q = F->q();
        for (const std::int64_t c : {1, 2}) {
            const TateResult r = tate_breaks(EisensteinExt::make(trinomial(F, q, c)));
            EXPECT_EQ(r.breaks, (std::vector<Rat>{closed_form_break(q, Rat(static_cast<long>(c)))})) << q << " " << c;
        }
    }
}

TEST(TateBreaks, MiddleCoefficientsAboveA1) {
    const auto F = fq_make(3, 1);
    const LaurentSeries t = LaurentSeries::t(F);
    const SeriesPoly f = trinomial(F, 3, 1) + SeriesPoly::from_terms(F, {{2, t * t}});
    ASSERT_TRUE(check_tate_hypothesis(f).holds);
    const EisensteinExtPtr E = EisensteinExt::make(f);
    EXPECT_EQ(tate_breaks(E).breaks, (std::vector<Rat>{closed_form_break(3, Rat(1))}));
    EXPECT_EQ(break_from_different(E), closed_form_break(3, Rat(1)));
}

TEST(TateBreaks, NontrivialFlagDropsFlatSide) {
    const NewtonPolygon np = build_polygon({{1, Rat(1)}, {2, Rat(0)}, {3, Rat(0)}});
    EXPECT_EQ(y_intercepts(np, true).size(), 1U);
    EXPECT_EQ(y_intercepts(np, false).size(), 2U);
}

TEST(ClosedForm, Values) {
    EXPECT_EQ(closed_form_break(2, Rat(1)), Rat(1));
    EXPECT_EQ(closed_form_break(2, Rat(2)), Rat(3));
    EXPECT_EQ(closed_form_break(4, Rat(1)), make_rat(1, 3));
    EXPECT_THROW(closed_form_break(6, Rat(1)), DomainError);
    EXPECT_THROW(closed_form_break(1, Rat(1)), DomainError);
    EXPECT_THROW(closed_form_break(2, Rat(0)), DomainError);
}

TEST(Hypothesis, Witness) {
    const auto F = fq_make(3, 1);
    const LaurentSeries t = LaurentSeries::t(F);
    const SeriesPoly base = SeriesPoly::from_terms(F, {{0, t}, {1, t * t}, {3, LaurentSeries::constant(F, F->one())}});
    const TateHypothesis h = check_tate_hypothesis(base + SeriesPoly::from_terms(F, {{2, t}}));
    EXPECT_FALSE(h.holds);
    EXPECT_EQ(h.witness, 2U);
    EXPECT_EQ(h.v_a1, Rat(2));
    EXPECT_TRUE(h.degree_is_p_power);
    EXPECT_TRUE(check_tate_hypothesis(base + SeriesPoly::from_terms(F, {{2, t * t}})).holds);
    const TateHypothesis deg4 = check_tate_hypothesis(trinomial(F, 4, 1));
    EXPECT_FALSE(deg4.degree_is_p_power);
}
