#include "ramtower/tate.hpp"

#include "ramtower/errors.hpp"

namespace ramtower {

EisensteinExtPtr EisensteinExt::make(const SeriesPoly& f) {
    if (!f.is_monic()) {
        throw DomainError("Eisenstein polynomial must be monic with exact leading coefficient 1");
    }
    const int n = f.degree();
    if (n < 2) {
        throw DomainError("Eisenstein polynomial must have degree at least 2");
    }
    for (int i = 0; i < n; ++i) {
        const LaurentSeries& c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_exact_zero()) {
            if (i == 0) {
                throw DomainError("not Eisenstein: constant term is zero");
            }
            continue;
        }
        const auto lb = c.valuation_lower_bound();
        if (i == 0) {
            if (*c.valuation() != 1) {
                throw DomainError("not Eisenstein: v(a_0) = " + std::to_string(*c.valuation()) + ", expected 1");
            }
        } else if (*lb < 1) {
            throw DomainError("not Eisenstein: v(a_" + std::to_string(i) + ") < 1");
        }
    }
    return EisensteinExtPtr(new EisensteinExt(f));
}

ExtElement::ExtElement(EisensteinExtPtr ext, SeriesPoly rep) : ext_(std::move(ext)), rep_(std::move(rep)) {
    if (!ext_) {
        throw DomainError("ExtElement requires an extension");
    }
    if (rep_.coeffs().size() > ext_->degree()) {
        rep_ = rep_.rem_monic(ext_->poly());
    }
}

ExtElement ExtElement::alpha(const EisensteinExtPtr& ext) { return ExtElement(ext, SeriesPoly::x(ext->field())); }

ExtElement ExtElement::from_base(const EisensteinExtPtr& ext, const LaurentSeries& c) {
    return ExtElement(ext, SeriesPoly::constant(c));
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) { return ExtElement(a.ext_, a.rep_ + b.rep_); }

ExtElement operator-(const ExtElement& a, const ExtElement& b) { return ExtElement(a.ext_, a.rep_ - b.rep_); }

ExtElement operator*(const ExtElement& a, const ExtElement& b) { return ExtElement(a.ext_, a.rep_ * b.rep_); }

ExtElement ExtElement::pow(std::uint64_t e) const {
    ExtElement result = from_base(ext_, LaurentSeries::constant(ext_->field(), ext_->field()->one()));
    ExtElement base = *this;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Rat ext_valuation(const ExtElement& beta) {
    if (beta.is_zero()) {
        throw DomainError("ext_valuation of zero");
    }
    const LaurentSeries norm = resultant(beta.ext()->poly(), beta.rep());
    const auto v = norm.valuation();
    if (!v) {
        throw DomainError("ext_valuation: element has zero norm");
    }
    return Rat(static_cast<long>(*v));
}

std::vector<RamificationPoint> ramification_polynomial(const EisensteinExtPtr& E) {
    const std::size_t n = E->degree();
    const FqFieldPtr& F = E->field();
    const SeriesPoly& f = E->poly();
    std::vector<ExtElement> alpha_pow{ExtElement::from_base(E, LaurentSeries::constant(F, F->one()))};
    const ExtElement alpha = ExtElement::alpha(E);
    for (std::size_t k = 1; k <= n; ++k) {
        alpha_pow.push_back(alpha_pow.back() * alpha);
    }
    // Coefficient of x^i in f(alpha x + alpha) = sum_{k >= i} a_k C(k, i) alpha^k.
    std::vector<RamificationPoint> out;
    for (std::size_t i = 1; i <= n; ++i) {
        ExtElement c(E, SeriesPoly(F));
        BigInt binom = 1;
        for (std::size_t k = i; k <= n; ++k) {
            if (k > i) {
                binom = binom * static_cast<unsigned long>(k) / static_cast<unsigned long>(k - i);
            }
            const LaurentSeries& ak = f.coeff(k);
            if (ak.is_exact_zero()) {
                continue;
            }
            const BigInt r = binom % BigInt(F->p());
            if (r == 0) {
                continue;
            }
            const LaurentSeries scalar = ak.scaled(F->from_prime_field(r.get_si()));
            c = c + ExtElement(E, alpha_pow[k].rep().scaled(scalar));
        }
        RamificationPoint pt{i, std::nullopt};
        if (!c.is_zero()) {
            pt.valuation = ext_valuation(c) - Rat(static_cast<unsigned long>(n));
        }
        out.push_back(std::move(pt));
    }
    return out;
}

TateResult tate_breaks(const EisensteinExtPtr& E) {
    TateResult r;
    r.points = ramification_polynomial(E);
    std::vector<ValPoint> pts;
    for (const RamificationPoint& p : r.points) {
        pts.push_back(ValPoint{static_cast<std::int64_t>(p.i), p.valuation});
    }
    r.polygon = build_polygon(pts);
    const Rat n(static_cast<unsigned long>(E->degree()));
    for (const Rat& y : y_intercepts(r.polygon, true)) {
        r.breaks.push_back(y / n);
    }
    return r;
}

Rat closed_form_break(std::uint64_t q, const Rat& v_a1) {
    if (q < 2) {
        throw DomainError("closed_form_break: q must be at least 2");
    }
    std::uint64_t p = 2;
    while (q % p != 0) {
        ++p;
    }
    if (exact_log(q, p) < 1) {
        throw DomainError("closed_form_break: q = " + std::to_string(q) + " is not a prime power");
    }
    if (v_a1 < 1) {
        throw DomainError("closed_form_break: v(a_1) must be at least 1");
    }
    const Rat qq(static_cast<unsigned long>(q));
    return qq * v_a1 / (qq - 1) - 1;
}

TateHypothesis check_tate_hypothesis(const SeriesPoly& f) {
    TateHypothesis h;
    const int n = f.degree();
    if (n < 1) {
        throw DomainError("check_tate_hypothesis: polynomial of degree < 1");
    }
    h.degree = static_cast<std::size_t>(n);
    h.degree_is_p_power = exact_log(h.degree, f.field()->p()) >= 1;
    const LaurentSeries& a1 = f.coeff(1);
    if (!a1.is_exact_zero()) {
        h.v_a1 = Rat(static_cast<long>(*a1.valuation()));
    }
    h.holds = true;
    for (int i = 2; i < n; ++i) {
        const LaurentSeries& ai = f.coeff(static_cast<std::size_t>(i));
        if (ai.is_exact_zero()) {
            continue;
        }
        const Rat vi(static_cast<long>(*ai.valuation()));
        if (!h.v_a1 || vi < *h.v_a1) {
            h.holds = false;
            h.witness = static_cast<std::size_t>(i);
            break;
        }
    }
    return h;
}

} // namespace ramtower
