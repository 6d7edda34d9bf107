#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ramtower/laurent.hpp"
#include "ramtower/multipoly.hpp"
#include "ramtower/power_series.hpp"
#include "ramtower/series_poly.hpp"

namespace ramtower {

/// Outcome of an identity check on truncated series. On failure `monomial`
/// holds the exponents of the first differing coefficient.
struct CheckReport {
    bool ok = true;
    std::string check;
    std::vector<std::size_t> monomial;
    std::size_t degree = 0;
    std::string detail;

    static CheckReport pass(std::string check, std::size_t degree) { return {true, std::move(check), {}, degree, {}}; }
    static CheckReport fail(std::string check, std::vector<std::size_t> monomial, std::size_t degree, std::string detail = {}) {
        return {false, std::move(check), std::move(monomial), degree, std::move(detail)};
    }
};

/// The ring A of a formal A-module: unramified over Z_p with residue field
/// F_q, uniformizer pi = p.
struct ADescriptor {
    std::uint32_t p = 2;
    std::uint64_t q = 2;

    /// Throws DomainError unless p is prime and q a positive power of p.
    static ADescriptor make(std::uint32_t p, std::uint64_t q);
    std::uint32_t residue_degree() const;
};

/// A formal group law with the brackets [a] that were materialized.
template <CoefficientRing R>
struct FormalModule {
    R ring;
    ADescriptor A;
    BivariateSeries<R> law;
    std::vector<std::pair<Rat, PowerSeries<R>>> brackets;

    std::size_t degree() const { return law.degree(); }
    const PowerSeries<R>* bracket(const Rat& a) const {
        for (const auto& [s, f] : brackets) {
            if (s == a) {
                return &f;
            }
        }
        return nullptr;
    }
    const PowerSeries<R>& pi_bracket() const {
        const PowerSeries<R>* f = bracket(Rat(static_cast<unsigned long>(A.p)));
        if (!f) {
            throw DomainError("module has no [pi] bracket");
        }
        return *f;
    }
};

/// Unit axioms F(X,0) = X, F(0,Y) = Y, commutativity and associativity, all
/// modulo total degree D + 1. Associativity is checked as an identity of
/// trivariate series.
template <CoefficientRing R>
CheckReport check_group_law(const BivariateSeries<R>& F) {
    const R& ring = F.ring();
    const std::size_t D = F.degree();
    for (std::size_t i = 0; i <= D; ++i) {
        const auto expect = (i == 1) ? ring.one() : ring.zero();
        if (!ring.equal(F.get(i, 0), expect)) {
            return CheckReport::fail("unit", {i, 0}, D, "F(X,0) != X");
        }
        if (!ring.equal(F.get(0, i), expect)) {
            return CheckReport::fail("unit", {0, i}, D, "F(0,Y) != Y");
        }
    }
    for (std::size_t n = 0; n <= D; ++n) {
        for (std::size_t i = 0; i < n - i; ++i) {
            if (!ring.equal(F.get(i, n - i), F.get(n - i, i))) {
                return CheckReport::fail("commutativity", {i, n - i}, D);
            }
        }
    }
    // F(F(X,Y),Z) - F(X,F(Y,Z)) from the powers of F.
    detail::BivariatePowers<R> powers(F);
    const auto terms = F.terms();
    const std::uint64_t w = D + 1;
    std::unordered_map<std::uint64_t, typename R::value_type> diff;
    auto accumulate = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, const typename R::value_type& v) {
        const std::uint64_t key = (a * w + b) * w + c;
        auto [it, inserted] = diff.emplace(key, v);
        if (!inserted) {
            it->second = ring.add(it->second, v);
        }
    };
    for (const auto& t : terms) {
        // c_ik U^i Z^k with U = F(X,Y).
        for (const auto& u : powers.get(t.i)) {
            if (u.i + u.j + t.j <= D) {
                accumulate(u.i, u.j, t.j, ring.mul(t.c, u.c));
            }
        }
        // c_ik X^i V^k with V = F(Y,Z).
        for (const auto& v : powers.get(t.j)) {
            if (t.i + v.i + v.j <= D) {
                accumulate(t.i, v.i, v.j, ring.neg(ring.mul(t.c, v.c)));
            }
        }
    }
    std::optional<std::vector<std::size_t>> worst;
    for (const auto& [key, v] : diff) {
        if (ring.is_zero(v)) {
            continue;
        }
        std::vector<std::size_t> m{static_cast<std::size_t>(key / (w * w)), static_cast<std::size_t>(key / w % w),
                                   static_cast<std::size_t>(key % w)};
        const auto total = [](const std::vector<std::size_t>& e) { return e[0] + e[1] + e[2]; };
        if (!worst || total(m) < total(*worst) || (total(m) == total(*worst) && m < *worst)) {
            worst = m;
        }
    }
    if (worst) {
        return CheckReport::fail("associativity", *worst, D);
    }
    return CheckReport::pass("group-law", D);
}

/// Checks f(F(X,Y)) = G(f(X), f(Y)) and f o [a]_F = [a]_G o f for every
/// scalar a bracketed in both modules, to the smaller truncation degree.
/// Throws DomainError when f has a nonzero constant term.
template <CoefficientRing R>
CheckReport check_hom(const PowerSeries<R>& f, const FormalModule<R>& F, const FormalModule<R>& G) {
    const R& ring = F.ring;
    if (!ring.is_zero(f.coeff(0))) {
        throw DomainError("check_hom: f must have zero constant term");
    }
    const std::size_t D = std::min({f.degree(), F.degree(), G.degree()});
    BivariateSeries<R> lhs(ring, D);
    {
        BivariateSeries<R> Ft(ring, D);
        for (const auto& t : F.law.terms()) {
            if (t.i + t.j <= D) {
                Ft.set(t.i, t.j, t.c);
            }
        }
        detail::BivariatePowers<R> powers(Ft);
        for (std::size_t n = 1; n <= D; ++n) {
            if (ring.is_zero(f.coeff(n))) {
                continue;
            }
            for (const auto& u : powers.get(n)) {
                lhs.add_to(u.i, u.j, ring.mul(f.coeff(n), u.c));
            }
        }
    }
    BivariateSeries<R> rhs(ring, D);
    {
        const PowerSeries<R> ft = f.truncated(D);
        std::vector<PowerSeries<R>> fp{PowerSeries<R>::monomial(ring, D, 0, ring.one())};
        for (std::size_t n = 1; n <= D; ++n) {
            fp.push_back(fp.back() * ft);
        }
        for (const auto& t : G.law.terms()) {
            if (t.i + t.j > D) {
                continue;
            }
            const auto si = fp[t.i].support();
            const auto sj = fp[t.j].support();
            for (const std::size_t a : si) {
                for (const std::size_t b : sj) {
                    if (a + b > D) {
                        break;
                    }
                    rhs.add_to(a, b, ring.mul(t.c, ring.mul(fp[t.i].coeff(a), fp[t.j].coeff(b))));
                }
            }
        }
    }
    for (std::size_t n = 0; n <= D; ++n) {
        for (std::size_t i = 0; i <= n; ++i) {
            if (!ring.equal(lhs.get(i, n - i), rhs.get(i, n - i))) {
                return CheckReport::fail("hom-law", {i, n - i}, D, "f(F(X,Y)) != G(f(X),f(Y))");
            }
        }
    }
    for (const auto& [a, fa] : F.brackets) {
        const PowerSeries<R>* ga = G.bracket(a);
        if (!ga) {
            continue;
        }
        const PowerSeries<R> left = compose(f.truncated(D), fa.truncated(D));
        const PowerSeries<R> right = compose(ga->truncated(D), f.truncated(D));
        if (const auto n = first_difference(left, right)) {
            return CheckReport::fail("hom-linearity", {*n}, D, "f o [" + to_string(a) + "] differs");
        }
    }
    return CheckReport::pass("hom", D);
}

/// Height of a series in characteristic p relative to q: the largest h with
/// every exponent in the support divisible by q^h. An empty height means the
/// series vanishes to the truncation degree.
struct HeightResult {
    std::optional<std::uint64_t> height;
    std::size_t degree = 0;
};
HeightResult height(const PowerSeries<FiniteFieldRing>& f, std::uint64_t q);

struct AdditivityReport {
    bool conclusive = false;
    bool ok = false;
    HeightResult ht_f;
    HeightResult ht_g;
    HeightResult ht_composite;
};
/// ht(g o f) = ht(f) + ht(g) at the working truncation. Inconclusive when any
/// of the three heights is not certified (no nonzero term to degree D).
AdditivityReport height_additivity_check(const PowerSeries<FiniteFieldRing>& f,
                                         const PowerSeries<FiniteFieldRing>& g, std::uint64_t q);

/// The universal A-typical logarithm f(x) = sum_i b_i x^{q^i} in the
/// variables v_1..v_k, with b_0 = 1 and
/// b_i = (b_0 v_i + b_1 v_{i-1}^q + ... + b_{i-1} v_1^{q^{i-1}}) / pi.
struct UniversalATypical {
    ADescriptor A;
    std::size_t k = 0;
    std::vector<MultiPoly> b;
};

/// b_0..b_{n_terms}. Throws NonIntegralCoefficient if some pi^i b_i is not
/// pi-integral. Throws DomainError for k == 0 or n_terms == 0.
UniversalATypical atypical_logarithm(const ADescriptor& A, std::size_t k, std::size_t n_terms);

/// Values for v_1, v_2, ... (unlisted indices are zero).
using ATypicalSpec = std::map<std::size_t, Rat>;

/// v_h = 1, every other v_i = 0.
ATypicalSpec honda_spec(std::size_t h);

/// Specialized logarithm coefficients b_i for q^i <= degree.
std::vector<Rat> specialized_logarithm(const ADescriptor& A, const ATypicalSpec& spec, std::size_t degree);

/// F_V(x,y) = f^{-1}(f(x) + f(y)) and [a](x) = f^{-1}(a f(x)) to total degree D
/// over the rationals, for a = pi and each extra scalar. Throws DomainError on
/// a spec value that is not pi-integral and NonIntegralCoefficient (naming the
/// monomial) if any computed coefficient is not pi-integral.
FormalModule<RationalRing> atypical_module(const ADescriptor& A, const ATypicalSpec& spec, std::size_t degree,
                                           const std::vector<Rat>& extra_brackets = {});

/// Coefficient-wise reduction mod pi into F_q (field must have characteristic p).
FormalModule<FiniteFieldRing> reduce_module(const FormalModule<RationalRing>& M, const FqFieldPtr& field);

/// [pi](x) == v_i x^{q^i} modulo (pi, v_1..v_{i-1}, x^{q^i+1}) for a
/// specialized module. When some v_j (j < i) is a unit the ideal is the
/// whole ring and the report says so in `detail`.
CheckReport check_pi_congruence(const FormalModule<RationalRing>& M, const ATypicalSpec& spec, std::size_t i);

/// The same congruence in the universal ring Z_(p)[v_1..v_k]. Setting
/// v_1..v_{i-1} to zero is a ring map that commutes with the construction,
/// so [pi] is computed over Q[v_i..v_k] and then reduced mod pi.
CheckReport check_pi_congruence_universal(const ADescriptor& A, std::size_t k, std::size_t i);

/// [pi]_F(x) = a_1 x^{q^g} + ... + a_d x^{q^{g+d-1}} + x^{q^{g+d}} over
/// K = F_q((t)).
struct PiPolynomial {
    FqFieldPtr field;
    std::uint64_t q = 2;
    std::uint32_t g = 1;
    std::uint32_t d = 1;
    std::vector<LaurentSeries> a;

    /// Throws DomainError unless q is a power of the field characteristic,
    /// g, d >= 1, a has d entries with v(a_i) >= 1 and a_1 != 0.
    void validate() const;
    std::uint32_t s() const { return g + d; }
};

/// V(x) = a_1 x + a_2 x^q + ... + a_d x^{q^{d-1}} + x^{q^d}.
SeriesPoly v_polynomial(const PiPolynomial& P);
/// [pi]_F(x) as a polynomial.
SeriesPoly pi_polynomial(const PiPolynomial& P);
/// V with coefficients raised to the q^{ig}-th power.
SeriesPoly v_twist(const PiPolynomial& P, std::uint64_t i);

} // namespace ramtower
