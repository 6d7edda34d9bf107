#include "ramtower/formal.hpp"

#include <algorithm>

namespace ramtower {

ADescriptor ADescriptor::make(std::uint32_t p, std::uint64_t q) {
    if (!is_prime(p)) {
        throw DomainError("A descriptor: p = " + std::to_string(p) + " is not prime");
    }
    if (exact_log(q, p) < 1) {
        throw DomainError("A descriptor: q = " + std::to_string(q) + " is not a positive power of " +
                          std::to_string(p));
    }
    return ADescriptor{p, q};
}

std::uint32_t ADescriptor::residue_degree() const { return static_cast<std::uint32_t>(exact_log(q, p)); }

namespace {

// Numbers of the form num / p^e. No gcd is ever taken.
struct PFrac {
    BigInt num;
    unsigned long e = 0;
};

class PFracArith {
public:
    using Num = PFrac;

    explicit PFracArith(std::uint32_t p) : p_(p) { powers_.emplace_back(1); }

    PFrac zero() const { return {}; }
    PFrac one() const { return {BigInt(1), 0}; }
    bool is_zero(const PFrac& a) const { return a.num == 0; }
    PFrac from_bigint(const BigInt& n) const { return {n, 0}; }

    std::optional<PFrac> from_rat(const Rat& r) const {
        const BigInt den = r.get_den();
        BigInt rest = den;
        unsigned long e = 0;
        while (rest % p_ == 0) {
            rest /= p_;
            ++e;
        }
        if (rest != 1) {
            return std::nullopt;
        }
        return PFrac{r.get_num(), e};
    }

    Rat to_rat(const PFrac& a) {
        Rat out(a.num, pp(a.e));
        out.canonicalize();
        return out;
    }

    PFrac mul(const PFrac& a, const PFrac& b) const {
        if (a.num == 0 || b.num == 0) {
            return {};
        }
        return {a.num * b.num, a.e + b.e};
    }

    PFrac add(const PFrac& a, const PFrac& b) {
        if (a.num == 0) {
            return b;
        }
        if (b.num == 0) {
            return a;
        }
        if (a.e == b.e) {
            return {a.num + b.num, a.e};
        }
        if (a.e < b.e) {
            return {a.num * pp(b.e - a.e) + b.num, b.e};
        }
        return {a.num + b.num * pp(a.e - b.e), a.e};
    }

    PFrac neg(const PFrac& a) const { return {-a.num, a.e}; }

private:
    const BigInt& pp(unsigned long k) {
        while (powers_.size() <= k) {
            powers_.push_back(powers_.back() * p_);
        }
        return powers_[k];
    }

    std::uint32_t p_;
    std::vector<BigInt> powers_;
};

class RatArith {
public:
    using Num = Rat;

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    bool is_zero(const Rat& a) const { return a == 0; }
    Rat from_bigint(const BigInt& n) const { return Rat(n); }
    std::optional<Rat> from_rat(const Rat& r) const { return r; }
    Rat to_rat(const Rat& a) const { return a; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat neg(const Rat& a) const { return -a; }
};

// f^{-1}(f(x) + f(y)) and f^{-1}(a f(x)) via the power table X[a][n] = [x^n] f^a.
template <class Arith>
class ATypicalEngine {
public:
    using Num = typename Arith::Num;
    using Sparse = std::vector<std::pair<std::size_t, Num>>;

    ATypicalEngine(Arith arith, const ADescriptor& A, const std::vector<Num>& log_coeffs, std::size_t degree)
        : ar_(std::move(arith)), A_(A), D_(degree) {
        Sparse f;
        std::uint64_t e = 1;
        for (const Num& b : log_coeffs) {
            if (e > D_) {
                break;
            }
            if (!ar_.is_zero(b)) {
                f.emplace_back(static_cast<std::size_t>(e), b);
            }
            e *= A_.q;
        }
        build_powers(f);
        solve_inverse();
    }

    // F[i][j] for i <= j, i + j <= D, mirrored by the caller.
    template <class Sink>
    void law(Sink&& sink) {
        const std::uint64_t grade = A_.q - 1;
        std::vector<std::vector<BigInt>> pascal(D_ + 1);
        for (std::size_t n = 0; n <= D_; ++n) {
            pascal[n].resize(n + 1);
            pascal[n][0] = 1;
            pascal[n][n] = 1;
            for (std::size_t k = 1; k < n; ++k) {
                pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
            }
        }
        // M[a][j] = sum_b e_{a+b} C(a+b, a) X[b][j], for a + j <= D.
        std::vector<std::vector<Num>> M(D_ + 1);
        for (std::size_t a = 0; a <= D_; ++a) {
            M[a].assign(D_ - a + 1, ar_.zero());
            for (std::size_t j = 0; a + j <= D_; ++j) {
                if (a + j == 0 || (a + j - 1) % grade != 0) {
                    continue;
                }
                Num acc = ar_.zero();
                for (const auto& [b, x] : cols_[j]) {
                    const Num& eb = e_[a + b];
                    if (ar_.is_zero(eb)) {
                        continue;
                    }
                    acc = ar_.add(acc, ar_.mul(ar_.mul(eb, ar_.from_bigint(pascal[a + b][a])), x));
                }
                M[a][j] = std::move(acc);
            }
        }
        for (std::size_t i = 0; i <= D_; ++i) {
            for (std::size_t j = i; i + j <= D_; ++j) {
                if (i + j == 0 || (i + j - 1) % grade != 0) {
                    continue;
                }
                Num acc = ar_.zero();
                for (const auto& [a, x] : cols_[i]) {
                    const Num& m = M[a][j];
                    if (!ar_.is_zero(m)) {
                        acc = ar_.add(acc, ar_.mul(x, m));
                    }
                }
                if (!ar_.is_zero(acc)) {
                    sink(i, j, ar_.to_rat(acc));
                }
            }
        }
    }

    // Coefficients of f^{-1}(c f(x)).
    std::vector<Rat> bracket(const Num& c) {
        std::vector<Num> cpow{ar_.one()};
        for (std::size_t n = 1; n <= D_; ++n) {
            cpow.push_back(ar_.mul(cpow.back(), c));
        }
        std::vector<Rat> out(D_ + 1);
        for (std::size_t i = 0; i <= D_; ++i) {
            Num acc = ar_.zero();
            for (const auto& [n, x] : cols_[i]) {
                if (!ar_.is_zero(e_[n])) {
                    acc = ar_.add(acc, ar_.mul(ar_.mul(e_[n], cpow[n]), x));
                }
            }
            out[i] = ar_.to_rat(acc);
        }
        return out;
    }

    Arith& arith() { return ar_; }

private:
    void build_powers(const Sparse& f) {
        cols_.assign(D_ + 1, {});
        std::vector<Num> acc(D_ + 1, ar_.zero());
        std::vector<std::uint8_t> used(D_ + 1, 0);
        Sparse row{{0, ar_.one()}};
        for (std::size_t a = 0; a <= D_; ++a) {
            for (const auto& [n, x] : row) {
                cols_[n].emplace_back(a, x);
            }
            if (a == D_) {
                break;
            }
            std::vector<std::size_t> touched;
            for (const auto& [n, x] : row) {
                for (const auto& [m, y] : f) {
                    if (n + m > D_) {
                        break;
                    }
                    if (!used[n + m]) {
                        used[n + m] = 1;
                        touched.push_back(n + m);
                        acc[n + m] = ar_.mul(x, y);
                    } else {
                        acc[n + m] = ar_.add(acc[n + m], ar_.mul(x, y));
                    }
                }
            }
            std::sort(touched.begin(), touched.end());
            Sparse next;
            for (const std::size_t k : touched) {
                if (!ar_.is_zero(acc[k])) {
                    next.emplace_back(k, acc[k]);
                }
                acc[k] = ar_.zero();
                used[k] = 0;
            }
            row = std::move(next);
        }
    }

    // sum_a e_a X[a][n] = delta_{n,1}; the diagonal X[n][n] is b_0^n = 1.
    void solve_inverse() {
        e_.assign(D_ + 1, ar_.zero());
        if (D_ >= 1) {
            e_[1] = ar_.one();
        }
        for (std::size_t n = 2; n <= D_; ++n) {
            Num acc = ar_.zero();
            for (const auto& [a, x] : cols_[n]) {
                if (a < n && !ar_.is_zero(e_[a])) {
                    acc = ar_.add(acc, ar_.mul(e_[a], x));
                }
            }
            e_[n] = ar_.neg(acc);
        }
    }

    Arith ar_;
    ADescriptor A_;
    std::size_t D_;
    std::vector<Sparse> cols_;
    std::vector<Num> e_;
};

std::string monomial_text(std::size_t i, std::size_t j) {
    return "X^" + std::to_string(i) + "*Y^" + std::to_string(j);
}

template <class Arith>
FormalModule<RationalRing> run_engine(Arith arith, const ADescriptor& A, const std::vector<Rat>& b, std::size_t degree,
                                      const std::vector<Rat>& scalars) {
    std::vector<typename Arith::Num> nb;
    for (const Rat& x : b) {
        nb.push_back(*arith.from_rat(x));
    }
    ATypicalEngine<Arith> engine(std::move(arith), A, nb, degree);
    FormalModule<RationalRing> out{RationalRing{}, A, BivariateSeries<RationalRing>(RationalRing{}, degree), {}};
    engine.law([&](std::size_t i, std::size_t j, const Rat& v) {
        if (!is_p_integral(v, A.p)) {
            throw NonIntegralCoefficient("F_V coefficient of " + monomial_text(i, j) + " is " + to_string(v) +
                                         ", not pi-integral");
        }
        out.law.set(i, j, v);
        out.law.set(j, i, v);
    });
    for (const Rat& s : scalars) {
        const auto c = engine.arith().from_rat(s);
        std::vector<Rat> coeffs = engine.bracket(*c);
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            if (!is_p_integral(coeffs[n], A.p)) {
                throw NonIntegralCoefficient("[" + to_string(s) + "] coefficient of T^" + std::to_string(n) + " is " +
                                             to_string(coeffs[n]) + ", not pi-integral");
            }
        }
        out.brackets.emplace_back(s, PowerSeries<RationalRing>(RationalRing{}, degree, std::move(coeffs)));
    }
    return out;
}

} // namespace

HeightResult height(const PowerSeries<FiniteFieldRing>& f, std::uint64_t q) {
    if (q < 2) {
        throw DomainError("height: q must be at least 2");
    }
    HeightResult out;
    out.degree = f.degree();
    for (const std::size_t n : f.support()) {
        if (n == 0) {
            out.height = 0;
            return out;
        }
        std::uint64_t h = 0;
        std::uint64_t m = n;
        while (m % q == 0) {
            m /= q;
            ++h;
        }
        if (!out.height || h < *out.height) {
            out.height = h;
        }
    }
    return out;
}

AdditivityReport height_additivity_check(const PowerSeries<FiniteFieldRing>& f,
                                         const PowerSeries<FiniteFieldRing>& g, std::uint64_t q) {
    AdditivityReport r;
    r.ht_f = height(f, q);
    r.ht_g = height(g, q);
    r.ht_composite = height(compose(g, f), q);
    r.conclusive = r.ht_f.height && r.ht_g.height && r.ht_composite.height;
    r.ok = r.conclusive && *r.ht_composite.height == *r.ht_f.height + *r.ht_g.height;
    return r;
}

UniversalATypical atypical_logarithm(const ADescriptor& A, std::size_t k, std::size_t n_terms) {
    if (k == 0 || n_terms == 0) {
        throw DomainError("atypical_logarithm: k and n_terms must be positive");
    }
    UniversalATypical out{A, k, {}};
    out.b.push_back(MultiPoly::constant(k, Rat(1)));
    const Rat inv_pi(1, A.p);
    for (std::size_t i = 1; i <= n_terms; ++i) {
        MultiPoly acc(k);
        std::uint64_t qj = 1;
        for (std::size_t j = 0; j < i; ++j) {
            const std::size_t idx = i - j;
            if (idx <= k) {
                acc = acc + out.b[j] * MultiPoly::variable_power(k, idx, qj);
            }
            qj = checked_pow(A.q, j + 1);
        }
        out.b.push_back(acc.scaled(inv_pi));
        const Rat scale = Rat(ipow(A.p, i));
        for (const auto& [e, c] : out.b.back().terms()) {
            if (!is_p_integral(c * scale, A.p)) {
                throw NonIntegralCoefficient("pi^" + std::to_string(i) + " b_" + std::to_string(i) +
                                             " has a non-integral coefficient " + to_string(c * scale));
            }
        }
    }
    return out;
}

ATypicalSpec honda_spec(std::size_t h) {
    if (h == 0) {
        throw DomainError("honda_spec: h must be positive");
    }
    return {{h, Rat(1)}};
}

std::vector<Rat> specialized_logarithm(const ADescriptor& A, const ATypicalSpec& spec, std::size_t degree) {
    const auto v = [&spec](std::size_t i) {
        const auto it = spec.find(i);
        return it == spec.end() ? Rat(0) : it->second;
    };
    std::vector<Rat> b{Rat(1)};
    for (std::size_t i = 1;; ++i) {
        if (exact_log(A.q, A.p) * i > 62 || checked_pow(A.q, i) > degree) {
            break;
        }
        Rat acc(0);
        for (std::size_t j = 0; j < i; ++j) {
            const Rat vi = v(i - j);
            if (vi != 0 && b[j] != 0) {
                acc += b[j] * rat_pow(vi, checked_pow(A.q, j));
            }
        }
        b.push_back(acc / A.p);
    }
    return b;
}

FormalModule<RationalRing> atypical_module(const ADescriptor& A, const ATypicalSpec& spec, std::size_t degree,
                                           const std::vector<Rat>& extra_brackets) {
    for (const auto& [i, v] : spec) {
        if (i == 0) {
            throw DomainError("atypical_module: variables are indexed from 1");
        }
        if (!is_p_integral(v, A.p)) {
            throw DomainError("atypical_module: v_" + std::to_string(i) + " = " + to_string(v) +
                              " is not pi-integral");
        }
    }
    if (degree < 1) {
        throw DomainError("atypical_module: degree must be positive");
    }
    const std::vector<Rat> b = specialized_logarithm(A, spec, degree);
    std::vector<Rat> scalars{Rat(static_cast<unsigned long>(A.p))};
    for (const Rat& s : extra_brackets) {
        if (std::find(scalars.begin(), scalars.end(), s) == scalars.end()) {
            scalars.push_back(s);
        }
    }
    PFracArith pf(A.p);
    const bool dyadic = std::all_of(b.begin(), b.end(), [&](const Rat& x) { return pf.from_rat(x).has_value(); }) &&
                        std::all_of(scalars.begin(), scalars.end(), [&](const Rat& x) { return pf.from_rat(x).has_value(); });
    if (dyadic) {
        return run_engine(std::move(pf), A, b, degree, scalars);
    }
    return run_engine(RatArith{}, A, b, degree, scalars);
}

FormalModule<FiniteFieldRing> reduce_module(const FormalModule<RationalRing>& M, const FqFieldPtr& field) {
    if (!field || field->p() != M.A.p) {
        throw DomainError("reduce_module: residue field characteristic must be " + std::to_string(M.A.p));
    }
    const FiniteFieldRing ring(field);
    FormalModule<FiniteFieldRing> out{ring, M.A, BivariateSeries<FiniteFieldRing>(ring, M.degree()), {}};
    for (const auto& t : M.law.terms()) {
        out.law.set(t.i, t.j, ring.from_rat(t.c));
    }
    for (const auto& [s, f] : M.brackets) {
        std::vector<FqElem> c;
        c.reserve(f.coeffs().size());
        for (const Rat& x : f.coeffs()) {
            c.push_back(ring.from_rat(x));
        }
        out.brackets.emplace_back(s, PowerSeries<FiniteFieldRing>(ring, f.degree(), std::move(c)));
    }
    return out;
}

CheckReport check_pi_congruence(const FormalModule<RationalRing>& M, const ATypicalSpec& spec, std::size_t i) {
    if (i == 0) {
        throw DomainError("check_pi_congruence: i must be positive");
    }
    const std::uint64_t qi = checked_pow(M.A.q, i);
    if (qi > M.degree()) {
        throw DomainError("check_pi_congruence: truncation degree " + std::to_string(M.degree()) + " is below q^i = " +
                          std::to_string(qi));
    }
    const auto v = [&spec](std::size_t j) {
        const auto it = spec.find(j);
        return it == spec.end() ? Rat(0) : it->second;
    };
    for (std::size_t j = 1; j < i; ++j) {
        if (reduce_mod_p(v(j), M.A.p) != 0) {
            CheckReport r = CheckReport::pass("pi-congruence", static_cast<std::size_t>(qi));
            r.detail = "v_" + std::to_string(j) + " is a unit; the ideal is the whole ring";
            return r;
        }
    }
    const PowerSeries<RationalRing>& pi = M.pi_bracket();
    for (std::size_t n = 0; n <= qi; ++n) {
        const std::uint64_t expect = (n == qi) ? reduce_mod_p(v(i), M.A.p) : 0;
        if (!is_p_integral(pi.coeff(n), M.A.p) || reduce_mod_p(pi.coeff(n), M.A.p) != expect) {
            return CheckReport::fail("pi-congruence", {n}, static_cast<std::size_t>(qi),
                                     "[pi] coefficient " + to_string(pi.coeff(n)));
        }
    }
    return CheckReport::pass("pi-congruence", static_cast<std::size_t>(qi));
}

CheckReport check_pi_congruence_universal(const ADescriptor& A, std::size_t k, std::size_t i) {
    if (i == 0 || k == 0) {
        throw DomainError("check_pi_congruence_universal: i and k must be positive");
    }
    const std::uint64_t qi = checked_pow(A.q, i);
    const MultiPolyRing ring(k);
    const UniversalATypical log = atypical_logarithm(A, k, i);
    PowerSeries<MultiPolyRing> f(ring, static_cast<std::size_t>(qi));
    std::uint64_t e = 1;
    for (std::size_t j = 0; j <= i; ++j) {
        MultiPoly c = log.b[j];
        for (std::size_t m = 1; m < i && m <= k; ++m) {
            c = c.without_variable(m);
        }
        f.set(static_cast<std::size_t>(e), c);
        e *= A.q;
    }
    const PowerSeries<MultiPolyRing> finv = comp_inverse(f, static_cast<std::size_t>(qi));
    const PowerSeries<MultiPolyRing> pi = compose(finv, f.scaled(ring.from_int(A.p)));
    for (std::size_t n = 0; n <= qi; ++n) {
        MultiPoly expect(k);
        if (n == qi && i <= k) {
            expect = MultiPoly::variable_power(k, i, 1);
        }
        const MultiPoly& got = pi.coeff(n);
        for (const auto& [ex, c] : got.terms()) {
            if (!is_p_integral(c, A.p)) {
                return CheckReport::fail("pi-congruence-universal", {n}, static_cast<std::size_t>(qi),
                                         "non-integral coefficient " + to_string(c) + " in " + got.to_string());
            }
        }
        std::map<MultiPoly::Exponents, std::uint64_t> lhs;
        for (const auto& [ex, c] : got.terms()) {
            if (const std::uint64_t r = reduce_mod_p(c, A.p); r != 0) {
                lhs[ex] = r;
            }
        }
        std::map<MultiPoly::Exponents, std::uint64_t> rhs;
        for (const auto& [ex, c] : expect.terms()) {
            rhs[ex] = reduce_mod_p(c, A.p);
        }
        if (lhs != rhs) {
            return CheckReport::fail("pi-congruence-universal", {n}, static_cast<std::size_t>(qi),
                                     "[pi] coefficient " + got.to_string());
        }
    }
    return CheckReport::pass("pi-congruence-universal", static_cast<std::size_t>(qi));
}

void PiPolynomial::validate() const {
    if (!field) {
        throw DomainError("PiPolynomial: missing field");
    }
    if (exact_log(q, field->p()) < 1) {
        throw DomainError("PiPolynomial: q = " + std::to_string(q) + " is not a power of " +
                          std::to_string(field->p()));
    }
    if (g == 0 || d == 0) {
        throw DomainError("PiPolynomial: g and d must be positive");
    }
    if (a.size() != d) {
        throw DomainError("PiPolynomial: expected " + std::to_string(d) + " coefficients, got " +
                          std::to_string(a.size()));
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (!same_field(a[j].field(), field)) {
            throw DomainError("PiPolynomial: coefficient over a different field");
        }
        if (a[j].is_exact_zero()) {
            if (j == 0) {
                throw DomainError("PiPolynomial: a_1 must be nonzero");
            }
            continue;
        }
        const auto lb = a[j].valuation_lower_bound();
        if (!lb || *lb < 1) {
            throw DomainError("PiPolynomial: a_" + std::to_string(j + 1) + " must have valuation >= 1");
        }
        if (j == 0 && !a[j].has_known_valuation()) {
            throw InsufficientPrecision("PiPolynomial: a_1 is not known to be nonzero");
        }
    }
}

namespace {

SeriesPoly sparse_poly(const PiPolynomial& P, std::uint64_t first_exponent) {
    P.validate();
    std::vector<std::pair<std::size_t, LaurentSeries>> terms;
    std::uint64_t e = first_exponent;
    for (const LaurentSeries& c : P.a) {
        terms.emplace_back(static_cast<std::size_t>(e), c);
        e = e * P.q;
    }
    if (e > (1ULL << 22U)) {
        throw DomainError("polynomial degree " + std::to_string(e) + " too large to expand densely");
    }
    terms.emplace_back(static_cast<std::size_t>(e), LaurentSeries::constant(P.field, P.field->one()));
    return SeriesPoly::from_terms(P.field, terms);
}

} // namespace

SeriesPoly v_polynomial(const PiPolynomial& P) { return sparse_poly(P, 1); }

SeriesPoly pi_polynomial(const PiPolynomial& P) { return sparse_poly(P, checked_pow(P.q, P.g)); }

SeriesPoly v_twist(const PiPolynomial& P, std::uint64_t i) {
    P.validate();
    const std::uint64_t k = static_cast<std::uint64_t>(exact_log(P.q, P.field->p())) * i * P.g;
    PiPolynomial twisted = P;
    for (LaurentSeries& c : twisted.a) {
        c = c.p_power(k);
    }
    return v_polynomial(twisted);
}

} // namespace ramtower
