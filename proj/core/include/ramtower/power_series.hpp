#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramtower/errors.hpp"
#include "ramtower/rings.hpp"

namespace ramtower {

/// Truncated power series sum_{n <= D} c_n T^n over a coefficient ring.
/// Every coefficient up to and including degree D is known; nothing above.
template <CoefficientRing R>
class PowerSeries {
public:
    using V = typename R::value_type;

    PowerSeries(R ring, std::size_t degree) : ring_(std::move(ring)), c_(degree + 1, ring_.zero()) {}
    PowerSeries(R ring, std::size_t degree, std::vector<V> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        c_.resize(degree + 1, ring_.zero());
    }

    static PowerSeries monomial(R ring, std::size_t degree, std::size_t n, V c) {
        PowerSeries out(std::move(ring), degree);
        if (n <= degree) {
            out.c_[n] = std::move(c);
        }
        return out;
    }
    static PowerSeries identity(R ring, std::size_t degree) {
        V one = ring.one();
        return monomial(std::move(ring), degree, 1, std::move(one));
    }

    const R& ring() const { return ring_; }
    std::size_t degree() const { return c_.size() - 1; }
    const std::vector<V>& coeffs() const { return c_; }
    const V& coeff(std::size_t n) const { return c_.at(n); }
    void set(std::size_t n, V v) { c_.at(n) = std::move(v); }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [this](const V& v) { return ring_.is_zero(v); });
    }
    /// Index of the first nonzero coefficient; empty when none up to D.
    std::optional<std::size_t> valuation() const {
        for (std::size_t n = 0; n < c_.size(); ++n) {
            if (!ring_.is_zero(c_[n])) {
                return n;
            }
        }
        return std::nullopt;
    }
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t n = 0; n < c_.size(); ++n) {
            if (!ring_.is_zero(c_[n])) {
                out.push_back(n);
            }
        }
        return out;
    }

    PowerSeries truncated(std::size_t degree) const {
        std::vector<V> c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(degree, this->degree()) + 1));
        return PowerSeries(ring_, std::min(degree, this->degree()), std::move(c));
    }

    PowerSeries operator-() const {
        PowerSeries out = *this;
        for (V& v : out.c_) {
            v = ring_.neg(v);
        }
        return out;
    }
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t d = std::min(a.degree(), b.degree());
        PowerSeries out(a.ring_, d);
        for (std::size_t n = 0; n <= d; ++n) {
            out.c_[n] = a.ring_.add(a.c_[n], b.c_[n]);
        }
        return out;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t d = std::min(a.degree(), b.degree());
        PowerSeries out(a.ring_, d);
        const std::vector<std::size_t> sb = b.support();
        for (std::size_t i = 0; i <= d; ++i) {
            if (a.ring_.is_zero(a.c_[i])) {
                continue;
            }
            for (const std::size_t j : sb) {
                if (i + j > d) {
                    break;
                }
                out.c_[i + j] = a.ring_.add(out.c_[i + j], a.ring_.mul(a.c_[i], b.c_[j]));
            }
        }
        return out;
    }
    PowerSeries scaled(const V& s) const {
        PowerSeries out = *this;
        for (V& v : out.c_) {
            if (!ring_.is_zero(v)) {
                v = ring_.mul(v, s);
            }
        }
        return out;
    }
    PowerSeries pow(std::uint64_t e) const {
        PowerSeries result = monomial(ring_, degree(), 0, ring_.one());
        PowerSeries base = *this;
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

    /// First index where a and b differ (up to the smaller degree).
    friend std::optional<std::size_t> first_difference(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t d = std::min(a.degree(), b.degree());
        for (std::size_t n = 0; n <= d; ++n) {
            if (!a.ring_.equal(a.c_[n], b.c_[n])) {
                return n;
            }
        }
        return std::nullopt;
    }
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.degree() == b.degree() && !first_difference(a, b).has_value();
    }

private:
    R ring_;
    std::vector<V> c_;
};

/// f(g(T)) truncated at the smaller degree. Throws DomainError unless g(0) = 0.
template <CoefficientRing R>
PowerSeries<R> compose(const PowerSeries<R>& f, const PowerSeries<R>& g) {
    const R& ring = f.ring();
    if (!ring.is_zero(g.coeff(0))) {
        throw DomainError("compose: inner series has a nonzero constant term");
    }
    const std::size_t d = std::min(f.degree(), g.degree());
    const PowerSeries<R> inner = g.truncated(d);
    PowerSeries<R> acc(ring, d);
    for (std::size_t n = d + 1; n-- > 0;) {
        acc = acc * inner;
        acc.set(0, ring.add(acc.coeff(0), f.coeff(n)));
    }
    return acc;
}

/// Compositional inverse g with f(g(T)) = g(f(T)) = T to degree D. Solves
/// sum_a g_a [T^n] f^a = delta_{n,1} one degree at a time.
/// Throws DomainError unless f(0) = 0 and f'(0) is a unit.
template <CoefficientRing R>
PowerSeries<R> comp_inverse(const PowerSeries<R>& f, std::size_t degree) {
    const R& ring = f.ring();
    if (f.degree() < 1 || !ring.is_zero(f.coeff(0))) {
        throw DomainError("comp_inverse: series must have zero constant term");
    }
    if (!ring.is_unit(f.coeff(1))) {
        throw DomainError("comp_inverse: linear coefficient is not a unit");
    }
    const std::size_t d = std::min(degree, f.degree());
    const PowerSeries<R> base = f.truncated(d);
    std::vector<PowerSeries<R>> powers;
    powers.reserve(d + 1);
    powers.push_back(PowerSeries<R>::monomial(ring, d, 0, ring.one()));
    for (std::size_t a = 1; a <= d; ++a) {
        powers.push_back(powers.back() * base);
    }
    const auto c_inv = ring.inv(f.coeff(1));
    PowerSeries<R> g(ring, d);
    for (std::size_t n = 1; n <= d; ++n) {
        auto acc = (n == 1) ? ring.one() : ring.zero();
        for (std::size_t a = 1; a < n; ++a) {
            if (!ring.is_zero(g.coeff(a))) {
                acc = ring.sub(acc, ring.mul(g.coeff(a), powers[a].coeff(n)));
            }
        }
        // The diagonal entry [T^n] f^n is c^n.
        auto diag_inv = ring.one();
        for (std::size_t k = 0; k < n; ++k) {
            diag_inv = ring.mul(diag_inv, c_inv);
        }
        g.set(n, ring.mul(acc, diag_inv));
    }
    return g;
}

/// Truncated bivariate series sum_{i+j <= D} c_ij X^i Y^j, stored densely by
/// total degree.
template <CoefficientRing R>
class BivariateSeries {
public:
    using V = typename R::value_type;

    BivariateSeries(R ring, std::size_t degree)
        : ring_(std::move(ring)), degree_(degree), c_((degree + 1) * (degree + 2) / 2, ring_.zero()) {}

    const R& ring() const { return ring_; }
    std::size_t degree() const { return degree_; }

    const V& get(std::size_t i, std::size_t j) const { return c_.at(index(i, j)); }
    void set(std::size_t i, std::size_t j, V v) { c_.at(index(i, j)) = std::move(v); }
    void add_to(std::size_t i, std::size_t j, const V& v) {
        V& slot = c_.at(index(i, j));
        slot = ring_.add(slot, v);
    }

    struct Term {
        std::uint32_t i;
        std::uint32_t j;
        V c;
    };
    /// Nonzero terms ordered by total degree, then by i.
    std::vector<Term> terms() const {
        std::vector<Term> out;
        for (std::size_t n = 0; n <= degree_; ++n) {
            for (std::size_t i = 0; i <= n; ++i) {
                const V& v = c_[index(i, n - i)];
                if (!ring_.is_zero(v)) {
                    out.push_back(Term{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(n - i), v});
                }
            }
        }
        return out;
    }

    static BivariateSeries additive(R ring, std::size_t degree) {
        BivariateSeries out(std::move(ring), degree);
        if (degree >= 1) {
            out.set(1, 0, out.ring_.one());
            out.set(0, 1, out.ring_.one());
        }
        return out;
    }

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
        if (a.degree_ != b.degree_) {
            return false;
        }
        for (std::size_t k = 0; k < a.c_.size(); ++k) {
            if (!a.ring_.equal(a.c_[k], b.c_[k])) {
                return false;
            }
        }
        return true;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        const std::size_t n = i + j;
        if (n > degree_) {
            throw DomainError("bivariate index beyond the truncation degree");
        }
        return n * (n + 1) / 2 + i;
    }

    R ring_;
    std::size_t degree_;
    std::vector<V> c_;
};

namespace detail {

/// Sparse bivariate polynomial used by the axiom checks.
template <CoefficientRing R>
using SparseTerms = std::vector<typename BivariateSeries<R>::Term>;

/// Product of sparse bivariate polynomials, truncated at total degree D.
/// The scratch accumulator is dense and indexed like BivariateSeries.
template <CoefficientRing R>
SparseTerms<R> sparse_mul(const R& ring, const SparseTerms<R>& a, const SparseTerms<R>& b, std::size_t degree,
                          std::vector<typename R::value_type>& scratch, std::vector<std::uint8_t>& used) {
    const std::size_t size = (degree + 1) * (degree + 2) / 2;
    if (scratch.size() != size) {
        scratch.assign(size, ring.zero());
        used.assign(size, 0);
    }
    std::vector<std::size_t> touched;
    for (const auto& ta : a) {
        for (const auto& tb : b) {
            const std::size_t i = ta.i + tb.i;
            const std::size_t j = ta.j + tb.j;
            const std::size_t n = i + j;
            if (n > degree) {
                continue;
            }
            const std::size_t k = n * (n + 1) / 2 + i;
            if (!used[k]) {
                used[k] = 1;
                touched.push_back(k);
                scratch[k] = ring.mul(ta.c, tb.c);
            } else {
                scratch[k] = ring.add(scratch[k], ring.mul(ta.c, tb.c));
            }
        }
    }
    std::sort(touched.begin(), touched.end());
    SparseTerms<R> out;
    out.reserve(touched.size());
    for (const std::size_t k : touched) {
        if (!ring.is_zero(scratch[k])) {
            // Invert k = n(n+1)/2 + i.
            auto n = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
            while (n * (n + 1) / 2 > k) {
                --n;
            }
            while ((n + 1) * (n + 2) / 2 <= k) {
                ++n;
            }
            const std::size_t i = k - n * (n + 1) / 2;
            out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(n - i), scratch[k]});
        }
        used[k] = 0;
        scratch[k] = ring.zero();
    }
    return out;
}

/// Powers F^n of a bivariate series for the requested exponents, truncated at
/// total degree D. In characteristic p with a Frobenius on coefficients, uses
/// F^{pm} = (F^m)^sigma(X^p, Y^p).
template <CoefficientRing R>
class BivariatePowers {
public:
    BivariatePowers(const BivariateSeries<R>& f) : ring_(f.ring()), degree_(f.degree()), base_(f.terms()) {
        cache_.resize(degree_ + 1);
        have_.assign(degree_ + 1, false);
        cache_[0] = {{0, 0, ring_.one()}};
        have_[0] = true;
        cache_[1] = base_;
        have_[1] = true;
    }

    const SparseTerms<R>& get(std::size_t n) {
        if (n > degree_) {
            throw DomainError("power beyond truncation degree");
        }
        if (have_[n]) {
            return cache_[n];
        }
        SparseTerms<R> value;
        if constexpr (requires(const R& r, const typename R::value_type& v) { r.frobenius(v); }) {
            const std::size_t p = ring_.characteristic();
            if (p > 0 && n >= p) {
                value = frobenius_substitute(get(n / p), p);
                if (n % p != 0) {
                    value = sparse_mul(ring_, value, get(n % p), degree_, scratch_, used_);
                }
            } else {
                value = sparse_mul(ring_, get(n - 1), base_, degree_, scratch_, used_);
            }
        } else {
            value = sparse_mul(ring_, get(n - 1), base_, degree_, scratch_, used_);
        }
        cache_[n] = std::move(value);
        have_[n] = true;
        return cache_[n];
    }

private:
    SparseTerms<R> frobenius_substitute(const SparseTerms<R>& a, std::size_t p) const {
        SparseTerms<R> out;
        for (const auto& t : a) {
            if ((t.i + t.j) * p > degree_) {
                continue;
            }
            out.push_back({static_cast<std::uint32_t>(t.i * p), static_cast<std::uint32_t>(t.j * p), ring_.frobenius(t.c)});
        }
        return out;
    }

    R ring_;
    std::size_t degree_;
    SparseTerms<R> base_;
    std::vector<SparseTerms<R>> cache_;
    std::vector<bool> have_;
    std::vector<typename R::value_type> scratch_;
    std::vector<std::uint8_t> used_;
};

} // namespace detail

} // namespace ramtower
