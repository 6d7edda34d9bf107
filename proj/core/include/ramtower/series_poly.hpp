#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramtower/laurent.hpp"

namespace ramtower {

/// A polynomial in x whose coefficients are Laurent series over F_q.
/// Index i of coeffs() holds the coefficient of x^i. Exact-zero trailing
/// coefficients are dropped; the degree is the index of the last coefficient
/// with a known nonzero term.
class SeriesPoly {
public:
    explicit SeriesPoly(FqFieldPtr field);
    SeriesPoly(FqFieldPtr field, std::vector<LaurentSeries> coeffs);

    /// Sparse constructor: (exponent, coefficient) pairs.
    static SeriesPoly from_terms(FqFieldPtr field,
                                 const std::vector<std::pair<std::size_t, LaurentSeries>>& terms);
    static SeriesPoly x(FqFieldPtr field);
    static SeriesPoly constant(const LaurentSeries& c);

    const FqFieldPtr& field() const { return field_; }
    const std::vector<LaurentSeries>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i (exact zero beyond the stored range).
    LaurentSeries coeff(std::size_t i) const;

    /// -1 for the polynomial with no known nonzero coefficient.
    int degree() const;
    /// Leading coefficient is the exact constant 1.
    bool is_monic() const;
    bool is_zero() const { return coeffs_.empty(); }

    SeriesPoly operator-() const;
    friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b);
    friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b);
    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
    SeriesPoly scaled(const LaurentSeries& c) const;

    /// Remainder modulo a monic polynomial.
    SeriesPoly rem_monic(const SeriesPoly& modulus) const;

    /// Horner evaluation at a series.
    LaurentSeries evaluate(const LaurentSeries& x0) const;

    /// Composition f(h(x)) as polynomials.
    SeriesPoly compose(const SeriesPoly& h) const;

    /// x -> x^k.
    SeriesPoly substitute_power(std::size_t k) const;

    friend bool operator==(const SeriesPoly& a, const SeriesPoly& b);

    std::string to_string() const;

private:
    void trim();

    FqFieldPtr field_;
    std::vector<LaurentSeries> coeffs_;
};

/// Coefficient-wise q^e-power Frobenius (q the field size).
SeriesPoly frobenius_twist(const SeriesPoly& f, std::uint64_t e);

/// Determinant of the Sylvester matrix of (f, g): deg g rows of f coefficients
/// first, then deg f rows of g coefficients, both written from the leading
/// coefficient down. With this convention Res(x^2 - t, x) = -t.
/// Requires f monic. Res(f, constant c) = c^{deg f}.
LaurentSeries resultant(const SeriesPoly& f, const SeriesPoly& g);

/// Determinant by the division-free Berkowitz algorithm.
LaurentSeries determinant(const std::vector<std::vector<LaurentSeries>>& m);

/// Substitutes the series `inner` (valuation >= 1) into the power series
/// sum_k outer_k T^k. The outer coefficients are taken to be integral
/// (valuation >= 0). When outer is only known modulo T^outer_precision the
/// result carries the additional error term O(t^{outer_precision * v(inner)}).
/// Throws DomainError when v(inner) <= 0.
LaurentSeries series_compose(const SeriesPoly& outer, std::optional<std::int64_t> outer_precision,
                             const LaurentSeries& inner);

} // namespace ramtower
