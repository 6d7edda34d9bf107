#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramtower/fq.hpp"

namespace ramtower {

/// A truncated Laurent series over F_q in the variable t: an element of
/// K = F_q((t)) known modulo t^abs_precision.
///
/// The stored coefficients start at t^offset. Coefficients between the last
/// stored one and abs_precision are known to be zero; nothing is known at or
/// beyond abs_precision. An infinite precision (std::nullopt) means the series
/// is an exact Laurent polynomial.
///
/// Normal form: no stored coefficient at or beyond abs_precision, no leading or
/// trailing zeros. A series with no stored coefficient is either the exact zero
/// (infinite precision) or O(t^P), whose valuation is undetermined.
///
/// Arithmetic propagates precision pessimistically: sums keep the minimum of the
/// input precisions, products min(P_a + v_b, P_b + v_a).
class LaurentSeries {
public:
    using Precision = std::optional<std::int64_t>;

    explicit LaurentSeries(FqFieldPtr field);
    LaurentSeries(FqFieldPtr field, std::int64_t offset, std::vector<FqElem> coeffs,
                  Precision abs_precision = std::nullopt);

    static LaurentSeries zero(FqFieldPtr field) { return LaurentSeries(std::move(field)); }
    /// O(t^precision).
    static LaurentSeries big_o(FqFieldPtr field, std::int64_t precision);
    static LaurentSeries constant(FqFieldPtr field, FqElem c);
    static LaurentSeries monomial(FqFieldPtr field, FqElem c, std::int64_t exponent);
    /// The uniformizer t.
    static LaurentSeries t(FqFieldPtr field) { return monomial(field, field->one(), 1); }

    const FqFieldPtr& field() const { return field_; }
    std::int64_t offset() const { return offset_; }
    const std::vector<FqElem>& coeffs() const { return coeffs_; }
    Precision abs_precision() const { return precision_; }
    bool is_exact() const { return !precision_.has_value(); }

    /// True for the exact zero series.
    bool is_exact_zero() const { return coeffs_.empty() && is_exact(); }
    /// True when some known coefficient is nonzero.
    bool has_known_valuation() const { return !coeffs_.empty(); }

    /// series_valuation: index of the first nonzero coefficient; std::nullopt
    /// stands for +infinity (the exact zero). Throws InsufficientPrecision for
    /// O(t^P).
    std::optional<std::int64_t> valuation() const;

    /// Valuation if known, otherwise the absolute precision (a lower bound).
    /// Infinite only for the exact zero.
    Precision valuation_lower_bound() const;

    /// Coefficient of t^k. Throws InsufficientPrecision when k >= abs_precision.
    FqElem coeff(std::int64_t k) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    LaurentSeries scaled(FqElem c) const;
    /// Multiplication by t^k.
    LaurentSeries shifted(std::int64_t k) const;
    /// Forgets coefficients at t^P and beyond.
    LaurentSeries truncated(std::int64_t precision) const;
    LaurentSeries pow(std::uint64_t e) const;

    /// Raises to the p^k-th power: coefficient c at t^j becomes c^{p^k} at t^{j p^k}.
    /// Exact in characteristic p, and the precision is multiplied by p^k.
    LaurentSeries p_power(std::uint64_t k) const;

    /// Multiplicative inverse. The relative precision of the result equals that
    /// of the input; for exact non-monomial input it is capped at rel_precision
    /// (required in that case). Throws DomainError on zero, InsufficientPrecision
    /// on O(t^P).
    LaurentSeries inverse(std::optional<std::int64_t> rel_precision = std::nullopt) const;

    /// Structural equality (same field, coefficients and precision).
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

    /// True when a and b agree on every coefficient both of them know.
    bool agrees_with(const LaurentSeries& other) const;

    /// Literal `t^k*(c0 + c1*t + ...) + O(t^P)`; coefficients are FqElem codes.
    std::string to_string() const;

private:
    void normalize();
    void check_field(const LaurentSeries& other) const;

    FqFieldPtr field_;
    std::int64_t offset_ = 0;
    std::vector<FqElem> coeffs_;
    Precision precision_;
};

/// Parses a series literal (see docs/series-literal.md). Integers are reduced
/// into F_q through FqField::from_int.
LaurentSeries parse_series(const FqFieldPtr& field, std::string_view text);

/// q^e-power Frobenius on coefficients (q = field size): the identity on
/// constants, t -> t^{q^e}.
LaurentSeries frobenius_twist(const LaurentSeries& s, std::uint64_t e);

} // namespace ramtower
