#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ramtower/polygon.hpp"
#include "ramtower/rational.hpp"
#include "ramtower/series_poly.hpp"

namespace ramtower {

/// L = K[x]/(f) for an Eisenstein polynomial f over K = F_q((t)): monic of
/// degree n >= 2, v(a_i) >= 1 for i < n and v(a_0) = 1. The class of x is a
/// uniformizer alpha of L.
class EisensteinExt {
public:
    /// Throws DomainError when f is not Eisenstein, InsufficientPrecision when
    /// v(a_0) is not determined.
    static std::shared_ptr<const EisensteinExt> make(const SeriesPoly& f);

    const SeriesPoly& poly() const { return f_; }
    const FqFieldPtr& field() const { return f_.field(); }
    std::size_t degree() const { return static_cast<std::size_t>(f_.degree()); }

private:
    explicit EisensteinExt(SeriesPoly f) : f_(std::move(f)) {}

    SeriesPoly f_;
};

using EisensteinExtPtr = std::shared_ptr<const EisensteinExt>;

/// An element of L written as a polynomial in alpha of degree < n.
class ExtElement {
public:
    ExtElement(EisensteinExtPtr ext, SeriesPoly rep);

    static ExtElement alpha(const EisensteinExtPtr& ext);
    static ExtElement from_base(const EisensteinExtPtr& ext, const LaurentSeries& c);

    const EisensteinExtPtr& ext() const { return ext_; }
    const SeriesPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
    ExtElement pow(std::uint64_t e) const;

private:
    EisensteinExtPtr ext_;
    SeriesPoly rep_;
};

/// v_L(beta) = v_K(Res(f, rep)), with v_L(alpha) = 1. Throws DomainError for
/// beta = 0 and InsufficientPrecision when the norm's valuation is unknown.
Rat ext_valuation(const ExtElement& beta);

/// The points (i, v_L(b_i)) of g(x) = alpha^{-n} f(alpha x + alpha) for
/// i = 1..n. An empty valuation marks b_i = 0.
struct RamificationPoint {
    std::size_t i = 0;
    std::optional<Rat> valuation;
};
std::vector<RamificationPoint> ramification_polynomial(const EisensteinExtPtr& E);

/// Breaks read off the ramification polygon.
struct TateResult {
    std::vector<RamificationPoint> points;
    /// Polygon in v_L units.
    NewtonPolygon polygon;
    /// y-intercepts of the sides of negative slope, divided by n = [L:K] so
    /// that they are measured with v_K.
    std::vector<Rat> breaks;
};
TateResult tate_breaks(const EisensteinExtPtr& E);

/// q * v / (q - 1) - 1. Throws DomainError unless q is a prime power >= 2 and v >= 1.
Rat closed_form_break(std::uint64_t q, const Rat& v_a1);

struct TateHypothesis {
    bool holds = false;
    /// First i with v(a_i) < v(a_1).
    std::optional<std::size_t> witness;
    /// Empty when a_1 = 0.
    std::optional<Rat> v_a1;
    std::size_t degree = 0;
    bool degree_is_p_power = false;
};
/// v_K(a_i) >= v_K(a_1) for 1 <= i < n. Metadata records whether deg f is a
/// power of the characteristic.
TateHypothesis check_tate_hypothesis(const SeriesPoly& f);

} // namespace ramtower
