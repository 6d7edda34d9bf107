#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramtower/rational.hpp"

namespace ramtower {

struct Break {
    Rat at;
    /// The group order divides by this factor just above `at`.
    std::uint64_t drop = 0;

    friend bool operator==(const Break&, const Break&) = default;
};

/// Lower ramification filtration of a finite Galois extension, recorded by
/// its breaks. Γ_x has order total_order for x <= first break and loses the
/// drop factor past each break.
class BreakFiltration {
public:
    BreakFiltration() = default;
    /// Throws DomainError unless breaks are >= 0 and strictly increasing, every
    /// drop is >= 2 and the drops multiply to total_order.
    BreakFiltration(std::uint64_t total_order, std::vector<Break> breaks);

    static BreakFiltration trivial() { return BreakFiltration(1, {}); }
    static BreakFiltration single(const Rat& at, std::uint64_t order) { return BreakFiltration(order, {{at, order}}); }

    std::uint64_t total_order() const { return order_; }
    const std::vector<Break>& breaks() const { return breaks_; }

    /// #Γ_x.
    std::uint64_t order_at(const Rat& x) const;

    friend bool operator==(const BreakFiltration&, const BreakFiltration&) = default;

private:
    std::uint64_t order_ = 1;
    std::vector<Break> breaks_;
};

/// Continuous, strictly increasing piecewise-linear function on [0, inf) with
/// f(0) = 0. Stored as breakpoints (x_i, y_i) starting at (0, 0) together with
/// the slope after the last one. Collinear breakpoints are always merged, so
/// two functions are equal exactly when their representations are.
class PiecewiseLinear {
public:
    using Point = std::pair<Rat, Rat>;

    /// The identity.
    PiecewiseLinear();
    /// Throws DomainError unless points start at (0,0), x strictly increases,
    /// every slope is positive.
    PiecewiseLinear(std::vector<Point> points, Rat final_slope);

    const std::vector<Point>& points() const { return points_; }
    const Rat& final_slope() const { return final_slope_; }
    Rat initial_slope() const;

    /// Throws DomainError for x < 0.
    Rat operator()(const Rat& x) const;
    /// Unique x with f(x) = y. Throws DomainError for y < 0.
    Rat inverse_at(const Rat& y) const;

    /// Slope on the piece containing x from the right.
    Rat slope_after(const Rat& x) const;

    friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

private:
    void canonicalize();

    std::vector<Point> points_;
    Rat final_slope_;
};

/// (f o g)(x) = f(g(x)).
PiecewiseLinear compose(const PiecewiseLinear& f, const PiecewiseLinear& g);

/// phi(x) = integral over [0, x] of #Γ_t / total_order.
PiecewiseLinear phi_from_filtration(const BreakFiltration& f);

/// Functional inverse.
PiecewiseLinear psi(const PiecewiseLinear& f);

/// Layers listed bottom to top, each in its own lower numbering. Returns
/// phi_1 o phi_2 o ... o phi_k.
PiecewiseLinear compose_tower(const std::vector<BreakFiltration>& layers);

/// phi of each lower break, in order.
std::vector<Rat> lower_to_upper(const BreakFiltration& f);

/// Rebuilds the lower filtration from upper breaks and their drop factors.
/// Throws DomainError when the drops do not multiply to total_order, the
/// counts differ, or the upper breaks are not strictly increasing.
BreakFiltration upper_to_lower(const std::vector<Rat>& upper, const std::vector<std::uint64_t>& drops,
                               std::uint64_t total_order);

/// psi_{Γ/H}(x): the upper index at which H is entered, given phi of the
/// quotient. Throws DomainError for x < 0.
Rat subgroup_restriction_index(const Rat& x, const PiecewiseLinear& quotient_phi);

} // namespace ramtower
