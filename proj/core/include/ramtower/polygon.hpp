#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ramtower/rational.hpp"
#include "ramtower/series_poly.hpp"

namespace ramtower {

/// A point (i, v(a_i)). An empty y stands for +infinity (a zero coefficient);
/// such points never become vertices.
struct ValPoint {
    std::int64_t x = 0;
    std::optional<Rat> y;
};

struct Side {
    Rat slope;
    std::int64_t mu = 0;
    Rat intercept;
};

struct Vertex {
    std::int64_t x = 0;
    Rat y;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Lower convex hull of a finite point set. Vertices have strictly increasing x
/// and the slopes of consecutive sides strictly increase.
class NewtonPolygon {
public:
    NewtonPolygon() = default;
    /// Builds sides from a vertex list already in convex position.
    explicit NewtonPolygon(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Side>& sides() const { return sides_; }

    /// Value of the polygon at x (must lie in the x-range).
    Rat value_at(const Rat& x) const;

    friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Side> sides_;
};

/// Monotone-chain lower hull. Throws DomainError when no point is finite or
/// some x is negative.
NewtonPolygon build_polygon(const std::vector<ValPoint>& points);

/// Cubic-time reference hull: a point survives when no segment between two
/// other points passes on or below it.
NewtonPolygon brute_force_hull(const std::vector<ValPoint>& points);

/// Points (i, v(a_i)) of a polynomial; exact-zero coefficients are omitted.
/// Throws InsufficientPrecision for a coefficient of unknown valuation.
std::vector<ValPoint> valuation_points(const SeriesPoly& f);

struct RootValuation {
    Rat valuation;
    std::int64_t multiplicity = 0;

    friend bool operator==(const RootValuation&, const RootValuation&) = default;
};

/// One entry (-slope, length) per side, sorted by increasing valuation. The
/// root x = 0 (with its multiplicity) is not included.
std::vector<RootValuation> root_valuations(const SeriesPoly& f);
std::vector<RootValuation> root_valuations(const NewtonPolygon& np);

/// y-intercepts of the sides in increasing order. With nontrivial_only set,
/// only sides of strictly negative slope are kept.
std::vector<Rat> y_intercepts(const NewtonPolygon& np, bool nontrivial_only);

} // namespace ramtower
