#include "ramtower/polygon.hpp"

#include <algorithm>
#include <map>

#include "ramtower/errors.hpp"

namespace ramtower {

namespace {

// Lowest finite y for each x, sorted by x.
std::vector<Vertex> finite_points(const std::vector<ValPoint>& points) {
    std::map<std::int64_t, Rat> best;
    for (const ValPoint& pt : points) {
        if (pt.x < 0) {
            throw DomainError("polygon point with negative x = " + std::to_string(pt.x));
        }
        if (!pt.y) {
            continue;
        }
        auto it = best.find(pt.x);
        if (it == best.end()) {
            best.emplace(pt.x, *pt.y);
        } else if (*pt.y < it->second) {
            it->second = *pt.y;
        }
    }
    if (best.empty()) {
        throw DomainError("polygon needs at least one finite point");
    }
    std::vector<Vertex> out;
    out.reserve(best.size());
    for (const auto& [x, y] : best) {
        out.push_back(Vertex{x, y});
    }
    return out;
}

// Sign of the turn o -> a -> b; positive for a strict left (convex) turn.
int turn(const Vertex& o, const Vertex& a, const Vertex& b) {
    const Rat cross = Rat(a.x - o.x) * (b.y - o.y) - (a.y - o.y) * Rat(b.x - o.x);
    return sgn(cross);
}

} // namespace

NewtonPolygon::NewtonPolygon(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        const Vertex& l = vertices_[i];
        const Vertex& r = vertices_[i + 1];
        if (r.x <= l.x) {
            throw DomainError("polygon vertices must have increasing x");
        }
        Side s;
        s.mu = r.x - l.x;
        s.slope = (r.y - l.y) / Rat(s.mu);
        s.intercept = l.y - s.slope * Rat(l.x);
        if (!sides_.empty() && s.slope <= sides_.back().slope) {
            throw DomainError("polygon vertices are not in convex position");
        }
        sides_.push_back(std::move(s));
    }
}

Rat NewtonPolygon::value_at(const Rat& x) const {
    if (vertices_.empty() || x < vertices_.front().x || x > vertices_.back().x) {
        throw DomainError("value_at: x outside the polygon");
    }
    for (std::size_t i = 0; i < sides_.size(); ++i) {
        if (x <= vertices_[i + 1].x) {
            return sides_[i].intercept + sides_[i].slope * x;
        }
    }
    return vertices_.back().y;
}

NewtonPolygon build_polygon(const std::vector<ValPoint>& points) {
    const std::vector<Vertex> pts = finite_points(points);
    std::vector<Vertex> hull;
    for (const Vertex& p : pts) {
        while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    return NewtonPolygon(std::move(hull));
}

NewtonPolygon brute_force_hull(const std::vector<ValPoint>& points) {
    const std::vector<Vertex> pts = finite_points(points);
    std::vector<Vertex> kept;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const Vertex& p = pts[k];
        bool covered = false;
        for (std::size_t i = 0; i < pts.size() && !covered; ++i) {
            for (std::size_t j = 0; j < pts.size() && !covered; ++j) {
                const Vertex& a = pts[i];
                const Vertex& b = pts[j];
                if (!(a.x < p.x && p.x < b.x)) {
                    continue;
                }
                const Rat at = a.y + (b.y - a.y) * Rat(p.x - a.x) / Rat(b.x - a.x);
                covered = at <= p.y;
            }
        }
        if (!covered) {
            kept.push_back(p);
        }
    }
    return NewtonPolygon(std::move(kept));
}

std::vector<ValPoint> valuation_points(const SeriesPoly& f) {
    std::vector<ValPoint> pts;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const LaurentSeries& c = f.coeffs()[i];
        if (c.is_exact_zero()) {
            continue;
        }
        pts.push_back(ValPoint{static_cast<std::int64_t>(i), Rat(static_cast<long>(*c.valuation()))});
    }
    return pts;
}

std::vector<RootValuation> root_valuations(const NewtonPolygon& np) {
    std::vector<RootValuation> out;
    for (const Side& s : np.sides()) {
        out.push_back(RootValuation{-s.slope, s.mu});
    }
    std::sort(out.begin(), out.end(),
              [](const RootValuation& a, const RootValuation& b) { return a.valuation < b.valuation; });
    return out;
}

std::vector<RootValuation> root_valuations(const SeriesPoly& f) {
    return root_valuations(build_polygon(valuation_points(f)));
}

std::vector<Rat> y_intercepts(const NewtonPolygon& np, bool nontrivial_only) {
    std::vector<Rat> out;
    for (const Side& s : np.sides()) {
        if (nontrivial_only && s.slope >= 0) {
            continue;
        }
        out.push_back(s.intercept);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ramtower
