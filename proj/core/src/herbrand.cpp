#include "ramtower/herbrand.hpp"

#include <algorithm>

#include "ramtower/errors.hpp"

namespace ramtower {

BreakFiltration::BreakFiltration(std::uint64_t total_order, std::vector<Break> breaks)
    : order_(total_order), breaks_(std::move(breaks)) {
    if (order_ == 0) {
        throw DomainError("filtration order must be positive");
    }
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (breaks_[i].at < 0) {
            throw DomainError("negative break " + to_string(breaks_[i].at));
        }
        if (i > 0 && breaks_[i].at <= breaks_[i - 1].at) {
            throw DomainError("breaks must be strictly increasing");
        }
        if (breaks_[i].drop < 2) {
            throw DomainError("drop factors must be at least 2");
        }
        if (product > order_ / breaks_[i].drop) {
            throw DomainError("drop factors exceed the group order");
        }
        product *= breaks_[i].drop;
    }
    if (product != order_) {
        throw DomainError("drop factors multiply to " + std::to_string(product) + ", not " +
                          std::to_string(order_));
    }
}

std::uint64_t BreakFiltration::order_at(const Rat& x) const {
    std::uint64_t order = order_;
    for (const Break& b : breaks_) {
        if (x > b.at) {
            order /= b.drop;
        }
    }
    return order;
}

PiecewiseLinear::PiecewiseLinear() : points_{{Rat(0), Rat(0)}}, final_slope_(1) {}

PiecewiseLinear::PiecewiseLinear(std::vector<Point> points, Rat final_slope)
    : points_(std::move(points)), final_slope_(std::move(final_slope)) {
    if (points_.empty() || points_[0].first != 0 || points_[0].second != 0) {
        throw DomainError("piecewise-linear function must start at (0,0)");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i].first <= points_[i - 1].first || points_[i].second <= points_[i - 1].second) {
            throw DomainError("piecewise-linear function must be strictly increasing");
        }
    }
    if (final_slope_ <= 0) {
        throw DomainError("final slope must be positive");
    }
    canonicalize();
}

void PiecewiseLinear::canonicalize() {
    std::vector<Point> out;
    out.reserve(points_.size());
    out.push_back(points_[0]);
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const Rat next_slope = (i + 1 < points_.size())
                                   ? (points_[i + 1].second - points_[i].second) / (points_[i + 1].first - points_[i].first)
                                   : final_slope_;
        const Point& prev = out.back();
        const Rat slope = (points_[i].second - prev.second) / (points_[i].first - prev.first);
        if (slope != next_slope) {
            out.push_back(points_[i]);
        }
    }
    points_ = std::move(out);
}

Rat PiecewiseLinear::initial_slope() const {
    if (points_.size() < 2) {
        return final_slope_;
    }
    return points_[1].second / points_[1].first;
}

Rat PiecewiseLinear::operator()(const Rat& x) const {
    if (x < 0) {
        throw DomainError("piecewise-linear function evaluated at negative x");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (x <= points_[i].first) {
            const Point& a = points_[i - 1];
            const Point& b = points_[i];
            return a.second + (b.second - a.second) * (x - a.first) / (b.first - a.first);
        }
    }
    return points_.back().second + final_slope_ * (x - points_.back().first);
}

Rat PiecewiseLinear::inverse_at(const Rat& y) const {
    if (y < 0) {
        throw DomainError("inverse evaluated at negative y");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (y <= points_[i].second) {
            const Point& a = points_[i - 1];
            const Point& b = points_[i];
            return a.first + (b.first - a.first) * (y - a.second) / (b.second - a.second);
        }
    }
    return points_.back().first + (y - points_.back().second) / final_slope_;
}

Rat PiecewiseLinear::slope_after(const Rat& x) const {
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (x < points_[i].first) {
            const Point& a = points_[i - 1];
            const Point& b = points_[i];
            return (b.second - a.second) / (b.first - a.first);
        }
    }
    return final_slope_;
}

PiecewiseLinear compose(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    std::vector<Rat> xs;
    for (const auto& [x, y] : g.points()) {
        xs.push_back(x);
    }
    for (const auto& [x, y] : f.points()) {
        xs.push_back(g.inverse_at(x));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<PiecewiseLinear::Point> pts;
    pts.reserve(xs.size());
    for (const Rat& x : xs) {
        pts.emplace_back(x, f(g(x)));
    }
    return PiecewiseLinear(std::move(pts), f.final_slope() * g.final_slope());
}

PiecewiseLinear phi_from_filtration(const BreakFiltration& f) {
    std::vector<PiecewiseLinear::Point> pts{{Rat(0), Rat(0)}};
    const Rat total(static_cast<unsigned long>(f.total_order()));
    std::uint64_t remaining = f.total_order();
    for (const Break& b : f.breaks()) {
        if (b.at > 0) {
            const auto& last = pts.back();
            pts.emplace_back(b.at, last.second + Rat(static_cast<unsigned long>(remaining)) / total * (b.at - last.first));
        }
        remaining /= b.drop;
    }
    return PiecewiseLinear(std::move(pts), Rat(static_cast<unsigned long>(remaining)) / total);
}

PiecewiseLinear psi(const PiecewiseLinear& f) {
    std::vector<PiecewiseLinear::Point> pts;
    pts.reserve(f.points().size());
    for (const auto& [x, y] : f.points()) {
        pts.emplace_back(y, x);
    }
    return PiecewiseLinear(std::move(pts), 1 / f.final_slope());
}

PiecewiseLinear compose_tower(const std::vector<BreakFiltration>& layers) {
    PiecewiseLinear acc;
    for (const BreakFiltration& layer : layers) {
        acc = compose(acc, phi_from_filtration(layer));
    }
    return acc;
}

std::vector<Rat> lower_to_upper(const BreakFiltration& f) {
    const PiecewiseLinear phi = phi_from_filtration(f);
    std::vector<Rat> out;
    out.reserve(f.breaks().size());
    for (const Break& b : f.breaks()) {
        out.push_back(phi(b.at));
    }
    return out;
}

BreakFiltration upper_to_lower(const std::vector<Rat>& upper, const std::vector<std::uint64_t>& drops,
                               std::uint64_t total_order) {
    if (upper.size() != drops.size()) {
        throw DomainError("upper_to_lower: " + std::to_string(upper.size()) + " breaks but " +
                          std::to_string(drops.size()) + " drop factors");
    }
    std::vector<Break> lower;
    lower.reserve(upper.size());
    std::uint64_t remaining = total_order;
    Rat prev_upper(0);
    Rat prev_lower(0);
    for (std::size_t i = 0; i < upper.size(); ++i) {
        if (upper[i] < 0 || (i > 0 && upper[i] <= upper[i - 1])) {
            throw DomainError("upper breaks must be non-negative and strictly increasing");
        }
        if (drops[i] < 2 || remaining % drops[i] != 0) {
            throw DomainError("inconsistent drop factor " + std::to_string(drops[i]));
        }
        // phi has slope remaining/total between consecutive breaks.
        const Rat x = prev_lower + (upper[i] - prev_upper) * Rat(static_cast<unsigned long>(total_order)) /
                                       Rat(static_cast<unsigned long>(remaining));
        lower.push_back(Break{x, drops[i]});
        prev_upper = upper[i];
        prev_lower = x;
        remaining /= drops[i];
    }
    if (remaining != 1) {
        throw DomainError("drop factors do not multiply to the group order");
    }
    return BreakFiltration(total_order, std::move(lower));
}

Rat subgroup_restriction_index(const Rat& x, const PiecewiseLinear& quotient_phi) {
    if (x < 0) {
        throw DomainError("subgroup_restriction_index: x must be non-negative");
    }
    return quotient_phi.inverse_at(x);
}

} // namespace ramtower
