#include "ramtower/towers.hpp"

#include <sstream>

#include "ramtower/errors.hpp"

namespace ramtower {

namespace {

Rat rpow(std::uint64_t base, std::uint64_t e) { return Rat(ipow(base, e)); }

std::uint64_t checked_order(std::uint64_t q, std::uint64_t e) { return checked_pow(q, e); }

void require_above_N(const TowerParams& P, std::uint32_t n) {
    if (n <= P.N) {
        throw DomainError("level n = " + std::to_string(n) + " must exceed N = " + std::to_string(P.N));
    }
}

Rat pick(const NewtonPolygon& np, RootSelection selection) {
    const std::vector<RootValuation> roots = root_valuations(np);
    if (roots.empty()) {
        throw DomainError("torsion polygon has no side");
    }
    return selection == RootSelection::MaxValuation ? roots.back().valuation : roots.front().valuation;
}

} // namespace

void TowerParams::validate() const {
    if (!is_prime(p)) {
        throw DomainError("tower: p = " + std::to_string(p) + " is not prime");
    }
    if (exact_log(q, p) < 1) {
        throw DomainError("tower: q = " + std::to_string(q) + " is not a power of p = " + std::to_string(p));
    }
    if (g == 0 || d == 0) {
        throw DomainError("tower: g and d must be positive");
    }
    if (c <= 0) {
        throw DomainError("tower: c must be positive");
    }
}

TorsionTrace torsion_valuations(const std::vector<std::optional<Rat>>& val_a, std::uint32_t g, std::uint64_t q,
                                std::size_t n_max, RootSelection selection) {
    if (val_a.empty() || !val_a[0] || *val_a[0] < 1) {
        throw DomainError("torsion: v(a_1) must be given and at least 1");
    }
    for (std::size_t j = 0; j < val_a.size(); ++j) {
        if (val_a[j] && *val_a[j] < 1) {
            throw DomainError("torsion: v(a_" + std::to_string(j + 1) + ") must be at least 1");
        }
    }
    if (q < 2) {
        throw DomainError("torsion: q must be at least 2");
    }
    std::uint64_t p = 2;
    while (q % p != 0) {
        ++p;
    }
    if (exact_log(q, p) < 1) {
        throw DomainError("torsion: q = " + std::to_string(q) + " is not a prime power");
    }
    if (g == 0) {
        throw DomainError("torsion: g must be positive");
    }
    const std::size_t d = val_a.size();
    const auto qd = static_cast<std::int64_t>(checked_pow(q, d));

    TorsionTrace trace;
    {
        std::vector<ValPoint> pts;
        std::int64_t x = 1;
        for (std::size_t j = 0; j < d; ++j) {
            pts.push_back(ValPoint{x, val_a[j]});
            x *= static_cast<std::int64_t>(q);
        }
        pts.push_back(ValPoint{qd, Rat(0)});
        trace.polygons.push_back(build_polygon(pts));
        trace.valuations.push_back(pick(trace.polygons.back(), selection));
    }
    constexpr std::size_t kExtraSteps = 4096;
    for (std::size_t i = 1;; ++i) {
        if (i > n_max && trace.m_polygon != 0) {
            break;
        }
        if (i > n_max + kExtraSteps) {
            throw Error("torsion: single-segment stage not reached");
        }
        const Rat twist = rpow(q, static_cast<std::uint64_t>(i) * g);
        std::vector<ValPoint> pts{ValPoint{0, trace.valuations.back()}};
        std::int64_t x = 1;
        for (std::size_t j = 0; j < d; ++j) {
            if (val_a[j]) {
                pts.push_back(ValPoint{x, twist * *val_a[j]});
            }
            x *= static_cast<std::int64_t>(q);
        }
        pts.push_back(ValPoint{qd, Rat(0)});
        NewtonPolygon np = build_polygon(pts);
        if (trace.m_polygon == 0 && np.vertices().size() == 2) {
            trace.m_polygon = i;
        }
        trace.valuations.push_back(pick(np, selection));
        trace.polygons.push_back(std::move(np));
    }
    const Rat qd_rat(static_cast<long>(qd));
    std::size_t m = trace.valuations.size();
    while (m - 1 >= 1 && trace.valuations[m - 1] * qd_rat == trace.valuations[m - 2]) {
        --m;
    }
    trace.m = m;
    return trace;
}

Rat layer_valuation(const TowerParams& P, std::uint32_t n) {
    P.validate();
    require_above_N(P, n);
    return rpow(P.q, static_cast<std::uint64_t>(P.g) * (n - 1 - P.N)) * P.c;
}

Rat layer_break_B(const TowerParams& P, std::uint32_t n) {
    const Rat v = layer_valuation(P, n);
    const Rat qg = rpow(P.q, P.g);
    return rpow(P.q, static_cast<std::uint64_t>(P.g) + n) * v / (qg - 1) - 1;
}

Rat upper_break_W(const TowerParams& P, std::uint32_t n) {
    P.validate();
    require_above_N(P, n);
    const Rat q(static_cast<unsigned long>(P.q));
    const Rat qg = rpow(P.q, P.g);
    const Rat num = rpow(P.q, static_cast<std::uint64_t>(P.g) + n) - qg - rpow(P.q, n - 1) + 1;
    return P.c * rpow(P.q, static_cast<std::uint64_t>(P.N) + 1) * num / ((qg - 1) * (q - 1)) - 1;
}

std::vector<BreakFiltration> tower_layers(const TowerParams& P, std::uint32_t n) {
    P.validate();
    require_above_N(P, n);
    const std::uint64_t order = checked_order(P.q, P.g);
    std::vector<BreakFiltration> layers;
    for (std::uint32_t k = P.N + 1; k <= n; ++k) {
        layers.push_back(BreakFiltration::single(layer_break_B(P, k), order));
    }
    return layers;
}

BreakFiltration tower_lower_filtration(const TowerParams& P, std::uint32_t n) {
    P.validate();
    require_above_N(P, n);
    const std::uint64_t drop = checked_order(P.q, P.g);
    std::vector<Break> breaks;
    for (std::uint32_t k = P.N + 1; k <= n; ++k) {
        breaks.push_back(Break{layer_break_B(P, k), drop});
    }
    return BreakFiltration(checked_order(P.q, static_cast<std::uint64_t>(P.g) * (n - P.N)), std::move(breaks));
}

Rat derive_W_by_composition(const TowerParams& P, std::uint32_t n) {
    std::vector<BreakFiltration> layers = tower_layers(P, n);
    const Rat top = layers.back().breaks().front().at;
    layers.pop_back();
    return compose_tower(layers)(top);
}

BreakSchedule filtration_tables(const TowerParams& P, std::uint32_t n) {
    P.validate();
    require_above_N(P, n);
    BreakSchedule s;
    s.params = P;
    s.n = n;
    for (std::uint32_t k = P.N + 1; k <= n; ++k) {
        s.lower.push_back(layer_break_B(P, k));
        s.upper.push_back(upper_break_W(P, k));
    }
    const auto table = [&](const std::vector<Rat>& cuts) {
        std::vector<Interval> out;
        Rat lo(0);
        for (std::size_t idx = 0; idx < cuts.size(); ++idx) {
            const std::uint64_t remaining = static_cast<std::uint64_t>(n - P.N) - idx;
            out.push_back(Interval{lo, cuts[idx], checked_order(P.q, static_cast<std::uint64_t>(P.g) * remaining)});
            lo = cuts[idx];
        }
        out.push_back(Interval{lo, std::nullopt, 1});
        return out;
    };
    s.lower_table = table(s.lower);
    s.upper_table = table(s.upper);
    for (std::size_t idx = 0; idx < s.lower.size(); ++idx) {
        if (!is_integer(s.lower[idx])) {
            s.lints.push_back("non-integral lower break B(" + std::to_string(P.N + 1 + idx) +
                              ") = " + to_string(s.lower[idx]) + " for a Galois layer");
        }
    }
    for (std::size_t idx = 1; idx < s.upper.size(); ++idx) {
        if (s.upper[idx] <= s.upper[idx - 1]) {
            s.lints.push_back("upper breaks not increasing at W(" + std::to_string(P.N + 1 + idx) + ")");
        }
    }
    return s;
}

void BottomLayer::validate() const {
    if (e_N == 0) {
        throw DomainError("bottom layer: e_N must be at least 1");
    }
    if (u_N > l_N) {
        throw DomainError("bottom layer: u_N must not exceed l_N");
    }
}

Rat breaks_over_K(const Rat& W, const BottomLayer& bottom) {
    bottom.validate();
    if (W <= bottom.l_N) {
        throw GuardViolation("W = " + to_string(W) + " does not exceed l_N = " + to_string(bottom.l_N));
    }
    return (W - bottom.l_N) / Rat(static_cast<unsigned long>(bottom.e_N)) + bottom.u_N;
}

std::uint64_t norm_index(std::uint64_t m, std::uint64_t g) {
    if (g == 0) {
        throw DomainError("norm_index: g must be positive");
    }
    return (m + g - 1) / g;
}

CharacterBreak character_breaks(const TowerParams& P, std::uint32_t n) {
    P.validate();
    if (P.q != P.p) {
        throw DomainError("character breaks require q = p (A = Z_p)");
    }
    require_above_N(P, n);
    return CharacterBreak{upper_break_W(P, n * P.g), n};
}

GridReport verify_grid(const std::vector<std::uint32_t>& ps, const std::vector<std::uint32_t>& gs,
                       const std::vector<long>& cs, const std::vector<std::uint32_t>& Ns, std::uint32_t depth) {
    GridReport report;
    const auto note = [&report](const std::string& what) {
        if (!report.first_counterexample) {
            report.first_counterexample = what;
        }
    };
    for (const std::uint32_t p : ps) {
        for (const std::uint32_t g : gs) {
            for (const long c : cs) {
                for (const std::uint32_t N : Ns) {
                    TowerParams P{p, p, g, 1, N, Rat(c)};
                    const std::uint32_t top = N + depth;
                    const PiecewiseLinear psi_top = psi(phi_from_filtration(tower_lower_filtration(P, top)));
                    std::ostringstream tag;
                    tag << "(p,g,c,N)=(" << p << "," << g << "," << c << "," << N << ")";
                    for (std::uint32_t n = N + 1; n <= top; ++n) {
                        ++report.tuples;
                        const Rat W = upper_break_W(P, n);
                        const Rat Wc = derive_W_by_composition(P, n);
                        const Rat B = layer_break_B(P, n);
                        if (W != Wc) {
                            ++report.w_mismatches;
                            note(tag.str() + " n=" + std::to_string(n) + ": W=" + to_string(W) +
                                 " but composition gives " + to_string(Wc));
                        }
                        if (psi_top(W) != B) {
                            ++report.psi_mismatches;
                            note(tag.str() + " n=" + std::to_string(n) + ": psi(W)=" + to_string(psi_top(W)) +
                                 " but B=" + to_string(B));
                        }
                        if (n == N + 1 && W != B) {
                            ++report.first_layer_mismatches;
                            note(tag.str() + ": W(N+1)=" + to_string(W) + " but B(N+1)=" + to_string(B));
                        }
                        if (n > N + 1) {
                            const bool increasing = W > upper_break_W(P, n - 1) && B > layer_break_B(P, n - 1);
                            if (!increasing || !(W < B)) {
                                ++report.monotonicity_failures;
                                note(tag.str() + " n=" + std::to_string(n) + ": monotonicity/contraction fails");
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

GridReport verify_default_grid() { return verify_grid({2, 3, 5}, {1, 2, 3}, {1, 2, 3}, {0, 1, 2}, 6); }

} // namespace ramtower
