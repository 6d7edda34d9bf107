#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramtower/herbrand.hpp"
#include "ramtower/polygon.hpp"
#include "ramtower/rational.hpp"

namespace ramtower {

/// Numeric data of a tower: residue size q = p^r, heights g and d = s - g, the
/// index N (an input, never inferred) and c = v_N(a_1).
struct TowerParams {
    std::uint32_t p = 2;
    std::uint64_t q = 2;
    std::uint32_t g = 1;
    std::uint32_t d = 1;
    std::uint32_t N = 0;
    Rat c = Rat(1);

    /// Throws DomainError unless p is prime, q a power of p, g, d >= 1, c > 0.
    void validate() const;
};

enum class RootSelection { MaxValuation, MinValuation };

/// Valuations v_K(y_0), v_K(y_1), ... of a torsion point tower, with the
/// polygon used at each step.
struct TorsionTrace {
    std::vector<Rat> valuations;
    /// Smallest m >= 1 with v(y_n) = v(y_{n-1}) / q^d for every computed n >= m.
    std::size_t m = 0;
    /// First step whose polygon is the single segment (0, v(y_{i-1}))--(q^d, 0).
    std::size_t m_polygon = 0;
    std::vector<NewtonPolygon> polygons;
};

/// v(y_0) is a root valuation of V(x) = a_1 x + ... + x^{q^d}; step i solves
/// V^{(q^{ig})}(y_i) = y_{i-1}. Valuations of a_j are given for j = 1..d
/// (empty = +infinity). Iterates to n_max, and further if needed until the
/// single-segment stage is reached.
/// Throws DomainError when v(a_1) is missing or < 1, some v(a_j) < 1, or q is
/// not a prime power.
TorsionTrace torsion_valuations(const std::vector<std::optional<Rat>>& val_a, std::uint32_t g, std::uint64_t q,
                                std::size_t n_max, RootSelection selection = RootSelection::MaxValuation);

/// v_{n-1}(a_1) = q^{g(n-1-N)} c.
Rat layer_valuation(const TowerParams& P, std::uint32_t n);

/// B(n) = q^{g+n} v_{n-1}(a_1) / (q^g - 1) - 1. Throws DomainError for n <= N.
Rat layer_break_B(const TowerParams& P, std::uint32_t n);

/// W(n) = c q^{N+1} (q^{g+n} - q^g - q^{n-1} + 1) / ((q^g - 1)(q - 1)) - 1.
/// Throws DomainError for n <= N.
Rat upper_break_W(const TowerParams& P, std::uint32_t n);

/// The layers K_k / K_{k-1}, k = N+1..n, each a single break B(k) of order q^g.
std::vector<BreakFiltration> tower_layers(const TowerParams& P, std::uint32_t n);

/// Lower filtration of Gal(K_n / K_N): breaks B(N+1) < ... < B(n), each of drop q^g.
BreakFiltration tower_lower_filtration(const TowerParams& P, std::uint32_t n);

/// phi_{K_{n-1}/K_N}(B(n)) from composing the layer functions.
Rat derive_W_by_composition(const TowerParams& P, std::uint32_t n);

struct Interval {
    Rat lo;
    /// Empty means +infinity.
    std::optional<Rat> hi;
    std::uint64_t order = 1;
};

struct BreakSchedule {
    TowerParams params;
    std::uint32_t n = 0;
    /// B(k) and W(k) for k = N+1..n.
    std::vector<Rat> lower;
    std::vector<Rat> upper;
    /// [0, B(N+1)], (B(N+1), B(N+2)], ..., (B(n), inf) with #Γ_x on each.
    std::vector<Interval> lower_table;
    /// Same with the W values.
    std::vector<Interval> upper_table;
    /// Human-readable warnings, e.g. non-integral breaks of a Galois layer.
    std::vector<std::string> lints;
};

/// Throws DomainError for n <= N.
BreakSchedule filtration_tables(const TowerParams& P, std::uint32_t n);

struct BottomLayer {
    std::uint64_t e_N = 1;
    Rat u_N = Rat(0);
    Rat l_N = Rat(0);

    /// Throws DomainError unless e_N >= 1 and u_N <= l_N.
    void validate() const;
};

/// (W - l_N) / e_N + u_N. Throws GuardViolation when W <= l_N.
Rat breaks_over_K(const Rat& W, const BottomLayer& bottom);

/// ceil(m / g).
std::uint64_t norm_index(std::uint64_t m, std::uint64_t g);

struct CharacterBreak {
    Rat upper;
    std::uint32_t level = 0;
};

/// (W(n g), n). Requires q = p (A = Z_p); throws DomainError otherwise or
/// for n <= N.
CharacterBreak character_breaks(const TowerParams& P, std::uint32_t n);

/// Result of comparing the closed forms against the composition oracle on a
/// parameter grid.
struct GridReport {
    std::size_t tuples = 0;
    std::size_t w_mismatches = 0;
    std::size_t psi_mismatches = 0;
    std::size_t first_layer_mismatches = 0;
    std::size_t monotonicity_failures = 0;
    std::optional<std::string> first_counterexample;

    bool ok() const {
        return w_mismatches == 0 && psi_mismatches == 0 && first_layer_mismatches == 0 && monotonicity_failures == 0;
    }
};

/// p in ps, g in gs, c in cs, N in Ns and n = N+1..N+depth, with q = p.
GridReport verify_grid(const std::vector<std::uint32_t>& ps, const std::vector<std::uint32_t>& gs,
                       const std::vector<long>& cs, const std::vector<std::uint32_t>& Ns, std::uint32_t depth);

/// The default grid: p in {2,3,5}, g in {1,2,3}, c in {1,2,3}, N in {0,1,2}, depth 6.
GridReport verify_default_grid();

} // namespace ramtower
