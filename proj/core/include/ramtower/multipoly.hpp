#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ramtower/errors.hpp"
#include "ramtower/rational.hpp"

namespace ramtower {

/// Polynomial in v_1..v_k with exact rational coefficients. Monomials are
/// exponent vectors of length k; zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint64_t>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rat& c);
    /// c * v_index^power, index in 1..nvars.
    static MultiPoly variable_power(std::size_t nvars, std::size_t index, std::uint64_t power, const Rat& c = Rat(1));

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when the polynomial is a constant (possibly zero); sets c.
    bool is_constant(Rat* c = nullptr) const;

    Rat coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rat& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rat& c) const;

    /// Sets v_index to zero.
    MultiPoly without_variable(std::size_t index) const;
    /// Substitutes rational values for every variable.
    Rat evaluate(const std::vector<Rat>& values) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    std::string to_string() const;

private:
    void check_vars(const MultiPoly& other) const;

    std::size_t nvars_ = 0;
    std::map<Exponents, Rat> terms_;
};

/// Q[v_1..v_k] as a coefficient ring. Only nonzero constants are units.
class MultiPolyRing {
public:
    using value_type = MultiPoly;

    explicit MultiPolyRing(std::size_t nvars) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }

    MultiPoly zero() const { return MultiPoly(nvars_); }
    MultiPoly one() const { return MultiPoly::constant(nvars_, Rat(1)); }
    MultiPoly from_int(long n) const { return MultiPoly::constant(nvars_, Rat(n)); }
    MultiPoly from_bigint(const BigInt& n) const { return MultiPoly::constant(nvars_, Rat(n)); }
    MultiPoly from_rat(const Rat& r) const { return MultiPoly::constant(nvars_, r); }
    MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
    MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
    MultiPoly neg(const MultiPoly& a) const { return -a; }
    bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
    bool equal(const MultiPoly& a, const MultiPoly& b) const { return a == b; }
    bool is_unit(const MultiPoly& a) const {
        Rat c;
        return a.is_constant(&c) && c != 0;
    }
    MultiPoly inv(const MultiPoly& a) const {
        Rat c;
        if (!a.is_constant(&c) || c == 0) {
            throw DomainError("MultiPoly inverse of a non-constant or zero element");
        }
        return MultiPoly::constant(nvars_, 1 / c);
    }
    std::uint32_t characteristic() const { return 0; }
    std::string to_string(const MultiPoly& a) const { return a.to_string(); }

    friend bool operator==(const MultiPolyRing& a, const MultiPolyRing& b) { return a.nvars_ == b.nvars_; }

private:
    std::size_t nvars_;
};

} // namespace ramtower
