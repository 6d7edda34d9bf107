#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ramtower {

/// An element of F_q, encoded as the integer whose base-p digits are its
/// coordinates in the basis 1, x, ..., x^{m-1} of F_p[x]/(modulus).
struct FqElem {
    std::uint32_t code = 0;

    friend constexpr bool operator==(FqElem, FqElem) = default;
    friend constexpr auto operator<=>(FqElem, FqElem) = default;
};

/// The finite field F_{p^m} = F_p[x]/(modulus).
///
/// The modulus is the first monic irreducible polynomial of degree m when
/// monic polynomials are ordered by the integer c_0 + c_1 p + ... + c_{m-1} p^{m-1}
/// of their lower coefficients. The choice is deterministic, so two runs (or two
/// implementations following the same rule) agree on the encoding of every element.
class FqField {
public:
    /// Builds F_{p^m}. Throws DomainError for non-prime p, m == 0, or q >= 2^31.
    static std::shared_ptr<const FqField> make(std::uint32_t p, std::uint32_t m);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }

    /// Coefficients of the monic modulus, low degree first (size m + 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FqElem zero() const { return FqElem{0}; }
    FqElem one() const { return FqElem{1}; }

    /// Reduces an integer into F_q through its base-p digits; negative
    /// integers map to the negation of their absolute value's image.
    FqElem from_int(long long n) const;
    /// Image of an integer in the prime field.
    FqElem from_prime_field(long long n) const;

    std::vector<std::uint32_t> digits(FqElem a) const;
    FqElem from_digits(const std::vector<std::uint32_t>& d) const;

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    /// Throws DomainError on zero.
    FqElem inv(FqElem a) const;
    FqElem pow(FqElem a, std::uint64_t e) const;
    /// a^{p^k}.
    FqElem frobenius(FqElem a, std::uint64_t k = 1) const;

    bool contains(FqElem a) const { return a.code < q_; }

    std::string describe() const;

    friend bool operator==(const FqField& a, const FqField& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    FqField(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    FqElem mul_slow(FqElem a, FqElem b) const;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> mul_table_;
};

using FqFieldPtr = std::shared_ptr<const FqField>;

/// Content comparison of (possibly distinct) field descriptors.
bool same_field(const FqFieldPtr& a, const FqFieldPtr& b);

/// fq_make: convenience spelling of FqField::make.
inline FqFieldPtr fq_make(std::uint32_t p, std::uint32_t m) { return FqField::make(p, m); }

namespace detail {
/// Ben-Or irreducibility test for a monic polynomial over F_p (low degree first).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);
} // namespace detail

} // namespace ramtower
