#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include "ramtower/errors.hpp"
#include "ramtower/fq.hpp"
#include "ramtower/rational.hpp"

namespace ramtower {

/// Coefficient ring descriptors used by the series templates. A descriptor
/// carries whatever context its values need (the field for F_q); values are
/// plain data.
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& a) {
    { r.zero() } -> std::same_as<typename R::value_type>;
    { r.one() } -> std::same_as<typename R::value_type>;
    { r.from_int(1L) } -> std::same_as<typename R::value_type>;
    { r.add(a, a) } -> std::same_as<typename R::value_type>;
    { r.sub(a, a) } -> std::same_as<typename R::value_type>;
    { r.mul(a, a) } -> std::same_as<typename R::value_type>;
    { r.neg(a) } -> std::same_as<typename R::value_type>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.equal(a, a) } -> std::same_as<bool>;
    { r.is_unit(a) } -> std::same_as<bool>;
    { r.inv(a) } -> std::same_as<typename R::value_type>;
    { r.characteristic() } -> std::same_as<std::uint32_t>;
    { r.to_string(a) } -> std::same_as<std::string>;
};

/// The field of rationals.
struct RationalRing {
    using value_type = Rat;

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_int(long n) const { return Rat(n); }
    Rat from_bigint(const BigInt& n) const { return Rat(n); }
    Rat from_rat(const Rat& r) const { return r; }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat neg(const Rat& a) const { return -a; }
    bool is_zero(const Rat& a) const { return a == 0; }
    bool equal(const Rat& a, const Rat& b) const { return a == b; }
    bool is_unit(const Rat& a) const { return a != 0; }
    Rat inv(const Rat& a) const {
        if (a == 0) {
            throw DomainError("inverse of zero rational");
        }
        return 1 / a;
    }
    std::uint32_t characteristic() const { return 0; }
    std::string to_string(const Rat& a) const { return ramtower::to_string(a); }

    friend bool operator==(const RationalRing&, const RationalRing&) { return true; }
};

/// F_q with a shared field descriptor.
class FiniteFieldRing {
public:
    using value_type = FqElem;

    explicit FiniteFieldRing(FqFieldPtr field) : field_(std::move(field)) {}

    const FqFieldPtr& field() const { return field_; }

    FqElem zero() const { return field_->zero(); }
    FqElem one() const { return field_->one(); }
    FqElem from_int(long n) const { return field_->from_int(n); }
    FqElem from_bigint(const BigInt& n) const {
        const BigInt r = n % BigInt(field_->p());
        return field_->from_prime_field(r.get_si());
    }
    /// Reduction of a p-integral rational; throws NonIntegralCoefficient otherwise.
    FqElem from_rat(const Rat& r) const {
        if (!is_p_integral(r, field_->p())) {
            throw NonIntegralCoefficient("cannot reduce " + ramtower::to_string(r) + " mod " +
                                         std::to_string(field_->p()));
        }
        return field_->from_prime_field(static_cast<long long>(reduce_mod_p(r, field_->p())));
    }
    FqElem add(FqElem a, FqElem b) const { return field_->add(a, b); }
    FqElem sub(FqElem a, FqElem b) const { return field_->sub(a, b); }
    FqElem mul(FqElem a, FqElem b) const { return field_->mul(a, b); }
    FqElem neg(FqElem a) const { return field_->neg(a); }
    bool is_zero(FqElem a) const { return a.code == 0; }
    bool equal(FqElem a, FqElem b) const { return a == b; }
    bool is_unit(FqElem a) const { return a.code != 0; }
    FqElem inv(FqElem a) const { return field_->inv(a); }
    std::uint32_t characteristic() const { return field_->p(); }
    /// a^p
    FqElem frobenius(FqElem a) const { return field_->frobenius(a, 1); }
    std::string to_string(FqElem a) const { return std::to_string(a.code); }

    friend bool operator==(const FiniteFieldRing& a, const FiniteFieldRing& b) {
        return same_field(a.field_, b.field_);
    }

private:
    FqFieldPtr field_;
};

} // namespace ramtower
