#include "ramtower/fq.hpp"

#include <sstream>

#include "ramtower/errors.hpp"
#include "ramtower/rational.hpp"

namespace ramtower {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime and small; Fermat.
    std::uint64_t r = 1;
    std::uint64_t b = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
        if (e & 1U) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(r);
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    Poly out(acc.begin(), acc.end());
    trim(out);
    return out;
}

/// Remainder of a modulo b (b nonzero).
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
    Poly result{1};
    base = poly_rem(base, mod, p);
    while (e > 0) {
        if (e & 1U) {
            result = poly_rem(poly_mul(result, base, p), mod, p);
        }
        base = poly_rem(poly_mul(base, base, p), mod, p);
        e >>= 1U;
    }
    return result;
}

} // namespace

namespace detail {

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
    const std::size_t deg = monic.size() - 1;
    if (deg == 0) {
        return false;
    }
    Poly x{0, 1};
    Poly h = x;
    for (std::size_t i = 1; i <= deg / 2; ++i) {
        h = poly_powmod(h, p, monic, p);
        Poly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        const Poly g = poly_gcd(monic, diff, p);
        if (g.size() != 1) {
            return false;
        }
    }
    return true;
}

} // namespace detail

std::shared_ptr<const FqField> FqField::make(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) {
        throw DomainError("fq_make: p = " + std::to_string(p) + " is not prime");
    }
    if (m == 0) {
        throw DomainError("fq_make: extension degree must be positive");
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q >= (1ULL << 31U)) {
            throw DomainError("fq_make: field size exceeds 2^31");
        }
    }
    // Enumerate lower coefficient vectors in increasing integer order.
    for (std::uint64_t code = 0; code < q; ++code) {
        Poly f(m + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[m] = 1;
        if (detail::is_irreducible_mod_p(f, p)) {
            return std::shared_ptr<const FqField>(new FqField(p, m, std::move(f)));
        }
    }
    throw DomainError("fq_make: no irreducible polynomial found"); // unreachable
}

FqField::FqField(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (std::uint32_t i = 0; i < m_; ++i) {
        q_ *= p_;
    }
    if (m_ > 1 && q_ <= 256) {
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                mul_table_[static_cast<std::size_t>(a) * q_ + b] = mul_slow(FqElem{a}, FqElem{b}).code;
            }
        }
    }
}

std::vector<std::uint32_t> FqField::digits(FqElem a) const {
    std::vector<std::uint32_t> d(m_, 0);
    std::uint32_t c = a.code;
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = c % p_;
        c /= p_;
    }
    return d;
}

FqElem FqField::from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        code = code * p_ + d[i] % p_;
    }
    return FqElem{code};
}

FqElem FqField::from_int(long long n) const {
    const bool negative = n < 0;
    unsigned long long u = negative ? static_cast<unsigned long long>(-(n + 1)) + 1ULL
                                    : static_cast<unsigned long long>(n);
    std::vector<std::uint32_t> d(m_, 0);
    // Only the lowest m base-p digits are coordinates.
    u %= q_;
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = static_cast<std::uint32_t>(u % p_);
        u /= p_;
    }
    const FqElem e = from_digits(d);
    return negative ? neg(e) : e;
}

FqElem FqField::from_prime_field(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) {
        r += p_;
    }
    return FqElem{static_cast<std::uint32_t>(r)};
}

FqElem FqField::add(FqElem a, FqElem b) const {
    if (m_ == 1) {
        return FqElem{(a.code + b.code) % p_};
    }
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    std::uint32_t x = a.code;
    std::uint32_t y = b.code;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return FqElem{out};
}

FqElem FqField::neg(FqElem a) const {
    if (m_ == 1) {
        return FqElem{(p_ - a.code) % p_};
    }
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    std::uint32_t x = a.code;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return FqElem{out};
}

FqElem FqField::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FqField::mul_slow(FqElem a, FqElem b) const {
    Poly pa = digits(a);
    Poly pb = digits(b);
    trim(pa);
    trim(pb);
    Poly prod = poly_mul(pa, pb, p_);
    if (!prod.empty() && prod.size() > m_) {
        prod = poly_rem(prod, modulus_, p_);
    }
    prod.resize(m_, 0);
    return from_digits(prod);
}

FqElem FqField::mul(FqElem a, FqElem b) const {
    if (m_ == 1) {
        return FqElem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.code) * b.code % p_)};
    }
    if (!mul_table_.empty()) {
        return FqElem{mul_table_[static_cast<std::size_t>(a.code) * q_ + b.code]};
    }
    return mul_slow(a, b);
}

FqElem FqField::pow(FqElem a, std::uint64_t e) const {
    FqElem result = one();
    while (e > 0) {
        if (e & 1U) {
            result = mul(result, a);
        }
        a = mul(a, a);
        e >>= 1U;
    }
    return result;
}

FqElem FqField::inv(FqElem a) const {
    if (a.code == 0) {
        throw DomainError("inverse of zero in " + describe());
    }
    return pow(a, q_ - 2);
}

FqElem FqField::frobenius(FqElem a, std::uint64_t k) const {
    k %= m_;
    for (std::uint64_t i = 0; i < k; ++i) {
        a = pow(a, p_);
    }
    return a;
}

std::string FqField::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (m_ > 1) {
        os << " = F_" << p_ << "[x]/(";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) {
                continue;
            }
            if (!first) {
                os << " + ";
            }
            first = false;
            if (modulus_[i] != 1 || i == 0) {
                os << modulus_[i];
            }
            if (i >= 1) {
                os << "x";
            }
            if (i >= 2) {
                os << "^" << i;
            }
        }
        os << ")";
    }
    return os.str();
}

bool same_field(const FqFieldPtr& a, const FqFieldPtr& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b) {
        return false;
    }
    return *a == *b;
}

} // namespace ramtower
