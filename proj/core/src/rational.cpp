#include "ramtower/rational.hpp"

#include <cctype>
#include <limits>

#include "ramtower/errors.hpp"

namespace ramtower {

Rat make_rat(long num, long den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

std::string strip(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    std::string out(s.substr(b, e - b));
    if (!out.empty() && out[0] == '+') {
        out.erase(0, 1);
    }
    return out;
}

} // namespace

Rat parse_rat(std::string_view text) {
    const std::string s = strip(text);
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-') {
        throw DomainError("malformed rational: '" + std::string(text) + "'");
    }
    return make_rat(BigInt(num), BigInt(den));
}

std::string to_string(const Rat& r) { return r.get_str(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

BigInt floor(const Rat& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

BigInt ceil(const Rat& r) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
    BigInt out;
    BigInt b(static_cast<unsigned long>(base));
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

Rat rat_pow(const Rat& base, std::uint64_t exp) {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
    return make_rat(num, den);
}

long padic_valuation(const BigInt& n, std::uint64_t p) {
    if (n == 0) {
        throw DomainError("p-adic valuation of zero");
    }
    BigInt pp(static_cast<unsigned long>(p));
    BigInt rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

long padic_valuation(const Rat& r, std::uint64_t p) {
    if (r == 0) {
        throw DomainError("p-adic valuation of zero");
    }
    return padic_valuation(BigInt(r.get_num()), p) - padic_valuation(BigInt(r.get_den()), p);
}

bool is_p_integral(const Rat& r, std::uint64_t p) {
    return mpz_divisible_ui_p(r.get_den_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

std::uint64_t reduce_mod_p(const Rat& r, std::uint64_t p) {
    if (!is_p_integral(r, p)) {
        throw DomainError("reduction mod p of a non-p-integral rational " + to_string(r));
    }
    BigInt pp(static_cast<unsigned long>(p));
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), r.get_den_mpz_t(), pp.get_mpz_t());
    BigInt v = BigInt(r.get_num()) * inv;
    BigInt res;
    mpz_fdiv_r(res.get_mpz_t(), v.get_mpz_t(), pp.get_mpz_t());
    return res.get_ui();
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

int exact_log(std::uint64_t n, std::uint64_t base) {
    if (base < 2 || n == 0) {
        return -1;
    }
    int k = 0;
    while (n % base == 0) {
        n /= base;
        ++k;
    }
    return n == 1 ? k : -1;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
            throw DomainError("integer overflow computing " + std::to_string(base) + "^" +
                              std::to_string(exp));
        }
        out *= base;
    }
    return out;
}

} // namespace ramtower
