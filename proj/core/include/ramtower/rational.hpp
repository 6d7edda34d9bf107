#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ramtower {

/// Exact rational number. Always kept in canonical (reduced) form.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(long num, long den = 1);
Rat make_rat(const BigInt& num, const BigInt& den);

/// Parses "a", "-a", "a/b". Throws DomainError on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical text: "a" for integers, "a/b" otherwise.
std::string to_string(const Rat& r);

bool is_integer(const Rat& r);
BigInt floor(const Rat& r);
BigInt ceil(const Rat& r);

BigInt ipow(std::uint64_t base, std::uint64_t exp);
Rat rat_pow(const Rat& base, std::uint64_t exp);

/// p-adic valuation of a nonzero integer.
long padic_valuation(const BigInt& n, std::uint64_t p);
/// p-adic valuation of a nonzero rational: v_p(num) - v_p(den).
long padic_valuation(const Rat& r, std::uint64_t p);

/// True when the denominator of r is coprime to p.
bool is_p_integral(const Rat& r, std::uint64_t p);

/// Image of a p-integral rational in Z/pZ, as 0..p-1.
std::uint64_t reduce_mod_p(const Rat& r, std::uint64_t p);

bool is_prime(std::uint64_t n);

/// Returns k with base^k == n, or -1 when n is not a power of base.
int exact_log(std::uint64_t n, std::uint64_t base);

/// Saturating-free checked integer power; throws DomainError on overflow.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

} // namespace ramtower
