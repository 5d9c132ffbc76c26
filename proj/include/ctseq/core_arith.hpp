#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ctseq/errors.hpp"

namespace ctseq {

/// Deterministic trial-division primality test (p is always small here).
bool is_prime_u64(std::uint64_t n);

/// (x * y) mod m without overflow.
inline std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
}

/// (x + y) mod m for x, y already reduced; safe near 2^64.
inline std::uint64_t add_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    std::uint64_t s = x + y;
    if (s < x || s >= m) s -= m;
    return s;
}

/// Prime-power modulus p^a.
struct Modulus {
    std::uint64_t p = 2;
    unsigned a = 1;
    std::uint64_t pa = 2;

    Modulus() = default;

    /// Validates that p is prime, a >= 1, and p^a fits in 64 bits.
    Modulus(std::uint64_t p_, unsigned a_);

    friend bool operator==(const Modulus& x, const Modulus& y) {
        return x.p == y.p && x.a == y.a;
    }
};

/// Arbitrary-precision nonnegative index n (comfortable at 10^100).
struct BigIndex {
    mpz_class value;

    BigIndex() : value(0) {}
    BigIndex(std::uint64_t n) : value() { value = static_cast<unsigned long>(n); }
    explicit BigIndex(mpz_class v);

    /// Accepts decimal digits, "B^E", or "B**E" (B, E decimal).
    static BigIndex parse(const std::string& text);

    std::string str() const { return value.get_str(); }

    friend bool operator==(const BigIndex& x, const BigIndex& y) {
        return x.value == y.value;
    }
};

/// Base-p digits of n, least significant first; n = 0 gives the empty list.
std::vector<std::uint32_t> digits_lsb_first(const BigIndex& n, std::uint64_t p);

/// Chinese-remainder combination of (residue, modulus) pairs with pairwise
/// coprime moduli.  Returns (r, M) with M the product and 0 <= r < M.
std::pair<mpz_class, mpz_class>
crt_combine(const std::vector<std::pair<mpz_class, mpz_class>>& pairs);

} // namespace ctseq
