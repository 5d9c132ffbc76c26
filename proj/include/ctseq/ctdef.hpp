#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ctseq/laurent.hpp"

namespace ctseq {

/// A sequence defined as a(n) = ConstantTerm[P^n * Q].
struct CTPair {
    IntLaurentPoly P;
    IntLaurentPoly Q;
    unsigned arity = 1;
};

/// A(n) = sum_k C(n,k) g^k prod_i C(a_i n + b_i k + c_i, d_i n + e_i k + f_i).
struct BinomialSumSpec {
    mpz_class g;
    std::vector<std::array<std::int64_t, 6>> factors; // (a,b,c,d,e,f), a,b,c >= 0
};

/// Builtin definitions: catalan, motzkin, delannoy, apery.
CTPair catalog(const std::string& name);

/// Compile a binomial sum into a constant-term pair:
///   Q = prod_i (1+x_i)^{c_i} / x_i^{f_i}
///   P = (prod_i (1+x_i)^{a_i} / x_i^{d_i}) * (1 + g * prod_i (1+x_i)^{b_i} / x_i^{e_i})
/// Zero factors degenerate to the arity-1 pair ((1+g)*x^0, x^0).
CTPair bin_to_ct(const BinomialSumSpec& spec);

/// Exact brute-force oracle: the constant term of P^n * Q over Z.
/// Intended for small n (a few thousand single-variable, ~50 multivariate).
mpz_class ct_direct(const CTPair& pair, std::uint64_t n);

/// Same value reduced mod m (computed mod m throughout when m < 2^32).
std::uint64_t ct_direct(const CTPair& pair, std::uint64_t n, std::uint64_t m);

/// a(0..count-1) mod m in one sweep of iterated multiplication.
std::vector<std::uint64_t> ct_prefix(const CTPair& pair, std::size_t count, std::uint64_t m);

/// Exact value of the binomial sum, with C(x,y) = 0 for y < 0 or y > x.
mpz_class binsum_direct(const BinomialSumSpec& spec, std::uint64_t n);

/// Text encoding "g; a,b,c,d,e,f; a,b,c,d,e,f; ...".
BinomialSumSpec parse_binsum(const std::string& text);

} // namespace ctseq
