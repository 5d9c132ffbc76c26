#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "ctseq/core_arith.hpp"
#include "ctseq/scheme_auto.hpp"
#include "ctseq/scheme_linear.hpp"

namespace ctseq {

using SchemeAny = std::variant<AutoScheme, LinearScheme>;

/// Digit walk from state 1, least-significant digit first; the ZERO sink
/// returns 0 immediately; exhausted digits return the state's initial value.
std::uint64_t eval_auto(const AutoScheme& scheme, const BigIndex& n);

/// a(0..count-1) by per-n digit walks.
std::vector<std::uint64_t> seq_auto(const AutoScheme& scheme, std::size_t count);

/// v <- C^(d_i) v for digits d_(k-1)..d_0 applied onto the initial vector;
/// the answer is component 1.
std::uint64_t eval_linear(const LinearScheme& scheme, const BigIndex& n);

/// a(0..count-1); memoizes the full vector A(floor(n/p)) so the sweep costs
/// O(count * r^2).
std::vector<std::uint64_t> seq_linear(const LinearScheme& scheme, std::size_t count);

std::uint64_t eval_scheme(const SchemeAny& scheme, const BigIndex& n);
const Modulus& scheme_modulus(const SchemeAny& scheme);

/// Evaluate each scheme at n, combine by CRT, reduce mod m.  The schemes'
/// prime-power moduli must be pairwise coprime and m must divide their product.
std::uint64_t eval_crt(const std::vector<SchemeAny>& schemes, std::uint64_t m,
                       const BigIndex& n);

/// x_n = sum_i c_i x_{n-i} with x_1..x_d the given initial terms (1-based n).
struct CFiniteSpec {
    unsigned d = 0;
    std::vector<std::int64_t> coeffs; // c_1..c_d
    std::vector<std::int64_t> init;   // x_1..x_d
};

/// x_n mod m by companion-matrix binary exponentiation; requires n >= 1.
std::uint64_t cfinite_eval(const CFiniteSpec& spec, std::uint64_t m, const BigIndex& n);

/// F_n mod m by the doubling identities, memoized; F_1 = F_2 = 1, n >= 1.
std::uint64_t fib_doubling(const BigIndex& n, std::uint64_t m);

} // namespace ctseq
