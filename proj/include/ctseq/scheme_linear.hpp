#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ctseq/ctdef.hpp"
#include "ctseq/laurent.hpp"

namespace ctseq {

/// Compressed scheme: A_i(pn+alpha) = sum_j C^(alpha)_{i,j} A_j(n) mod p^a,
/// with A_i(0) = initial[i] and f = A_1.  Satisfies initial = C^(0)*initial.
struct LinearScheme {
    Modulus modulus;
    std::uint32_t r = 0;
    std::vector<std::vector<std::vector<std::uint64_t>>> matrices; // p of r x r
    std::vector<std::uint64_t> initial;
    std::vector<std::pair<ModLaurentPoly, ModLaurentPoly>> defs; // audit; may be empty
};

/// Incrementally maintained span of Q-components sharing one canonical P.
/// Rows are kept Howell-reduced over Z/p^aZ: each row is normalized so its
/// leading coefficient is p^v (v its pivot valuation), and for v > 0 the
/// p^(a-v) multiple is inserted too, so membership is decidable despite
/// zero divisors.
struct SpanBasis {
    struct Row {
        std::map<ExponentVector, std::uint64_t> poly;
        std::map<std::uint32_t, std::uint64_t> combo; // member index -> coefficient
        unsigned v = 0;                               // p-adic valuation of the pivot
    };

    Modulus modulus;
    std::vector<std::uint32_t> members;            // scheme states backing the span
    std::map<ExponentVector, Row> rows;            // keyed by leading exponent

    explicit SpanBasis(const Modulus& m) : modulus(m) {}

    /// Add member Q (a scheme state's Q-component) under the given index.
    void insert(const ModLaurentPoly& Q, std::uint32_t member);

    /// Coefficients over member indices reproducing target, or nullopt.
    std::optional<std::map<std::uint32_t, std::uint64_t>>
    solve(const ModLaurentPoly& target) const;
};

/// Exact membership over Z/p^aZ: coefficients c with sum c_j basis_j = target.
std::optional<std::vector<std::uint64_t>>
span_solve(const std::vector<ModLaurentPoly>& basis, const ModLaurentPoly& target,
           const Modulus& modulus);

/// Worklist generation as in generate_auto, except a normalized child whose
/// Q lies in the span of previously registered same-P states contributes a
/// matrix row instead of a new state.  Span lookups see the states registered
/// before the current parent's expansion; exact-duplicate lookups see all.
std::variant<LinearScheme, CapExceeded>
generate_linear(const CTPair& pair, const Modulus& modulus, std::size_t cap);

} // namespace ctseq
