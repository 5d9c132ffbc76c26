#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ctseq/ctdef.hpp"
#include "ctseq/laurent.hpp"

namespace ctseq {

/// Finite automaton with output computing a(n) mod p^a by a base-p digit
/// walk: state family A_1..A_r with A_i(pn+alpha) = A_{sigma(alpha,i)}(n)
/// and A_i(0) = initial[i].  Transition target 0 is the absorbing ZERO sink.
struct AutoScheme {
    Modulus modulus;
    std::uint32_t r = 0;
    std::vector<std::vector<std::uint32_t>> transitions; // r rows, p columns
    std::vector<std::uint64_t> initial;                  // r residues
    std::vector<std::pair<ModLaurentPoly, ModLaurentPoly>> defs; // audit; may be empty
};

/// The pair behind A(pn+alpha): (P^p, P^alpha * Q) mod p^a.
std::pair<ModLaurentPoly, ModLaurentPoly>
child_pair(const ModLaurentPoly& P, const ModLaurentPoly& Q, std::uint32_t alpha);

/// Repeatedly: drop non-p-divisible Q-terms and divide exponents by p while
/// P is p-power-supported; nullopt means the pair's sequence is identically
/// zero (the ZERO sink).  Preserves CT[P^n Q] mod p^a for every n.
std::optional<std::pair<ModLaurentPoly, ModLaurentPoly>>
normalize_pair(ModLaurentPoly P, ModLaurentPoly Q);

/// Breadth-first worklist generation with exact-duplicate state merging.
std::variant<AutoScheme, CapExceeded>
generate_auto(const CTPair& pair, const Modulus& modulus, std::size_t cap);

} // namespace ctseq
