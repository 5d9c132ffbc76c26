#include "ctseq/scheme_auto.hpp"

#include <map>

namespace ctseq {

std::pair<ModLaurentPoly, ModLaurentPoly>
child_pair(const ModLaurentPoly& P, const ModLaurentPoly& Q, std::uint32_t alpha) {
    return {pow(P, P.modulus.p), mul(pow(P, alpha), Q)};
}

std::optional<std::pair<ModLaurentPoly, ModLaurentPoly>>
normalize_pair(ModLaurentPoly P, ModLaurentPoly Q) {
    for (;;) {
        if (Q.is_zero()) return std::nullopt;
        if (!is_p_power_supported(P)) return std::make_pair(std::move(P), std::move(Q));
        Q = filter_p_divisible(Q);
        if (Q.is_zero()) return std::nullopt;
        ModLaurentPoly P2 = lambda_divide(P);
        ModLaurentPoly Q2 = lambda_divide(Q);
        // constant polynomials are fixed points of the reduction
        if (P2 == P && Q2 == Q) return std::make_pair(std::move(P), std::move(Q));
        P = std::move(P2);
        Q = std::move(Q2);
    }
}

std::variant<AutoScheme, CapExceeded>
generate_auto(const CTPair& pair, const Modulus& modulus, std::size_t cap) {
    if (cap < 1) throw PreconditionError("state cap must be at least 1");
    const std::uint64_t p = modulus.p;

    AutoScheme out;
    out.modulus = modulus;

    ModLaurentPoly P0 = reduce_mod(pair.P, modulus);
    ModLaurentPoly Q0 = reduce_mod(pair.Q, modulus);
    auto root = normalize_pair(P0, Q0);
    if (!root) {
        // identically-zero sequence: one state whose children all vanish
        out.r = 1;
        out.transitions = {std::vector<std::uint32_t>(p, 0)};
        out.initial = {0};
        out.defs = {{P0, ModLaurentPoly::zero(modulus, pair.arity)}};
        return out;
    }

    std::vector<std::pair<ModLaurentPoly, ModLaurentPoly>> states{*root};
    std::map<std::pair<ModLaurentPoly, ModLaurentPoly>, std::uint32_t> index{{*root, 1}};
    std::map<ModLaurentPoly, ModLaurentPoly> ppow_cache;

    for (std::size_t i = 0; i < states.size(); ++i) {
        // states grows during the loop; copy the parent pair
        const auto [P, Q] = states[i];
        auto pc = ppow_cache.find(P);
        if (pc == ppow_cache.end()) pc = ppow_cache.emplace(P, pow(P, p)).first;
        const ModLaurentPoly& Pp = pc->second;

        std::vector<std::uint32_t> row;
        row.reserve(p);
        ModLaurentPoly Pa = ModLaurentPoly::one(modulus, pair.arity);
        for (std::uint64_t alpha = 0; alpha < p; ++alpha) {
            if (alpha) Pa = mul(Pa, P);
            auto child = normalize_pair(Pp, mul(Pa, Q));
            if (!child) {
                row.push_back(0);
                continue;
            }
            auto it = index.find(*child);
            if (it == index.end()) {
                if (states.size() + 1 > cap) return CapExceeded{states.size() + 1};
                states.push_back(*child);
                it = index.emplace(std::move(*child),
                                   static_cast<std::uint32_t>(states.size())).first;
            }
            row.push_back(it->second);
        }
        out.transitions.push_back(std::move(row));
    }

    out.r = static_cast<std::uint32_t>(states.size());
    out.initial.reserve(states.size());
    for (const auto& [P, Q] : states) out.initial.push_back(constant_term(Q));
    out.defs = std::move(states);
    return out;
}

} // namespace ctseq
