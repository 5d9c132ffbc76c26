#include "ctseq/scheme_linear.hpp"

#include "ctseq/scheme_auto.hpp"

namespace ctseq {

namespace {

unsigned val_p(std::uint64_t c, std::uint64_t p, unsigned a) {
    unsigned v = 0;
    while (v < a && c % p == 0) { c /= p; ++v; }
    return v;
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// inverse of a unit mod p^a (extended Euclid)
std::uint64_t unit_inv(std::uint64_t u, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(u % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

using Terms = std::map<ExponentVector, std::uint64_t>;
using Combo = std::map<std::uint32_t, std::uint64_t>;

// T -= f * row, exactly, dropping zeros
template <typename K>
void axpy_neg(std::map<K, std::uint64_t>& T, std::uint64_t f,
              const std::map<K, std::uint64_t>& row, std::uint64_t m) {
    for (const auto& [k, c] : row) {
        auto it = T.find(k);
        std::uint64_t cur = it == T.end() ? 0 : it->second;
        std::uint64_t v = add_mod(cur, m - mul_mod(f, c, m), m);
        if (v == 0) {
            if (it != T.end()) T.erase(it);
        } else if (it != T.end()) {
            it->second = v;
        } else {
            T.emplace(k, v);
        }
    }
}

template <typename K>
void scale_in_place(std::map<K, std::uint64_t>& T, std::uint64_t f, std::uint64_t m) {
    for (auto it = T.begin(); it != T.end();) {
        it->second = mul_mod(it->second, f, m);
        if (it->second == 0) it = T.erase(it);
        else ++it;
    }
}

} // namespace

// reduce T (and track the combo) against the stored rows; stops at the first
// leading monomial that has no row or only a weaker (higher-valuation) pivot
static void reduce_against(const SpanBasis& B, Terms& T, Combo& combo) {
    const std::uint64_t p = B.modulus.p, m = B.modulus.pa;
    const unsigned a = B.modulus.a;
    while (!T.empty()) {
        const ExponentVector& lead = T.begin()->first;
        auto rit = B.rows.find(lead);
        if (rit == B.rows.end()) return;
        const SpanBasis::Row& row = rit->second;
        std::uint64_t c = T.begin()->second;
        if (val_p(c, p, a) < row.v) return;
        std::uint64_t f = c / pow_u64(p, row.v);
        axpy_neg(T, f, row.poly, m);
        axpy_neg(combo, f, row.combo, m);
    }
}

void SpanBasis::insert(const ModLaurentPoly& Q, std::uint32_t member) {
    const std::uint64_t p = modulus.p, m = modulus.pa;
    const unsigned a = modulus.a;
    members.push_back(member);

    std::vector<std::pair<Terms, Combo>> stack;
    stack.emplace_back(Q.terms, Combo{{member, 1}});
    while (!stack.empty()) {
        auto [T, combo] = std::move(stack.back());
        stack.pop_back();
        reduce_against(*this, T, combo);
        if (T.empty()) continue;

        const ExponentVector lead = T.begin()->first;
        std::uint64_t c = T.begin()->second;
        unsigned v = val_p(c, p, a);
        std::uint64_t ui = unit_inv(c / pow_u64(p, v), m);
        scale_in_place(T, ui, m);
        scale_in_place(combo, ui, m);

        auto old = rows.find(lead);
        if (old != rows.end()) {
            // new pivot is strictly stronger (smaller valuation); the displaced
            // row is still span content and must be re-reduced
            stack.emplace_back(std::move(old->second.poly), std::move(old->second.combo));
            old->second = Row{T, combo, v};
        } else {
            rows.emplace(lead, Row{T, combo, v});
        }
        if (v > 0) {
            std::uint64_t f = pow_u64(p, a - v);
            scale_in_place(T, f, m);
            scale_in_place(combo, f, m);
            if (!T.empty()) stack.emplace_back(std::move(T), std::move(combo));
        }
    }
}

std::optional<std::map<std::uint32_t, std::uint64_t>>
SpanBasis::solve(const ModLaurentPoly& target) const {
    Terms T = target.terms;
    Combo combo;
    reduce_against(*this, T, combo);
    if (!T.empty()) return std::nullopt;
    const std::uint64_t m = modulus.pa;
    Combo out;
    for (const auto& [j, c] : combo)
        if (c % m) out.emplace(j, m - c);
    return out;
}

std::optional<std::vector<std::uint64_t>>
span_solve(const std::vector<ModLaurentPoly>& basis, const ModLaurentPoly& target,
           const Modulus& modulus) {
    SpanBasis B(modulus);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (!(basis[j].modulus == modulus) || basis[j].arity != target.arity)
            throw IncompatibilityError("span_solve operands disagree on modulus or arity");
        B.insert(basis[j], static_cast<std::uint32_t>(j + 1));
    }
    if (!(target.modulus == modulus))
        throw IncompatibilityError("span_solve target under a different modulus");
    auto sol = B.solve(target);
    if (!sol) return std::nullopt;
    std::vector<std::uint64_t> out(basis.size(), 0);
    for (const auto& [j, c] : *sol) out[j - 1] = c;
    return out;
}

std::variant<LinearScheme, CapExceeded>
generate_linear(const CTPair& pair, const Modulus& modulus, std::size_t cap) {
    if (cap < 1) throw PreconditionError("state cap must be at least 1");
    const std::uint64_t p = modulus.p;

    LinearScheme out;
    out.modulus = modulus;

    ModLaurentPoly P0 = reduce_mod(pair.P, modulus);
    ModLaurentPoly Q0 = reduce_mod(pair.Q, modulus);
    auto root = normalize_pair(P0, Q0);
    if (!root) {
        out.r = 1;
        out.matrices.assign(p, {{0}});
        out.initial = {0};
        out.defs = {{P0, ModLaurentPoly::zero(modulus, pair.arity)}};
        return out;
    }

    std::vector<std::pair<ModLaurentPoly, ModLaurentPoly>> states{*root};
    std::map<std::pair<ModLaurentPoly, ModLaurentPoly>, std::uint32_t> index{{*root, 1}};
    std::map<ModLaurentPoly, SpanBasis> groups;
    groups.emplace(root->first, SpanBasis(modulus)).first->second.insert(root->second, 1);
    std::map<ModLaurentPoly, ModLaurentPoly> ppow_cache;

    std::vector<std::vector<Combo>> rows; // rows[i][alpha]: column -> coefficient
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto [P, Q] = states[i];
        auto pc = ppow_cache.find(P);
        if (pc == ppow_cache.end()) pc = ppow_cache.emplace(P, pow(P, p)).first;
        const ModLaurentPoly& Pp = pc->second;

        std::vector<Combo> row;
        row.reserve(p);
        // same-parent siblings stay out of the span until the row is complete
        std::vector<std::pair<ModLaurentPoly, ModLaurentPoly>> pending; // (P', Q')
        std::vector<std::uint32_t> pending_idx;
        ModLaurentPoly Pa = ModLaurentPoly::one(modulus, pair.arity);
        for (std::uint64_t alpha = 0; alpha < p; ++alpha) {
            if (alpha) Pa = mul(Pa, P);
            auto child = normalize_pair(Pp, mul(Pa, Q));
            if (!child) {
                row.emplace_back();
                continue;
            }
            auto known = index.find(*child);
            if (known != index.end()) {
                row.push_back(Combo{{known->second, 1}});
                continue;
            }
            auto grp = groups.find(child->first);
            if (grp != groups.end()) {
                if (auto sol = grp->second.solve(child->second)) {
                    row.push_back(std::move(*sol));
                    continue;
                }
            }
            if (states.size() + 1 > cap) return CapExceeded{states.size() + 1};
            states.push_back(*child);
            auto idx = static_cast<std::uint32_t>(states.size());
            pending.push_back(*child);
            pending_idx.push_back(idx);
            index.emplace(std::move(*child), idx);
            row.push_back(Combo{{idx, 1}});
        }
        for (std::size_t k = 0; k < pending.size(); ++k) {
            auto grp = groups.find(pending[k].first);
            if (grp == groups.end())
                grp = groups.emplace(pending[k].first, SpanBasis(modulus)).first;
            grp->second.insert(pending[k].second, pending_idx[k]);
        }
        rows.push_back(std::move(row));
    }

    const auto r = static_cast<std::uint32_t>(states.size());
    out.r = r;
    out.matrices.assign(p, std::vector<std::vector<std::uint64_t>>(
                               r, std::vector<std::uint64_t>(r, 0)));
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint64_t alpha = 0; alpha < p; ++alpha)
            for (const auto& [j, c] : rows[i][alpha])
                out.matrices[alpha][i][j - 1] = c;
    out.initial.reserve(r);
    for (const auto& [P, Q] : states) out.initial.push_back(constant_term(Q));
    out.defs = std::move(states);
    return out;
}

} // namespace ctseq
