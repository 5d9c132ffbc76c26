#include "ctseq/laurent.hpp"

namespace ctseq {

static void require_same(unsigned a1, unsigned a2) {
    if (a1 != a2)
        throw IncompatibilityError("arity mismatch: " + std::to_string(a1) +
                                   " vs " + std::to_string(a2));
}

static void require_same(const ModLaurentPoly& A, const ModLaurentPoly& B) {
    require_same(A.arity, B.arity);
    if (!(A.modulus == B.modulus))
        throw IncompatibilityError("modulus mismatch: " + std::to_string(A.modulus.pa) +
                                   " vs " + std::to_string(B.modulus.pa));
}

IntLaurentPoly IntLaurentPoly::zero(unsigned arity) {
    return IntLaurentPoly{{}, arity};
}

IntLaurentPoly IntLaurentPoly::constant(const mpz_class& c, unsigned arity) {
    IntLaurentPoly r{{}, arity};
    if (c != 0) r.terms[ExponentVector(arity, 0)] = c;
    return r;
}

IntLaurentPoly IntLaurentPoly::variable(unsigned var, unsigned arity) {
    IntLaurentPoly r{{}, arity};
    ExponentVector e(arity, 0);
    e.at(var) = 1;
    r.terms[e] = 1;
    return r;
}

IntLaurentPoly add(const IntLaurentPoly& A, const IntLaurentPoly& B) {
    require_same(A.arity, B.arity);
    IntLaurentPoly r = A;
    for (const auto& [e, c] : B.terms) {
        mpz_class v = r.terms.count(e) ? r.terms[e] + c : c;
        if (v == 0) r.terms.erase(e);
        else r.terms[e] = v;
    }
    return r;
}

IntLaurentPoly neg(const IntLaurentPoly& A) {
    IntLaurentPoly r = A;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

IntLaurentPoly sub(const IntLaurentPoly& A, const IntLaurentPoly& B) {
    return add(A, neg(B));
}

IntLaurentPoly mul(const IntLaurentPoly& A, const IntLaurentPoly& B) {
    require_same(A.arity, B.arity);
    IntLaurentPoly r{{}, A.arity};
    ExponentVector e(A.arity);
    for (const auto& [e1, c1] : A.terms) {
        for (const auto& [e2, c2] : B.terms) {
            for (unsigned i = 0; i < A.arity; ++i) e[i] = e1[i] + e2[i];
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                r.terms.emplace(e, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    }
    return r;
}

IntLaurentPoly pow(const IntLaurentPoly& A, std::uint64_t e) {
    IntLaurentPoly r = IntLaurentPoly::constant(1, A.arity);
    IntLaurentPoly b = A;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

IntLaurentPoly div_monomial(const IntLaurentPoly& A, const IntLaurentPoly& B) {
    require_same(A.arity, B.arity);
    if (B.terms.size() != 1)
        throw UnsupportedSpecError("divisor must be a single monomial");
    const auto& [be, bc] = *B.terms.begin();
    if (bc != 1 && bc != -1)
        throw UnsupportedSpecError("divisor monomial must have coefficient +1 or -1");
    IntLaurentPoly r{{}, A.arity};
    ExponentVector e(A.arity);
    for (const auto& [ae, ac] : A.terms) {
        for (unsigned i = 0; i < A.arity; ++i) e[i] = ae[i] - be[i];
        r.terms[e] = (bc == 1) ? ac : -ac;
    }
    return r;
}

ModLaurentPoly ModLaurentPoly::zero(const Modulus& m, unsigned arity) {
    return ModLaurentPoly{{}, m, arity};
}

ModLaurentPoly ModLaurentPoly::one(const Modulus& m, unsigned arity) {
    ModLaurentPoly r{{}, m, arity};
    if (m.pa > 1) r.terms[ExponentVector(arity, 0)] = 1;
    return r;
}

ModLaurentPoly reduce_mod(const IntLaurentPoly& P, const Modulus& m) {
    ModLaurentPoly r{{}, m, P.arity};
    mpz_class pa = static_cast<unsigned long>(m.pa);
    for (const auto& [e, c] : P.terms) {
        mpz_class v = c % pa;
        if (v < 0) v += pa;
        if (v != 0) r.terms.emplace(e, v.get_ui());
    }
    return r;
}

ModLaurentPoly add(const ModLaurentPoly& A, const ModLaurentPoly& B) {
    require_same(A, B);
    ModLaurentPoly r = A;
    const std::uint64_t m = A.modulus.pa;
    for (const auto& [e, c] : B.terms) {
        auto it = r.terms.find(e);
        std::uint64_t v = add_mod(it != r.terms.end() ? it->second : 0, c, m);
        if (v == 0) {
            if (it != r.terms.end()) r.terms.erase(it);
        } else if (it != r.terms.end()) {
            it->second = v;
        } else {
            r.terms.emplace(e, v);
        }
    }
    return r;
}

ModLaurentPoly mul(const ModLaurentPoly& A, const ModLaurentPoly& B) {
    require_same(A, B);
    ModLaurentPoly r{{}, A.modulus, A.arity};
    const std::uint64_t m = A.modulus.pa;
    ExponentVector e(A.arity);
    for (const auto& [e1, c1] : A.terms) {
        for (const auto& [e2, c2] : B.terms) {
            for (unsigned i = 0; i < A.arity; ++i) e[i] = e1[i] + e2[i];
            auto it = r.terms.find(e);
            std::uint64_t v = add_mod(it != r.terms.end() ? it->second : 0, mul_mod(c1, c2, m), m);
            if (it != r.terms.end()) {
                if (v == 0) r.terms.erase(it);
                else it->second = v;
            } else if (v != 0) {
                r.terms.emplace(e, v);
            }
        }
    }
    return r;
}

ModLaurentPoly scale(const ModLaurentPoly& A, std::uint64_t c) {
    ModLaurentPoly r{{}, A.modulus, A.arity};
    const std::uint64_t m = A.modulus.pa;
    c %= m;
    for (const auto& [e, v] : A.terms) {
        std::uint64_t w = mul_mod(v, c, m);
        if (w != 0) r.terms.emplace(e, w);
    }
    return r;
}

ModLaurentPoly pow(const ModLaurentPoly& P, std::uint64_t e) {
    ModLaurentPoly r = ModLaurentPoly::one(P.modulus, P.arity);
    ModLaurentPoly b = P;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

std::uint64_t constant_term(const ModLaurentPoly& P) {
    auto it = P.terms.find(ExponentVector(P.arity, 0));
    return it == P.terms.end() ? 0 : it->second;
}

bool is_p_power_supported(const ModLaurentPoly& P) {
    const auto p = static_cast<std::int32_t>(P.modulus.p);
    for (const auto& [e, c] : P.terms)
        for (std::int32_t x : e)
            if (x % p != 0) return false;
    return true;
}

ModLaurentPoly lambda_divide(const ModLaurentPoly& P) {
    if (!is_p_power_supported(P))
        throw NotPSupportedError("lambda_divide: polynomial is not p-power-supported");
    const auto p = static_cast<std::int32_t>(P.modulus.p);
    ModLaurentPoly r{{}, P.modulus, P.arity};
    ExponentVector e(P.arity);
    for (const auto& [e1, c] : P.terms) {
        for (unsigned i = 0; i < P.arity; ++i) e[i] = e1[i] / p;
        r.terms.emplace(e, c);
    }
    return r;
}

ModLaurentPoly filter_p_divisible(const ModLaurentPoly& Q) {
    const auto p = static_cast<std::int32_t>(Q.modulus.p);
    ModLaurentPoly r{{}, Q.modulus, Q.arity};
    for (const auto& [e, c] : Q.terms) {
        bool keep = true;
        for (std::int32_t x : e)
            if (x % p != 0) { keep = false; break; }
        if (keep) r.terms.emplace(e, c);
    }
    return r;
}

} // namespace ctseq
