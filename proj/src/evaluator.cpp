#include "ctseq/evaluator.hpp"

#include <map>
#include <type_traits>

namespace ctseq {

std::uint64_t eval_auto(const AutoScheme& scheme, const BigIndex& n) {
    std::uint32_t state = 1;
    for (std::uint32_t d : digits_lsb_first(n, scheme.modulus.p)) {
        state = scheme.transitions[state - 1][d];
        if (state == 0) return 0;
    }
    return scheme.initial[state - 1];
}

std::vector<std::uint64_t> seq_auto(const AutoScheme& scheme, std::size_t count) {
    if (count < 1) throw PreconditionError("count must be at least 1");
    std::vector<std::uint64_t> out;
    out.reserve(count);
    const std::uint64_t p = scheme.modulus.p;
    for (std::size_t n = 0; n < count; ++n) {
        std::uint32_t state = 1;
        for (std::size_t rest = n; rest; rest /= p) {
            state = scheme.transitions[state - 1][rest % p];
            if (state == 0) break;
        }
        out.push_back(state == 0 ? 0 : scheme.initial[state - 1]);
    }
    return out;
}

static std::vector<std::uint64_t> apply_matrix(const std::vector<std::vector<std::uint64_t>>& C,
                                               const std::vector<std::uint64_t>& v,
                                               std::uint64_t m) {
    std::vector<std::uint64_t> w(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t acc = 0;
        const auto& row = C[i];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (row[j]) acc = add_mod(acc, mul_mod(row[j], v[j], m), m);
        w[i] = acc;
    }
    return w;
}

std::uint64_t eval_linear(const LinearScheme& scheme, const BigIndex& n) {
    auto digits = digits_lsb_first(n, scheme.modulus.p);
    std::vector<std::uint64_t> v = scheme.initial;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        v = apply_matrix(scheme.matrices[*it], v, scheme.modulus.pa);
    return v[0];
}

std::vector<std::uint64_t> seq_linear(const LinearScheme& scheme, std::size_t count) {
    if (count < 1) throw PreconditionError("count must be at least 1");
    const std::uint64_t p = scheme.modulus.p, m = scheme.modulus.pa;
    // vectors[n] = (A_1(n), ..., A_r(n)); vectors[n] = C^(n mod p) vectors[n/p]
    std::vector<std::vector<std::uint64_t>> vectors(count);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    vectors[0] = scheme.initial;
    out.push_back(scheme.initial[0]);
    for (std::size_t n = 1; n < count; ++n) {
        vectors[n] = apply_matrix(scheme.matrices[n % p], vectors[n / p], m);
        out.push_back(vectors[n][0]);
    }
    return out;
}

std::uint64_t eval_scheme(const SchemeAny& scheme, const BigIndex& n) {
    return std::visit([&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, AutoScheme>)
            return eval_auto(s, n);
        else
            return eval_linear(s, n);
    }, scheme);
}

const Modulus& scheme_modulus(const SchemeAny& scheme) {
    return std::visit([](const auto& s) -> const Modulus& { return s.modulus; }, scheme);
}

std::uint64_t eval_crt(const std::vector<SchemeAny>& schemes, std::uint64_t m,
                       const BigIndex& n) {
    if (schemes.empty()) throw PreconditionError("eval_crt needs at least one scheme");
    if (m < 2) throw PreconditionError("target modulus must be at least 2");
    std::vector<std::pair<mpz_class, mpz_class>> pairs;
    mpz_class prod = 1;
    for (const auto& s : schemes) {
        std::uint64_t pa = scheme_modulus(s).pa;
        std::uint64_t r = eval_scheme(s, n);
        pairs.emplace_back(mpz_class(static_cast<unsigned long>(r)),
                           mpz_class(static_cast<unsigned long>(pa)));
        prod *= static_cast<unsigned long>(pa);
    }
    if (prod % static_cast<unsigned long>(m) != 0) {
        std::string mods;
        for (const auto& [r, mi] : pairs) mods += (mods.empty() ? "" : ", ") + mi.get_str();
        throw PreconditionError("modulus " + std::to_string(m) +
                                " does not divide the product of scheme moduli {" + mods + "}");
    }
    auto [x, M] = crt_combine(pairs); // also validates pairwise coprimality
    mpz_class r = x % static_cast<unsigned long>(m);
    return r.get_ui();
}

std::uint64_t cfinite_eval(const CFiniteSpec& spec, std::uint64_t m, const BigIndex& n) {
    if (spec.d < 1 || spec.coeffs.size() != spec.d || spec.init.size() != spec.d)
        throw PreconditionError("recurrence needs d coefficients and d initial terms");
    if (m < 2) throw PreconditionError("modulus must be at least 2");
    if (n.value < 1)
        throw PreconditionError("index must be at least 1 (terms are numbered from 1)");
    const unsigned d = spec.d;

    auto reduce = [&](std::int64_t x) {
        std::int64_t r = x % static_cast<std::int64_t>(m);
        if (r < 0) r += static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r);
    };

    // v_k = (x_{k+d-1}, ..., x_k); v_{k+1} = C v_k; x_n = last of C^(n-1) v_1
    std::vector<std::vector<std::uint64_t>> C(d, std::vector<std::uint64_t>(d, 0));
    for (unsigned j = 0; j < d; ++j) C[0][j] = reduce(spec.coeffs[j]);
    for (unsigned i = 1; i < d; ++i) C[i][i - 1] = 1;

    std::vector<std::uint64_t> v(d);
    for (unsigned i = 0; i < d; ++i) v[i] = reduce(spec.init[d - 1 - i]);

    mpz_class e = n.value - 1;
    std::vector<std::vector<std::uint64_t>> base = C;
    auto mat_mul = [&](const auto& A, const auto& B) {
        std::vector<std::vector<std::uint64_t>> R(d, std::vector<std::uint64_t>(d, 0));
        for (unsigned i = 0; i < d; ++i)
            for (unsigned k = 0; k < d; ++k) {
                if (!A[i][k]) continue;
                for (unsigned j = 0; j < d; ++j)
                    R[i][j] = add_mod(R[i][j], mul_mod(A[i][k], B[k][j], m), m);
            }
        return R;
    };
    while (e > 0) {
        if (mpz_tstbit(e.get_mpz_t(), 0)) v = apply_matrix(base, v, m);
        e >>= 1;
        if (e > 0) base = mat_mul(base, base);
    }
    return v[d - 1];
}

namespace {

// returns (F_k, F_{k+1}) mod m
std::pair<std::uint64_t, std::uint64_t>
fib_pair(const mpz_class& k, std::uint64_t m,
         std::map<mpz_class, std::pair<std::uint64_t, std::uint64_t>>& memo) {
    if (k == 0) return {0, 1 % m};
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    auto [a, b] = fib_pair(k / 2, m, memo);
    // F_{2h} = F_h (2 F_{h+1} - F_h),  F_{2h+1} = F_h^2 + F_{h+1}^2
    std::uint64_t twob = add_mod(b, b, m);
    std::uint64_t c = mul_mod(a, add_mod(twob, m - a % m, m) % m, m);
    std::uint64_t d = add_mod(mul_mod(a, a, m), mul_mod(b, b, m), m);
    std::pair<std::uint64_t, std::uint64_t> r =
        mpz_tstbit(k.get_mpz_t(), 0) ? std::make_pair(d, add_mod(c, d, m))
                                     : std::make_pair(c, d);
    memo.emplace(k, r);
    return r;
}

} // namespace

std::uint64_t fib_doubling(const BigIndex& n, std::uint64_t m) {
    if (m < 2) throw PreconditionError("modulus must be at least 2");
    if (n.value < 1) throw PreconditionError("Fibonacci index starts at 1");
    std::map<mpz_class, std::pair<std::uint64_t, std::uint64_t>> memo;
    return fib_pair(n.value, m, memo).first;
}

} // namespace ctseq
