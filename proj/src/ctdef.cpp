#include "ctseq/ctdef.hpp"

#include <algorithm>
#include <cctype>

#include "ctseq/expr.hpp"

namespace ctseq {

CTPair catalog(const std::string& name) {
    if (name == "catalan")
        return CTPair{parse_laurent({"1/x+2+x", {"x"}}), parse_laurent({"1-x", {"x"}}), 1};
    if (name == "motzkin")
        return CTPair{parse_laurent({"1/x+1+x", {"x"}}), parse_laurent({"1-x^2", {"x"}}), 1};
    if (name == "delannoy")
        return CTPair{parse_laurent({"1/x+3+2*x", {"x"}}), parse_laurent({"1", {"x"}}), 1};
    if (name == "apery") {
        std::vector<std::string> v{"x1", "x2", "x3"};
        return CTPair{
            parse_laurent({"(1+x1)*(1+x2)*(1+x3)*(1+x2+x3+x2*x3+x1*x2*x3)/(x1*x2*x3)", v}),
            parse_laurent({"1", v}), 3};
    }
    throw CatalogError("unknown sequence '" + name +
                       "' (valid: catalan, motzkin, delannoy, apery)");
}

CTPair bin_to_ct(const BinomialSumSpec& spec) {
    for (const auto& f : spec.factors)
        if (f[0] < 0 || f[1] < 0 || f[2] < 0)
            throw UnsupportedSpecError("binomial-sum factors need a, b, c >= 0");

    const unsigned m = static_cast<unsigned>(spec.factors.size());
    if (m == 0) {
        // A(n) = sum_k C(n,k) g^k = (1+g)^n, the constant term of ((1+g) x^0)^n
        return CTPair{IntLaurentPoly::constant(spec.g + 1, 1),
                      IntLaurentPoly::constant(1, 1), 1};
    }

    IntLaurentPoly Q = IntLaurentPoly::constant(1, m);
    IntLaurentPoly Pa = IntLaurentPoly::constant(1, m);
    IntLaurentPoly Pb = IntLaurentPoly::constant(1, m);
    for (unsigned i = 0; i < m; ++i) {
        const auto& [a, b, c, d, e, f] = spec.factors[i];
        IntLaurentPoly onePlus = add(IntLaurentPoly::constant(1, m), IntLaurentPoly::variable(i, m));
        auto shift = [&](IntLaurentPoly poly, std::int64_t by) {
            // divide by x_i^by
            IntLaurentPoly r{{}, m};
            for (const auto& [ev, cf] : poly.terms) {
                ExponentVector e2 = ev;
                e2[i] -= static_cast<std::int32_t>(by);
                r.terms.emplace(e2, cf);
            }
            return r;
        };
        Q = mul(Q, shift(pow(onePlus, static_cast<std::uint64_t>(c)), f));
        Pa = mul(Pa, shift(pow(onePlus, static_cast<std::uint64_t>(a)), d));
        Pb = mul(Pb, shift(pow(onePlus, static_cast<std::uint64_t>(b)), e));
    }
    IntLaurentPoly gPb = Pb;
    for (auto& [e, c] : gPb.terms) c *= spec.g;
    IntLaurentPoly P = mul(Pa, add(IntLaurentPoly::constant(1, m), gPb));
    return CTPair{P, Q, m};
}

mpz_class ct_direct(const CTPair& pair, std::uint64_t n) {
    IntLaurentPoly t = mul(pow(pair.P, n), pair.Q);
    auto it = t.terms.find(ExponentVector(pair.arity, 0));
    return it == t.terms.end() ? mpz_class(0) : it->second;
}

std::uint64_t ct_direct(const CTPair& pair, std::uint64_t n, std::uint64_t m) {
    if (m >= (std::uint64_t(1) << 32)) {
        mpz_class v = ct_direct(pair, n) % mpz_class(m ? m : 1);
        if (v < 0) v += static_cast<unsigned long>(m);
        return v.get_ui();
    }
    return ct_prefix(pair, static_cast<std::size_t>(n) + 1, m).back();
}

std::vector<std::uint64_t> ct_prefix(const CTPair& pair, std::size_t count, std::uint64_t m) {
    if (m < 2) throw PreconditionError("modulus must be at least 2");
    if (count == 0) return {};
    if (m >= (std::uint64_t(1) << 32)) {
        // exact fallback; fine for the small prefixes this path is used with
        std::vector<std::uint64_t> out;
        IntLaurentPoly run = pair.Q;
        mpz_class mm = static_cast<unsigned long>(m);
        for (std::size_t k = 0; k < count; ++k) {
            auto it = run.terms.find(ExponentVector(pair.arity, 0));
            mpz_class v = (it == run.terms.end() ? mpz_class(0) : it->second) % mm;
            if (v < 0) v += mm;
            out.push_back(v.get_ui());
            if (k + 1 < count) run = mul(run, pair.P);
        }
        return out;
    }

    const unsigned d = pair.arity;
    const std::int64_t N = static_cast<std::int64_t>(count) - 1;
    std::vector<std::uint64_t> out(count, 0);

    if (pair.P.terms.empty()) {
        mpz_class v = pair.Q.terms.count(ExponentVector(d, 0))
                          ? pair.Q.terms.at(ExponentVector(d, 0))
                          : mpz_class(0);
        v %= static_cast<unsigned long>(m);
        if (v < 0) v += static_cast<unsigned long>(m);
        out[0] = v.get_ui();
        return out;
    }

    // per-variable exponent ranges of P and Q
    std::vector<std::int64_t> pmin(d, INT64_MAX), pmax(d, INT64_MIN);
    std::vector<std::int64_t> qmin(d, 0), qmax(d, 0);
    for (const auto& [e, c] : pair.P.terms)
        for (unsigned i = 0; i < d; ++i) {
            pmin[i] = std::min<std::int64_t>(pmin[i], e[i]);
            pmax[i] = std::max<std::int64_t>(pmax[i], e[i]);
        }
    if (!pair.Q.terms.empty()) {
        for (unsigned i = 0; i < d; ++i) { qmin[i] = INT64_MAX; qmax[i] = INT64_MIN; }
        for (const auto& [e, c] : pair.Q.terms)
            for (unsigned i = 0; i < d; ++i) {
                qmin[i] = std::min<std::int64_t>(qmin[i], e[i]);
                qmax[i] = std::max<std::int64_t>(qmax[i], e[i]);
            }
    }

    // global box covering all exponents reachable in P^k * Q for k <= N
    std::vector<std::int64_t> lo(d), hi(d), size(d);
    std::size_t total = 1;
    for (unsigned i = 0; i < d; ++i) {
        lo[i] = std::min<std::int64_t>(0, pmin[i]) * N + qmin[i];
        hi[i] = std::max<std::int64_t>(0, pmax[i]) * N + qmax[i];
        size[i] = hi[i] - lo[i] + 1;
        if (total > (std::size_t(1) << 28) / static_cast<std::size_t>(size[i]))
            throw PreconditionError("ct_prefix window too large; use a scheme instead");
        total *= static_cast<std::size_t>(size[i]);
    }
    std::vector<std::int64_t> stride(d);
    stride[d - 1] = 1;
    for (int i = static_cast<int>(d) - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * size[i + 1];

    auto flat_of = [&](const std::vector<std::int64_t>& coord) {
        std::int64_t f = 0;
        for (unsigned i = 0; i < d; ++i) f += (coord[i] - lo[i]) * stride[i];
        return f;
    };

    bool zero_inside = true;
    for (unsigned i = 0; i < d; ++i)
        if (lo[i] > 0 || hi[i] < 0) zero_inside = false;
    std::int64_t flat0 = zero_inside ? flat_of(std::vector<std::int64_t>(d, 0)) : -1;

    // P's terms as (flat offset, coefficient)
    std::vector<std::pair<std::int64_t, std::uint64_t>> taps;
    mpz_class mm = static_cast<unsigned long>(m);
    for (const auto& [e, c] : pair.P.terms) {
        std::int64_t off = 0;
        for (unsigned i = 0; i < d; ++i) off += e[i] * stride[i];
        mpz_class v = c % mm;
        if (v < 0) v += mm;
        if (v != 0) taps.emplace_back(off, v.get_ui());
    }

    std::vector<std::uint64_t> cur(total, 0), nxt(total, 0);
    for (const auto& [e, c] : pair.Q.terms) {
        mpz_class v = c % mm;
        if (v < 0) v += mm;
        if (v == 0) continue;
        std::vector<std::int64_t> coord(d);
        for (unsigned i = 0; i < d; ++i) coord[i] = e[i];
        cur[static_cast<std::size_t>(flat_of(coord))] = v.get_ui();
    }

    // subbox actually populated after k multiplications
    std::vector<std::int64_t> clo(qmin), chi(qmax);

    for (std::size_t k = 0; k < count; ++k) {
        out[k] = (flat0 >= 0) ? cur[static_cast<std::size_t>(flat0)] : 0;
        if (k + 1 == count) break;

        std::fill(nxt.begin(), nxt.end(), 0);
        // odometer over the populated subbox
        std::vector<std::int64_t> coord(clo);
        std::int64_t flat = flat_of(coord);
        for (;;) {
            std::uint64_t v = cur[static_cast<std::size_t>(flat)];
            if (v != 0) {
                for (const auto& [off, c] : taps) {
                    std::size_t j = static_cast<std::size_t>(flat + off);
                    nxt[j] = (nxt[j] + v * c) % m;
                }
            }
            int i = static_cast<int>(d) - 1;
            for (;;) {
                ++coord[i];
                flat += stride[i];
                if (coord[i] <= chi[i]) break;
                flat -= (chi[i] - clo[i] + 1) * stride[i];
                coord[i] = clo[i];
                --i;
                if (i < 0) break;
            }
            if (i < 0) break;
        }
        cur.swap(nxt);
        for (unsigned i = 0; i < d; ++i) {
            clo[i] += pmin[i];
            chi[i] += pmax[i];
        }
    }
    return out;
}

mpz_class binsum_direct(const BinomialSumSpec& spec, std::uint64_t n) {
    for (const auto& f : spec.factors)
        if (f[0] < 0 || f[1] < 0 || f[2] < 0)
            throw UnsupportedSpecError("binomial-sum factors need a, b, c >= 0");
    mpz_class total = 0;
    mpz_class gk = 1; // g^k
    for (std::uint64_t k = 0; k <= n; ++k) {
        mpz_class t;
        mpz_bin_uiui(t.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        t *= gk;
        for (const auto& f : spec.factors) {
            const std::int64_t upper = f[0] * static_cast<std::int64_t>(n) +
                                       f[1] * static_cast<std::int64_t>(k) + f[2];
            const std::int64_t lower = f[3] * static_cast<std::int64_t>(n) +
                                       f[4] * static_cast<std::int64_t>(k) + f[5];
            if (lower < 0 || lower > upper) { t = 0; break; }
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(upper),
                         static_cast<unsigned long>(lower));
            t *= b;
        }
        total += t;
        gk *= spec.g;
    }
    return total;
}

BinomialSumSpec parse_binsum(const std::string& text) {
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        std::size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::vector<std::string> chunks;
    std::size_t start = 0;
    for (;;) {
        std::size_t semi = text.find(';', start);
        chunks.push_back(text.substr(start, semi - start));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (!chunks.empty() && trim(chunks.back()).empty()) chunks.pop_back();
    if (chunks.empty()) throw ParseError("empty binomial-sum spec", 0);

    auto parse_int = [&](const std::string& raw, std::size_t where) {
        std::string s = trim(raw);
        if (s.empty()) throw ParseError("missing integer in binomial-sum spec", where);
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw ParseError("missing integer in binomial-sum spec", where);
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("bad integer '" + s + "' in binomial-sum spec", where);
        return s;
    };

    BinomialSumSpec spec;
    spec.g = mpz_class(parse_int(chunks[0], 0), 10);
    for (std::size_t ci = 1; ci < chunks.size(); ++ci) {
        std::vector<std::string> parts;
        std::size_t s2 = 0;
        const std::string& ch = chunks[ci];
        for (;;) {
            std::size_t comma = ch.find(',', s2);
            parts.push_back(ch.substr(s2, comma - s2));
            if (comma == std::string::npos) break;
            s2 = comma + 1;
        }
        if (parts.size() != 6)
            throw ParseError("factor " + std::to_string(ci) + " needs exactly 6 integers", ci);
        std::array<std::int64_t, 6> f{};
        for (int i = 0; i < 6; ++i) {
            try {
                f[static_cast<std::size_t>(i)] =
                    std::stoll(parse_int(parts[static_cast<std::size_t>(i)], ci));
            } catch (const std::out_of_range&) {
                throw ParseError("factor integer out of range", ci);
            }
        }
        spec.factors.push_back(f);
    }
    return spec;
}

} // namespace ctseq
