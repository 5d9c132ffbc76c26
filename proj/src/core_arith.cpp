#include "ctseq/core_arith.hpp"

#include <cctype>

namespace ctseq {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Modulus::Modulus(std::uint64_t p_, unsigned a_) : p(p_), a(a_) {
    if (!is_prime_u64(p))
        throw PreconditionError("modulus base " + std::to_string(p) + " is not prime");
    if (a < 1)
        throw PreconditionError("modulus exponent must be at least 1");
    pa = 1;
    for (unsigned i = 0; i < a; ++i) {
        if (pa > UINT64_MAX / p)
            throw PreconditionError("p^a overflows 64 bits");
        pa *= p;
    }
}

BigIndex::BigIndex(mpz_class v) : value(std::move(v)) {
    if (value < 0) throw PreconditionError("index must be nonnegative");
}

static bool all_decimal(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigIndex BigIndex::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty index", 0);

    std::string base = s, exp;
    auto caret = s.find("**");
    std::size_t skip = 2;
    if (caret == std::string::npos) {
        caret = s.find('^');
        skip = 1;
    }
    if (caret != std::string::npos) {
        base = s.substr(0, caret);
        exp = s.substr(caret + skip);
        if (!all_decimal(exp))
            throw ParseError("malformed exponent in index '" + text + "'", caret + skip);
    }
    if (!all_decimal(base))
        throw ParseError("malformed index '" + text + "'", 0);

    mpz_class b(base, 10);
    if (exp.empty()) return BigIndex(b);
    mpz_class e(exp, 10);
    if (!e.fits_ulong_p())
        throw ParseError("index exponent too large in '" + text + "'", caret + skip);
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e.get_ui());
    return BigIndex(r);
}

std::vector<std::uint32_t> digits_lsb_first(const BigIndex& n, std::uint64_t p) {
    if (p < 2)
        throw PreconditionError("digit base must be at least 2, got " + std::to_string(p));
    std::vector<std::uint32_t> out;
    mpz_class rest = n.value;
    while (rest > 0) {
        out.push_back(static_cast<std::uint32_t>(
            mpz_fdiv_ui(rest.get_mpz_t(), static_cast<unsigned long>(p))));
        mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
    }
    return out;
}

std::pair<mpz_class, mpz_class>
crt_combine(const std::vector<std::pair<mpz_class, mpz_class>>& pairs) {
    mpz_class x = 0, M = 1;
    std::vector<mpz_class> seen;
    for (const auto& [r, m] : pairs) {
        if (m < 2) throw PreconditionError("CRT modulus must be at least 2");
        if (r < 0 || r >= m)
            throw PreconditionError("CRT residue " + r.get_str() +
                                    " out of range for modulus " + m.get_str());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), M.get_mpz_t(), m.get_mpz_t());
        if (g != 1) {
            for (const auto& prev : seen) {
                mpz_class h;
                mpz_gcd(h.get_mpz_t(), prev.get_mpz_t(), m.get_mpz_t());
                if (h != 1)
                    throw PreconditionError("moduli " + prev.get_str() + " and " +
                                            m.get_str() + " are not coprime");
            }
            throw PreconditionError("modulus " + m.get_str() + " is not coprime to the rest");
        }
        // x' = x + M*t with t chosen so x' = r (mod m)
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), M.get_mpz_t(), m.get_mpz_t());
        mpz_class t = ((r - x) * inv) % m;
        if (t < 0) t += m;
        x += M * t;
        M *= m;
        seen.push_back(m);
    }
    return {x, M};
}

} // namespace ctseq
