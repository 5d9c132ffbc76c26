#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "ctseq/core_arith.hpp"
#include "ctseq/errors.hpp"

namespace ctseq {

/// Multi-exponent of a Laurent monomial; negative entries allowed.
/// std::map's lexicographic vector order is the canonical term order.
using ExponentVector = std::vector<std::int32_t>;

/// Sparse Laurent polynomial with exact integer coefficients.
struct IntLaurentPoly {
    std::map<ExponentVector, mpz_class> terms; // no zero coefficients stored
    unsigned arity = 1;

    static IntLaurentPoly zero(unsigned arity);
    static IntLaurentPoly constant(const mpz_class& c, unsigned arity);
    /// The monomial x_var (0-based variable index).
    static IntLaurentPoly variable(unsigned var, unsigned arity);

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const IntLaurentPoly& A, const IntLaurentPoly& B) {
        return A.arity == B.arity && A.terms == B.terms;
    }
};

IntLaurentPoly add(const IntLaurentPoly& A, const IntLaurentPoly& B);
IntLaurentPoly sub(const IntLaurentPoly& A, const IntLaurentPoly& B);
IntLaurentPoly neg(const IntLaurentPoly& A);
IntLaurentPoly mul(const IntLaurentPoly& A, const IntLaurentPoly& B);
IntLaurentPoly pow(const IntLaurentPoly& A, std::uint64_t e);

/// Multiply by the inverse of a +-1-coefficient monomial (throws
/// UnsupportedSpecError if B is not such a monomial).
IntLaurentPoly div_monomial(const IntLaurentPoly& A, const IntLaurentPoly& B);

/// Sparse Laurent polynomial over Z/p^aZ; coefficients stored in [1, p^a).
struct ModLaurentPoly {
    std::map<ExponentVector, std::uint64_t> terms;
    Modulus modulus;
    unsigned arity = 1;

    static ModLaurentPoly zero(const Modulus& m, unsigned arity);
    static ModLaurentPoly one(const Modulus& m, unsigned arity);

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const ModLaurentPoly& A, const ModLaurentPoly& B) {
        return A.arity == B.arity && A.modulus == B.modulus && A.terms == B.terms;
    }
    /// Canonical total order (for state-deduplication maps); ignores modulus,
    /// which is uniform within any one generation run.
    friend bool operator<(const ModLaurentPoly& A, const ModLaurentPoly& B) {
        return std::tie(A.arity, A.terms) < std::tie(B.arity, B.terms);
    }
};

/// Reduce integer coefficients into [0, p^a), dropping vanishing terms.
ModLaurentPoly reduce_mod(const IntLaurentPoly& P, const Modulus& m);

ModLaurentPoly add(const ModLaurentPoly& A, const ModLaurentPoly& B);
ModLaurentPoly mul(const ModLaurentPoly& A, const ModLaurentPoly& B);
ModLaurentPoly scale(const ModLaurentPoly& A, std::uint64_t c);

/// P^e by binary exponentiation, reducing mod p^a after every product.
ModLaurentPoly pow(const ModLaurentPoly& P, std::uint64_t e);

/// Coefficient of x_1^0 ... x_m^0 (0 if absent).
std::uint64_t constant_term(const ModLaurentPoly& P);

/// True iff every exponent of every term is divisible by p (vacuously true
/// for the zero polynomial).
bool is_p_power_supported(const ModLaurentPoly& P);

/// Replace x_j^p by x_j; requires is_p_power_supported(P).
ModLaurentPoly lambda_divide(const ModLaurentPoly& P);

/// Keep only terms whose exponents are all divisible by p.
ModLaurentPoly filter_p_divisible(const ModLaurentPoly& Q);

} // namespace ctseq
