#pragma once

#include <string>
#include <vector>

#include "ctseq/laurent.hpp"

namespace ctseq {

/// A Laurent-polynomial expression plus the ordered variable list that
/// fixes the arity and the exponent-vector coordinate order.
struct ExprSource {
    std::string text;
    std::vector<std::string> vars;
};

/// Recursive-descent parse of the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := ['-'] factor
///   factor := base (('^'|'**') ['-'] integer)?
///   base   := integer | variable | '(' expr ')'
/// Juxtaposition is not multiplication; '/' and negative powers require the
/// operand to be a single monomial with coefficient +1 or -1.
IntLaurentPoly parse_laurent(const ExprSource& src);

/// Canonical formatting: terms in ascending lexicographic exponent order,
/// '^' for powers, explicit '*', no whitespace.  parse(format(P)) == P.
std::string format_laurent(const IntLaurentPoly& P, const std::vector<std::string>& vars);
std::string format_laurent(const ModLaurentPoly& P, const std::vector<std::string>& vars);

/// "x" for arity 1, else "x1".."xm".
std::vector<std::string> default_vars(unsigned arity);

} // namespace ctseq
