#include "ctseq/expr.hpp"

#include <cctype>

namespace ctseq {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Parser {
    const std::string& s;
    const std::vector<std::string>& vars;
    unsigned arity;
    std::size_t pos = 0;

    Parser(const ExprSource& src) : s(src.text), vars(src.vars) {
        if (vars.empty())
            throw PreconditionError("expression needs at least one variable");
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const auto& v = vars[i];
            if (v.empty() || !is_ident_start(v[0]))
                throw PreconditionError("bad variable name '" + v + "'");
            for (char c : v)
                if (!is_ident_char(c))
                    throw PreconditionError("bad variable name '" + v + "'");
            for (std::size_t j = 0; j < i; ++j)
                if (vars[j] == v)
                    throw PreconditionError("duplicate variable name '" + v + "'");
        }
        arity = static_cast<unsigned>(vars.size());
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    IntLaurentPoly parse() {
        IntLaurentPoly r = expr();
        if (peek() != '\0') fail(std::string("unexpected character '") + s[pos] + "'");
        return r;
    }

    IntLaurentPoly expr() {
        IntLaurentPoly r = term();
        for (;;) {
            if (eat('+')) r = add(r, term());
            else if (eat('-')) r = sub(r, term());
            else return r;
        }
    }

    IntLaurentPoly term() {
        IntLaurentPoly r = unary();
        for (;;) {
            skip_ws();
            // '**' is exponentiation, handled inside factor; only a lone '*' multiplies
            if (pos < s.size() && s[pos] == '*' && !(pos + 1 < s.size() && s[pos + 1] == '*')) {
                ++pos;
                r = mul(r, unary());
            } else if (peek() == '/') {
                std::size_t at = pos;
                ++pos;
                IntLaurentPoly d = unary();
                try {
                    r = div_monomial(r, d);
                } catch (const UnsupportedSpecError& e) {
                    throw ParseError(std::string(e.what()), at);
                }
            } else {
                return r;
            }
        }
    }

    IntLaurentPoly unary() {
        if (eat('-')) return neg(factor());
        return factor();
    }

    IntLaurentPoly factor() {
        IntLaurentPoly b = base();
        skip_ws();
        bool has_exp = false;
        if (pos < s.size() && s[pos] == '^') { ++pos; has_exp = true; }
        else if (pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == '*') { pos += 2; has_exp = true; }
        if (!has_exp) return b;

        std::size_t at = pos;
        bool negative = eat('-');
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer exponent");
        std::uint64_t e = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            e = e * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (e > (1u << 30)) fail("exponent too large");
            ++pos;
        }
        if (!negative) return pow(b, e);
        try {
            IntLaurentPoly inv = div_monomial(IntLaurentPoly::constant(1, arity), b);
            return pow(inv, e);
        } catch (const UnsupportedSpecError& err) {
            throw ParseError(std::string(err.what()), at);
        }
    }

    IntLaurentPoly base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            IntLaurentPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits += s[pos++];
            return IntLaurentPoly::constant(mpz_class(digits, 10), arity);
        }
        if (is_ident_start(c)) {
            std::size_t at = pos;
            std::string name;
            while (pos < s.size() && is_ident_char(s[pos])) name += s[pos++];
            for (unsigned i = 0; i < arity; ++i)
                if (vars[i] == name) return IntLaurentPoly::variable(i, arity);
            throw ParseError("unknown variable '" + name + "'", at);
        }
        if (c == '\0') fail("unexpected end of expression");
        fail(std::string("unexpected character '") + c + "'");
    }
};

void append_term(std::string& out, bool negative, const std::string& mag,
                 const ExponentVector& e, const std::vector<std::string>& vars) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += vars[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (out.empty()) {
        if (negative) out += '-';
    } else {
        out += negative ? '-' : '+';
    }
    if (mono.empty()) out += mag;
    else if (mag == "1") out += mono;
    else out += mag + "*" + mono;
}

} // namespace

IntLaurentPoly parse_laurent(const ExprSource& src) {
    return Parser(src).parse();
}

std::string format_laurent(const IntLaurentPoly& P, const std::vector<std::string>& vars) {
    if (vars.size() != P.arity)
        throw IncompatibilityError("variable list does not match arity");
    std::string out;
    for (const auto& [e, c] : P.terms) {
        bool negative = c < 0;
        mpz_class mag = negative ? mpz_class(-c) : c;
        append_term(out, negative, mag.get_str(), e, vars);
    }
    return out.empty() ? "0" : out;
}

std::string format_laurent(const ModLaurentPoly& P, const std::vector<std::string>& vars) {
    if (vars.size() != P.arity)
        throw IncompatibilityError("variable list does not match arity");
    std::string out;
    for (const auto& [e, c] : P.terms)
        append_term(out, false, std::to_string(c), e, vars);
    return out.empty() ? "0" : out;
}

std::vector<std::string> default_vars(unsigned arity) {
    if (arity == 1) return {"x"};
    std::vector<std::string> v;
    for (unsigned i = 1; i <= arity; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

} // namespace ctseq
