// Command-line front end: define a sequence (catalog name, Laurent pair, or
// binomial sum), generate automatic/linear schemes mod p^a, persist them,
// evaluate at huge indices, emit prefixes, and CRT-compose residues.
//
// Exit codes: 0 success; 1 usage/parse error; 2 state cap exceeded;
// 3 precondition violation.

#include <cstdint>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "ctseq/ctdef.hpp"
#include "ctseq/errors.hpp"
#include "ctseq/evaluator.hpp"
#include "ctseq/expr.hpp"
#include "ctseq/scheme_auto.hpp"
#include "ctseq/scheme_io.hpp"
#include "ctseq/scheme_linear.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::int64_t> split_i64(const std::string& s, const char* what) {
    std::vector<std::int64_t> out;
    for (const auto& tok : split_csv(s)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const ctseq::Error&) {
            throw;
        } catch (const std::exception&) {
            throw ctseq::ParseError(std::string(what) + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-term sequence schemes: generate, evaluate, compose"};
    app.require_subcommand(1);
    int rc = 0;

    // gen
    std::string seq_name, p_text, q_text = "1", vars_csv = "x", binsum_text, out_path;
    std::string kind = "linear";
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    std::size_t cap = 10000;
    auto* gen = app.add_subcommand("gen", "Generate a scheme for a sequence mod p^a");
    auto* def = gen->add_option_group("definition", "How the sequence is defined");
    auto* o_seq = def->add_option("--seq", seq_name, "catalog name (catalan, motzkin, delannoy, apery)");
    auto* o_p_expr = def->add_option("--P", p_text, "Laurent polynomial P of a(n) = CT[P^n Q]");
    def->add_option("--binsum", binsum_text, "binomial-sum spec \"g; a,b,c,d,e,f; ...\"");
    def->require_option(1);
    gen->add_option("--Q", q_text, "Laurent polynomial Q (default 1)")->needs(o_p_expr);
    gen->add_option("--vars", vars_csv, "comma-separated variable names (default x)")->needs(o_p_expr);
    gen->add_option("--p", prime, "prime")->required();
    gen->add_option("--a", exponent, "prime-power exponent")->required();
    gen->add_option("--kind", kind, "auto | linear (default linear)")
        ->check(CLI::IsMember({"auto", "linear"}));
    gen->add_option("--cap", cap, "abort once this many states would be needed (default 10000)");
    gen->add_option("--out", out_path, "scheme file to write");
    gen->callback([&] {
        ctseq::CTPair pair;
        std::vector<std::string> vars;
        if (o_seq->count() > 0) {
            pair = ctseq::catalog(seq_name);
            vars = ctseq::default_vars(pair.arity);
        } else if (o_p_expr->count() > 0) {
            vars = split_csv(vars_csv);
            pair.P = ctseq::parse_laurent({p_text, vars});
            pair.Q = ctseq::parse_laurent({q_text, vars});
            pair.arity = static_cast<unsigned>(vars.size());
        } else {
            pair = ctseq::bin_to_ct(ctseq::parse_binsum(binsum_text));
            vars = ctseq::default_vars(pair.arity);
        }
        ctseq::Modulus modulus(prime, exponent);
        ctseq::SchemeFile file;
        file.source = ctseq::SchemeSource{ctseq::format_laurent(pair.P, vars),
                                          ctseq::format_laurent(pair.Q, vars), vars};
        std::uint32_t r = 0;
        if (kind == "auto") {
            auto res = ctseq::generate_auto(pair, modulus, cap);
            if (std::holds_alternative<ctseq::CapExceeded>(res)) {
                std::cerr << "FAIL: generation needs more than " << cap << " states\n";
                rc = 2;
                return;
            }
            r = std::get<ctseq::AutoScheme>(res).r;
            file.scheme = std::move(std::get<ctseq::AutoScheme>(res));
        } else {
            auto res = ctseq::generate_linear(pair, modulus, cap);
            if (std::holds_alternative<ctseq::CapExceeded>(res)) {
                std::cerr << "FAIL: generation needs more than " << cap << " states\n";
                rc = 2;
                return;
            }
            r = std::get<ctseq::LinearScheme>(res).r;
            file.scheme = std::move(std::get<ctseq::LinearScheme>(res));
        }
        if (!out_path.empty()) ctseq::save_scheme(file, out_path);
        std::cout << r << " states\n";
    });

    // eval
    std::string scheme_path, n_text;
    auto* eval = app.add_subcommand("eval", "Evaluate a stored scheme at index n");
    eval->add_option("--scheme", scheme_path, "scheme file")->required();
    eval->add_option("--n", n_text, "index (decimal, or B^E / B**E)")->required();
    eval->callback([&] {
        auto file = ctseq::load_scheme(scheme_path);
        std::cout << ctseq::eval_scheme(file.scheme, ctseq::BigIndex::parse(n_text)) << "\n";
    });

    // seq
    std::string seq_scheme_path;
    std::size_t count = 0;
    auto* seq = app.add_subcommand("seq", "Print a(0..count-1) from a stored scheme");
    seq->add_option("--scheme", seq_scheme_path, "scheme file")->required();
    seq->add_option("--count", count, "number of leading terms")->required();
    seq->callback([&] {
        auto file = ctseq::load_scheme(seq_scheme_path);
        auto values = std::visit(
            [&](const auto& s) {
                if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ctseq::AutoScheme>)
                    return ctseq::seq_auto(s, count);
                else
                    return ctseq::seq_linear(s, count);
            },
            file.scheme);
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << (i ? "," : "") << values[i];
        std::cout << "\n";
    });

    // crt
    std::string crt_paths, crt_n_text;
    std::uint64_t crt_m = 0;
    auto* crt = app.add_subcommand("crt", "Combine schemes with coprime moduli mod m");
    crt->add_option("--schemes", crt_paths, "comma-separated scheme files")->required();
    crt->add_option("--m", crt_m, "target modulus (must divide the product of the scheme moduli)")
        ->required();
    crt->add_option("--n", crt_n_text, "index (decimal, or B^E / B**E)")->required();
    crt->callback([&] {
        std::vector<ctseq::SchemeAny> schemes;
        for (const auto& path : split_csv(crt_paths))
            schemes.push_back(ctseq::load_scheme(path).scheme);
        std::cout << ctseq::eval_crt(schemes, crt_m, ctseq::BigIndex::parse(crt_n_text)) << "\n";
    });

    // bin2ct
    std::string bin2ct_text;
    auto* bin2ct = app.add_subcommand("bin2ct", "Compile a binomial sum to a constant-term pair");
    bin2ct->add_option("--binsum", bin2ct_text, "spec \"g; a,b,c,d,e,f; ...\"")->required();
    bin2ct->callback([&] {
        auto pair = ctseq::bin_to_ct(ctseq::parse_binsum(bin2ct_text));
        auto vars = ctseq::default_vars(pair.arity);
        std::cout << "P = " << ctseq::format_laurent(pair.P, vars) << "\n";
        std::cout << "Q = " << ctseq::format_laurent(pair.Q, vars) << "\n";
    });

    // cfinite
    std::string rec_csv, init_csv, cf_n_text;
    std::uint64_t cf_m = 0;
    auto* cfinite = app.add_subcommand(
        "cfinite", "Evaluate x(n) = c1 x(n-1) + ... + cd x(n-d) mod m at huge n");
    cfinite->add_option("--rec", rec_csv, "recurrence coefficients c1,...,cd")->required();
    cfinite->add_option("--init", init_csv, "initial terms x1,...,xd")->required();
    cfinite->add_option("--m", cf_m, "modulus")->required();
    cfinite->add_option("--n", cf_n_text, "index (decimal, or B^E / B**E)")->required();
    cfinite->callback([&] {
        ctseq::CFiniteSpec spec;
        spec.coeffs = split_i64(rec_csv, "--rec");
        spec.init = split_i64(init_csv, "--init");
        spec.d = static_cast<unsigned>(spec.coeffs.size());
        std::cout << ctseq::cfinite_eval(spec, cf_m, ctseq::BigIndex::parse(cf_n_text)) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const ctseq::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ctseq::UnsupportedSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ctseq::NotPSupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ctseq::IncompatibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ctseq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
