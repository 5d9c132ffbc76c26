#include "ctseq/scheme_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>

#include <json.hpp>

#include "ctseq/expr.hpp"

namespace ctseq {

using nlohmann::json;

namespace {

constexpr const char* kFormatTag = "ct-scheme";
constexpr std::uint64_t kVersion = 1;

std::vector<std::string> defs_vars(const SchemeFile& file, unsigned arity) {
    if (file.source && !file.source->vars.empty()) return file.source->vars;
    return default_vars(arity);
}

template <typename Scheme>
void emit_common(json& j, const Scheme& s, const SchemeFile& file) {
    j["format"] = kFormatTag;
    j["version"] = kVersion;
    j["p"] = s.modulus.p;
    j["a"] = s.modulus.a;
    j["modulus"] = s.modulus.pa;
    j["r"] = s.r;
    j["initial"] = s.initial;
    if (!s.defs.empty()) {
        auto vars = defs_vars(file, s.defs.front().first.arity);
        json defs = json::array();
        for (const auto& [P, Q] : s.defs)
            defs.push_back(json::array({format_laurent(P, vars), format_laurent(Q, vars)}));
        j["defs"] = std::move(defs);
    }
    if (file.source) {
        json src;
        src["P"] = file.source->P;
        src["Q"] = file.source->Q;
        src["vars"] = file.source->vars;
        j["source"] = std::move(src);
    }
}

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

std::uint64_t get_uint(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        malformed(where, std::string("missing or non-integer field '") + key + "'");
    return j[key].get<std::uint64_t>();
}

std::vector<std::uint64_t> get_residues(const json& arr, std::uint64_t pa,
                                        const std::string& where, const char* what) {
    if (!arr.is_array()) malformed(where, std::string(what) + " must be an array");
    std::vector<std::uint64_t> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_unsigned()) malformed(where, std::string(what) + " entries must be nonnegative integers");
        std::uint64_t x = v.get<std::uint64_t>();
        if (x >= pa) malformed(where, std::string(what) + " entry out of range");
        out.push_back(x);
    }
    return out;
}

} // namespace

std::string scheme_to_json(const SchemeFile& file) {
    json j;
    if (const auto* a = std::get_if<AutoScheme>(&file.scheme)) {
        j["kind"] = "auto";
        emit_common(j, *a, file);
        j["transitions"] = a->transitions;
    } else {
        const auto& l = std::get<LinearScheme>(file.scheme);
        j["kind"] = "linear";
        emit_common(j, l, file);
        j["matrices"] = l.matrices;
    }
    return j.dump() + "\n";
}

SchemeFile scheme_from_json(const std::string& text, const std::string& where) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(where, e.what());
    }
    if (!j.is_object()) malformed(where, "top-level value must be an object");
    if (!j.contains("format") || !j["format"].is_string() ||
        j["format"].get<std::string>() != kFormatTag)
        malformed(where, "not a scheme file (missing format tag)");
    std::uint64_t version = get_uint(j, "version", where);
    if (version != kVersion)
        throw VersionError(where + ": unsupported scheme-file version " +
                           std::to_string(version));
    if (!j.contains("kind") || !j["kind"].is_string())
        malformed(where, "missing 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind != "auto" && kind != "linear") malformed(where, "kind must be 'auto' or 'linear'");

    static const std::set<std::string> known{"a",       "defs",    "format", "initial",
                                             "kind",    "matrices", "modulus", "p",
                                             "r",       "source",  "transitions", "version"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) malformed(where, "unexpected key '" + key + "'");
    if (j.contains("transitions") && kind != "auto")
        malformed(where, "'transitions' only belongs to automatic schemes");
    if (j.contains("matrices") && kind != "linear")
        malformed(where, "'matrices' only belongs to linear schemes");

    Modulus modulus;
    try {
        modulus = Modulus(get_uint(j, "p", where),
                          static_cast<unsigned>(get_uint(j, "a", where)));
    } catch (const PreconditionError& e) {
        malformed(where, e.what());
    }
    if (get_uint(j, "modulus", where) != modulus.pa)
        malformed(where, "modulus field disagrees with p^a");

    std::uint64_t r64 = get_uint(j, "r", where);
    if (r64 < 1 || r64 > (1u << 30)) malformed(where, "state count out of range");
    auto r = static_cast<std::uint32_t>(r64);

    if (!j.contains("initial")) malformed(where, "missing 'initial'");
    std::vector<std::uint64_t> initial = get_residues(j["initial"], modulus.pa, where, "initial");
    if (initial.size() != r) malformed(where, "initial length disagrees with r");

    std::optional<SchemeSource> source;
    if (j.contains("source")) {
        const json& s = j["source"];
        if (!s.is_object() || !s.contains("P") || !s["P"].is_string() || !s.contains("Q") ||
            !s["Q"].is_string() || !s.contains("vars") || !s["vars"].is_array())
            malformed(where, "malformed 'source'");
        SchemeSource src;
        src.P = s["P"].get<std::string>();
        src.Q = s["Q"].get<std::string>();
        for (const auto& v : s["vars"]) {
            if (!v.is_string()) malformed(where, "source vars must be strings");
            src.vars.push_back(v.get<std::string>());
        }
        source = std::move(src);
    }

    std::vector<std::pair<ModLaurentPoly, ModLaurentPoly>> defs;
    if (j.contains("defs")) {
        if (!source || source->vars.empty())
            malformed(where, "'defs' needs the variable list from 'source'");
        const json& d = j["defs"];
        if (!d.is_array() || d.size() != r) malformed(where, "defs length disagrees with r");
        for (const auto& entry : d) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
                !entry[1].is_string())
                malformed(where, "each defs entry must be a [P, Q] string pair");
            try {
                defs.emplace_back(
                    reduce_mod(parse_laurent({entry[0].get<std::string>(), source->vars}), modulus),
                    reduce_mod(parse_laurent({entry[1].get<std::string>(), source->vars}), modulus));
            } catch (const Error& e) {
                malformed(where, std::string("bad defs polynomial: ") + e.what());
            }
        }
    }

    SchemeFile out;
    out.source = std::move(source);
    if (kind == "auto") {
        if (!j.contains("transitions")) malformed(where, "missing 'transitions'");
        const json& t = j["transitions"];
        if (!t.is_array() || t.size() != r) malformed(where, "transitions row count disagrees with r");
        AutoScheme s;
        s.modulus = modulus;
        s.r = r;
        s.initial = std::move(initial);
        s.defs = std::move(defs);
        for (const auto& row : t) {
            if (!row.is_array() || row.size() != modulus.p)
                malformed(where, "each transitions row needs p entries");
            std::vector<std::uint32_t> out_row;
            out_row.reserve(row.size());
            for (const auto& v : row) {
                if (!v.is_number_unsigned() || v.get<std::uint64_t>() > r)
                    malformed(where, "transition target out of range");
                out_row.push_back(v.get<std::uint32_t>());
            }
            s.transitions.push_back(std::move(out_row));
        }
        out.scheme = std::move(s);
    } else {
        if (!j.contains("matrices")) malformed(where, "missing 'matrices'");
        const json& ms = j["matrices"];
        if (!ms.is_array() || ms.size() != modulus.p)
            malformed(where, "need exactly p matrices");
        LinearScheme s;
        s.modulus = modulus;
        s.r = r;
        s.initial = std::move(initial);
        s.defs = std::move(defs);
        for (const auto& mat : ms) {
            if (!mat.is_array() || mat.size() != r) malformed(where, "each matrix must be r x r");
            std::vector<std::vector<std::uint64_t>> rows;
            rows.reserve(r);
            for (const auto& row : mat)
                rows.push_back(get_residues(row, modulus.pa, where, "matrix"));
            for (const auto& row : rows)
                if (row.size() != r) malformed(where, "each matrix must be r x r");
            s.matrices.push_back(std::move(rows));
        }
        out.scheme = std::move(s);
    }
    return out;
}

void save_scheme(const SchemeFile& file, const std::string& path) {
    std::string body = scheme_to_json(file);
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot write '" + tmp + "'");
        f << body;
        if (!f.flush()) {
            std::remove(tmp.c_str());
            throw IoError("short write to '" + tmp + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot move '" + tmp + "' into place");
    }
}

SchemeFile load_scheme(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return scheme_from_json(text, path);
}

} // namespace ctseq
