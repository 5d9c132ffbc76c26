#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctseq/evaluator.hpp"

namespace ctseq {

/// The original definition, carried alongside a scheme for provenance.
struct SchemeSource {
    std::string P;
    std::string Q;
    std::vector<std::string> vars;
};

/// What a scheme file holds: the scheme plus optional definition metadata.
/// Serialization is canonical (sorted keys, no insignificant whitespace), so
/// load followed by save is byte-identical.
struct SchemeFile {
    SchemeAny scheme;
    std::optional<SchemeSource> source;
};

std::string scheme_to_json(const SchemeFile& file);
SchemeFile scheme_from_json(const std::string& text, const std::string& where);

/// Atomic write (temp file + rename); never leaves a partial file behind.
void save_scheme(const SchemeFile& file, const std::string& path);
SchemeFile load_scheme(const std::string& path);

} // namespace ctseq
