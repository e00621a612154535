#pragma once

#include <string>
#include <vector>

#include "oometrix/model.hpp"

namespace oometrix {

struct SourceUnit {
    std::string path;
    std::string text;
};

struct ParseDiagnostic {
    enum class Severity { Error, Warning };
    std::string path;
    int line = 1;
    int column = 1;
    std::string message;
    Severity severity = Severity::Error;
};

struct ParseResult {
    CodeModel model;
    std::vector<ParseDiagnostic> diagnostics;

    bool has_errors() const {
        for (const auto& d : diagnostics)
            if (d.severity == ParseDiagnostic::Severity::Error) return true;
        return false;
    }
};

/// Parses MiniOO units (a small Java-like subset: packages, classes with
/// single inheritance, fields, methods, structured control flow) into a
/// validated CodeModel. Malformed units contribute error diagnostics; the
/// partial model of the remaining units is still returned. Unresolved
/// call/field targets are dropped with a warning diagnostic.
///
/// Per method: cyclomatic = 1 + decision points (if, while, for, case,
/// catch, &&, ||, ?); statements = top-level `;` count plus control
/// statements; comment lines are lines containing or inside // or /* */.
ParseResult parse_sources(const std::vector<SourceUnit>& units);

/// Reads each path and parses. Throws on I/O failure.
ParseResult parse_files(const std::vector<std::string>& paths);

/// commentLines / max(totalLines, 1), in [0,1].
double count_comment_ratio(const ClassInfo& cls);

}  // namespace oometrix
