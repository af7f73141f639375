#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tempest {

struct SourcePos {
    int line = 0;  // 1-based; 0 = unknown
    int col = 0;

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class Severity { Error, Warning };

enum class DiagCode {
    LexError,
    ParseError,
    ArityMismatch,
    TypeError,
    UnguardedNegation,
    UnsafeHeadVariable,
    CyclicDefinition,
    UndefinedPredicate,
    DuplicateDefinition,
    SingletonVariable,  // warning
};

const char* diag_code_name(DiagCode c);

struct Diagnostic {
    Severity severity = Severity::Error;
    DiagCode code = DiagCode::ParseError;
    std::string message;
    SourcePos pos;
};

struct Diagnostics {
    std::vector<Diagnostic> items;

    void error(DiagCode code, SourcePos pos, std::string message) {
        items.push_back({Severity::Error, code, std::move(message), pos});
    }
    void warning(DiagCode code, SourcePos pos, std::string message) {
        items.push_back({Severity::Warning, code, std::move(message), pos});
    }
    bool has_errors() const {
        for (const Diagnostic& d : items)
            if (d.severity == Severity::Error) return true;
        return false;
    }
    bool has_code(DiagCode code) const {
        for (const Diagnostic& d : items)
            if (d.code == code) return true;
        return false;
    }
};

std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

}  // namespace tempest
