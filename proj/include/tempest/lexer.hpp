#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tempest/diagnostics.hpp"

namespace tempest {

enum class TokKind {
    Ident,   // lowercase-initial: predicate names, atom constants
    Var,     // uppercase- or underscore-initial
    Number,  // 12, 0.5
    LParen,
    RParen,
    Comma,
    Colon,
    Dot,
    Slash,
    Not,         // ~  ¬
    And,         // &  ∧
    Or,          // |  ∨
    MaxRange,    // ~> ↣
    UnionOp,     // union ⊔
    IntersectOp, // intersection ⊓
    ComplementOp,// complement ∖
    Lt,
    Le,
    Gt,
    Ge,
    EqEq,
    Ne,
    Plus,
    Minus,
    Star,
    KwInput,
    KwEvent,
    KwState,
    KwDynamic,
    KwStart,
    KwEnd,
    KwBefore,
    KwMeets,
    KwOverlaps,
    KwFinishes,
    KwStarts,
    KwEquals,
    KwContains,
    EndOfFile,
};

struct Token {
    TokKind kind = TokKind::EndOfFile;
    std::string text;
    double num = 0.0;  // for Number
    SourcePos pos;
};

// Scans the whole input; lexical problems are reported through `diags` and a
// best-effort token stream is still returned (always EndOfFile-terminated).
std::vector<Token> tokenize(std::string_view src, Diagnostics& diags);

}  // namespace tempest
