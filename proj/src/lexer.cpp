#include "tempest/lexer.hpp"

#include <cctype>
#include <cstdlib>
#include <unordered_map>

namespace tempest {

namespace {

const std::unordered_map<std::string_view, TokKind> kKeywords = {
    {"input", TokKind::KwInput},       {"event", TokKind::KwEvent},
    {"state", TokKind::KwState},       {"dynamic", TokKind::KwDynamic},
    {"start", TokKind::KwStart},       {"end", TokKind::KwEnd},
    {"before", TokKind::KwBefore},     {"meets", TokKind::KwMeets},
    {"overlaps", TokKind::KwOverlaps}, {"finishes", TokKind::KwFinishes},
    {"starts", TokKind::KwStarts},     {"equals", TokKind::KwEquals},
    {"contains", TokKind::KwContains}, {"union", TokKind::UnionOp},
    {"intersection", TokKind::IntersectOp}, {"complement", TokKind::ComplementOp},
};

// Multi-byte operator spellings (UTF-8).
struct Glyph {
    std::string_view bytes;
    TokKind kind;
};
const Glyph kGlyphs[] = {
    {"¬", TokKind::Not},          // ¬
    {"∧", TokKind::And},          // ∧
    {"∨", TokKind::Or},           // ∨
    {"↣", TokKind::MaxRange},     // ↣
    {"⊔", TokKind::UnionOp},      // ⊔
    {"⊓", TokKind::IntersectOp},  // ⊓
    {"∖", TokKind::ComplementOp}, // ∖
};

}  // namespace

std::vector<Token> tokenize(std::string_view src, Diagnostics& diags) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1, col = 1;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto push = [&](TokKind kind, std::string text, SourcePos pos, double num = 0.0) {
        out.push_back({kind, std::move(text), num, pos});
    };

    while (i < src.size()) {
        char c = src[i];
        SourcePos pos{line, col};
        if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
            advance(1);
            continue;
        }
        if (c == '%') {  // comment to end of line
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        // multi-byte operator glyphs
        if (static_cast<unsigned char>(c) >= 0x80) {
            bool matched = false;
            for (const Glyph& g : kGlyphs) {
                if (src.substr(i, g.bytes.size()) == g.bytes) {
                    push(g.kind, std::string(g.bytes), pos);
                    advance(g.bytes.size());
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                diags.error(DiagCode::LexError, pos, "unrecognized character");
                advance(1);
            }
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            // a dot joins the number only when a digit follows (else it
            // terminates the statement)
            if (j + 1 < src.size() && src[j] == '.' &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            std::string text(src.substr(i, j - i));
            push(TokKind::Number, text, pos, std::strtod(text.c_str(), nullptr));
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                      src[j] == '_'))
                ++j;
            std::string text(src.substr(i, j - i));
            auto kw = kKeywords.find(text);
            if (kw != kKeywords.end())
                push(kw->second, text, pos);
            else if (std::isupper(static_cast<unsigned char>(c)) || c == '_')
                push(TokKind::Var, text, pos);
            else
                push(TokKind::Ident, text, pos);
            advance(j - i);
            continue;
        }
        auto two = src.substr(i, 2);
        if (two == "~>") { push(TokKind::MaxRange, "~>", pos); advance(2); continue; }
        if (two == "<=") { push(TokKind::Le, "<=", pos); advance(2); continue; }
        if (two == ">=") { push(TokKind::Ge, ">=", pos); advance(2); continue; }
        if (two == "==") { push(TokKind::EqEq, "==", pos); advance(2); continue; }
        if (two == "!=") { push(TokKind::Ne, "!=", pos); advance(2); continue; }
        switch (c) {
            case '(': push(TokKind::LParen, "(", pos); break;
            case ')': push(TokKind::RParen, ")", pos); break;
            case ',': push(TokKind::Comma, ",", pos); break;
            case ':': push(TokKind::Colon, ":", pos); break;
            case '.': push(TokKind::Dot, ".", pos); break;
            case '/': push(TokKind::Slash, "/", pos); break;
            case '~': push(TokKind::Not, "~", pos); break;
            case '&': push(TokKind::And, "&", pos); break;
            case '|': push(TokKind::Or, "|", pos); break;
            case '<': push(TokKind::Lt, "<", pos); break;
            case '>': push(TokKind::Gt, ">", pos); break;
            case '+': push(TokKind::Plus, "+", pos); break;
            case '-': push(TokKind::Minus, "-", pos); break;
            case '*': push(TokKind::Star, "*", pos); break;
            case '\\': push(TokKind::ComplementOp, "\\", pos); break;
            default:
                diags.error(DiagCode::LexError, pos,
                            std::string("unrecognized character '") + c + "'");
                break;
        }
        advance(1);
    }
    out.push_back({TokKind::EndOfFile, "", 0.0, {line, col}});
    return out;
}

}  // namespace tempest
