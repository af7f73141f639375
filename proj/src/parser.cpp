#include "tempest/parser.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace tempest {

namespace {

class Parser {
  public:
    Parser(std::vector<Token> toks, Diagnostics& diags)
        : toks_(std::move(toks)), diags_(diags) {}

    Program run() {
        Program prog;
        while (!at(TokKind::EndOfFile)) {
            if (at(TokKind::KwInput)) {
                if (auto d = declaration()) prog.declarations.push_back(std::move(*d));
            } else if (at(TokKind::KwEvent) || at(TokKind::KwState) || at(TokKind::KwDynamic)) {
                if (auto d = definition()) prog.definitions.push_back(std::move(*d));
            } else {
                error("expected 'input', 'event', 'state' or 'dynamic'");
                recover();
            }
        }
        return prog;
    }

  private:
    std::vector<Token> toks_;
    std::size_t p_ = 0;
    Diagnostics& diags_;

    const Token& cur() const { return toks_[p_]; }
    const Token& peek() const { return toks_[std::min(p_ + 1, toks_.size() - 1)]; }
    bool at(TokKind k) const { return cur().kind == k; }
    Token take() { return toks_[p_ == toks_.size() - 1 ? p_ : p_++]; }

    void error(const std::string& msg) {
        diags_.error(DiagCode::ParseError, cur().pos,
                     msg + (cur().kind == TokKind::EndOfFile
                                ? " (at end of input)"
                                : " (found '" + cur().text + "')"));
    }

    // Skip to just past the next statement terminator.
    void recover() {
        while (!at(TokKind::EndOfFile) && !at(TokKind::Dot)) take();
        if (at(TokKind::Dot)) take();
    }

    bool expect(TokKind k, const char* what) {
        if (at(k)) {
            take();
            return true;
        }
        error(std::string("expected ") + what);
        return false;
    }

    static PredKind input_kind(TokKind k) {
        switch (k) {
            case TokKind::KwEvent: return PredKind::InputEvent;
            case TokKind::KwState: return PredKind::InputState;
            default: return PredKind::InputDynamic;
        }
    }
    static PredKind defined_kind(TokKind k) {
        switch (k) {
            case TokKind::KwEvent: return PredKind::Event;
            case TokKind::KwState: return PredKind::State;
            default: return PredKind::Dynamic;
        }
    }

    std::optional<Declaration> declaration() {
        Declaration d;
        d.pos = cur().pos;
        take();  // input
        if (!at(TokKind::KwEvent) && !at(TokKind::KwState) && !at(TokKind::KwDynamic)) {
            error("expected 'event', 'state' or 'dynamic' after 'input'");
            recover();
            return std::nullopt;
        }
        d.kind = input_kind(take().kind);
        if (!at(TokKind::Ident)) {
            error("expected predicate name");
            recover();
            return std::nullopt;
        }
        d.name = take().text;
        if (!expect(TokKind::Slash, "'/' before the arity")) {
            recover();
            return std::nullopt;
        }
        if (!at(TokKind::Number) || cur().text.find('.') != std::string::npos) {
            error("expected integer arity");
            recover();
            return std::nullopt;
        }
        d.arity = static_cast<int>(take().num);
        if (!expect(TokKind::Dot, "'.' after declaration")) recover();
        return d;
    }

    std::optional<Definition> definition() {
        Definition d;
        d.pos = cur().pos;
        d.kind = defined_kind(take().kind);
        if (!at(TokKind::Ident)) {
            error("expected predicate name");
            recover();
            return std::nullopt;
        }
        d.name = take().text;
        if (at(TokKind::LParen)) {
            take();
            if (!at(TokKind::RParen)) {
                do {
                    auto t = term();
                    if (!t) {
                        recover();
                        return std::nullopt;
                    }
                    d.head_args.push_back(std::move(*t));
                } while (at(TokKind::Comma) && (take(), true));
            }
            if (!expect(TokKind::RParen, "')'")) {
                recover();
                return std::nullopt;
            }
        }
        if (!expect(TokKind::Colon, "':' before the body")) {
            recover();
            return std::nullopt;
        }
        d.body = formula();
        if (!d.body) {
            recover();
            return std::nullopt;
        }
        if (!expect(TokKind::Dot, "'.' after definition")) {
            recover();
            return std::nullopt;
        }
        return d;
    }

    std::optional<Term> term() {
        Term t;
        t.pos = cur().pos;
        if (at(TokKind::Var)) {
            t.kind = Term::Var;
            t.text = take().text;
            return t;
        }
        if (at(TokKind::Ident)) {
            t.kind = Term::Atom;
            t.text = take().text;
            return t;
        }
        if (at(TokKind::Number)) {
            Token tok = take();
            t.kind = Term::Number;
            t.text = tok.text;
            t.num = tok.num;
            return t;
        }
        if (at(TokKind::Minus) && peek().kind == TokKind::Number) {
            take();
            Token tok = take();
            t.kind = Term::Number;
            t.text = "-" + tok.text;
            t.num = -tok.num;
            return t;
        }
        error("expected a term (variable, atom or number)");
        return std::nullopt;
    }

    using FPtr = std::unique_ptr<Formula>;

    FPtr make(NodeKind k, SourcePos pos) {
        auto f = std::make_unique<Formula>();
        f->kind = k;
        f->pos = pos;
        return f;
    }

    FPtr binary(NodeKind k, FPtr lhs, FPtr rhs, SourcePos pos) {
        auto f = make(k, pos);
        f->lhs = std::move(lhs);
        f->rhs = std::move(rhs);
        return f;
    }

    // Binding strength, loosest first: relations, union, intersection,
    // complement, ~>, or, and, unary. All binary operators associate left.
    FPtr formula() { return relation_level(); }

    std::optional<RelationKind> relation_tok() const {
        switch (cur().kind) {
            case TokKind::KwBefore: return RelationKind::Before;
            case TokKind::KwMeets: return RelationKind::Meets;
            case TokKind::KwOverlaps: return RelationKind::Overlaps;
            case TokKind::KwFinishes: return RelationKind::Finishes;
            case TokKind::KwStarts: return RelationKind::Starts;
            case TokKind::KwEquals: return RelationKind::Equals;
            case TokKind::KwContains: return RelationKind::Contains;
            default: return std::nullopt;
        }
    }

    FPtr relation_level() {
        FPtr lhs = union_level();
        if (!lhs) return nullptr;
        while (auto rel = relation_tok()) {
            SourcePos pos = take().pos;
            FPtr rhs = union_level();
            if (!rhs) return nullptr;
            FPtr f = binary(NodeKind::Relation, std::move(lhs), std::move(rhs), pos);
            f->rel = *rel;
            lhs = std::move(f);
        }
        return lhs;
    }

    FPtr chain(TokKind op, NodeKind node, FPtr (Parser::*next)()) {
        FPtr lhs = (this->*next)();
        if (!lhs) return nullptr;
        while (at(op)) {
            SourcePos pos = take().pos;
            FPtr rhs = (this->*next)();
            if (!rhs) return nullptr;
            lhs = binary(node, std::move(lhs), std::move(rhs), pos);
        }
        return lhs;
    }

    FPtr union_level() { return chain(TokKind::UnionOp, NodeKind::Union, &Parser::intersect_level); }
    FPtr intersect_level() {
        return chain(TokKind::IntersectOp, NodeKind::Intersect, &Parser::complement_level);
    }
    FPtr complement_level() {
        return chain(TokKind::ComplementOp, NodeKind::Complement, &Parser::maxrange_level);
    }
    FPtr maxrange_level() { return chain(TokKind::MaxRange, NodeKind::MaxRange, &Parser::or_level); }
    FPtr or_level() { return chain(TokKind::Or, NodeKind::Or, &Parser::and_level); }
    FPtr and_level() { return chain(TokKind::And, NodeKind::And, &Parser::unary); }

    FPtr unary() {
        if (at(TokKind::Not)) {
            SourcePos pos = take().pos;
            FPtr operand = unary();
            if (!operand) return nullptr;
            FPtr f = make(NodeKind::Not, pos);
            f->lhs = std::move(operand);
            return f;
        }
        if (at(TokKind::KwStart) || at(TokKind::KwEnd)) {
            NodeKind k = at(TokKind::KwStart) ? NodeKind::Start : NodeKind::End;
            SourcePos pos = take().pos;
            if (!expect(TokKind::LParen, "'(' after start/end")) return nullptr;
            FPtr operand = formula();
            if (!operand) return nullptr;
            if (!expect(TokKind::RParen, "')'")) return nullptr;
            FPtr f = make(k, pos);
            f->lhs = std::move(operand);
            return f;
        }
        return primary();
    }

    FPtr primary() {
        if (at(TokKind::LParen)) {
            take();
            FPtr f = formula();
            if (!f) return nullptr;
            if (!expect(TokKind::RParen, "')'")) return nullptr;
            return f;
        }
        if (at(TokKind::Ident)) return atom();
        if (at(TokKind::Var) || at(TokKind::Number) || at(TokKind::Minus)) return comparison();
        error("expected a formula");
        return nullptr;
    }

    FPtr atom() {
        FPtr f = make(NodeKind::Atom, cur().pos);
        f->pred_name = take().text;
        if (at(TokKind::LParen)) {
            take();
            if (!at(TokKind::RParen)) {
                do {
                    auto t = term();
                    if (!t) return nullptr;
                    f->args.push_back(std::move(*t));
                } while (at(TokKind::Comma) && (take(), true));
            }
            if (!expect(TokKind::RParen, "')'")) return nullptr;
        }
        return f;
    }

    std::optional<CmpOp> cmp_tok() const {
        switch (cur().kind) {
            case TokKind::Lt: return CmpOp::Lt;
            case TokKind::Le: return CmpOp::Le;
            case TokKind::Gt: return CmpOp::Gt;
            case TokKind::Ge: return CmpOp::Ge;
            case TokKind::EqEq: return CmpOp::Eq;
            case TokKind::Ne: return CmpOp::Ne;
            default: return std::nullopt;
        }
    }

    FPtr comparison() {
        SourcePos pos = cur().pos;
        auto lhs = arith();
        if (!lhs) return nullptr;
        auto op = cmp_tok();
        if (!op) {
            error("expected a comparison operator");
            return nullptr;
        }
        take();
        auto rhs = arith();
        if (!rhs) return nullptr;
        FPtr f = make(NodeKind::Compare, pos);
        f->cmp = *op;
        f->cmp_lhs = std::move(lhs);
        f->cmp_rhs = std::move(rhs);
        return f;
    }

    using APtr = std::unique_ptr<ArithExpr>;

    APtr arith() { return arith_add(); }

    APtr arith_add() {
        APtr lhs = arith_mul();
        if (!lhs) return nullptr;
        while (at(TokKind::Plus) || at(TokKind::Minus)) {
            auto op = at(TokKind::Plus) ? ArithExpr::Add : ArithExpr::Sub;
            SourcePos pos = take().pos;
            APtr rhs = arith_mul();
            if (!rhs) return nullptr;
            auto e = std::make_unique<ArithExpr>();
            e->op = op;
            e->pos = pos;
            e->lhs = std::move(lhs);
            e->rhs = std::move(rhs);
            lhs = std::move(e);
        }
        return lhs;
    }

    APtr arith_mul() {
        APtr lhs = arith_factor();
        if (!lhs) return nullptr;
        while (at(TokKind::Star) || at(TokKind::Slash)) {
            auto op = at(TokKind::Star) ? ArithExpr::Mul : ArithExpr::Div;
            SourcePos pos = take().pos;
            APtr rhs = arith_factor();
            if (!rhs) return nullptr;
            auto e = std::make_unique<ArithExpr>();
            e->op = op;
            e->pos = pos;
            e->lhs = std::move(lhs);
            e->rhs = std::move(rhs);
            lhs = std::move(e);
        }
        return lhs;
    }

    APtr arith_factor() {
        if (at(TokKind::Minus)) {
            SourcePos pos = take().pos;
            APtr inner = arith_factor();
            if (!inner) return nullptr;
            auto e = std::make_unique<ArithExpr>();
            e->op = ArithExpr::Neg;
            e->pos = pos;
            e->lhs = std::move(inner);
            return e;
        }
        if (at(TokKind::LParen)) {
            take();
            APtr inner = arith();
            if (!inner) return nullptr;
            if (!expect(TokKind::RParen, "')'")) return nullptr;
            return inner;
        }
        if (at(TokKind::Var) || at(TokKind::Number)) {
            auto e = std::make_unique<ArithExpr>();
            e->op = ArithExpr::Leaf;
            e->pos = cur().pos;
            Token tok = take();
            e->leaf.pos = tok.pos;
            if (tok.kind == TokKind::Var) {
                e->leaf.kind = Term::Var;
                e->leaf.text = tok.text;
            } else {
                e->leaf.kind = Term::Number;
                e->leaf.text = tok.text;
                e->leaf.num = tok.num;
            }
            return e;
        }
        error("expected a variable or number");
        return nullptr;
    }
};

}  // namespace

Program parse_program(std::string_view src, Diagnostics& diags) {
    Parser parser(tokenize(src, diags), diags);
    return parser.run();
}

}  // namespace tempest
