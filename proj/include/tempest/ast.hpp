#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tempest/diagnostics.hpp"
#include "tempest/relations.hpp"

namespace tempest {

// The three classes of temporal phenomena a formula can denote: instants,
// disjoint maximal intervals, or possibly-overlapping intervals.
enum class FormulaClass { Instant, State, Dynamic };

const char* formula_class_name(FormulaClass c);

enum class PredKind { InputEvent, InputState, InputDynamic, Event, State, Dynamic };

inline bool is_input(PredKind k) {
    return k == PredKind::InputEvent || k == PredKind::InputState || k == PredKind::InputDynamic;
}

FormulaClass class_of(PredKind k);
const char* pred_kind_name(PredKind k);

struct Term {
    enum Kind { Var, Atom, Number } kind = Atom;
    std::string text;   // canonical spelling ("Speed", "portA", "0.5")
    double num = 0.0;   // meaningful when kind == Number
    SourcePos pos;

    bool anonymous() const { return kind == Var && !text.empty() && text[0] == '_'; }
};

enum class NodeKind {
    Atom,        // predicate reference
    Not,         // instant negation
    And,         // instant conjunction
    Or,          // instant disjunction
    Start,       // interval starts -> instants
    End,         // interval ends -> instants
    MaxRange,    // opener ~> closer: maximal intervals
    Union,       // temporal union of states
    Intersect,   // temporal intersection of states
    Complement,  // temporal complement of states
    Relation,    // interval relation -> dynamic phenomenon
    Compare,     // arithmetic comparison (instant-class filter)
};

enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne };

struct ArithExpr {
    enum Op { Leaf, Add, Sub, Mul, Div, Neg } op = Leaf;
    Term leaf;  // when op == Leaf: Var or Number
    std::unique_ptr<ArithExpr> lhs, rhs;
    SourcePos pos;
};

struct Formula {
    NodeKind kind = NodeKind::Atom;
    FormulaClass cls = FormulaClass::Instant;  // assigned during analysis
    SourcePos pos;

    // Atom
    std::string pred_name;
    int pred = -1;  // resolved predicate id
    std::vector<Term> args;

    // unary (Not/Start/End: lhs) and binary nodes
    std::unique_ptr<Formula> lhs, rhs;
    RelationKind rel = RelationKind::Before;

    // Compare
    CmpOp cmp = CmpOp::Lt;
    std::unique_ptr<ArithExpr> cmp_lhs, cmp_rhs;
};

struct Declaration {
    PredKind kind = PredKind::InputEvent;
    std::string name;
    int arity = 0;
    SourcePos pos;
};

struct Definition {
    PredKind kind = PredKind::Event;
    std::string name;
    std::vector<Term> head_args;
    std::unique_ptr<Formula> body;
    SourcePos pos;
    int pred = -1;
    int level = -1;  // assigned by build_levels
};

struct Program {
    std::vector<Declaration> declarations;
    std::vector<Definition> definitions;
};

}  // namespace tempest
