#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tempest/ast.hpp"

namespace tempest {

struct PredInfo {
    std::string name;
    PredKind kind = PredKind::InputEvent;
    int arity = 0;
    int level = 0;           // 0 for inputs, 1 + max(dependency levels) otherwise
    int definition = -1;     // index into Program::definitions, -1 for inputs
    SourcePos declared_at;
};

// A fully analyzed program: predicates resolved, formula classes assigned,
// definitions grouped into evaluation levels (bottom-up dependency order).
struct CompiledProgram {
    Program program;
    std::vector<PredInfo> preds;
    std::vector<std::vector<int>> levels;  // levels[L] = predicate ids at level L
    Diagnostics diags;

    bool ok() const { return !diags.has_errors(); }
    int pred_id(std::string_view name) const;
};

// Resolves names, checks arities, assigns formula classes, and enforces the
// safety rules (range restriction, guarded negation/comparison, operand
// variable-set compatibility).  Reports through `out.diags`.
void typecheck(CompiledProgram& out);

// Assigns dependency levels to predicates/definitions; reports cycles.
void build_levels(CompiledProgram& out);

// Full pipeline: parse + typecheck + build_levels + style warnings.
CompiledProgram compile_program(std::string_view src);

// Canonical source rendering (ASCII operator spellings).  Reparsing the
// output yields a structurally identical program.
std::string pretty_print(const Program& prog);
std::string pretty_print(const Formula& f);

}  // namespace tempest
