#include "tempest/semantics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tempest/parser.hpp"

namespace tempest {

const char* diag_code_name(DiagCode c) {
    switch (c) {
        case DiagCode::LexError: return "LexError";
        case DiagCode::ParseError: return "ParseError";
        case DiagCode::ArityMismatch: return "ArityMismatch";
        case DiagCode::TypeError: return "TypeError";
        case DiagCode::UnguardedNegation: return "UnguardedNegation";
        case DiagCode::UnsafeHeadVariable: return "UnsafeHeadVariable";
        case DiagCode::CyclicDefinition: return "CyclicDefinition";
        case DiagCode::UndefinedPredicate: return "UndefinedPredicate";
        case DiagCode::DuplicateDefinition: return "DuplicateDefinition";
        case DiagCode::SingletonVariable: return "SingletonVariable";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
    os << d.pos.line << ':' << d.pos.col << ": "
       << (d.severity == Severity::Error ? "error" : "warning") << ": " << d.message << " ["
       << diag_code_name(d.code) << ']';
    return os;
}

const char* formula_class_name(FormulaClass c) {
    switch (c) {
        case FormulaClass::Instant: return "instant";
        case FormulaClass::State: return "state";
        case FormulaClass::Dynamic: return "dynamic";
    }
    return "?";
}

FormulaClass class_of(PredKind k) {
    switch (k) {
        case PredKind::InputEvent:
        case PredKind::Event: return FormulaClass::Instant;
        case PredKind::InputState:
        case PredKind::State: return FormulaClass::State;
        case PredKind::InputDynamic:
        case PredKind::Dynamic: return FormulaClass::Dynamic;
    }
    return FormulaClass::Instant;
}

const char* pred_kind_name(PredKind k) {
    switch (k) {
        case PredKind::InputEvent: return "input event";
        case PredKind::InputState: return "input state";
        case PredKind::InputDynamic: return "input dynamic";
        case PredKind::Event: return "event";
        case PredKind::State: return "state";
        case PredKind::Dynamic: return "dynamic";
    }
    return "?";
}

int CompiledProgram::pred_id(std::string_view name) const {
    for (std::size_t i = 0; i < preds.size(); ++i)
        if (preds[i].name == name) return static_cast<int>(i);
    return -1;
}

namespace {

using VarSet = std::set<std::string>;

bool is_anonymous_placeholder(const Term& t) { return t.kind == Term::Var && t.text == "_"; }

void collect_atom_vars(const std::vector<Term>& args, VarSet& out) {
    for (const Term& t : args)
        if (t.kind == Term::Var && !is_anonymous_placeholder(t)) out.insert(t.text);
}

void collect_arith_vars(const ArithExpr& e, VarSet& out) {
    if (e.op == ArithExpr::Leaf) {
        if (e.leaf.kind == Term::Var && e.leaf.text != "_") out.insert(e.leaf.text);
        return;
    }
    if (e.lhs) collect_arith_vars(*e.lhs, out);
    if (e.rhs) collect_arith_vars(*e.rhs, out);
}

// Variables bound by positive predicate references (the only bindings a row
// can actually carry; negation and comparisons only filter).
void positive_vars(const Formula& f, VarSet& out) {
    switch (f.kind) {
        case NodeKind::Atom: collect_atom_vars(f.args, out); break;
        case NodeKind::Not:
        case NodeKind::Compare: break;
        default:
            if (f.lhs) positive_vars(*f.lhs, out);
            if (f.rhs) positive_vars(*f.rhs, out);
    }
}

void all_vars(const Formula& f, VarSet& out) {
    switch (f.kind) {
        case NodeKind::Atom: collect_atom_vars(f.args, out); break;
        case NodeKind::Compare:
            if (f.cmp_lhs) collect_arith_vars(*f.cmp_lhs, out);
            if (f.cmp_rhs) collect_arith_vars(*f.cmp_rhs, out);
            break;
        default:
            if (f.lhs) all_vars(*f.lhs, out);
            if (f.rhs) all_vars(*f.rhs, out);
    }
}

std::string join_vars(const VarSet& vs) {
    std::string s;
    for (const std::string& v : vs) {
        if (!s.empty()) s += ", ";
        s += v;
    }
    return s;
}

class Checker {
  public:
    explicit Checker(CompiledProgram& cp) : cp_(cp), diags_(cp.diags) {}

    void run() {
        build_table();
        for (std::size_t i = 0; i < cp_.program.definitions.size(); ++i) check_definition(i);
    }

  private:
    CompiledProgram& cp_;
    Diagnostics& diags_;

    void build_table() {
        auto add = [this](const std::string& name, PredKind kind, int arity, int def_index,
                          SourcePos pos) {
            int existing = cp_.pred_id(name);
            if (existing >= 0) {
                diags_.error(DiagCode::DuplicateDefinition, pos,
                             "'" + name + "' is already " +
                                 (cp_.preds[existing].definition >= 0 ? "defined" : "declared"));
                return;
            }
            cp_.preds.push_back({name, kind, arity, 0, def_index, pos});
        };
        for (const Declaration& d : cp_.program.declarations) add(d.name, d.kind, d.arity, -1, d.pos);
        for (std::size_t i = 0; i < cp_.program.definitions.size(); ++i) {
            Definition& d = cp_.program.definitions[i];
            add(d.name, d.kind, static_cast<int>(d.head_args.size()), static_cast<int>(i), d.pos);
            d.pred = cp_.pred_id(d.name);
        }
    }

    void check_definition(std::size_t index) {
        Definition& def = cp_.program.definitions[index];
        if (!def.body) return;
        FormulaClass body = check_formula(*def.body);
        FormulaClass want = class_of(def.kind);
        if (body != want)
            diags_.error(DiagCode::TypeError, def.pos,
                         "body of " + std::string(pred_kind_name(def.kind)) + " '" + def.name +
                             "' is " + formula_class_name(body) + "-class, expected " +
                             formula_class_name(want));

        // range restriction: head variables must be bound positively
        VarSet bound;
        positive_vars(*def.body, bound);
        for (const Term& t : def.head_args) {
            if (t.kind != Term::Var) continue;
            if (is_anonymous_placeholder(t)) {
                diags_.error(DiagCode::UnsafeHeadVariable, t.pos,
                             "anonymous variable in head of '" + def.name + "'");
            } else if (!bound.count(t.text)) {
                diags_.error(DiagCode::UnsafeHeadVariable, t.pos,
                             "head variable " + t.text + " of '" + def.name +
                                 "' is not bound by a positive body atom");
            }
        }
        check_guards(*def.body, VarSet{});
        warn_singletons(def);
    }

    FormulaClass check_formula(Formula& f) {
        switch (f.kind) {
            case NodeKind::Atom: return check_atom(f);
            case NodeKind::Compare: return f.cls = FormulaClass::Instant;
            case NodeKind::Not: {
                require_class(*f.lhs, FormulaClass::Instant, "operand of negation");
                return f.cls = FormulaClass::Instant;
            }
            case NodeKind::And:
            case NodeKind::Or: {
                const char* name = f.kind == NodeKind::And ? "conjunction" : "disjunction";
                require_class(*f.lhs, FormulaClass::Instant, ("left operand of " + std::string(name)).c_str());
                require_class(*f.rhs, FormulaClass::Instant, ("right operand of " + std::string(name)).c_str());
                if (f.kind == NodeKind::Or) require_equal_vars(f, "'|'");
                return f.cls = FormulaClass::Instant;
            }
            case NodeKind::Start:
            case NodeKind::End: {
                const char* name = f.kind == NodeKind::Start ? "start" : "end";
                require_class(*f.lhs, FormulaClass::State,
                              (std::string("operand of ") + name).c_str());
                return f.cls = FormulaClass::Instant;
            }
            case NodeKind::MaxRange: {
                require_class(*f.lhs, FormulaClass::Instant, "opening operand of '~>'");
                require_class(*f.rhs, FormulaClass::Instant, "closing operand of '~>'");
                require_equal_vars(f, "'~>'");
                return f.cls = FormulaClass::State;
            }
            case NodeKind::Union:
            case NodeKind::Intersect:
            case NodeKind::Complement: {
                const char* name = f.kind == NodeKind::Union
                                       ? "union"
                                       : f.kind == NodeKind::Intersect ? "intersection"
                                                                       : "complement";
                require_class(*f.lhs, FormulaClass::State,
                              ("left operand of " + std::string(name)).c_str());
                require_class(*f.rhs, FormulaClass::State,
                              ("right operand of " + std::string(name)).c_str());
                if (f.kind == NodeKind::Union) require_equal_vars(f, "union");
                if (f.kind == NodeKind::Complement) {
                    VarSet l, r;
                    positive_vars(*f.lhs, l);
                    positive_vars(*f.rhs, r);
                    if (!std::includes(l.begin(), l.end(), r.begin(), r.end()))
                        diags_.error(DiagCode::TypeError, f.pos,
                                     "complement: right operand variables {" + join_vars(r) +
                                         "} must all occur in the left operand {" +
                                         join_vars(l) + "}");
                }
                return f.cls = FormulaClass::State;
            }
            case NodeKind::Relation: return check_relation(f);
        }
        return FormulaClass::Instant;
    }

    FormulaClass check_atom(Formula& f) {
        f.pred = cp_.pred_id(f.pred_name);
        if (f.pred < 0) {
            diags_.error(DiagCode::UndefinedPredicate, f.pos,
                         "predicate '" + f.pred_name + "' is neither declared nor defined");
            return f.cls = FormulaClass::Instant;
        }
        const PredInfo& info = cp_.preds[static_cast<std::size_t>(f.pred)];
        if (static_cast<int>(f.args.size()) != info.arity)
            diags_.error(DiagCode::ArityMismatch, f.pos,
                         "'" + f.pred_name + "' used with " + std::to_string(f.args.size()) +
                             " argument(s), expected " + std::to_string(info.arity));
        return f.cls = class_of(info.kind);
    }

    FormulaClass check_relation(Formula& f) {
        FormulaClass l = check_formula(*f.lhs);
        FormulaClass r = check_formula(*f.rhs);
        auto reject = [&](const char* side, const char* need) {
            diags_.error(DiagCode::TypeError, f.pos,
                         std::string(relation_name(f.rel)) + ": " + side + " operand must be " +
                             need);
        };
        // A bare comparison has no temporal extent of its own.
        if (f.lhs->kind == NodeKind::Compare || f.rhs->kind == NodeKind::Compare)
            diags_.error(DiagCode::TypeError, f.pos,
                         std::string(relation_name(f.rel)) +
                             ": a comparison cannot be a relation operand");
        switch (f.rel) {
            case RelationKind::Before: break;
            case RelationKind::Meets:
            case RelationKind::Overlaps:
            case RelationKind::Equals:
                if (l == FormulaClass::Instant) reject("left", "interval-valued");
                if (r == FormulaClass::Instant) reject("right", "interval-valued");
                break;
            case RelationKind::Finishes:
            case RelationKind::Starts:
                if (r == FormulaClass::Instant) reject("right", "interval-valued");
                break;
            case RelationKind::Contains:
                if (l == FormulaClass::Instant) reject("left", "interval-valued");
                break;
        }
        return f.cls = FormulaClass::Dynamic;
    }

    void require_class(Formula& f, FormulaClass want, const char* what) {
        FormulaClass got = check_formula(f);
        if (got != want)
            diags_.error(DiagCode::TypeError, f.pos,
                         std::string(what) + " must be " + formula_class_name(want) +
                             "-class, got " + formula_class_name(got));
    }

    void require_equal_vars(const Formula& f, const char* what) {
        VarSet l, r;
        positive_vars(*f.lhs, l);
        positive_vars(*f.rhs, r);
        if (l != r)
            diags_.error(DiagCode::TypeError, f.pos,
                         std::string("operands of ") + what +
                             " must bind identical variable sets; left binds {" + join_vars(l) +
                             "}, right binds {" + join_vars(r) + "}");
    }

    // Negations and comparisons may only constrain variables already bound in
    // their conjunctive context.
    void check_guards(const Formula& f, VarSet ctx) {
        switch (f.kind) {
            case NodeKind::And: {
                positive_vars(f, ctx);
                check_guards(*f.lhs, ctx);
                check_guards(*f.rhs, ctx);
                return;
            }
            case NodeKind::Not: {
                VarSet used;
                all_vars(*f.lhs, used);
                if (!std::includes(ctx.begin(), ctx.end(), used.begin(), used.end()))
                    diags_.error(DiagCode::UnguardedNegation, f.pos,
                                 "negated subformula uses variables {" + join_vars(used) +
                                     "} not bound by a positive conjunct");
                return;
            }
            case NodeKind::Compare: {
                VarSet used;
                all_vars(f, used);
                if (!std::includes(ctx.begin(), ctx.end(), used.begin(), used.end()))
                    diags_.error(DiagCode::UnguardedNegation, f.pos,
                                 "comparison uses variables {" + join_vars(used) +
                                     "} not bound by a positive conjunct");
                return;
            }
            case NodeKind::Atom: return;
            default:
                if (f.lhs) check_guards(*f.lhs, ctx);
                if (f.rhs) check_guards(*f.rhs, ctx);
        }
    }

    void count_term(const Term& t, std::map<std::string, std::pair<int, SourcePos>>& counts) {
        if (t.kind != Term::Var || t.text[0] == '_') return;  // _ and _Name: never warned
        auto [it, fresh] = counts.try_emplace(t.text, 0, t.pos);
        ++it->second.first;
        (void)fresh;
    }

    void count_vars(const Formula& f, std::map<std::string, std::pair<int, SourcePos>>& counts) {
        if (f.kind == NodeKind::Atom) {
            for (const Term& t : f.args) count_term(t, counts);
            return;
        }
        if (f.kind == NodeKind::Compare) {
            VarSet used;
            all_vars(f, used);
            for (const std::string& v : used) {
                auto [it, fresh] = counts.try_emplace(v, 0, f.pos);
                ++it->second.first;
                (void)fresh;
            }
            return;
        }
        if (f.lhs) count_vars(*f.lhs, counts);
        if (f.rhs) count_vars(*f.rhs, counts);
    }

    void warn_singletons(const Definition& def) {
        std::map<std::string, std::pair<int, SourcePos>> counts;
        for (const Term& t : def.head_args) count_term(t, counts);
        count_vars(*def.body, counts);
        for (const auto& [name, cp] : counts)
            if (cp.first == 1)
                diags_.warning(DiagCode::SingletonVariable, cp.second,
                               "variable " + name + " occurs only once in definition of '" +
                                   def.name + "' (use _ for placeholders)");
    }
};

void collect_deps(const Formula& f, std::set<int>& out) {
    if (f.kind == NodeKind::Atom) {
        if (f.pred >= 0) out.insert(f.pred);
        return;
    }
    if (f.lhs) collect_deps(*f.lhs, out);
    if (f.rhs) collect_deps(*f.rhs, out);
}

}  // namespace

void typecheck(CompiledProgram& out) { Checker(out).run(); }

void build_levels(CompiledProgram& out) {
    const std::size_t n = out.preds.size();
    std::vector<std::set<int>> deps(n);
    for (std::size_t i = 0; i < n; ++i) {
        const PredInfo& p = out.preds[i];
        if (p.definition < 0) continue;
        const Definition& def = out.program.definitions[static_cast<std::size_t>(p.definition)];
        if (def.body) collect_deps(*def.body, deps[i]);
    }

    enum { White, Grey, Black };
    std::vector<int> color(n, White), level(n, 0);
    std::vector<int> stack;
    bool cycle_reported = false;

    auto dfs = [&](auto&& self, int v) -> int {
        if (color[v] == Black) return level[v];
        if (color[v] == Grey) {
            if (!cycle_reported) {
                std::string path;
                bool in_cycle = false;
                for (int u : stack) {
                    if (u == v) in_cycle = true;
                    if (in_cycle) path += out.preds[static_cast<std::size_t>(u)].name + " -> ";
                }
                path += out.preds[static_cast<std::size_t>(v)].name;
                out.diags.error(DiagCode::CyclicDefinition,
                                out.preds[static_cast<std::size_t>(v)].declared_at,
                                "definition cycle: " + path);
                cycle_reported = true;
            }
            return 0;
        }
        color[v] = Grey;
        stack.push_back(v);
        int lv = 0;
        if (out.preds[static_cast<std::size_t>(v)].definition >= 0) {
            lv = 1;
            int best = 0;
            for (int d : deps[static_cast<std::size_t>(v)])
                best = std::max(best, self(self, d));
            lv = 1 + best;
        }
        stack.pop_back();
        color[v] = Black;
        level[v] = lv;
        return lv;
    };
    for (std::size_t i = 0; i < n; ++i) dfs(dfs, static_cast<int>(i));

    int max_level = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out.preds[i].level = level[i];
        if (out.preds[i].definition >= 0)
            out.program.definitions[static_cast<std::size_t>(out.preds[i].definition)].level =
                level[i];
        max_level = std::max(max_level, level[i]);
    }
    out.levels.assign(static_cast<std::size_t>(max_level) + 1, {});
    for (std::size_t i = 0; i < n; ++i)
        out.levels[static_cast<std::size_t>(level[i])].push_back(static_cast<int>(i));
}

CompiledProgram compile_program(std::string_view src) {
    CompiledProgram cp;
    cp.program = parse_program(src, cp.diags);
    typecheck(cp);
    build_levels(cp);
    return cp;
}

// ---- pretty printing -----------------------------------------------------

namespace {

int rank(const Formula& f) {
    switch (f.kind) {
        case NodeKind::Relation: return 1;
        case NodeKind::Union: return 2;
        case NodeKind::Intersect: return 3;
        case NodeKind::Complement: return 4;
        case NodeKind::MaxRange: return 5;
        case NodeKind::Or: return 6;
        case NodeKind::And: return 7;
        default: return 8;  // atoms, comparisons, prefixed forms
    }
}

void print_term(std::ostream& os, const Term& t) { os << t.text; }

void print_arith(std::ostream& os, const ArithExpr& e, int parent) {
    auto prec = [](const ArithExpr& x) {
        switch (x.op) {
            case ArithExpr::Add:
            case ArithExpr::Sub: return 1;
            case ArithExpr::Mul:
            case ArithExpr::Div: return 2;
            default: return 3;
        }
    };
    int mine = prec(e);
    bool parens = mine < parent;
    if (parens) os << '(';
    switch (e.op) {
        case ArithExpr::Leaf: print_term(os, e.leaf); break;
        case ArithExpr::Neg:
            os << '-';
            print_arith(os, *e.lhs, 3);
            break;
        case ArithExpr::Add:
        case ArithExpr::Sub:
            print_arith(os, *e.lhs, mine);
            os << (e.op == ArithExpr::Add ? " + " : " - ");
            print_arith(os, *e.rhs, mine + 1);
            break;
        case ArithExpr::Mul:
        case ArithExpr::Div:
            print_arith(os, *e.lhs, mine);
            os << (e.op == ArithExpr::Mul ? " * " : " / ");
            print_arith(os, *e.rhs, mine + 1);
            break;
    }
    if (parens) os << ')';
}

const char* cmp_text(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
        case CmpOp::Eq: return "==";
        case CmpOp::Ne: return "!=";
    }
    return "?";
}

void print_formula(std::ostream& os, const Formula& f, int parent, bool right_child) {
    int mine = rank(f);
    bool parens = mine < parent || (mine == parent && right_child && mine < 8);
    if (parens) os << '(';
    switch (f.kind) {
        case NodeKind::Atom: {
            os << f.pred_name;
            if (!f.args.empty()) {
                os << '(';
                for (std::size_t i = 0; i < f.args.size(); ++i) {
                    if (i) os << ", ";
                    print_term(os, f.args[i]);
                }
                os << ')';
            }
            break;
        }
        case NodeKind::Compare:
            print_arith(os, *f.cmp_lhs, 0);
            os << ' ' << cmp_text(f.cmp) << ' ';
            print_arith(os, *f.cmp_rhs, 0);
            break;
        case NodeKind::Not:
            os << '~';
            print_formula(os, *f.lhs, 8, false);
            break;
        case NodeKind::Start:
        case NodeKind::End:
            os << (f.kind == NodeKind::Start ? "start(" : "end(");
            print_formula(os, *f.lhs, 0, false);
            os << ')';
            break;
        default: {
            const char* op = nullptr;
            switch (f.kind) {
                case NodeKind::And: op = " & "; break;
                case NodeKind::Or: op = " | "; break;
                case NodeKind::MaxRange: op = " ~> "; break;
                case NodeKind::Union: op = " union "; break;
                case NodeKind::Intersect: op = " intersection "; break;
                case NodeKind::Complement: op = " complement "; break;
                case NodeKind::Relation: op = nullptr; break;
                default: break;
            }
            print_formula(os, *f.lhs, mine, false);
            if (f.kind == NodeKind::Relation)
                os << ' ' << relation_name(f.rel) << ' ';
            else
                os << op;
            print_formula(os, *f.rhs, mine, true);
            break;
        }
    }
    if (parens) os << ')';
}

}  // namespace

std::string pretty_print(const Formula& f) {
    std::ostringstream os;
    print_formula(os, f, 0, false);
    return os.str();
}

std::string pretty_print(const Program& prog) {
    std::ostringstream os;
    for (const Declaration& d : prog.declarations) {
        os << "input " << (d.kind == PredKind::InputEvent
                               ? "event"
                               : d.kind == PredKind::InputState ? "state" : "dynamic")
           << ' ' << d.name << '/' << d.arity << ".\n";
    }
    for (const Definition& d : prog.definitions) {
        os << (d.kind == PredKind::Event ? "event" : d.kind == PredKind::State ? "state" : "dynamic")
           << ' ' << d.name;
        if (!d.head_args.empty()) {
            os << '(';
            for (std::size_t i = 0; i < d.head_args.size(); ++i) {
                if (i) os << ", ";
                print_term(os, d.head_args[i]);
            }
            os << ')';
        }
        os << ": ";
        print_formula(os, *d.body, 0, false);
        os << ".\n";
    }
    return os.str();
}

}  // namespace tempest
