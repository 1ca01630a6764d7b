#include "folast/emit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace folast::codegen {

namespace {

const char* kSort = "Object";

bool smt_reserved(const std::string& s) {
    static const std::set<std::string> kReserved = {
        "and", "or", "not", "=>", "forall", "exists", "assert", "check-sat",
        "declare-const", "declare-fun", "declare-sort", "true", "false",
        "let", "ite", "distinct", "xor", "par", "Bool", kSort,
    };
    return kReserved.count(s) != 0;
}

/// Deterministic mapping from source identifiers to SMT symbols. Constants
/// and relations share one namespace; collisions after sanitization (and
/// hits on reserved words) get numeric suffixes recorded in the rename map.
class SymbolMap {
public:
    const std::string& intern(const std::string& original) {
        auto it = map_.find(original);
        if (it != map_.end()) return it->second;
        std::string candidate = sanitize_symbol(original);
        if (candidate != original || smt_reserved(candidate) || used_.count(candidate)) {
            std::string base = candidate;
            std::size_t n = 1;
            while (smt_reserved(candidate) || used_.count(candidate))
                candidate = base + std::to_string(n++);
        }
        used_.insert(candidate);
        if (candidate != original) renames_.emplace_back(original, candidate);
        return map_.emplace(original, std::move(candidate)).first->second;
    }

    bool taken(const std::string& symbol) const { return used_.count(symbol) != 0; }

    const std::vector<std::pair<std::string, std::string>>& renames() const {
        return renames_;
    }

private:
    std::map<std::string, std::string> map_;
    std::set<std::string> used_;
    std::vector<std::pair<std::string, std::string>> renames_;
};

struct SmtEmitter {
    const DeclarationSet& env;
    SymbolMap& symbols;
    // binder name in the source tree -> name emitted for it
    std::vector<std::pair<std::string, std::string>> binders;

    std::string fresh_binder(const std::string& wanted) {
        std::string candidate = sanitize_symbol(wanted);
        auto in_scope = [&](const std::string& s) {
            for (const auto& [from, to] : binders) {
                (void)from;
                if (to == s) return true;
            }
            return false;
        };
        if (!smt_reserved(candidate) && !symbols.taken(candidate) &&
            !in_scope(candidate))
            return candidate;
        std::string base = candidate;
        std::size_t n = 1;
        do {
            candidate = base + std::to_string(n++);
        } while (smt_reserved(candidate) || symbols.taken(candidate) ||
                 in_scope(candidate));
        return candidate;
    }

    Result<std::string> term(const Term& t) {
        if (t.kind == TermKind::Variable) {
            for (auto it = binders.rbegin(); it != binders.rend(); ++it)
                if (it->first == t.name) return it->second;
            return Error(ErrorCode::UndeclaredSymbol,
                         "variable " + t.name + " is not bound by any quantifier");
        }
        if (!env.has_constant(t.name))
            return Error(ErrorCode::UndeclaredSymbol,
                         "constant " + t.name + " is not declared");
        return symbols.intern(t.name);
    }

    Result<std::string> emit(const Formula& f) {
        if (f.is_atomic()) {
            const Atomic& a = f.atomic();
            auto arity = env.relation_arity(a.relation);
            if (!arity || *arity != a.args.size())
                return Error(ErrorCode::UndeclaredSymbol,
                             "relation " + a.relation + "/" +
                                 std::to_string(a.args.size()) + " is not declared");
            std::string out = "(" + symbols.intern(a.relation);
            for (const Term& t : a.args) {
                auto r = term(t);
                if (!r) return r.error();
                out += " " + r.value();
            }
            return out + ")";
        }
        if (f.is_quantified()) {
            const Quantified& q = f.quantified();
            std::string bound = fresh_binder(q.variable);
            binders.emplace_back(q.variable, bound);
            auto body = emit(*q.body);
            binders.pop_back();
            if (!body) return body.error();
            const char* head = q.quantifier == Quantifier::ForAll ? "forall" : "exists";
            return "(" + std::string(head) + " ((" + bound + " " + kSort + ")) " +
                   body.value() + ")";
        }
        const Logical& l = f.logical();
        const char* head = nullptr;
        switch (l.op) {
            case Connective::Not: head = "not"; break;
            case Connective::And: head = "and"; break;
            case Connective::Or: head = "or"; break;
            case Connective::Implies: head = "=>"; break;
        }
        std::string out = "(" + std::string(head);
        for (const Formula& op : l.operands) {
            auto r = emit(op);
            if (!r) return r.error();
            out += " " + r.value();
        }
        return out + ")";
    }
};

/// FolText emission shares render_fol's layout but checks the environment
/// the same way the SMT path does.
Result<std::string> check_symbols(const Formula& f, const DeclarationSet& env,
                                  std::vector<std::string>& binders) {
    if (f.is_atomic()) {
        const Atomic& a = f.atomic();
        auto arity = env.relation_arity(a.relation);
        if (!arity || *arity != a.args.size())
            return Error(ErrorCode::UndeclaredSymbol,
                         "relation " + a.relation + "/" +
                             std::to_string(a.args.size()) + " is not declared");
        for (const Term& t : a.args) {
            if (t.kind == TermKind::Variable) {
                if (std::find(binders.begin(), binders.end(), t.name) == binders.end())
                    return Error(ErrorCode::UndeclaredSymbol,
                                 "variable " + t.name +
                                     " is not bound by any quantifier");
            } else if (!env.has_constant(t.name)) {
                return Error(ErrorCode::UndeclaredSymbol,
                             "constant " + t.name + " is not declared");
            }
        }
        return std::string();
    }
    if (f.is_quantified()) {
        binders.push_back(f.quantified().variable);
        auto r = check_symbols(*f.quantified().body, env, binders);
        binders.pop_back();
        return r;
    }
    for (const Formula& op : f.logical().operands) {
        auto r = check_symbols(op, env, binders);
        if (!r) return r;
    }
    return std::string();
}

bool needs_parens(const Formula& operand) {
    if (operand.is_quantified()) return true;
    return operand.is_logical() && operand.logical().op != Connective::Not;
}

std::string render_operand(const Formula& f) {
    std::string body = render_fol(f);
    if (needs_parens(f)) return "(" + body + ")";
    return body;
}

} // namespace

std::string sanitize_symbol(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        out.push_back(ok ? c : '_');
    }
    if (out.empty()) out = "_";
    if (std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(out.begin(), '_');
    return out;
}

std::string render_fol(const Formula& f) {
    if (f.is_atomic()) {
        const Atomic& a = f.atomic();
        std::string out = a.relation + "(";
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i) out += ", ";
            out += a.args[i].name;
        }
        return out + ")";
    }
    if (f.is_quantified()) {
        const Quantified& q = f.quantified();
        const char* head = q.quantifier == Quantifier::ForAll ? "∀" : "∃";
        return std::string(head) + q.variable + " (" + render_fol(*q.body) + ")";
    }
    const Logical& l = f.logical();
    if (l.op == Connective::Not) return "¬" + render_operand(l.operands[0]);
    const char* infix = nullptr;
    switch (l.op) {
        case Connective::And: infix = " ∧ "; break;
        case Connective::Or: infix = " ∨ "; break;
        case Connective::Implies: infix = " → "; break;
        case Connective::Not: break;
    }
    return render_operand(l.operands[0]) + infix + render_operand(l.operands[1]);
}

Result<std::string> generate_expression(const Formula& f,
                                        const DeclarationSet& env,
                                        Target target) {
    if (target == Target::SmtLib2) {
        SymbolMap symbols;
        for (const std::string& c : env.constants()) symbols.intern(c);
        for (const RelationSignature& r : env.relations()) symbols.intern(r.name);
        SmtEmitter emitter{env, symbols, {}};
        return emitter.emit(f);
    }
    std::vector<std::string> binders;
    auto r = check_symbols(f, env, binders);
    if (!r) return r.error();
    return render_fol(f);
}

std::string TargetProgram::text() const {
    std::string out;
    for (const std::string& line : declarations) out += line + "\n";
    for (const std::string& line : assertions) out += line + "\n";
    if (query) out += *query + "\n";
    return out;
}

Result<TargetProgram> compile_program(std::span<const Formula> premises,
                                      const std::optional<Formula>& hypothesis,
                                      CompileMode mode, Target target) {
    if (mode == CompileMode::CheckEntails && !hypothesis)
        throw std::invalid_argument("compile_program: CheckEntails needs a hypothesis");

    std::vector<Formula> formulas(premises.begin(), premises.end());
    if (hypothesis) formulas.push_back(*hypothesis);
    auto decls = collect_declarations(formulas);
    if (!decls) return decls.error();
    const DeclarationSet& env = decls.value();

    TargetProgram program;
    program.target = target;

    std::vector<Formula> assertions(premises.begin(), premises.end());
    if (mode == CompileMode::CheckEntails) assertions.push_back(negate(*hypothesis));

    if (target == Target::SmtLib2) {
        SymbolMap symbols;
        // Intern in first-encounter declaration order so suffix assignment
        // never depends on assertion layout.
        std::vector<std::string> const_lines, rel_lines;
        for (const std::string& c : env.constants())
            const_lines.push_back("(declare-const " + symbols.intern(c) + " " +
                                  kSort + ")");
        for (const RelationSignature& r : env.relations()) {
            std::string domain;
            for (std::size_t i = 0; i < r.arity; ++i)
                domain += (i ? " " : "") + std::string(kSort);
            rel_lines.push_back("(declare-fun " + symbols.intern(r.name) + " (" +
                                domain + ") Bool)");
        }
        for (const auto& [from, to] : symbols.renames())
            program.declarations.push_back(";; renamed " + from + " -> " + to);
        program.declarations.push_back("(declare-sort " + std::string(kSort) + " 0)");
        program.declarations.insert(program.declarations.end(), const_lines.begin(),
                                    const_lines.end());
        program.declarations.insert(program.declarations.end(), rel_lines.begin(),
                                    rel_lines.end());
        for (const Formula& f : assertions) {
            SmtEmitter emitter{env, symbols, {}};
            auto expr = emitter.emit(f);
            if (!expr) return expr.error();
            program.assertions.push_back("(assert " + expr.value() + ")");
        }
        if (mode == CompileMode::CheckEntails) program.query = "(check-sat)";
        return program;
    }

    for (const std::string& c : env.constants())
        program.declarations.push_back("const " + c);
    for (const RelationSignature& r : env.relations())
        program.declarations.push_back("rel " + r.name + "/" + std::to_string(r.arity));
    for (const Formula& f : assertions) {
        auto expr = generate_expression(f, env, Target::FolText);
        if (!expr) return expr.error();
        program.assertions.push_back(expr.value());
    }
    if (mode == CompileMode::CheckEntails) program.query = "check-sat";
    return program;
}

} // namespace folast::codegen
