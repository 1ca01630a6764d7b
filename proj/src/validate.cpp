#include "folast/validate.hpp"

#include <algorithm>

namespace folast {

namespace {

std::string trimmed(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

struct Walker {
    WellFormednessReport& report;
    const codegen::DeclarationSet* context;
    std::vector<std::string> bound_stack;
    std::set<std::string> constant_names;

    void fault(FaultCode code, const std::string& path, std::string detail) {
        report.faults.push_back({code, path, std::move(detail)});
    }

    bool is_bound(const std::string& name) const {
        return std::find(bound_stack.rbegin(), bound_stack.rend(), name) !=
               bound_stack.rend();
    }

    void record_relation(const std::string& name, std::size_t arity,
                         const std::string& path) {
        auto [it, inserted] = report.signature.emplace(name, arity);
        if (!inserted && it->second != arity) {
            fault(FaultCode::ArityMismatch, path,
                  "relation " + name + " used with arity " +
                      std::to_string(arity) + " after arity " +
                      std::to_string(it->second));
        }
        if (context) {
            if (auto declared = context->relation_arity(name);
                declared && *declared != arity) {
                fault(FaultCode::ArityMismatch, path,
                      "relation " + name + " declared with arity " +
                          std::to_string(*declared) + " in context, used with " +
                          std::to_string(arity));
            }
            if (context->has_constant(name)) {
                fault(FaultCode::ArityMismatch, path,
                      "name " + name + " is a constant in context but used as a relation");
            }
        }
    }

    void visit(const Formula& f, const std::string& path) {
        if (f.is_atomic()) {
            const Atomic& a = f.atomic();
            if (trimmed(a.relation).empty())
                fault(FaultCode::EmptyName, path, "empty relation name");
            if (a.args.empty() || a.args.size() > 3)
                fault(FaultCode::BadArgCount, path,
                      "atomic " + a.relation + " has " +
                          std::to_string(a.args.size()) +
                          " arguments; the grammar allows 1..3");
            if (!trimmed(a.relation).empty())
                record_relation(a.relation, a.args.size(), path);
            for (const Term& t : a.args) {
                if (trimmed(t.name).empty()) {
                    fault(FaultCode::EmptyName, path,
                          "empty term name in " + a.relation);
                    continue;
                }
                if (t.kind == TermKind::Variable) {
                    if (!is_bound(t.name)) {
                        report.free_variables.insert(t.name);
                        fault(FaultCode::UnboundVariable, path,
                              "variable " + t.name + " is not bound by any quantifier");
                    }
                } else {
                    constant_names.insert(t.name);
                    if (context && context->relation_arity(t.name)) {
                        fault(FaultCode::ArityMismatch, path,
                              "name " + t.name +
                                  " is a relation in context but used as a constant");
                    }
                }
            }
            return;
        }
        if (f.is_quantified()) {
            const Quantified& q = f.quantified();
            if (trimmed(q.variable).empty())
                fault(FaultCode::EmptyName, path, "empty quantifier variable");
            bound_stack.push_back(q.variable);
            visit(*q.body, path + "/0");
            bound_stack.pop_back();
            return;
        }
        const Logical& l = f.logical();
        for (std::size_t i = 0; i < l.operands.size(); ++i)
            visit(l.operands[i], path + "/" + std::to_string(i));
    }
};

} // namespace

const char* to_string(FaultCode code) {
    switch (code) {
        case FaultCode::UnboundVariable: return "UnboundVariable";
        case FaultCode::ArityMismatch: return "ArityMismatch";
        case FaultCode::EmptyName: return "EmptyName";
        case FaultCode::BadArgCount: return "BadArgCount";
    }
    return "?";
}

WellFormednessReport validate(const Formula& f,
                              const codegen::DeclarationSet* context) {
    WellFormednessReport report;
    Walker walker{report, context, {}, {}};
    walker.visit(f, "");
    // One name may not serve as both a relation and a constant.
    for (const auto& [relation, arity] : report.signature) {
        (void)arity;
        if (walker.constant_names.count(relation)) {
            walker.fault(FaultCode::ArityMismatch, "",
                         "name " + relation + " used as both a relation and a constant");
        }
    }
    report.ok = report.faults.empty();
    return report;
}

AnalysisResult analyze(const Formula& f) {
    if (!validate(f).ok)
        throw std::invalid_argument("analyze: formula does not validate");
    AnalysisResult out;
    struct Collect {
        AnalysisResult& out;
        void visit(const Formula& f) {
            if (f.is_atomic()) {
                const Atomic& a = f.atomic();
                out.signature.emplace(a.relation, a.args.size());
                for (const Term& t : a.args) {
                    if (t.kind == TermKind::Constant)
                        out.constants.insert(t.name);
                }
                return;
            }
            if (f.is_quantified()) {
                out.bound_variables.insert(f.quantified().variable);
                visit(*f.quantified().body);
                return;
            }
            for (const Formula& op : f.logical().operands) visit(op);
        }
    };
    Collect{out}.visit(f);
    return out;
}

} // namespace folast
