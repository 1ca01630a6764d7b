#include "folast/ast.hpp"

namespace folast {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingNode: return "MissingNode";
        case ErrorCode::InvalidNode: return "InvalidNode";
        case ErrorCode::DepthExceeded: return "DepthExceeded";
        case ErrorCode::LoopDetected: return "LoopDetected";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::UndeclaredSymbol: return "UndeclaredSymbol";
        case ErrorCode::SolverNotFound: return "SolverNotFound";
        case ErrorCode::SolverCrashed: return "SolverCrashed";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

const char* to_string(Quantifier q) {
    return q == Quantifier::ForAll ? "ForAll" : "Exists";
}

const char* to_string(Connective op) {
    switch (op) {
        case Connective::Not: return "Not";
        case Connective::And: return "And";
        case Connective::Or: return "Or";
        case Connective::Implies: return "Implies";
    }
    return "?";
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    const Node& a = *node_;
    const Node& b = *other.node_;
    if (a.index() != b.index()) return false;
    if (const auto* at = std::get_if<Atomic>(&a)) {
        const auto& bt = std::get<Atomic>(b);
        return at->relation == bt.relation && at->args == bt.args;
    }
    if (const auto* aq = std::get_if<Quantified>(&a)) {
        const auto& bq = std::get<Quantified>(b);
        return aq->quantifier == bq.quantifier && aq->variable == bq.variable &&
               *aq->body == *bq.body;
    }
    const auto& al = std::get<Logical>(a);
    const auto& bl = std::get<Logical>(b);
    return al.op == bl.op && al.operands == bl.operands;
}

Formula atom(std::string relation, std::vector<Term> args) {
    return Formula(Atomic{std::move(relation), std::move(args)});
}

Formula quantified(Quantifier q, std::string variable, Formula body) {
    return Formula(Quantified{
        q, std::move(variable),
        std::make_shared<const Formula>(std::move(body))});
}

Formula forall(std::string variable, Formula body) {
    return quantified(Quantifier::ForAll, std::move(variable), std::move(body));
}

Formula exists(std::string variable, Formula body) {
    return quantified(Quantifier::Exists, std::move(variable), std::move(body));
}

Formula negation(Formula operand) {
    return Formula(Logical{Connective::Not, {std::move(operand)}});
}

Formula conjunction(Formula left, Formula right) {
    return Formula(Logical{Connective::And, {std::move(left), std::move(right)}});
}

Formula disjunction(Formula left, Formula right) {
    return Formula(Logical{Connective::Or, {std::move(left), std::move(right)}});
}

Formula implication(Formula antecedent, Formula consequent) {
    return Formula(
        Logical{Connective::Implies, {std::move(antecedent), std::move(consequent)}});
}

Formula negate(const Formula& f) { return negation(f); }

std::size_t node_count(const Formula& f) {
    if (f.is_atomic()) return 1;
    if (f.is_quantified()) return 1 + node_count(*f.quantified().body);
    std::size_t n = 1;
    for (const Formula& op : f.logical().operands) n += node_count(op);
    return n;
}

Formula rename_free_variable(const Formula& f, std::string_view from,
                             std::string_view to) {
    if (f.is_atomic()) {
        const Atomic& a = f.atomic();
        bool hit = false;
        for (const Term& t : a.args)
            if (t.kind == TermKind::Variable && t.name == from) hit = true;
        if (!hit) return f;
        std::vector<Term> args = a.args;
        for (Term& t : args)
            if (t.kind == TermKind::Variable && t.name == from)
                t.name = std::string(to);
        return atom(a.relation, std::move(args));
    }
    if (f.is_quantified()) {
        const Quantified& q = f.quantified();
        if (q.variable == from) return f; // shadowed below this binder
        Formula body = rename_free_variable(*q.body, from, to);
        if (body.shares_node_with(*q.body)) return f;
        return quantified(q.quantifier, q.variable, std::move(body));
    }
    const Logical& l = f.logical();
    std::vector<Formula> operands;
    operands.reserve(l.operands.size());
    bool changed = false;
    for (const Formula& op : l.operands) {
        Formula next = rename_free_variable(op, from, to);
        if (!next.shares_node_with(op)) changed = true;
        operands.push_back(std::move(next));
    }
    if (!changed) return f;
    return Formula(Logical{l.op, std::move(operands)});
}

Formula desugar(const ExtendedConnective& e) {
    switch (e.op) {
        case ExtendedOp::If:
            return implication(e.left, e.right);
        case ExtendedOp::OnlyIf:
            // "P only if Q": Q is required for P.
            return implication(e.left, e.right);
        case ExtendedOp::IfAndOnlyIf:
            return conjunction(implication(e.left, e.right),
                               implication(e.right, e.left));
    }
    throw std::logic_error("unreachable extended op");
}

Result<Formula> desugar_tag(std::string_view op_tag, Formula left,
                            Formula right) {
    if (op_tag == "And") return conjunction(std::move(left), std::move(right));
    if (op_tag == "Or") return disjunction(std::move(left), std::move(right));
    if (op_tag == "Implies" || op_tag == "If")
        return desugar({ExtendedOp::If, std::move(left), std::move(right)});
    if (op_tag == "OnlyIf")
        return desugar({ExtendedOp::OnlyIf, std::move(left), std::move(right)});
    if (op_tag == "IfAndOnlyIf")
        return desugar({ExtendedOp::IfAndOnlyIf, std::move(left), std::move(right)});
    return Error(ErrorCode::InvalidNode,
                 "unknown binary operator tag: " + std::string(op_tag));
}

} // namespace folast
