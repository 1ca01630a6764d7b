#include "folast/declarations.hpp"

namespace folast::codegen {

bool DeclarationSet::add_constant(std::string_view name) {
    std::string key(name);
    if (constant_index_.count(key)) return false;
    constant_index_.emplace(key, constants_.size());
    constants_.push_back(std::move(key));
    return true;
}

bool DeclarationSet::add_variable(std::string_view name) {
    std::string key(name);
    if (variable_index_.count(key)) return false;
    variable_index_.emplace(key, variables_.size());
    variables_.push_back(std::move(key));
    return true;
}

std::optional<std::size_t> DeclarationSet::add_relation(std::string_view name,
                                                        std::size_t arity) {
    std::string key(name);
    if (auto it = relation_index_.find(key); it != relation_index_.end()) {
        std::size_t existing = relations_[it->second].arity;
        if (existing != arity) return existing;
        return std::nullopt;
    }
    relation_index_.emplace(key, relations_.size());
    relations_.push_back({std::move(key), arity});
    return std::nullopt;
}

bool DeclarationSet::has_constant(std::string_view name) const {
    return constant_index_.count(std::string(name)) != 0;
}

bool DeclarationSet::has_variable(std::string_view name) const {
    return variable_index_.count(std::string(name)) != 0;
}

std::optional<std::size_t> DeclarationSet::relation_arity(std::string_view name) const {
    auto it = relation_index_.find(std::string(name));
    if (it == relation_index_.end()) return std::nullopt;
    return relations_[it->second].arity;
}

namespace {

// Preorder: a node registers its own symbols, then its children are visited.
Result<bool> collect_into(const Formula& f, DeclarationSet& decls) {
    if (f.is_atomic()) {
        const Atomic& a = f.atomic();
        if (auto conflict = decls.add_relation(a.relation, a.args.size())) {
            return Error(ErrorCode::ArityMismatch,
                         "relation " + a.relation + " used with arity " +
                             std::to_string(a.args.size()) + " after arity " +
                             std::to_string(*conflict));
        }
        for (const Term& t : a.args) {
            if (t.kind == TermKind::Variable)
                decls.add_variable(t.name);
            else
                decls.add_constant(t.name);
        }
        return true;
    }
    if (f.is_quantified()) {
        decls.add_variable(f.quantified().variable);
        return collect_into(*f.quantified().body, decls);
    }
    for (const Formula& op : f.logical().operands) {
        auto r = collect_into(op, decls);
        if (!r) return r;
    }
    return true;
}

} // namespace

Result<DeclarationSet> collect_declarations(std::span<const Formula> formulas) {
    DeclarationSet decls;
    for (const Formula& f : formulas) {
        auto r = collect_into(f, decls);
        if (!r) return r.error();
    }
    return decls;
}

} // namespace folast::codegen
