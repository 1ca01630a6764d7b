#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "folast/ast.hpp"
#include "folast/errors.hpp"

namespace folast::codegen {

struct RelationSignature {
    std::string name;
    std::size_t arity;

    bool operator==(const RelationSignature&) const = default;
};

/// Symbol table produced by the first compilation pass: constants, variables,
/// and relation signatures, each kept in first-encounter preorder so emission
/// is deterministic. Set semantics: re-registering is a no-op, re-registering
/// a relation under a different arity is an arity conflict.
class DeclarationSet {
public:
    bool add_constant(std::string_view name);
    bool add_variable(std::string_view name);
    /// Returns the previously registered arity when it conflicts.
    std::optional<std::size_t> add_relation(std::string_view name, std::size_t arity);

    bool has_constant(std::string_view name) const;
    bool has_variable(std::string_view name) const;
    std::optional<std::size_t> relation_arity(std::string_view name) const;

    const std::vector<std::string>& constants() const { return constants_; }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<RelationSignature>& relations() const { return relations_; }

    bool operator==(const DeclarationSet&) const = default;

private:
    std::vector<std::string> constants_;
    std::vector<std::string> variables_;
    std::vector<RelationSignature> relations_;
    std::unordered_map<std::string, std::size_t> constant_index_;
    std::unordered_map<std::string, std::size_t> variable_index_;
    std::unordered_map<std::string, std::size_t> relation_index_;
};

/// First pass over a list of formulas: registers every constant, bound
/// variable, and relation signature in preorder. Expression nodes contribute
/// nothing themselves. Fails with ArityMismatch when two uses of one
/// relation name disagree on argument count.
Result<DeclarationSet> collect_declarations(std::span<const Formula> formulas);

} // namespace folast::codegen
