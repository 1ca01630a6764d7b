#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "folast/errors.hpp"

namespace folast::backend {

/// One required field of a structured-output schema. Aliases cover the key
/// spellings models drift into (e.g. "object" for "obj", "transitive_verb"
/// for "verb"); they are normalized to the canonical name on verification.
struct FieldSpec {
    std::string name;
    std::vector<std::string> aliases;
    std::vector<std::string> enum_values; // empty means any non-empty string
};

struct Schema {
    std::string id;
    std::vector<FieldSpec> required;

    /// JSON Schema document suitable for a chat-completion response-format
    /// request field.
    nlohmann::json json_schema() const;
};

/// Registered parser schemas: selector, quantified, logical_binary,
/// logical_unary, atomic_dispatch, atomic_adjective, atomic_intransitive,
/// atomic_transitive, atomic_ditransitive.
const std::vector<Schema>& all_schemas();
const Schema* find_schema(std::string_view id);
const Schema& schema(std::string_view id); // throws std::out_of_range

/// Local verification, always applied no matter what the serving stack
/// enforced. A document that is not an object or lacks a required field
/// under any accepted key is MissingNode; a field that is present but empty
/// (or outside its enum) is InvalidNode. Returns the document rewritten to
/// canonical keys.
Result<nlohmann::json> verify_document(const Schema& schema,
                                       const nlohmann::json& document);

} // namespace folast::backend
