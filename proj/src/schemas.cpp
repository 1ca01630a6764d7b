#include "folast/schemas.hpp"

#include <algorithm>
#include <stdexcept>

namespace folast::backend {

namespace {

std::vector<Schema> build_registry() {
    const std::vector<std::string> letters = {"A", "B", "C", "D"};
    return {
        {"selector", {{"answer", {}, letters}}},
        {"quantified",
         {{"quantifier", {}, {"ForAll", "ThereExists"}},
          {"variable", {}, {}},
          {"sentence_without_quantifier", {"sentence"}, {}}}},
        {"logical_binary",
         {{"operator", {"op"}, {"Not", "And", "Or", "If", "OnlyIf", "IfAndOnlyIf"}},
          {"left_operand", {"left"}, {}},
          {"right_operand", {"right"}, {}}}},
        {"logical_unary",
         {{"operator", {"op"}, {"Not"}}, {"operand", {"sentence"}, {}}}},
        {"atomic_dispatch", {{"answer", {}, letters}}},
        {"atomic_adjective",
         {{"adjective", {}, {}}, {"obj", {"object", "subject"}, {}}}},
        {"atomic_intransitive",
         {{"verb", {"intransitive_verb"}, {}}, {"subject", {}, {}}}},
        {"atomic_transitive",
         {{"subject", {}, {}},
          {"verb", {"transitive_verb"}, {}},
          {"obj", {"object"}, {}}}},
        {"atomic_ditransitive",
         {{"subject", {}, {}},
          {"verb", {"ditransitive_verb"}, {}},
          {"indirect_obj", {"indirect_object"}, {}},
          {"direct_obj", {"direct_object"}, {}}}},
    };
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

} // namespace

nlohmann::json Schema::json_schema() const {
    nlohmann::json properties = nlohmann::json::object();
    nlohmann::json required_keys = nlohmann::json::array();
    for (const FieldSpec& field : required) {
        nlohmann::json spec = {{"type", "string"}};
        if (!field.enum_values.empty()) spec["enum"] = field.enum_values;
        properties[field.name] = spec;
        required_keys.push_back(field.name);
    }
    return {{"type", "object"},
            {"properties", properties},
            {"required", required_keys},
            {"additionalProperties", false}};
}

const std::vector<Schema>& all_schemas() {
    static const std::vector<Schema> registry = build_registry();
    return registry;
}

const Schema* find_schema(std::string_view id) {
    for (const Schema& s : all_schemas())
        if (s.id == id) return &s;
    return nullptr;
}

const Schema& schema(std::string_view id) {
    if (const Schema* s = find_schema(id)) return *s;
    throw std::out_of_range("unknown schema id: " + std::string(id));
}

Result<nlohmann::json> verify_document(const Schema& schema,
                                       const nlohmann::json& document) {
    if (!document.is_object())
        return Error(ErrorCode::MissingNode,
                     schema.id + ": document is not an object");
    nlohmann::json normalized = nlohmann::json::object();
    for (const FieldSpec& field : schema.required) {
        const nlohmann::json* value = nullptr;
        if (auto it = document.find(field.name); it != document.end()) {
            value = &*it;
        } else {
            for (const std::string& alias : field.aliases) {
                if (auto ait = document.find(alias); ait != document.end()) {
                    value = &*ait;
                    break;
                }
            }
        }
        if (!value || !value->is_string())
            return Error(ErrorCode::MissingNode,
                         schema.id + ": required field \"" + field.name +
                             "\" is missing or not a string");
        std::string text = value->get<std::string>();
        if (blank(text))
            return Error(ErrorCode::InvalidNode,
                         schema.id + ": required field \"" + field.name +
                             "\" is empty");
        if (!field.enum_values.empty() &&
            std::find(field.enum_values.begin(), field.enum_values.end(), text) ==
                field.enum_values.end())
            return Error(ErrorCode::InvalidNode,
                         schema.id + ": field \"" + field.name +
                             "\" has out-of-range value \"" + text + "\"");
        normalized[field.name] = std::move(text);
    }
    return normalized;
}

} // namespace folast::backend
