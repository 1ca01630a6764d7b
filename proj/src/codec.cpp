#include "folast/codec.hpp"

#include <json.hpp>

namespace folast {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json term_to_json(const Term& t) {
    ordered_json j;
    j["type"] = t.kind == TermKind::Variable ? "variable" : "constant";
    j["name"] = t.name;
    return j;
}

ordered_json formula_to_json(const Formula& f) {
    ordered_json j;
    if (f.is_atomic()) {
        const Atomic& a = f.atomic();
        j["type"] = "atomic";
        j["relation"] = a.relation;
        auto args = ordered_json::array();
        for (const Term& t : a.args) args.push_back(term_to_json(t));
        j["args"] = std::move(args);
        return j;
    }
    if (f.is_quantified()) {
        const Quantified& q = f.quantified();
        j["type"] = "quantified";
        j["quantifier"] = to_string(q.quantifier);
        j["variable"] = q.variable;
        j["body"] = formula_to_json(*q.body);
        return j;
    }
    const Logical& l = f.logical();
    j["type"] = "logical";
    j["operator"] = to_string(l.op);
    auto operands = ordered_json::array();
    for (const Formula& op : l.operands) operands.push_back(formula_to_json(op));
    j["operands"] = std::move(operands);
    return j;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

Result<std::string> read_string(const ordered_json& j, const char* key,
                                const char* where) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string())
        return Error(ErrorCode::InvalidNode,
                     std::string(where) + ": missing or non-string \"" + key + "\"");
    std::string value = it->get<std::string>();
    if (blank(value))
        return Error(ErrorCode::InvalidNode,
                     std::string(where) + ": empty \"" + key + "\"");
    return value;
}

Result<Term> term_from_json(const ordered_json& j) {
    if (!j.is_object())
        return Error(ErrorCode::InvalidNode, "term: not an object");
    auto type = read_string(j, "type", "term");
    if (!type) return type.error();
    TermKind kind;
    if (type.value() == "variable")
        kind = TermKind::Variable;
    else if (type.value() == "constant")
        kind = TermKind::Constant;
    else
        return Error(ErrorCode::InvalidNode,
                     "term: unknown tag \"" + type.value() + "\"");
    auto name = read_string(j, "name", "term");
    if (!name) return name.error();
    return Term{kind, std::move(name).value()};
}

Result<Formula> formula_from_json(const ordered_json& j) {
    if (!j.is_object())
        return Error(ErrorCode::InvalidNode, "formula: not an object");
    auto type = read_string(j, "type", "formula");
    if (!type) return type.error();
    const std::string& tag = type.value();

    if (tag == "atomic") {
        auto relation = read_string(j, "relation", "atomic");
        if (!relation) return relation.error();
        auto args_it = j.find("args");
        if (args_it == j.end() || !args_it->is_array())
            return Error(ErrorCode::InvalidNode, "atomic: missing \"args\" array");
        if (args_it->empty() || args_it->size() > 3)
            return Error(ErrorCode::InvalidNode,
                         "atomic: argument count " + std::to_string(args_it->size()) +
                             " outside 1..3");
        std::vector<Term> args;
        for (const auto& aj : *args_it) {
            auto t = term_from_json(aj);
            if (!t) return t.error();
            args.push_back(std::move(t).value());
        }
        return atom(std::move(relation).value(), std::move(args));
    }

    if (tag == "quantified") {
        auto q = read_string(j, "quantifier", "quantified");
        if (!q) return q.error();
        Quantifier quant;
        if (q.value() == "ForAll")
            quant = Quantifier::ForAll;
        else if (q.value() == "Exists")
            quant = Quantifier::Exists;
        else
            return Error(ErrorCode::InvalidNode,
                         "quantified: unknown quantifier \"" + q.value() + "\"");
        auto variable = read_string(j, "variable", "quantified");
        if (!variable) return variable.error();
        auto body_it = j.find("body");
        if (body_it == j.end())
            return Error(ErrorCode::InvalidNode, "quantified: missing \"body\"");
        auto body = formula_from_json(*body_it);
        if (!body) return body.error();
        return quantified(quant, std::move(variable).value(), std::move(body).value());
    }

    if (tag == "logical") {
        auto op = read_string(j, "operator", "logical");
        if (!op) return op.error();
        Connective conn;
        std::size_t expected;
        if (op.value() == "Not") {
            conn = Connective::Not;
            expected = 1;
        } else if (op.value() == "And") {
            conn = Connective::And;
            expected = 2;
        } else if (op.value() == "Or") {
            conn = Connective::Or;
            expected = 2;
        } else if (op.value() == "Implies") {
            conn = Connective::Implies;
            expected = 2;
        } else {
            return Error(ErrorCode::InvalidNode,
                         "logical: unknown operator \"" + op.value() + "\"");
        }
        auto ops_it = j.find("operands");
        if (ops_it == j.end() || !ops_it->is_array())
            return Error(ErrorCode::InvalidNode, "logical: missing \"operands\" array");
        if (ops_it->size() != expected)
            return Error(ErrorCode::InvalidNode,
                         "logical: " + op.value() + " takes " +
                             std::to_string(expected) + " operand(s), got " +
                             std::to_string(ops_it->size()));
        std::vector<Formula> operands;
        for (const auto& oj : *ops_it) {
            auto sub = formula_from_json(oj);
            if (!sub) return sub.error();
            operands.push_back(std::move(sub).value());
        }
        if (conn == Connective::Not) return negation(std::move(operands[0]));
        if (conn == Connective::And)
            return conjunction(std::move(operands[0]), std::move(operands[1]));
        if (conn == Connective::Or)
            return disjunction(std::move(operands[0]), std::move(operands[1]));
        return implication(std::move(operands[0]), std::move(operands[1]));
    }

    return Error(ErrorCode::InvalidNode, "formula: unknown tag \"" + tag + "\"");
}

} // namespace

std::string encode(const Formula& f) {
    return formula_to_json(f).dump() + "\n";
}

Result<Formula> decode(std::string_view document) {
    ordered_json j = ordered_json::parse(document, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        return Error(ErrorCode::MissingNode,
                     "document does not parse (truncated or ill-formed)");
    return formula_from_json(j);
}

} // namespace folast
