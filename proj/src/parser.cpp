#include "folast/parser.hpp"

#include <algorithm>

#include "folast/codec.hpp"
#include "folast/names.hpp"
#include "folast/prompts.hpp"
#include "folast/validate.hpp"

namespace folast::parser {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

Result<SentenceClass> class_from_letter(const std::string& letter) {
    if (letter == "A") return SentenceClass::Atomic;
    if (letter == "B") return SentenceClass::Quantified;
    if (letter == "C") return SentenceClass::LogicalBinary;
    if (letter == "D") return SentenceClass::LogicalUnary;
    return Error(ErrorCode::InvalidNode, "selector: unknown answer letter \"" + letter + "\"");
}

Result<AtomicSchemaKind> atomic_kind_from_letter(const std::string& letter) {
    if (letter == "A") return AtomicSchemaKind::Adjective;
    if (letter == "B") return AtomicSchemaKind::Intransitive;
    if (letter == "C") return AtomicSchemaKind::Transitive;
    if (letter == "D") return AtomicSchemaKind::Ditransitive;
    return Error(ErrorCode::InvalidNode,
                 "atomic dispatch: unknown answer letter \"" + letter + "\"");
}

const char* extraction_schema(AtomicSchemaKind kind) {
    switch (kind) {
        case AtomicSchemaKind::Adjective: return "atomic_adjective";
        case AtomicSchemaKind::Intransitive: return "atomic_intransitive";
        case AtomicSchemaKind::Transitive: return "atomic_transitive";
        case AtomicSchemaKind::Ditransitive: return "atomic_ditransitive";
    }
    return "";
}

Result<Term> make_term(const std::string& text) {
    std::string t = trim(text);
    if (names::is_variable_name(t)) return Term::variable(t);
    std::string name = names::normalize_constant(t);
    if (name.empty())
        return Error(ErrorCode::InvalidNode,
                     "term \"" + text + "\" normalizes to an empty constant");
    return Term::constant(std::move(name));
}

Result<std::string> make_relation(const std::string& text) {
    std::string name = names::normalize_relation(trim(text));
    if (name.empty())
        return Error(ErrorCode::InvalidNode,
                     "relation \"" + text + "\" normalizes to an empty name");
    return name;
}

void collect_term_names(const Formula& f, std::set<std::string>& names) {
    if (f.is_atomic()) {
        for (const Term& t : f.atomic().args) names.insert(t.name);
        return;
    }
    if (f.is_quantified()) {
        names.insert(f.quantified().variable);
        collect_term_names(*f.quantified().body, names);
        return;
    }
    for (const Formula& op : f.logical().operands) collect_term_names(op, names);
}

} // namespace

const char* to_string(SentenceClass c) {
    switch (c) {
        case SentenceClass::Atomic: return "Atomic";
        case SentenceClass::Quantified: return "Quantified";
        case SentenceClass::LogicalBinary: return "LogicalBinary";
        case SentenceClass::LogicalUnary: return "LogicalUnary";
    }
    return "?";
}

const char* to_string(AtomicSchemaKind k) {
    switch (k) {
        case AtomicSchemaKind::Adjective: return "Adjective";
        case AtomicSchemaKind::Intransitive: return "Intransitive";
        case AtomicSchemaKind::Transitive: return "Transitive";
        case AtomicSchemaKind::Ditransitive: return "Ditransitive";
    }
    return "?";
}

nlohmann::json ParseTrace::to_json() const {
    nlohmann::ordered_json j;
    j["sentence"] = sentence;
    auto steps_json = nlohmann::ordered_json::array();
    for (const TraceStep& s : steps) {
        nlohmann::ordered_json sj;
        sj["class"] = to_string(s.cls);
        sj["schema_id"] = s.schema_id;
        sj["sentence"] = s.sentence;
        sj["document"] = s.document;
        sj["rewrite"] = s.rewrite;
        sj["depth"] = s.depth;
        steps_json.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps_json);
    if (formula) {
        j["outcome"] = {{"formula", nlohmann::ordered_json::parse(encode(*formula))}};
    } else if (error) {
        j["outcome"] = {{"error", {{"code", to_string(error->code)},
                                   {"detail", error->detail}}}};
    }
    j["depth_reached"] = depth_reached;
    j["recursion_steps"] = recursion_steps;
    return j;
}

struct SemanticParser::Path {
    std::set<std::string> seen;        // normalized sentences on this path
    std::vector<std::string> binders;  // quantifier variables in scope
    int depth = 0;
};

SemanticParser::SemanticParser(backend::Backend& backend, ParseBudget budget)
    : backend_(backend), budget_(budget) {}

Result<nlohmann::json> SemanticParser::call(const std::string& schema_id,
                                            const std::string& sentence,
                                            SentenceClass cls, int depth,
                                            std::string rewrite_hint,
                                            ParseTrace& trace) const {
    const backend::PromptSpec& spec = backend::prompt_for(schema_id);
    backend::PromptRequest req;
    req.schema_id = schema_id;
    req.system_prompt = std::string(spec.system_prompt);
    req.user_input = sentence;
    auto response = backend_.complete_structured(req);

    TraceStep step;
    step.sentence = sentence;
    step.cls = cls;
    step.schema_id = schema_id;
    step.depth = depth;
    step.rewrite = std::move(rewrite_hint);
    if (response) step.document = response.value().document;
    trace.steps.push_back(std::move(step));

    if (!response) return response.error();
    return response.value().document;
}

Result<SentenceClass> SemanticParser::select_impl(const std::string& sentence,
                                                  int depth,
                                                  ParseTrace* trace) const {
    ParseTrace scratch;
    ParseTrace& t = trace ? *trace : scratch;
    auto doc = call("selector", sentence, SentenceClass::Atomic, depth, "", t);
    if (!doc) return doc.error();
    auto cls = class_from_letter(doc.value().at("answer").get<std::string>());
    if (cls && !t.steps.empty()) t.steps.back().cls = cls.value();
    return cls;
}

Result<SentenceClass> SemanticParser::select_parser(std::string_view sentence,
                                                    ParseTrace* trace) {
    return select_impl(trim(sentence), 1, trace);
}

ParseTrace SemanticParser::parse_sentence(std::string_view sentence) const {
    ParseTrace trace;
    trace.sentence = std::string(sentence);
    Path path;
    auto result = parse_rec(trim(sentence), path, trace);
    if (result) {
        // A parse only counts when the tree it built is well formed.
        WellFormednessReport report = validate(result.value());
        if (report.ok) {
            trace.formula = std::move(result).value();
        } else {
            std::string detail = "parse produced an ill-formed formula:";
            for (const Fault& f : report.faults)
                detail += " [" + std::string(to_string(f.code)) + "] " + f.detail + ";";
            trace.error = Error(ErrorCode::InvalidNode, detail);
        }
    } else {
        trace.error = result.error();
    }
    return trace;
}

Result<Formula> SemanticParser::parse_rec(const std::string& sentence, Path& path,
                                          ParseTrace& trace) const {
    ++trace.recursion_steps;
    ++path.depth;
    struct DepthGuard {
        int& d;
        ~DepthGuard() { --d; }
    } depth_guard{path.depth};
    if (path.depth > trace.depth_reached) trace.depth_reached = path.depth;

    if (path.depth > budget_.max_depth)
        return Error(ErrorCode::DepthExceeded,
                     "recursion exceeded max depth " +
                         std::to_string(budget_.max_depth) + " at \"" + sentence +
                         "\"");

    std::string normalized = names::normalized_sentence(sentence);
    if (path.seen.count(normalized))
        return Error(ErrorCode::LoopDetected,
                     "sentence revisited on this recursion path: \"" + normalized +
                         "\"");
    auto inserted = path.seen.insert(normalized).first;
    struct SeenGuard {
        std::set<std::string>& seen;
        std::set<std::string>::iterator it;
        ~SeenGuard() { seen.erase(it); }
    } seen_guard{path.seen, inserted};

    auto cls = select_impl(sentence, path.depth, &trace);
    if (!cls) return cls.error();
    return dispatch(sentence, cls.value(), path, trace);
}

Result<Formula> SemanticParser::dispatch(const std::string& sentence,
                                         SentenceClass cls, Path& path,
                                         ParseTrace& trace) const {
    switch (cls) {
        case SentenceClass::Atomic:
            return atomic_impl(sentence, path.depth, trace);
        case SentenceClass::Quantified:
            return quantified_impl(sentence, path, trace);
        case SentenceClass::LogicalBinary:
            return binary_impl(sentence, path, trace);
        case SentenceClass::LogicalUnary:
            return unary_impl(sentence, path, trace);
    }
    return Error(ErrorCode::InvalidNode, "unreachable sentence class");
}

Result<Formula> SemanticParser::atomic_impl(const std::string& sentence, int depth,
                                            ParseTrace& trace) const {
    auto dispatch_doc =
        call("atomic_dispatch", sentence, SentenceClass::Atomic, depth, "", trace);
    if (!dispatch_doc) return dispatch_doc.error();
    auto kind =
        atomic_kind_from_letter(dispatch_doc.value().at("answer").get<std::string>());
    if (!kind) return kind.error();

    auto doc = call(extraction_schema(kind.value()), sentence, SentenceClass::Atomic,
                    depth, "", trace);
    if (!doc) return doc.error();
    const nlohmann::json& d = doc.value();

    auto field = [&](const char* key) { return d.at(key).get<std::string>(); };

    switch (kind.value()) {
        case AtomicSchemaKind::Adjective: {
            auto rel = make_relation(field("adjective"));
            if (!rel) return rel.error();
            auto obj = make_term(field("obj"));
            if (!obj) return obj.error();
            return atom(std::move(rel).value(), {std::move(obj).value()});
        }
        case AtomicSchemaKind::Intransitive: {
            auto rel = make_relation(field("verb"));
            if (!rel) return rel.error();
            auto subject = make_term(field("subject"));
            if (!subject) return subject.error();
            return atom(std::move(rel).value(), {std::move(subject).value()});
        }
        case AtomicSchemaKind::Transitive: {
            auto rel = make_relation(field("verb"));
            if (!rel) return rel.error();
            auto subject = make_term(field("subject"));
            if (!subject) return subject.error();
            auto obj = make_term(field("obj"));
            if (!obj) return obj.error();
            return atom(std::move(rel).value(),
                        {std::move(subject).value(), std::move(obj).value()});
        }
        case AtomicSchemaKind::Ditransitive: {
            auto rel = make_relation(field("verb"));
            if (!rel) return rel.error();
            auto subject = make_term(field("subject"));
            if (!subject) return subject.error();
            auto indirect = make_term(field("indirect_obj"));
            if (!indirect) return indirect.error();
            auto direct = make_term(field("direct_obj"));
            if (!direct) return direct.error();
            return atom(std::move(rel).value(),
                        {std::move(subject).value(), std::move(indirect).value(),
                         std::move(direct).value()});
        }
    }
    return Error(ErrorCode::InvalidNode, "unreachable atomic kind");
}

Result<Formula> SemanticParser::quantified_impl(const std::string& sentence,
                                                Path& path,
                                                ParseTrace& trace) const {
    auto doc =
        call("quantified", sentence, SentenceClass::Quantified, path.depth, "", trace);
    if (!doc) return doc.error();
    const nlohmann::json& d = doc.value();

    std::string quant_text = d.at("quantifier").get<std::string>();
    Quantifier quant =
        quant_text == "ThereExists" ? Quantifier::Exists : Quantifier::ForAll;
    std::string variable = trim(d.at("variable").get<std::string>());
    std::string scope_sentence =
        trim(d.at("sentence_without_quantifier").get<std::string>());
    if (variable.empty() || scope_sentence.empty())
        return Error(ErrorCode::InvalidNode, "quantified: empty variable or scope");
    trace.steps.back().rewrite = scope_sentence;

    bool shadows = std::find(path.binders.begin(), path.binders.end(), variable) !=
                   path.binders.end();
    path.binders.push_back(variable);
    auto scope = parse_rec(scope_sentence, path, trace);
    path.binders.pop_back();
    if (!scope) return scope.error();

    if (!shadows) return quantified(quant, variable, std::move(scope).value());

    // The rewrite reused a letter already bound above us: rename our binder
    // and its free occurrences so the outer binding is never captured.
    std::set<std::string> taken(path.binders.begin(), path.binders.end());
    collect_term_names(scope.value(), taken);
    std::string fresh;
    for (int n = 1;; ++n) {
        fresh = variable + std::to_string(n);
        if (!taken.count(fresh)) break;
    }
    Formula renamed = rename_free_variable(scope.value(), variable, fresh);
    return quantified(quant, fresh, std::move(renamed));
}

Result<Formula> SemanticParser::binary_impl(const std::string& sentence, Path& path,
                                            ParseTrace& trace) const {
    auto doc = call("logical_binary", sentence, SentenceClass::LogicalBinary,
                    path.depth, "", trace);
    if (!doc) return doc.error();
    const nlohmann::json& d = doc.value();

    std::string op = d.at("operator").get<std::string>();
    std::string left = trim(d.at("left_operand").get<std::string>());
    std::string right = trim(d.at("right_operand").get<std::string>());
    if (op == "Not")
        return Error(ErrorCode::InvalidNode,
                     "binary parse returned the unary operator Not");
    if (left.empty() || right.empty())
        return Error(ErrorCode::InvalidNode, "binary parse returned an empty operand");
    trace.steps.back().rewrite = left + " | " + right;

    auto left_formula = parse_rec(left, path, trace);
    if (!left_formula) return left_formula.error();
    auto right_formula = parse_rec(right, path, trace);
    if (!right_formula) return right_formula.error();
    return desugar_tag(op, std::move(left_formula).value(),
                       std::move(right_formula).value());
}

Result<Formula> SemanticParser::unary_impl(const std::string& sentence, Path& path,
                                           ParseTrace& trace) const {
    auto doc = call("logical_unary", sentence, SentenceClass::LogicalUnary, path.depth,
                    "", trace);
    if (!doc) return doc.error();
    std::string operand = trim(doc.value().at("operand").get<std::string>());
    if (operand.empty())
        return Error(ErrorCode::InvalidNode, "unary parse returned an empty operand");
    trace.steps.back().rewrite = operand;

    auto inner = parse_rec(operand, path, trace);
    if (!inner) return inner.error();
    return negation(std::move(inner).value());
}

Result<Formula> SemanticParser::parse_quantified(std::string_view sentence,
                                                 ParseTrace* trace) const {
    ParseTrace scratch;
    ParseTrace& t = trace ? *trace : scratch;
    Path path;
    path.depth = 1;
    t.depth_reached = std::max(t.depth_reached, 1);
    ++t.recursion_steps;
    path.seen.insert(names::normalized_sentence(sentence));
    return quantified_impl(trim(sentence), path, t);
}

Result<Formula> SemanticParser::parse_logical(std::string_view sentence,
                                              SentenceClass cls,
                                              ParseTrace* trace) const {
    if (cls != SentenceClass::LogicalBinary && cls != SentenceClass::LogicalUnary)
        throw std::invalid_argument("parse_logical: class must be a logical class");
    ParseTrace scratch;
    ParseTrace& t = trace ? *trace : scratch;
    Path path;
    path.depth = 1;
    t.depth_reached = std::max(t.depth_reached, 1);
    ++t.recursion_steps;
    path.seen.insert(names::normalized_sentence(sentence));
    std::string s = trim(sentence);
    if (cls == SentenceClass::LogicalBinary) return binary_impl(s, path, t);
    return unary_impl(s, path, t);
}

Result<Formula> SemanticParser::parse_atomic(std::string_view sentence,
                                             ParseTrace* trace) const {
    ParseTrace scratch;
    ParseTrace& t = trace ? *trace : scratch;
    return atomic_impl(trim(sentence), 1, t);
}

} // namespace folast::parser
