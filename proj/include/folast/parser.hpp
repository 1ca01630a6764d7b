#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "folast/ast.hpp"
#include "folast/backend.hpp"
#include "folast/errors.hpp"

namespace folast::parser {

/// Selector classes A-D: atomic, quantified, compound, literal negation.
enum class SentenceClass { Atomic, Quantified, LogicalBinary, LogicalUnary };

/// Atomic extraction schemas A-D.
enum class AtomicSchemaKind { Adjective, Intransitive, Transitive, Ditransitive };

const char* to_string(SentenceClass c);
const char* to_string(AtomicSchemaKind k);

struct TraceStep {
    std::string sentence;   // input of this exchange
    SentenceClass cls;      // class in effect when the exchange ran
    std::string schema_id;
    nlohmann::json document; // verified document, or null when the call failed
    std::string rewrite;     // sub-sentence(s) produced by this step, if any
    int depth = 1;
};

/// Per-sentence record of selector decisions, backend exchanges, and the
/// final outcome. Steps are append-only; a failed parse carries exactly one
/// error code out of {MissingNode, InvalidNode, DepthExceeded, LoopDetected}.
struct ParseTrace {
    std::string sentence;
    std::vector<TraceStep> steps;
    std::optional<Formula> formula;
    std::optional<Error> error;
    int depth_reached = 0;
    int recursion_steps = 0; // parse invocations, each adding one construct

    bool ok() const { return formula.has_value(); }
    nlohmann::json to_json() const;
};

struct ParseBudget {
    int max_depth = 12;
};

/// Recursive top-down parser: a selector routes each sentence to the atomic,
/// quantified, or logical sub-parser; sub-parsers extract only the outermost
/// construct and feed rewritten sub-sentences back through the selector.
/// Depth and loop guards bound every recursion path. Distinct sentences may
/// be parsed concurrently; one parse call is internally sequential.
class SemanticParser {
public:
    explicit SemanticParser(backend::Backend& backend, ParseBudget budget = {});

    /// One selector exchange; does not recurse.
    Result<SentenceClass> select_parser(std::string_view sentence,
                                        ParseTrace* trace = nullptr);

    /// Full recursive parse. The trace always comes back, whatever happened.
    ParseTrace parse_sentence(std::string_view sentence) const;

    /// Sub-parser entry points for sentences whose class is already known.
    Result<Formula> parse_quantified(std::string_view sentence,
                                     ParseTrace* trace = nullptr) const;
    Result<Formula> parse_logical(std::string_view sentence, SentenceClass cls,
                                  ParseTrace* trace = nullptr) const;
    /// Two exchanges (schema dispatch, then extraction); never recurses.
    Result<Formula> parse_atomic(std::string_view sentence,
                                 ParseTrace* trace = nullptr) const;

private:
    struct Path; // seen-sentence set plus binder stack for one recursion path

    Result<SentenceClass> select_impl(const std::string& sentence, int depth,
                                      ParseTrace* trace) const;
    Result<Formula> parse_rec(const std::string& sentence, Path& path,
                              ParseTrace& trace) const;
    Result<Formula> dispatch(const std::string& sentence, SentenceClass cls,
                             Path& path, ParseTrace& trace) const;
    Result<Formula> atomic_impl(const std::string& sentence, int depth,
                                ParseTrace& trace) const;
    Result<Formula> quantified_impl(const std::string& sentence, Path& path,
                                    ParseTrace& trace) const;
    Result<Formula> binary_impl(const std::string& sentence, Path& path,
                                ParseTrace& trace) const;
    Result<Formula> unary_impl(const std::string& sentence, Path& path,
                               ParseTrace& trace) const;
    Result<nlohmann::json> call(const std::string& schema_id,
                                const std::string& sentence, SentenceClass cls,
                                int depth, std::string rewrite_hint,
                                ParseTrace& trace) const;

    backend::Backend& backend_;
    ParseBudget budget_;
};

} // namespace folast::parser
