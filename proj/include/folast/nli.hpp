#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "folast/ast.hpp"
#include "folast/backend.hpp"
#include "folast/errors.hpp"
#include "folast/parser.hpp"
#include "folast/solver.hpp"

namespace folast::nli {

enum class NliLabel { Entailment, Contradiction, Uncertain };

const char* to_string(NliLabel label);
Result<NliLabel> label_from_string(std::string_view text);

struct NliInstance {
    std::vector<std::string> premises; // at least one
    std::string hypothesis;
    NliLabel gold = NliLabel::Uncertain;
};

struct NliPrediction {
    NliLabel label = NliLabel::Uncertain;
    bool premises_unsat = false; // premise set itself has no model
    bool solver_unknown = false; // some verdict was unknown; label forced Uncertain
    std::vector<parser::ParseTrace> traces; // filled by the benchmark path
};

/// The three-way decision over entailment facts:
/// (true,false) -> Entailment, (false,true) -> Contradiction, everything
/// else -> Uncertain; any unknown input is Uncertain.
NliLabel label_from_entailments(solver::Trilean entails_h,
                                solver::Trilean entails_not_h);

/// Classifies one premise/hypothesis pair: queries entailment of the
/// hypothesis and of its negation, plus a premises-only satisfiability
/// probe. Unsatisfiable premises entail everything, so they surface as a
/// warning flag with the label already Uncertain. Solver indecision is never
/// coerced to an answer. Infrastructure errors propagate.
Result<NliPrediction> classify(std::span<const Formula> premises,
                               const Formula& hypothesis,
                               solver::InferenceEngine& engine);

/// Exact rational so report arithmetic reproduces bit-for-bit.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 0;
    double value() const { return den ? double(num) / double(den) : 0.0; }
};

struct SentenceOutcome {
    std::string text;
    bool ok = false;
    std::optional<ErrorCode> error;
};

struct InstanceRecord {
    std::size_t index = 0;
    NliLabel gold = NliLabel::Uncertain;
    NliLabel predicted = NliLabel::Uncertain;
    bool matched = false;
    bool parsed = false; // every sentence produced a well-formed formula
    bool premises_unsat = false;
    bool solver_unknown = false;
    std::optional<std::string> note; // e.g. cross-sentence arity conflict
    std::vector<SentenceOutcome> sentences; // premises in order, hypothesis last
};

struct ErrorCounts {
    std::size_t missing_nodes = 0;
    std::size_t invalid_nodes = 0;
    std::size_t depth_exceeded = 0;
    std::size_t loop_detected = 0;
};

struct BenchmarkReport {
    std::size_t syntax_correct = 0;
    std::size_t total_sentences = 0; // premises and hypotheses both count
    Ratio syntax_rate;
    std::size_t matches = 0;
    std::size_t instance_count = 0;
    Ratio accuracy;
    std::size_t parsed_matches = 0;
    std::size_t parsed_instances = 0;
    Ratio accuracy_over_parsed; // secondary figure over fully parsed instances
    ErrorCounts error_counts;   // partitions the failed sentences
    std::vector<InstanceRecord> records;
    std::optional<std::string> infrastructure_error; // set when a run aborted

    nlohmann::json to_json() const;
    std::string to_table() const;
};

struct BenchConfig {
    parser::ParseBudget budget;
    int concurrency = 2;
    std::string trace_dir; // when set, per-instance traces are written here
};

/// Parses a line-delimited dataset: one JSON object per line with fields
/// premises (array of strings), hypothesis (string), and label. Errors carry
/// 1-based line numbers.
Result<std::vector<NliInstance>> load_dataset_jsonl(std::string_view text);

/// Runs the full benchmark: every sentence is parsed (all count toward the
/// syntax totals); instances with any failed sentence skip the solver and
/// predict Uncertain, keeping the accuracy denominator at dataset size.
/// Infrastructure failures stop the run and leave a partial report with the
/// error recorded.
BenchmarkReport evaluate_benchmark(std::span<const NliInstance> dataset,
                                   backend::Backend& backend,
                                   solver::InferenceEngine& engine,
                                   const BenchConfig& config = {});

} // namespace folast::nli
