#include "folast/nli.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "folast/validate.hpp"

namespace folast::nli {

const char* to_string(NliLabel label) {
    switch (label) {
        case NliLabel::Entailment: return "entailment";
        case NliLabel::Contradiction: return "contradiction";
        case NliLabel::Uncertain: return "uncertain";
    }
    return "?";
}

Result<NliLabel> label_from_string(std::string_view text) {
    if (text == "entailment") return NliLabel::Entailment;
    if (text == "contradiction") return NliLabel::Contradiction;
    if (text == "uncertain") return NliLabel::Uncertain;
    return Error(ErrorCode::InvalidNode,
                 "unknown label \"" + std::string(text) + "\"");
}

NliLabel label_from_entailments(solver::Trilean entails_h,
                                solver::Trilean entails_not_h) {
    using solver::Trilean;
    if (entails_h == Trilean::Unknown || entails_not_h == Trilean::Unknown)
        return NliLabel::Uncertain;
    if (entails_h == Trilean::True && entails_not_h == Trilean::False)
        return NliLabel::Entailment;
    if (entails_h == Trilean::False && entails_not_h == Trilean::True)
        return NliLabel::Contradiction;
    return NliLabel::Uncertain;
}

Result<NliPrediction> classify(std::span<const Formula> premises,
                               const Formula& hypothesis,
                               solver::InferenceEngine& engine) {
    NliPrediction prediction;

    auto premises_verdict = engine.check_premises_sat(premises);
    if (!premises_verdict) return premises_verdict.error();
    if (premises_verdict.value().status == solver::SatStatus::Unsat)
        prediction.premises_unsat = true;
    if (premises_verdict.value().status == solver::SatStatus::Unknown)
        prediction.solver_unknown = true;

    auto entails_h = engine.entails(premises, hypothesis);
    if (!entails_h) return entails_h.error();
    auto entails_not_h = engine.entails(premises, negate(hypothesis));
    if (!entails_not_h) return entails_not_h.error();

    if (entails_h.value() == solver::Trilean::Unknown ||
        entails_not_h.value() == solver::Trilean::Unknown)
        prediction.solver_unknown = true;

    if (prediction.solver_unknown || prediction.premises_unsat) {
        prediction.label = NliLabel::Uncertain;
    } else {
        prediction.label =
            label_from_entailments(entails_h.value(), entails_not_h.value());
    }
    return prediction;
}

Result<std::vector<NliInstance>> load_dataset_jsonl(std::string_view text) {
    std::vector<NliInstance> instances;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        auto fail = [&](const std::string& why) {
            return Error(ErrorCode::InvalidNode,
                         "dataset line " + std::to_string(line_no) + ": " + why);
        };
        if (j.is_discarded()) return fail("not valid JSON");
        if (!j.is_object()) return fail("record is not an object");
        if (!j.contains("premises") || !j["premises"].is_array() ||
            j["premises"].empty())
            return fail("\"premises\" must be a non-empty array");
        if (!j.contains("hypothesis") || !j["hypothesis"].is_string())
            return fail("\"hypothesis\" must be a string");
        if (!j.contains("label") || !j["label"].is_string())
            return fail("\"label\" must be a string");
        NliInstance instance;
        for (const auto& p : j["premises"]) {
            if (!p.is_string()) return fail("premise entries must be strings");
            instance.premises.push_back(p.get<std::string>());
        }
        instance.hypothesis = j["hypothesis"].get<std::string>();
        auto label = label_from_string(j["label"].get<std::string>());
        if (!label) return fail(label.error().detail);
        instance.gold = label.value();
        instances.push_back(std::move(instance));
    }
    return instances;
}

namespace {

void count_error(ErrorCounts& counts, ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingNode: ++counts.missing_nodes; break;
        case ErrorCode::InvalidNode: ++counts.invalid_nodes; break;
        case ErrorCode::DepthExceeded: ++counts.depth_exceeded; break;
        case ErrorCode::LoopDetected: ++counts.loop_detected; break;
        default: ++counts.invalid_nodes; break; // unreachable for parse errors
    }
}

struct InstanceResult {
    InstanceRecord record;
    std::vector<parser::ParseTrace> traces;
    std::optional<Error> infrastructure;
};

InstanceResult evaluate_instance(const NliInstance& instance, std::size_t index,
                                 const parser::SemanticParser& parser,
                                 solver::InferenceEngine& engine) {
    InstanceResult result;
    InstanceRecord& record = result.record;
    record.index = index;
    record.gold = instance.gold;

    std::vector<Formula> formulas;
    bool all_ok = true;
    auto parse_one = [&](const std::string& sentence) {
        parser::ParseTrace trace = parser.parse_sentence(sentence);
        SentenceOutcome outcome;
        outcome.text = sentence;
        outcome.ok = trace.ok();
        if (trace.ok()) {
            formulas.push_back(*trace.formula);
        } else {
            outcome.error = trace.error->code;
            all_ok = false;
        }
        record.sentences.push_back(std::move(outcome));
        result.traces.push_back(std::move(trace));
    };
    for (const std::string& premise : instance.premises) parse_one(premise);
    parse_one(instance.hypothesis);

    record.parsed = all_ok;
    if (!all_ok) {
        record.predicted = NliLabel::Uncertain;
        record.matched = record.predicted == record.gold;
        return result;
    }

    Formula hypothesis = formulas.back();
    formulas.pop_back();
    auto prediction = classify(formulas, hypothesis, engine);
    if (!prediction) {
        const Error& err = prediction.error();
        if (err.code == ErrorCode::SolverNotFound ||
            err.code == ErrorCode::SolverCrashed) {
            result.infrastructure = err;
            return result;
        }
        // Data-level failure (e.g. the premises and hypothesis disagree on a
        // relation arity): no solver run is possible, the instance stays
        // Uncertain and the conflict is noted.
        record.predicted = NliLabel::Uncertain;
        record.note = std::string(to_string(err.code)) + ": " + err.detail;
        record.matched = record.predicted == record.gold;
        return result;
    }

    record.predicted = prediction.value().label;
    record.premises_unsat = prediction.value().premises_unsat;
    record.solver_unknown = prediction.value().solver_unknown;
    record.matched = record.predicted == record.gold;
    return result;
}

Ratio make_ratio(std::size_t num, std::size_t den) { return {num, den}; }

} // namespace

BenchmarkReport evaluate_benchmark(std::span<const NliInstance> dataset,
                                   backend::Backend& backend,
                                   solver::InferenceEngine& engine,
                                   const BenchConfig& config) {
    parser::SemanticParser parser(backend, config.budget);

    std::vector<std::optional<InstanceResult>> results(dataset.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> aborted{false};
    std::mutex abort_mutex;
    std::string abort_detail;

    int workers = std::max(1, config.concurrency);
    workers = std::min<int>(workers, static_cast<int>(dataset.size()));
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= dataset.size() || aborted.load()) return;
            try {
                InstanceResult r = evaluate_instance(dataset[i], i, parser, engine);
                if (r.infrastructure) {
                    std::lock_guard lock(abort_mutex);
                    abort_detail = std::string(to_string(r.infrastructure->code)) +
                                   ": " + r.infrastructure->detail;
                    aborted.store(true);
                    return;
                }
                results[i] = std::move(r);
            } catch (const std::exception& e) {
                std::lock_guard lock(abort_mutex);
                abort_detail = e.what();
                aborted.store(true);
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    BenchmarkReport report;
    if (aborted.load()) report.infrastructure_error = abort_detail;

    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i]) continue; // not reached before an abort
        const InstanceRecord& record = results[i]->record;
        report.records.push_back(record);
        ++report.instance_count;
        if (record.matched) ++report.matches;
        if (record.parsed) {
            ++report.parsed_instances;
            if (record.matched) ++report.parsed_matches;
        }
        for (const SentenceOutcome& s : record.sentences) {
            ++report.total_sentences;
            if (s.ok)
                ++report.syntax_correct;
            else
                count_error(report.error_counts, *s.error);
        }
        if (!config.trace_dir.empty()) {
            std::filesystem::create_directories(config.trace_dir);
            std::ofstream out(config.trace_dir + "/instance_" + std::to_string(i) +
                              ".json");
            nlohmann::json traces = nlohmann::json::array();
            for (const parser::ParseTrace& t : results[i]->traces)
                traces.push_back(t.to_json());
            out << traces.dump(2) << "\n";
        }
    }

    report.syntax_rate = make_ratio(report.syntax_correct, report.total_sentences);
    report.accuracy = make_ratio(report.matches, report.instance_count);
    report.accuracy_over_parsed =
        make_ratio(report.parsed_matches, report.parsed_instances);
    return report;
}

nlohmann::json BenchmarkReport::to_json() const {
    nlohmann::ordered_json j;
    auto ratio_json = [](const Ratio& r) {
        return nlohmann::ordered_json{
            {"num", r.num}, {"den", r.den}, {"value", r.value()}};
    };
    j["syntax"] = {{"correct", syntax_correct},
                   {"total", total_sentences},
                   {"rate", ratio_json(syntax_rate)}};
    j["accuracy"] = {{"matches", matches},
                     {"instances", instance_count},
                     {"rate", ratio_json(accuracy)}};
    j["accuracy_over_parsed"] = {{"matches", parsed_matches},
                                 {"instances", parsed_instances},
                                 {"rate", ratio_json(accuracy_over_parsed)}};
    j["errors"] = {{"missing_nodes", error_counts.missing_nodes},
                   {"invalid_nodes", error_counts.invalid_nodes},
                   {"depth_exceeded", error_counts.depth_exceeded},
                   {"loop_detected", error_counts.loop_detected}};
    if (infrastructure_error) j["infrastructure_error"] = *infrastructure_error;
    auto records_json = nlohmann::ordered_json::array();
    for (const InstanceRecord& r : records) {
        nlohmann::ordered_json rj;
        rj["index"] = r.index;
        rj["gold"] = to_string(r.gold);
        rj["predicted"] = to_string(r.predicted);
        rj["matched"] = r.matched;
        rj["parsed"] = r.parsed;
        rj["premises_unsat"] = r.premises_unsat;
        rj["solver_unknown"] = r.solver_unknown;
        if (r.note) rj["note"] = *r.note;
        auto sentences_json = nlohmann::ordered_json::array();
        for (const SentenceOutcome& s : r.sentences) {
            nlohmann::ordered_json sj;
            sj["text"] = s.text;
            sj["ok"] = s.ok;
            if (s.error) sj["error"] = to_string(*s.error);
            sentences_json.push_back(std::move(sj));
        }
        rj["sentences"] = std::move(sentences_json);
        records_json.push_back(std::move(rj));
    }
    j["instances"] = std::move(records_json);
    return j;
}

std::string BenchmarkReport::to_table() const {
    std::ostringstream out;
    out << "sentences        " << syntax_correct << "/" << total_sentences
        << " well-formed (syntax rate " << syntax_rate.value() << ")\n";
    out << "accuracy         " << matches << "/" << instance_count << " ("
        << accuracy.value() << ")\n";
    out << "accuracy|parsed  " << parsed_matches << "/" << parsed_instances << " ("
        << accuracy_over_parsed.value() << ")\n";
    out << "errors           missing=" << error_counts.missing_nodes
        << " invalid=" << error_counts.invalid_nodes
        << " depth=" << error_counts.depth_exceeded
        << " loop=" << error_counts.loop_detected << "\n";
    if (infrastructure_error)
        out << "ABORTED          " << *infrastructure_error << "\n";
    return out.str();
}

} // namespace folast::nli
