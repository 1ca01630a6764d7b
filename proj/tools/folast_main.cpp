// Command-line front end: per-sentence translation, premise/hypothesis
// classification, benchmark evaluation, and AST validation.
//
// Exit codes: 0 success, 1 input or validation error, 2 infrastructure
// error (backend/solver configuration, transport, missing commands).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "folast/backend.hpp"
#include "folast/codec.hpp"
#include "folast/emit.hpp"
#include "folast/nli.hpp"
#include "folast/parser.hpp"
#include "folast/segment.hpp"
#include "folast/solver.hpp"
#include "folast/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfra = 2;

struct CliConfig {
    std::string backend = "scripted";
    std::string endpoint;
    std::string model;
    std::string api_key;
    std::string script;
    std::string solver_cmd;
    int timeout_ms = 10000;
    int max_depth = 12;
    int domain_size = 3;
    std::string target = "smtlib2";
    std::string out;
    std::string abbrev_file;
};

void add_common_flags(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--backend", cfg.backend, "Backend kind: http or scripted")
        ->envname("FOLAST_BACKEND")
        ->check(CLI::IsMember({"http", "scripted"}));
    cmd->add_option("--endpoint", cfg.endpoint,
                    "Chat-completion endpoint URL (http backend)")
        ->envname("FOLAST_ENDPOINT");
    cmd->add_option("--model", cfg.model, "Model name (http backend)")
        ->envname("FOLAST_MODEL");
    cmd->add_option("--api-key", cfg.api_key, "API key (http backend)")
        ->envname("FOLAST_API_KEY");
    cmd->add_option("--script", cfg.script,
                    "Canned exchange file (scripted backend)")
        ->envname("FOLAST_SCRIPT");
    cmd->add_option("--solver-cmd", cfg.solver_cmd,
                    "SMT-LIB solver shell command reading stdin")
        ->envname("FOLAST_SOLVER_CMD");
    cmd->add_option("--timeout-ms", cfg.timeout_ms, "Per-query timeout")
        ->envname("FOLAST_TIMEOUT_MS")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-depth", cfg.max_depth, "Parser recursion limit")
        ->envname("FOLAST_MAX_DEPTH")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--domain-size", cfg.domain_size,
                    "Bound for the finite-model oracle")
        ->envname("FOLAST_DOMAIN_SIZE")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--target", cfg.target, "Output language: smtlib2 or fol")
        ->envname("FOLAST_TARGET")
        ->check(CLI::IsMember({"smtlib2", "fol"}));
    cmd->add_option("--out", cfg.out, "Directory for structured outputs")
        ->envname("FOLAST_OUT");
}

std::unique_ptr<folast::backend::Backend> make_backend(const CliConfig& cfg) {
    if (cfg.backend == "scripted") {
        if (cfg.script.empty())
            throw std::invalid_argument(
                "scripted backend needs --script (or FOLAST_SCRIPT)");
        return std::make_unique<folast::backend::ScriptedBackend>(
            folast::backend::ScriptedBackend::from_file(cfg.script));
    }
    if (cfg.endpoint.empty() || cfg.model.empty())
        throw std::invalid_argument("http backend needs --endpoint and --model");
    folast::backend::HttpBackendConfig http;
    http.endpoint = cfg.endpoint;
    http.model = cfg.model;
    http.api_key = cfg.api_key;
    http.timeout_ms = cfg.timeout_ms;
    return std::make_unique<folast::backend::HttpBackend>(http);
}

folast::solver::SolverConfig make_solver_config(const CliConfig& cfg) {
    folast::solver::SolverConfig solver;
    solver.command = cfg.solver_cmd;
    solver.timeout_ms = cfg.timeout_ms;
    return solver;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(b, e - b + 1));
    }
    return lines;
}

nlohmann::json report_to_json(const folast::WellFormednessReport& report) {
    nlohmann::ordered_json j;
    j["ok"] = report.ok;
    j["free_variables"] = report.free_variables;
    j["signature"] = report.signature;
    auto faults = nlohmann::ordered_json::array();
    for (const folast::Fault& f : report.faults)
        faults.push_back({{"code", folast::to_string(f.code)},
                          {"path", f.path},
                          {"detail", f.detail}});
    j["faults"] = std::move(faults);
    return j;
}

int run_translate(const CliConfig& cfg, const std::vector<std::string>& args,
                  const std::string& in_file, const std::string& doc_file) {
    std::vector<std::string> sentences = args;
    if (!in_file.empty()) {
        auto lines = read_lines(in_file);
        sentences.insert(sentences.end(), lines.begin(), lines.end());
    }
    if (!doc_file.empty()) {
        folast::preprocess::SegmenterConfig seg;
        if (!cfg.abbrev_file.empty())
            seg.abbreviations = folast::preprocess::load_abbreviations(cfg.abbrev_file);
        auto split = folast::preprocess::segment(read_file(doc_file), seg);
        if (!split) {
            std::cerr << "segmentation failed: " << split.error().detail << "\n";
            return kExitInfra;
        }
        for (std::string& s : split.value()) sentences.push_back(std::move(s));
    }
    if (sentences.empty()) {
        std::cerr << "translate: no sentences given (positional, --in, or --doc)\n";
        return kExitInput;
    }

    auto backend = make_backend(cfg);
    folast::parser::SemanticParser parser(*backend, {cfg.max_depth});

    std::vector<folast::Formula> formulas;
    std::vector<folast::parser::ParseTrace> traces;
    for (const std::string& sentence : sentences) {
        folast::parser::ParseTrace trace = parser.parse_sentence(sentence);
        if (!trace.ok()) {
            std::cerr << "parse failed [" << folast::to_string(trace.error->code)
                      << "] " << trace.error->detail << "\n";
            std::cerr << trace.to_json().dump(2) << "\n";
            return kExitInput;
        }
        formulas.push_back(*trace.formula);
        traces.push_back(std::move(trace));
    }

    auto target = cfg.target == "fol" ? folast::codegen::Target::FolText
                                      : folast::codegen::Target::SmtLib2;
    auto program = folast::codegen::compile_program(
        formulas, std::nullopt, folast::codegen::CompileMode::Translate, target);
    if (!program) {
        std::cerr << "compilation failed [" << folast::to_string(program.code())
                  << "] " << program.error().detail << "\n";
        return kExitInput;
    }

    std::string ast_docs;
    for (const folast::Formula& f : formulas) ast_docs += folast::encode(f);
    std::cout << ast_docs << program.value().text();

    if (!cfg.out.empty()) {
        std::filesystem::create_directories(cfg.out);
        std::ofstream(cfg.out + "/ast.jsonl") << ast_docs;
        const char* ext = target == folast::codegen::Target::FolText ? "fol" : "smt2";
        std::ofstream(cfg.out + "/program." + std::string(ext))
            << program.value().text();
        nlohmann::json trace_json = nlohmann::json::array();
        for (const auto& t : traces) trace_json.push_back(t.to_json());
        std::ofstream(cfg.out + "/traces.json") << trace_json.dump(2) << "\n";
    }
    return kExitOk;
}

int run_classify(const CliConfig& cfg, const std::string& premises_file,
                 const std::string& hypothesis) {
    std::vector<std::string> premise_sentences = read_lines(premises_file);
    if (premise_sentences.empty()) {
        std::cerr << "classify: premises file has no sentences\n";
        return kExitInput;
    }
    if (hypothesis.empty()) {
        std::cerr << "classify: --hypothesis is required\n";
        return kExitInput;
    }

    auto backend = make_backend(cfg);
    folast::parser::SemanticParser parser(*backend, {cfg.max_depth});

    std::vector<folast::Formula> premises;
    for (const std::string& sentence : premise_sentences) {
        auto trace = parser.parse_sentence(sentence);
        if (!trace.ok()) {
            std::cerr << "premise parse failed ["
                      << folast::to_string(trace.error->code) << "] \"" << sentence
                      << "\": " << trace.error->detail << "\n";
            return kExitInput;
        }
        premises.push_back(*trace.formula);
    }
    auto hyp_trace = parser.parse_sentence(hypothesis);
    if (!hyp_trace.ok()) {
        std::cerr << "hypothesis parse failed ["
                  << folast::to_string(hyp_trace.error->code)
                  << "]: " << hyp_trace.error->detail << "\n";
        return kExitInput;
    }

    folast::solver::SmtEngine engine(make_solver_config(cfg));
    auto prediction = folast::nli::classify(premises, *hyp_trace.formula, engine);
    if (!prediction) {
        std::cerr << "classification failed ["
                  << folast::to_string(prediction.code()) << "] "
                  << prediction.error().detail << "\n";
        auto code = prediction.code();
        return (code == folast::ErrorCode::SolverNotFound ||
                code == folast::ErrorCode::SolverCrashed)
                   ? kExitInfra
                   : kExitInput;
    }

    std::cout << folast::nli::to_string(prediction.value().label) << "\n";
    std::cout << "premises_unsat: "
              << (prediction.value().premises_unsat ? "true" : "false") << "\n";
    std::cout << "solver_unknown: "
              << (prediction.value().solver_unknown ? "true" : "false") << "\n";
    if (prediction.value().premises_unsat)
        std::cerr << "warning: the premises are jointly unsatisfiable; they entail "
                     "every statement, so the label is uncertain\n";
    return kExitOk;
}

int run_bench(const CliConfig& cfg, const std::string& dataset_file) {
    auto dataset = folast::nli::load_dataset_jsonl(read_file(dataset_file));
    if (!dataset) {
        std::cerr << "dataset error: " << dataset.error().detail << "\n";
        return kExitInput;
    }

    auto backend = make_backend(cfg);
    folast::solver::SmtEngine engine(make_solver_config(cfg));
    folast::nli::BenchConfig bench;
    bench.budget.max_depth = cfg.max_depth;
    if (!cfg.out.empty()) bench.trace_dir = cfg.out + "/traces";

    folast::nli::BenchmarkReport report =
        folast::nli::evaluate_benchmark(dataset.value(), *backend, engine, bench);

    std::cout << report.to_table();
    if (!cfg.out.empty()) {
        std::filesystem::create_directories(cfg.out);
        std::ofstream(cfg.out + "/report.json") << report.to_json().dump(2) << "\n";
        std::ofstream(cfg.out + "/report.txt") << report.to_table();
    }
    if (report.infrastructure_error) {
        std::cerr << "benchmark aborted: " << *report.infrastructure_error << "\n";
        return kExitInfra;
    }
    return kExitOk;
}

int run_validate(const std::string& ast_file) {
    std::string document = ast_file == "-"
                               ? std::string(std::istreambuf_iterator<char>(std::cin),
                                             std::istreambuf_iterator<char>())
                               : read_file(ast_file);
    auto formula = folast::decode(document);
    if (!formula) {
        nlohmann::ordered_json j;
        j["ok"] = false;
        j["decode_error"] = {{"code", folast::to_string(formula.code())},
                             {"detail", formula.error().detail}};
        std::cout << j.dump(2) << "\n";
        return kExitInput;
    }
    folast::WellFormednessReport report = folast::validate(formula.value());
    std::cout << report_to_json(report).dump(2) << "\n";
    return report.ok ? kExitOk : kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Natural language to first-order logic toolkit"};
    app.require_subcommand(1);

    CliConfig cfg;

    auto* translate = app.add_subcommand(
        "translate", "Parse sentences into AST documents and solver code");
    std::vector<std::string> sentences;
    std::string in_file, doc_file;
    translate->add_option("sentence", sentences, "Sentences to translate");
    translate->add_option("--in", in_file, "File with one sentence per line");
    translate->add_option("--doc", doc_file, "Document to segment and translate");
    translate->add_option("--abbrev-file", cfg.abbrev_file,
                          "Extra sentence-splitting abbreviations, one per line");
    add_common_flags(translate, cfg);

    auto* classify =
        app.add_subcommand("classify", "Three-way entailment for premises + hypothesis");
    std::string premises_file, hypothesis;
    classify->add_option("--premises", premises_file,
                         "File with one premise sentence per line")
        ->required();
    classify->add_option("--hypothesis", hypothesis, "Hypothesis sentence")
        ->required();
    add_common_flags(classify, cfg);

    auto* bench = app.add_subcommand("bench", "Evaluate a JSONL dataset");
    std::string dataset_file;
    bench->add_option("--dataset", dataset_file, "JSONL dataset file")->required();
    add_common_flags(bench, cfg);

    auto* validate_cmd =
        app.add_subcommand("validate", "Check an AST document for well-formedness");
    std::string ast_file;
    validate_cmd->add_option("ast", ast_file, "AST document file ('-' for stdin)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (translate->parsed())
            return run_translate(cfg, sentences, in_file, doc_file);
        if (classify->parsed()) return run_classify(cfg, premises_file, hypothesis);
        if (bench->parsed()) return run_bench(cfg, dataset_file);
        if (validate_cmd->parsed()) return run_validate(ast_file);
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitInfra;
    } catch (const folast::ScriptMissError& e) {
        std::cerr << "script error: " << e.what() << "\n";
        return kExitInfra;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
