#include "folast/solver.hpp"

#include <cstdlib>
#include <sstream>

#include "folast/proc.hpp"

namespace folast::solver {

namespace {

std::string first_answer_token(const std::string& output) {
    std::istringstream in(output);
    std::string line;
    while (std::getline(in, line)) {
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        std::string token = line.substr(b, e - b + 1);
        if (token == "sat" || token == "unsat" || token == "unknown") return token;
    }
    return {};
}

} // namespace

const char* to_string(SatStatus s) {
    switch (s) {
        case SatStatus::Sat: return "sat";
        case SatStatus::Unsat: return "unsat";
        case SatStatus::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(Trilean t) {
    switch (t) {
        case Trilean::True: return "true";
        case Trilean::False: return "false";
        case Trilean::Unknown: return "unknown";
    }
    return "?";
}

std::string SolverConfig::resolved_command() const {
    if (!command.empty()) return command;
    if (const char* env = std::getenv("FOLAST_SOLVER_CMD"); env && *env)
        return env;
    return "z3 -in";
}

Result<SolverVerdict> check_sat(const codegen::TargetProgram& program,
                                const SolverConfig& config) {
    if (program.target != codegen::Target::SmtLib2)
        throw std::invalid_argument("check_sat: program target must be SmtLib2");

    std::string text = program.text();
    if (!program.query) text += "(check-sat)\n";

    proc::RunResult run =
        proc::run_process(config.resolved_command(), text, config.timeout_ms);

    SolverVerdict verdict;
    verdict.elapsed_ms = run.elapsed_ms;
    verdict.raw = run.output;

    if (run.status == proc::RunStatus::SpawnFailed)
        return Error(ErrorCode::SolverNotFound,
                     "solver command could not be started: " +
                         config.resolved_command());
    if (run.status == proc::RunStatus::TimedOut) {
        verdict.status = SatStatus::Unknown;
        return verdict;
    }

    std::string token = first_answer_token(run.output);
    if (token == "sat")
        verdict.status = SatStatus::Sat;
    else if (token == "unsat")
        verdict.status = SatStatus::Unsat;
    else if (token == "unknown")
        verdict.status = SatStatus::Unknown;
    else if (run.exit_code != 0)
        return Error(ErrorCode::SolverCrashed,
                     "solver exited with status " + std::to_string(run.exit_code) +
                         " and no answer token: " + run.output);
    else
        verdict.status = SatStatus::Unknown; // unparseable answer, raw preserved
    return verdict;
}

Result<bool> front_end_accepts(std::span<const std::string> program_texts,
                               const SolverConfig& config,
                               std::string* diagnostics) {
    std::string joined;
    for (const std::string& text : program_texts) {
        joined += text;
        joined += "(reset)\n";
    }
    proc::RunResult run =
        proc::run_process(config.resolved_command(), joined, config.timeout_ms);
    if (run.status == proc::RunStatus::SpawnFailed)
        return Error(ErrorCode::SolverNotFound,
                     "solver command could not be started: " +
                         config.resolved_command());
    if (run.status == proc::RunStatus::TimedOut)
        return Error(ErrorCode::SolverCrashed, "front-end probe timed out");
    if (diagnostics) *diagnostics = run.output;
    bool clean = run.output.find("(error") == std::string::npos &&
                 run.output.find("error") == std::string::npos;
    return clean;
}

Result<Trilean> SmtEngine::entails(std::span<const Formula> premises,
                                   const Formula& hypothesis) {
    auto program = codegen::compile_program(
        premises, hypothesis, codegen::CompileMode::CheckEntails,
        codegen::Target::SmtLib2);
    if (!program) return program.error();
    auto verdict = check_sat(program.value(), config_);
    if (!verdict) return verdict.error();
    switch (verdict.value().status) {
        case SatStatus::Unsat: return Trilean::True;
        case SatStatus::Sat: return Trilean::False;
        case SatStatus::Unknown: return Trilean::Unknown;
    }
    return Trilean::Unknown;
}

Result<SolverVerdict> SmtEngine::check_premises_sat(
    std::span<const Formula> premises) {
    auto program =
        codegen::compile_program(premises, std::nullopt,
                                 codegen::CompileMode::Translate,
                                 codegen::Target::SmtLib2);
    if (!program) return program.error();
    return check_sat(program.value(), config_);
}

} // namespace folast::solver
