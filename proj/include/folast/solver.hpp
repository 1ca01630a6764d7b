#pragma once

#include <span>
#include <string>
#include <vector>

#include "folast/ast.hpp"
#include "folast/emit.hpp"
#include "folast/errors.hpp"

namespace folast::solver {

enum class SatStatus { Sat, Unsat, Unknown };
enum class Trilean { True, False, Unknown };

const char* to_string(SatStatus s);
const char* to_string(Trilean t);

struct SolverVerdict {
    SatStatus status = SatStatus::Unknown;
    long elapsed_ms = 0;
    std::string raw; // full solver output, preserved for Unknown diagnostics
};

struct SolverConfig {
    /// Shell command of any SMT-LIB v2 solver reading the program on stdin
    /// and answering on stdout. Resolved from the FOLAST_SOLVER_CMD
    /// environment variable when empty, falling back to "z3 -in".
    std::string command;
    int timeout_ms = 10000;

    std::string resolved_command() const;
};

/// Runs one program on a fresh solver process and parses the answer token
/// strictly: sat/unsat/unknown, anything else is Unknown with the raw output
/// preserved. Timeouts kill the process and return Unknown. Programs without
/// a query get the satisfiability query appended.
Result<SolverVerdict> check_sat(const codegen::TargetProgram& program,
                                const SolverConfig& config);

/// Batched front-end acceptance probe: feeds many programs to one solver
/// process separated by (reset), with no satisfiability queries, and reports
/// whether the front end accepted all of them without parse errors.
Result<bool> front_end_accepts(std::span<const std::string> program_texts,
                               const SolverConfig& config,
                               std::string* diagnostics = nullptr);

/// Entailment facts needed by the three-way classifier. The SMT-backed
/// implementation is below; tests substitute scripted fakes.
class InferenceEngine {
public:
    virtual ~InferenceEngine() = default;
    virtual Result<Trilean> entails(std::span<const Formula> premises,
                                    const Formula& hypothesis) = 0;
    virtual Result<SolverVerdict> check_premises_sat(
        std::span<const Formula> premises) = 0;
};

/// Compiles CheckEntails programs and asks the external solver: unsat means
/// entailed, sat means not entailed, unknown stays unknown.
class SmtEngine final : public InferenceEngine {
public:
    explicit SmtEngine(SolverConfig config) : config_(std::move(config)) {}

    Result<Trilean> entails(std::span<const Formula> premises,
                            const Formula& hypothesis) override;
    Result<SolverVerdict> check_premises_sat(
        std::span<const Formula> premises) override;

    const SolverConfig& config() const { return config_; }

private:
    SolverConfig config_;
};

} // namespace folast::solver
