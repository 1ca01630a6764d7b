#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

#include "folast/solver.hpp"

namespace testsupport {

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path write(const std::string& name, std::string_view content,
                                bool executable = false) const;

private:
    std::filesystem::path path_;
};

/// Solver command for tests: FOLAST_SOLVER_CMD if set, else z3 on PATH, else
/// the bundled tools/z3smt wrapper when its dependencies are installed.
/// Empty when nothing is available — solver-backed tests fail loudly then.
const std::string& test_solver_command();

folast::solver::SolverConfig test_solver_config(int timeout_ms = 15000);

/// Independent declaration-completeness check over emitted SMT-LIB text:
/// re-tokenizes the program and compares the declared symbol set against the
/// symbols referenced in assertions minus binder-bound variables.
struct TokenScan {
    std::set<std::string> declared;
    std::set<std::string> referenced; // minus binders and language keywords
    bool complete() const { return declared == referenced; }
};

TokenScan scan_program(const std::string& program_text);

} // namespace testsupport
