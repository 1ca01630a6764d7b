#include "helpers.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include <sys/stat.h>

#include "folast/proc.hpp"

namespace testsupport {

TempDir::TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("folast_test_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

std::filesystem::path TempDir::write(const std::string& name,
                                     std::string_view content,
                                     bool executable) const {
    std::filesystem::path file = path_ / name;
    {
        std::ofstream out(file);
        out << content;
    }
    if (executable) chmod(file.c_str(), 0755);
    return file;
}

namespace {

std::string locate_solver() {
    if (const char* env = std::getenv("FOLAST_SOLVER_CMD"); env && *env)
        return env;
    if (folast::proc::run_process("command -v z3", "", 3000).exit_code == 0)
        return "z3 -in";
    // Walk up from cwd looking for the bundled wrapper with deps installed.
    std::filesystem::path dir = std::filesystem::current_path();
    for (int i = 0; i < 6; ++i) {
        auto wrapper = dir / "tools" / "z3smt" / "z3smt";
        auto deps = dir / "tools" / "z3smt" / "node_modules" / "z3-solver";
        if (std::filesystem::exists(wrapper) && std::filesystem::exists(deps))
            return wrapper.string();
        if (!dir.has_parent_path() || dir.parent_path() == dir) break;
        dir = dir.parent_path();
    }
    return {};
}

} // namespace

const std::string& test_solver_command() {
    static const std::string command = locate_solver();
    return command;
}

folast::solver::SolverConfig test_solver_config(int timeout_ms) {
    folast::solver::SolverConfig config;
    config.command = test_solver_command();
    config.timeout_ms = timeout_ms;
    return config;
}

TokenScan scan_program(const std::string& program_text) {
    static const std::set<std::string> kKeywords = {
        "assert",      "and",    "or",   "not",  "=>",      "forall",
        "exists",      "Object", "Bool", "declare-sort",    "declare-const",
        "declare-fun", "check-sat",      "reset"};

    TokenScan scan;
    std::vector<std::string> lines;
    {
        std::string line;
        for (char c : program_text) {
            if (c == '\n') {
                lines.push_back(line);
                line.clear();
            } else {
                line.push_back(c);
            }
        }
        if (!line.empty()) lines.push_back(line);
    }

    auto tokenize = [](const std::string& line) {
        std::vector<std::string> tokens;
        std::string current;
        for (char c : line) {
            if (c == '(' || c == ')' || c == ' ' || c == '\t') {
                if (!current.empty()) {
                    tokens.push_back(current);
                    current.clear();
                }
                if (c == '(' || c == ')') tokens.emplace_back(1, c);
            } else {
                current.push_back(c);
            }
        }
        if (!current.empty()) tokens.push_back(current);
        return tokens;
    };

    for (const std::string& line : lines) {
        if (line.rfind(";;", 0) == 0) continue;
        auto tokens = tokenize(line);
        if (tokens.size() >= 3 &&
            (tokens[1] == "declare-const" || tokens[1] == "declare-fun")) {
            scan.declared.insert(tokens[2]);
            continue;
        }
        if (tokens.size() >= 2 && tokens[1] == "assert") {
            // Collect binder variables: they follow "( (" right after a
            // quantifier keyword, as in (forall ((v Object)) ...).
            std::set<std::string> binders;
            for (std::size_t i = 0; i + 4 < tokens.size(); ++i) {
                if ((tokens[i] == "forall" || tokens[i] == "exists") &&
                    tokens[i + 1] == "(" && tokens[i + 2] == "(")
                    binders.insert(tokens[i + 3]);
            }
            for (const std::string& token : tokens) {
                if (token == "(" || token == ")") continue;
                if (kKeywords.count(token) || binders.count(token)) continue;
                scan.referenced.insert(token);
            }
        }
    }
    return scan;
}

} // namespace testsupport
