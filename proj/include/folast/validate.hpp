#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "folast/ast.hpp"
#include "folast/declarations.hpp"

namespace folast {

enum class FaultCode { UnboundVariable, ArityMismatch, EmptyName, BadArgCount };

const char* to_string(FaultCode code);

struct Fault {
    FaultCode code;
    std::string path; // slash path of child indices from the root, e.g. "/1/0"
    std::string detail;
};

struct WellFormednessReport {
    bool ok = true;
    std::set<std::string> free_variables;
    std::map<std::string, std::size_t> signature; // relation -> arity (first seen)
    std::vector<Fault> faults;
};

/// Checks a formula against the grammar's semantic rules: every variable
/// occurrence must sit under a binder of that name, every relation must keep
/// a single arity (within f and against the context when given), identifiers
/// must be non-empty, and atomic argument counts must stay in 1..3. A name
/// that is used both as a relation and as a constant is reported as an arity
/// conflict. Faults are data; ok is true exactly when there are none.
WellFormednessReport validate(const Formula& f,
                              const codegen::DeclarationSet* context = nullptr);

struct AnalysisResult {
    std::set<std::string> constants;
    std::set<std::string> bound_variables;
    std::map<std::string, std::size_t> signature;
};

/// Pure-analysis twin of the declaration pass: the symbols the first
/// compilation pass would declare, as deduplicated sets. Throws
/// std::invalid_argument when the formula does not validate.
AnalysisResult analyze(const Formula& f);

} // namespace folast
