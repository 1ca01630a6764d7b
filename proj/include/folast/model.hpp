#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "folast/ast.hpp"
#include "folast/errors.hpp"

namespace folast::solver {

/// A finite interpretation: a domain {0..domain_size-1}, an element for each
/// constant, and a tuple set for each relation.
struct BoundedModel {
    std::size_t domain_size = 1;
    std::map<std::string, std::size_t> constant_assignment;
    std::map<std::string, std::set<std::vector<std::size_t>>> relation_tables;

    std::string to_string() const;
};

/// Standard FOL evaluation of a closed formula over a bounded model. Total:
/// quantifiers range over the domain, unknown symbols are a logic error in
/// the caller (the model must interpret the formula's whole signature).
bool eval_formula(const BoundedModel& model, const Formula& f);

struct BruteForceOptions {
    std::size_t max_domain_size = 3;
    std::uint64_t work_cap = 10'000'000; // candidate interpretations
};

struct BruteForceOutcome {
    bool entailed = false;
    std::optional<BoundedModel> countermodel; // set when entailed is false
    std::uint64_t models_checked = 0;
};

/// Exhaustive finite-model search, exact up to the bound: enumerates every
/// constant assignment and relation table over domain sizes 1..max and looks
/// for a model of the premises that falsifies the hypothesis. No function
/// symbols exist in the grammar, so the enumeration is complete per domain
/// size. Distinct from and independent of the SMT path; the two are
/// cross-checked directionally in the test suite.
Result<BruteForceOutcome> brute_force_entails(std::span<const Formula> premises,
                                              const Formula& hypothesis,
                                              const BruteForceOptions& options = {});

} // namespace folast::solver
