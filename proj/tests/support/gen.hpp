#pragma once

#include <random>
#include <string>
#include <vector>

#include "folast/ast.hpp"

namespace testsupport {

/// A fixed relation/constant vocabulary for one generated problem; relation
/// arities stay consistent across every formula drawn from it.
struct GenSignature {
    std::vector<std::pair<std::string, std::size_t>> relations;
    std::vector<std::string> constants;
};

struct GenConfig {
    int max_depth = 6;
    std::size_t max_arity = 3;
    std::size_t num_relations = 5;
    std::size_t num_constants = 4;
    bool allow_exists = true;
};

GenSignature random_signature(std::mt19937& rng, const GenConfig& cfg);

/// Closed, validate-clean formula over the signature (variables appear only
/// under binders; binder letters may shadow, which is legal).
folast::Formula random_formula(std::mt19937& rng, const GenSignature& sig,
                               int max_depth);

/// Premises + hypothesis over one shared signature, sized so the exhaustive
/// finite-model oracle stays under `work_bound` candidate interpretations at
/// domain sizes 1..max_domain.
struct GenInstance {
    std::vector<folast::Formula> premises;
    folast::Formula hypothesis;
};

GenInstance random_instance(std::mt19937& rng, const GenConfig& cfg,
                            std::size_t max_premises, std::size_t max_domain,
                            std::uint64_t work_bound);

} // namespace testsupport
