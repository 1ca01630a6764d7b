#include "gen.hpp"

#include <set>

namespace testsupport {

using namespace folast;

GenSignature random_signature(std::mt19937& rng, const GenConfig& cfg) {
    GenSignature sig;
    std::uniform_int_distribution<std::size_t> arity_dist(1, cfg.max_arity);
    for (std::size_t i = 0; i < cfg.num_relations; ++i)
        sig.relations.emplace_back("R" + std::to_string(i), arity_dist(rng));
    for (std::size_t i = 0; i < cfg.num_constants; ++i)
        sig.constants.emplace_back(std::string(1, static_cast<char>('A' + i % 26)) +
                                   (i >= 26 ? std::to_string(i / 26) : ""));
    return sig;
}

namespace {

Term random_term(std::mt19937& rng, const GenSignature& sig,
                 const std::vector<std::string>& bound) {
    std::uniform_int_distribution<int> coin(0, 1);
    if (!bound.empty() && coin(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, bound.size() - 1);
        return Term::variable(bound[pick(rng)]);
    }
    std::uniform_int_distribution<std::size_t> pick(0, sig.constants.size() - 1);
    return Term::constant(sig.constants[pick(rng)]);
}

Formula random_atom(std::mt19937& rng, const GenSignature& sig,
                    const std::vector<std::string>& bound) {
    std::uniform_int_distribution<std::size_t> pick(0, sig.relations.size() - 1);
    const auto& [name, arity] = sig.relations[pick(rng)];
    std::vector<Term> args;
    for (std::size_t i = 0; i < arity; ++i) args.push_back(random_term(rng, sig, bound));
    return atom(name, std::move(args));
}

const char* kVarLetters[] = {"x", "y", "z"};

Formula random_rec(std::mt19937& rng, const GenSignature& sig, int depth,
                   std::vector<std::string>& bound, bool allow_exists) {
    std::uniform_int_distribution<int> kind(0, 9);
    int k = depth <= 1 ? 0 : kind(rng);
    // 0-2: atom, 3: not, 4-5: and, 6: or, 7: implies, 8-9: quantifier
    if (k <= 2) return random_atom(rng, sig, bound);
    if (k == 3)
        return negation(random_rec(rng, sig, depth - 1, bound, allow_exists));
    if (k <= 7) {
        Formula left = random_rec(rng, sig, depth - 1, bound, allow_exists);
        Formula right = random_rec(rng, sig, depth - 1, bound, allow_exists);
        if (k <= 5) return conjunction(std::move(left), std::move(right));
        if (k == 6) return disjunction(std::move(left), std::move(right));
        return implication(std::move(left), std::move(right));
    }
    std::uniform_int_distribution<int> letter(0, 2);
    std::string var = kVarLetters[letter(rng)];
    std::uniform_int_distribution<int> coin(0, 1);
    Quantifier q = (allow_exists && coin(rng)) ? Quantifier::Exists
                                               : Quantifier::ForAll;
    bound.push_back(var);
    Formula body = random_rec(rng, sig, depth - 1, bound, allow_exists);
    bound.pop_back();
    return quantified(q, var, std::move(body));
}

/// Worst-case enumeration count of the finite-model oracle for the relations
/// and constants actually used by the instance.
std::uint64_t oracle_work(const GenInstance& instance, std::size_t max_domain) {
    std::set<std::string> constants;
    std::set<std::pair<std::string, std::size_t>> relations;
    auto walk = [&](const Formula& f, auto&& self) -> void {
        if (f.is_atomic()) {
            relations.emplace(f.atomic().relation, f.atomic().args.size());
            for (const Term& t : f.atomic().args)
                if (t.kind == TermKind::Constant) constants.insert(t.name);
            return;
        }
        if (f.is_quantified()) return self(*f.quantified().body, self);
        for (const Formula& op : f.logical().operands) self(op, self);
    };
    for (const Formula& p : instance.premises) walk(p, walk);
    walk(instance.hypothesis, walk);

    std::uint64_t total = 0;
    for (std::size_t domain = 1; domain <= max_domain; ++domain) {
        std::uint64_t atoms = 0;
        for (const auto& [name, arity] : relations) {
            (void)name;
            std::uint64_t cells = 1;
            for (std::size_t i = 0; i < arity; ++i) cells *= domain;
            atoms += cells;
        }
        if (atoms > 62) return UINT64_MAX;
        std::uint64_t assignments = 1;
        for (std::size_t i = 0; i < constants.size(); ++i) assignments *= domain;
        std::uint64_t valuations = std::uint64_t(1) << atoms;
        if (valuations > UINT64_MAX / assignments) return UINT64_MAX;
        total += assignments * valuations;
    }
    return total;
}

} // namespace

Formula random_formula(std::mt19937& rng, const GenSignature& sig, int max_depth) {
    std::vector<std::string> bound;
    return random_rec(rng, sig, max_depth, bound, true);
}

GenInstance random_instance(std::mt19937& rng, const GenConfig& cfg,
                            std::size_t max_premises, std::size_t max_domain,
                            std::uint64_t work_bound) {
    std::uniform_int_distribution<std::size_t> count(1, max_premises);
    for (;;) {
        GenSignature sig = random_signature(rng, cfg);
        GenInstance instance{{}, random_formula(rng, sig, cfg.max_depth)};
        std::size_t n = count(rng);
        for (std::size_t i = 0; i < n; ++i)
            instance.premises.push_back(random_formula(rng, sig, cfg.max_depth));
        if (oracle_work(instance, max_domain) <= work_bound) return instance;
    }
}

} // namespace testsupport
