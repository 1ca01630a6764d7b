#include "folast/model.hpp"

#include <sstream>
#include <stdexcept>

namespace folast::solver {

namespace {

std::size_t eval_term(const BoundedModel& model, const Term& t,
                      const std::map<std::string, std::size_t>& env) {
    if (t.kind == TermKind::Variable) {
        auto it = env.find(t.name);
        if (it == env.end())
            throw std::logic_error("eval: unbound variable " + t.name);
        return it->second;
    }
    auto it = model.constant_assignment.find(t.name);
    if (it == model.constant_assignment.end())
        throw std::logic_error("eval: uninterpreted constant " + t.name);
    return it->second;
}

bool eval_rec(const BoundedModel& model, const Formula& f,
              std::map<std::string, std::size_t>& env) {
    if (f.is_atomic()) {
        const Atomic& a = f.atomic();
        auto table = model.relation_tables.find(a.relation);
        if (table == model.relation_tables.end())
            throw std::logic_error("eval: uninterpreted relation " + a.relation);
        std::vector<std::size_t> tuple;
        tuple.reserve(a.args.size());
        for (const Term& t : a.args) tuple.push_back(eval_term(model, t, env));
        return table->second.count(tuple) != 0;
    }
    if (f.is_quantified()) {
        const Quantified& q = f.quantified();
        auto shadowed = env.find(q.variable);
        std::optional<std::size_t> saved;
        if (shadowed != env.end()) saved = shadowed->second;
        bool result = q.quantifier == Quantifier::ForAll;
        for (std::size_t d = 0; d < model.domain_size; ++d) {
            env[q.variable] = d;
            bool v = eval_rec(model, *q.body, env);
            if (q.quantifier == Quantifier::ForAll) {
                if (!v) {
                    result = false;
                    break;
                }
            } else if (v) {
                result = true;
                break;
            }
        }
        if (saved)
            env[q.variable] = *saved;
        else
            env.erase(q.variable);
        return result;
    }
    const Logical& l = f.logical();
    switch (l.op) {
        case Connective::Not: return !eval_rec(model, l.operands[0], env);
        case Connective::And:
            return eval_rec(model, l.operands[0], env) &&
                   eval_rec(model, l.operands[1], env);
        case Connective::Or:
            return eval_rec(model, l.operands[0], env) ||
                   eval_rec(model, l.operands[1], env);
        case Connective::Implies:
            return !eval_rec(model, l.operands[0], env) ||
                   eval_rec(model, l.operands[1], env);
    }
    throw std::logic_error("eval: unreachable connective");
}

struct SignatureInfo {
    std::vector<std::string> constants;                     // first encounter
    std::vector<std::pair<std::string, std::size_t>> relations; // name, arity
};

void collect_signature(const Formula& f, SignatureInfo& sig) {
    if (f.is_atomic()) {
        const Atomic& a = f.atomic();
        bool known = false;
        for (const auto& [name, arity] : sig.relations) {
            if (name == a.relation) {
                if (arity != a.args.size())
                    throw std::invalid_argument(
                        "brute force: relation " + a.relation +
                        " used with conflicting arities");
                known = true;
            }
        }
        if (!known) sig.relations.emplace_back(a.relation, a.args.size());
        for (const Term& t : a.args) {
            if (t.kind == TermKind::Constant) {
                bool seen = false;
                for (const std::string& c : sig.constants)
                    if (c == t.name) seen = true;
                if (!seen) sig.constants.push_back(t.name);
            }
        }
        return;
    }
    if (f.is_quantified()) {
        collect_signature(*f.quantified().body, sig);
        return;
    }
    for (const Formula& op : f.logical().operands) collect_signature(op, sig);
}

/// Fast candidate evaluation: the model is (constant values, one bitmask of
/// ground-atom truth values). Variables bind through a small stack.
struct FastEval {
    std::size_t domain;
    const SignatureInfo& sig;
    const std::vector<std::size_t>& const_values; // by sig.constants index
    std::uint64_t atoms;                          // bit per ground atom
    std::vector<std::size_t> relation_base;       // atom index base per relation
    std::vector<std::pair<std::string, std::size_t>> var_stack;

    std::size_t term_value(const Term& t) const {
        if (t.kind == TermKind::Constant) {
            for (std::size_t i = 0; i < sig.constants.size(); ++i)
                if (sig.constants[i] == t.name) return const_values[i];
            throw std::logic_error("fast eval: unknown constant " + t.name);
        }
        for (auto it = var_stack.rbegin(); it != var_stack.rend(); ++it)
            if (it->first == t.name) return it->second;
        throw std::logic_error("fast eval: unbound variable " + t.name);
    }

    bool eval(const Formula& f) {
        if (f.is_atomic()) {
            const Atomic& a = f.atomic();
            std::size_t rel = 0;
            while (sig.relations[rel].first != a.relation) ++rel;
            std::size_t index = 0;
            for (const Term& t : a.args) index = index * domain + term_value(t);
            return (atoms >> (relation_base[rel] + index)) & 1u;
        }
        if (f.is_quantified()) {
            const Quantified& q = f.quantified();
            var_stack.emplace_back(q.variable, 0);
            bool result = q.quantifier == Quantifier::ForAll;
            for (std::size_t d = 0; d < domain; ++d) {
                var_stack.back().second = d;
                bool v = eval(*q.body);
                if (q.quantifier == Quantifier::ForAll ? !v : v) {
                    result = !(q.quantifier == Quantifier::ForAll);
                    break;
                }
            }
            var_stack.pop_back();
            return result;
        }
        const Logical& l = f.logical();
        switch (l.op) {
            case Connective::Not: return !eval(l.operands[0]);
            case Connective::And:
                return eval(l.operands[0]) && eval(l.operands[1]);
            case Connective::Or:
                return eval(l.operands[0]) || eval(l.operands[1]);
            case Connective::Implies:
                return !eval(l.operands[0]) || eval(l.operands[1]);
        }
        return false;
    }
};

std::uint64_t int_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    while (exp--) out *= base;
    return out;
}

BoundedModel materialize(std::size_t domain, const SignatureInfo& sig,
                         const std::vector<std::size_t>& const_values,
                         std::uint64_t atoms,
                         const std::vector<std::size_t>& relation_base) {
    BoundedModel model;
    model.domain_size = domain;
    for (std::size_t i = 0; i < sig.constants.size(); ++i)
        model.constant_assignment[sig.constants[i]] = const_values[i];
    for (std::size_t r = 0; r < sig.relations.size(); ++r) {
        const auto& [name, arity] = sig.relations[r];
        auto& table = model.relation_tables[name];
        std::uint64_t tuples = int_pow(domain, arity);
        for (std::uint64_t index = 0; index < tuples; ++index) {
            if (!((atoms >> (relation_base[r] + index)) & 1u)) continue;
            std::vector<std::size_t> tuple(arity);
            std::uint64_t rest = index;
            for (std::size_t pos = arity; pos-- > 0;) {
                tuple[pos] = rest % domain;
                rest /= domain;
            }
            table.insert(std::move(tuple));
        }
        (void)table;
    }
    return model;
}

} // namespace

std::string BoundedModel::to_string() const {
    std::ostringstream out;
    out << "domain {0.." << domain_size - 1 << "}";
    for (const auto& [name, value] : constant_assignment)
        out << " " << name << "=" << value;
    for (const auto& [name, table] : relation_tables) {
        out << " " << name << "={";
        bool first = true;
        for (const auto& tuple : table) {
            if (!first) out << ",";
            first = false;
            out << "(";
            for (std::size_t i = 0; i < tuple.size(); ++i)
                out << (i ? "," : "") << tuple[i];
            out << ")";
        }
        out << "}";
    }
    return out.str();
}

bool eval_formula(const BoundedModel& model, const Formula& f) {
    std::map<std::string, std::size_t> env;
    return eval_rec(model, f, env);
}

Result<BruteForceOutcome> brute_force_entails(std::span<const Formula> premises,
                                              const Formula& hypothesis,
                                              const BruteForceOptions& options) {
    SignatureInfo sig;
    for (const Formula& p : premises) collect_signature(p, sig);
    collect_signature(hypothesis, sig);

    BruteForceOutcome outcome;
    for (std::size_t domain = 1; domain <= options.max_domain_size; ++domain) {
        std::vector<std::size_t> relation_base;
        std::size_t total_atoms = 0;
        for (const auto& [name, arity] : sig.relations) {
            (void)name;
            relation_base.push_back(total_atoms);
            total_atoms += int_pow(domain, arity);
        }
        if (total_atoms > 62)
            return Error(ErrorCode::BudgetExceeded,
                         "ground atom space too large at domain size " +
                             std::to_string(domain));

        const std::uint64_t valuations = std::uint64_t(1) << total_atoms;
        const std::uint64_t assignments = int_pow(domain, sig.constants.size());

        std::vector<std::size_t> const_values(sig.constants.size(), 0);
        for (std::uint64_t a = 0; a < assignments; ++a) {
            std::uint64_t rest = a;
            for (std::size_t i = 0; i < const_values.size(); ++i) {
                const_values[i] = rest % domain;
                rest /= domain;
            }
            for (std::uint64_t v = 0; v < valuations; ++v) {
                if (++outcome.models_checked > options.work_cap)
                    return Error(ErrorCode::BudgetExceeded,
                                 "enumeration passed the work cap of " +
                                     std::to_string(options.work_cap));
                FastEval eval{domain, sig, const_values, v, relation_base, {}};
                bool all_premises = true;
                for (const Formula& p : premises) {
                    if (!eval.eval(p)) {
                        all_premises = false;
                        break;
                    }
                }
                if (!all_premises) continue;
                if (eval.eval(hypothesis)) continue;

                BoundedModel model =
                    materialize(domain, sig, const_values, v, relation_base);
                // The slow public evaluator must agree with the fast path.
                for (const Formula& p : premises)
                    if (!eval_formula(model, p))
                        throw std::logic_error("countermodel re-check failed");
                if (eval_formula(model, hypothesis))
                    throw std::logic_error("countermodel re-check failed");
                outcome.entailed = false;
                outcome.countermodel = std::move(model);
                return outcome;
            }
        }
    }
    outcome.entailed = true;
    return outcome;
}

} // namespace folast::solver
