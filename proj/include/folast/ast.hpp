#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "folast/errors.hpp"

namespace folast {

enum class TermKind { Variable, Constant };
enum class Quantifier { ForAll, Exists };
enum class Connective { Not, And, Or, Implies };

const char* to_string(Quantifier q);
const char* to_string(Connective op);

/// A term is a variable or a constant; relations never nest.
struct Term {
    TermKind kind;
    std::string name;

    static Term variable(std::string name) {
        return Term{TermKind::Variable, std::move(name)};
    }
    static Term constant(std::string name) {
        return Term{TermKind::Constant, std::move(name)};
    }

    bool operator==(const Term&) const = default;
};

class Formula;

/// Relation applied to one, two, or three terms.
struct Atomic {
    std::string relation;
    std::vector<Term> args;
};

struct Quantified {
    Quantifier quantifier;
    std::string variable;
    std::shared_ptr<const Formula> body;
};

struct Logical {
    Connective op;
    std::vector<Formula> operands; // Not: 1 operand, And/Or/Implies: 2
};

/// Immutable formula tree. Values share subtrees freely; nothing mutates a
/// node after construction, so copies are cheap and thread-safe.
///
/// Structural constraints that are closed by construction: Not carries
/// exactly one operand and And/Or/Implies exactly two (the factory functions
/// below are the only way to build Logical nodes). Name emptiness and the
/// 1..3 atomic argument count are semantic checks reported by validate().
class Formula {
public:
    using Node = std::variant<Atomic, Quantified, Logical>;

    explicit Formula(Node node)
        : node_(std::make_shared<const Node>(std::move(node))) {}

    const Node& node() const { return *node_; }

    bool is_atomic() const { return std::holds_alternative<Atomic>(*node_); }
    bool is_quantified() const { return std::holds_alternative<Quantified>(*node_); }
    bool is_logical() const { return std::holds_alternative<Logical>(*node_); }

    const Atomic& atomic() const { return std::get<Atomic>(*node_); }
    const Quantified& quantified() const { return std::get<Quantified>(*node_); }
    const Logical& logical() const { return std::get<Logical>(*node_); }

    /// Deep structural equality (with a shared-subtree fast path).
    bool operator==(const Formula& other) const;

    /// True when both handles point at the very same node object.
    bool shares_node_with(const Formula& other) const {
        return node_ == other.node_;
    }

private:
    std::shared_ptr<const Node> node_;
};

// Factory functions. These are the whole construction surface.

Formula atom(std::string relation, std::vector<Term> args);
Formula forall(std::string variable, Formula body);
Formula exists(std::string variable, Formula body);
Formula quantified(Quantifier q, std::string variable, Formula body);
Formula negation(Formula operand);
Formula conjunction(Formula left, Formula right);
Formula disjunction(Formula left, Formula right);
Formula implication(Formula antecedent, Formula consequent);

/// Wraps f in a single Not node. No simplification of any kind: negating
/// Not(P) yields Not(Not(P)), and the operand subtree is shared verbatim.
Formula negate(const Formula& f);

/// Total number of Formula nodes in the tree (terms not counted).
std::size_t node_count(const Formula& f);

/// Renames free occurrences of a variable. Occurrences below a binder of the
/// same name are left alone; binders themselves are never touched.
Formula rename_free_variable(const Formula& f, std::string_view from,
                             std::string_view to);

// ---------------------------------------------------------------------------
// Extended connectives. The sentence-level parser can see If / OnlyIf /
// IfAndOnlyIf; they are rewritten into the core grammar at the parser
// boundary and never appear inside a Formula.

enum class ExtendedOp { If, OnlyIf, IfAndOnlyIf };

struct ExtendedConnective {
    ExtendedOp op;
    Formula left;
    Formula right;
};

/// If(P,Q) => Implies(P,Q); OnlyIf(P,Q) => Implies(P,Q) (Q is the necessary
/// condition); IfAndOnlyIf(P,Q) => And(Implies(P,Q), Implies(Q,P)).
Formula desugar(const ExtendedConnective& e);

/// String-tag front for the parser: accepts "If", "OnlyIf", "IfAndOnlyIf"
/// plus the core binary tags "And", "Or", "Implies". Anything else is an
/// InvalidNode error.
Result<Formula> desugar_tag(std::string_view op_tag, Formula left,
                            Formula right);

} // namespace folast
