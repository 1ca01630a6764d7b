#include <doctest.h>

#include "folast/ast.hpp"

using namespace folast;

namespace {

Formula student_rina() { return atom("Student", {Term::constant("Rina")}); }

} // namespace

TEST_CASE("structural equality is deep and sharing-independent") {
    Formula a = conjunction(student_rina(), atom("Aware", {Term::constant("Rina")}));
    Formula b = conjunction(student_rina(), atom("Aware", {Term::constant("Rina")}));
    CHECK(a == b);
    CHECK_FALSE(a.shares_node_with(b));

    Formula c = conjunction(student_rina(), atom("Aware", {Term::constant("Bob")}));
    CHECK(a != c);

    Formula shared = a;
    CHECK(shared.shares_node_with(a));
    CHECK(shared == a);
}

TEST_CASE("negate wraps once and never rewrites the operand") {
    Formula mortal = atom("Mortal", {Term::constant("Socrates")});
    Formula negated = negate(mortal);
    REQUIRE(negated.is_logical());
    CHECK(negated.logical().op == Connective::Not);
    REQUIRE(negated.logical().operands.size() == 1);
    CHECK(negated.logical().operands[0] == mortal);
    CHECK(negated.logical().operands[0].shares_node_with(mortal));

    SUBCASE("no double-negation elimination") {
        Formula twice = negate(negated);
        REQUIRE(twice.is_logical());
        CHECK(twice.logical().op == Connective::Not);
        CHECK(twice.logical().operands[0] == negated);
    }

    SUBCASE("quantified operand wrapped verbatim") {
        Formula all = forall("x", atom("P", {Term::variable("x")}));
        Formula wrapped = negate(all);
        CHECK(wrapped.logical().operands[0] == all);
    }
}

TEST_CASE("logical factories pin operand counts") {
    Formula p = student_rina();
    Formula q = atom("Aware", {Term::constant("Rina")});
    CHECK(negation(p).logical().operands.size() == 1);
    CHECK(conjunction(p, q).logical().operands.size() == 2);
    CHECK(disjunction(p, q).logical().operands.size() == 2);
    CHECK(implication(p, q).logical().operands.size() == 2);
}

TEST_CASE("desugar maps extended connectives into the core grammar") {
    Formula p = atom("P", {Term::constant("A")});
    Formula q = atom("Q", {Term::constant("A")});

    SUBCASE("If is material implication") {
        Formula out = desugar({ExtendedOp::If, p, q});
        CHECK(out == implication(p, q));
    }
    SUBCASE("OnlyIf makes the right side the necessary condition") {
        Formula out = desugar({ExtendedOp::OnlyIf, p, q});
        CHECK(out == implication(p, q));
    }
    SUBCASE("IfAndOnlyIf becomes a conjunction of both directions") {
        Formula out = desugar({ExtendedOp::IfAndOnlyIf, p, q});
        CHECK(out == conjunction(implication(p, q), implication(q, p)));
    }
}

TEST_CASE("desugar_tag accepts core and extended tags, rejects the rest") {
    Formula p = atom("P", {Term::constant("A")});
    Formula q = atom("Q", {Term::constant("A")});

    CHECK(desugar_tag("And", p, q).value() == conjunction(p, q));
    CHECK(desugar_tag("Or", p, q).value() == disjunction(p, q));
    CHECK(desugar_tag("If", p, q).value() == implication(p, q));
    CHECK(desugar_tag("Implies", p, q).value() == implication(p, q));
    CHECK(desugar_tag("OnlyIf", p, q).value() == implication(p, q));
    CHECK(desugar_tag("IfAndOnlyIf", p, q).value() ==
          conjunction(implication(p, q), implication(q, p)));

    auto bad = desugar_tag("Xor", p, q);
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.code() == ErrorCode::InvalidNode);
}

TEST_CASE("rename_free_variable respects shadowing") {
    // forall x. (P(x) and exists x. Q(x)) — renaming free x touches nothing.
    Formula inner = exists("x", atom("Q", {Term::variable("x")}));
    Formula body = conjunction(atom("P", {Term::variable("x")}), inner);

    Formula renamed = rename_free_variable(body, "x", "x1");
    CHECK(renamed == conjunction(atom("P", {Term::variable("x1")}), inner));

    SUBCASE("no occurrence means the same handle comes back") {
        Formula untouched = rename_free_variable(inner, "y", "y1");
        CHECK(untouched.shares_node_with(inner));
    }
}

TEST_CASE("node_count counts formula nodes, not terms") {
    CHECK(node_count(student_rina()) == 1);
    Formula f = forall("x", implication(atom("Drink", {Term::variable("x")}),
                                        atom("Dependent", {Term::variable("x")})));
    CHECK(node_count(f) == 4); // quantifier, implies, two atoms
}
