#include <doctest.h>

#include <random>

#include "folast/declarations.hpp"
#include "folast/emit.hpp"
#include "fol_reader.hpp"
#include "gen.hpp"
#include "helpers.hpp"

using namespace folast;
using namespace folast::codegen;

namespace {

Formula coffee_tree() {
    return forall("x", implication(atom("Drink", {Term::variable("x")}),
                                   atom("Dependent", {Term::variable("x")})));
}

Formula rina_tree() {
    Formula student = atom("Student", {Term::constant("Rina")});
    Formula aware = atom("Aware", {Term::constant("Rina")});
    return disjunction(conjunction(student, aware),
                       conjunction(negation(student), negation(aware)));
}

std::vector<Formula> socrates_premises() {
    return {forall("x", implication(atom("Human", {Term::variable("x")}),
                                    atom("Mortal", {Term::variable("x")}))),
            atom("Human", {Term::constant("Socrates")})};
}

} // namespace

TEST_CASE("declaration collection walks in first-encounter preorder") {
    SUBCASE("quantified rule contributes its variable and relations") {
        std::vector<Formula> fs = {coffee_tree()};
        DeclarationSet d = collect_declarations(fs).value();
        CHECK(d.constants().empty());
        CHECK(d.variables() == std::vector<std::string>{"x"});
        REQUIRE(d.relations().size() == 2);
        CHECK(d.relations()[0] == RelationSignature{"Drink", 1});
        CHECK(d.relations()[1] == RelationSignature{"Dependent", 1});
    }
    SUBCASE("constants and relations from a ground formula") {
        std::vector<Formula> fs = {rina_tree()};
        DeclarationSet d = collect_declarations(fs).value();
        CHECK(d.constants() == std::vector<std::string>{"Rina"});
        REQUIRE(d.relations().size() == 2);
        CHECK(d.relations()[0].name == "Student");
        CHECK(d.relations()[1].name == "Aware");
    }
    SUBCASE("declaring the same formula twice changes nothing") {
        std::vector<Formula> once = {coffee_tree()};
        std::vector<Formula> twice = {coffee_tree(), coffee_tree()};
        CHECK(collect_declarations(once).value() ==
              collect_declarations(twice).value());
    }
    SUBCASE("cross-formula arity conflicts fail") {
        std::vector<Formula> fs = {
            atom("Love", {Term::constant("Alice")}),
            atom("Love", {Term::constant("Alice"), Term::constant("Bob")})};
        auto r = collect_declarations(fs);
        REQUIRE_FALSE(r.ok());
        CHECK(r.code() == ErrorCode::ArityMismatch);
    }
}

TEST_CASE("expression generation matches the solver grammar") {
    std::vector<Formula> fs = {coffee_tree()};
    DeclarationSet env = collect_declarations(fs).value();

    CHECK(generate_expression(coffee_tree(), env, Target::SmtLib2).value() ==
          "(forall ((x Object)) (=> (Drink x) (Dependent x)))");
    CHECK(generate_expression(coffee_tree(), env, Target::FolText).value() ==
          "∀x (Drink(x) → Dependent(x))");

    SUBCASE("simple application") {
        std::vector<Formula> gs = {atom("Student", {Term::constant("Rina")})};
        DeclarationSet genv = collect_declarations(gs).value();
        CHECK(generate_expression(gs[0], genv, Target::SmtLib2).value() ==
              "(Student Rina)");
    }
    SUBCASE("free symbols are rejected") {
        Formula stray = atom("Unknown", {Term::constant("Rina")});
        auto r = generate_expression(stray, env, Target::SmtLib2);
        REQUIRE_FALSE(r.ok());
        CHECK(r.code() == ErrorCode::UndeclaredSymbol);
    }
    SUBCASE("a variable outside any binder is rejected") {
        Formula stray = atom("Drink", {Term::variable("x")});
        auto r = generate_expression(stray, env, Target::SmtLib2);
        REQUIRE_FALSE(r.ok());
        CHECK(r.code() == ErrorCode::UndeclaredSymbol);
    }
}

TEST_CASE("render_fol reproduces the display notation") {
    CHECK(render_fol(rina_tree()) ==
          "(Student(Rina) ∧ Aware(Rina)) ∨ "
          "(¬Student(Rina) ∧ ¬Aware(Rina))");
    CHECK(render_fol(coffee_tree()) == "∀x (Drink(x) → Dependent(x))");
    CHECK(render_fol(atom("Student", {Term::constant("Rina")})) == "Student(Rina)");

    SUBCASE("multi-argument atoms") {
        CHECK(render_fol(atom("Give", {Term::constant("John"), Term::constant("Mary"),
                                       Term::constant("Book")})) ==
              "Give(John, Mary, Book)");
    }
    SUBCASE("negation parenthesizes only non-atomic operands") {
        Formula p = atom("P", {Term::constant("A")});
        Formula q = atom("Q", {Term::constant("A")});
        CHECK(render_fol(negation(negation(p))) == "¬¬P(A)");
        CHECK(render_fol(negation(conjunction(p, q))) ==
              "¬(P(A) ∧ Q(A))");
        CHECK(render_fol(negation(forall("x", atom("P", {Term::variable("x")})))) ==
              "¬(∀x (P(x)))");
    }
}

TEST_CASE("the syllogism compiles to the frozen program") {
    Formula hyp = atom("Mortal", {Term::constant("Socrates")});
    auto program = compile_program(socrates_premises(), hyp,
                                   CompileMode::CheckEntails, Target::SmtLib2);
    REQUIRE(program.ok());
    CHECK(program.value().text() ==
          "(declare-sort Object 0)\n"
          "(declare-const Socrates Object)\n"
          "(declare-fun Human (Object) Bool)\n"
          "(declare-fun Mortal (Object) Bool)\n"
          "(assert (forall ((x Object)) (=> (Human x) (Mortal x))))\n"
          "(assert (Human Socrates))\n"
          "(assert (not (Mortal Socrates)))\n"
          "(check-sat)\n");

    SUBCASE("translate mode emits no query") {
        auto t = compile_program(socrates_premises(), std::nullopt,
                                 CompileMode::Translate, Target::SmtLib2);
        REQUIRE(t.ok());
        CHECK_FALSE(t.value().query.has_value());
        CHECK(t.value().text().find("check-sat") == std::string::npos);
    }
    SUBCASE("identical inputs give byte-identical programs") {
        auto again = compile_program(socrates_premises(), hyp,
                                     CompileMode::CheckEntails, Target::SmtLib2);
        CHECK(program.value().text() == again.value().text());
    }
    SUBCASE("fol text target carries the rendered assertion") {
        std::vector<Formula> fs = {rina_tree()};
        auto t = compile_program(fs, std::nullopt, CompileMode::Translate,
                                 Target::FolText);
        REQUIRE(t.ok());
        REQUIRE(t.value().assertions.size() == 1);
        CHECK(t.value().assertions[0] == render_fol(rina_tree()));
    }
}

TEST_CASE("sanitization renames unsafe symbols and records the map") {
    std::vector<Formula> fs = {
        atom("is kind", {Term::constant("big bird"), Term::constant("big_bird")})};
    auto program =
        compile_program(fs, std::nullopt, CompileMode::Translate, Target::SmtLib2);
    REQUIRE(program.ok());
    std::string text = program.value().text();
    CHECK(text.find(";; renamed is kind -> is_kind\n") != std::string::npos);
    CHECK(text.find(";; renamed big bird -> big_bird\n") != std::string::npos);
    CHECK(text.find(";; renamed big_bird -> big_bird1\n") != std::string::npos);
    CHECK(text.find("(declare-const big_bird Object)") != std::string::npos);
    CHECK(text.find("(declare-const big_bird1 Object)") != std::string::npos);
    CHECK(text.find("(assert (is_kind big_bird big_bird1))") != std::string::npos);

    SUBCASE("reserved words and leading digits") {
        CHECK(sanitize_symbol("3rd place") == "_3rd_place");
        std::vector<Formula> gs = {atom("and", {Term::constant("Object")})};
        auto p = compile_program(gs, std::nullopt, CompileMode::Translate,
                                 Target::SmtLib2);
        std::string t = p.value().text();
        CHECK(t.find("(declare-fun and (") == std::string::npos);
        CHECK(t.find("(declare-const Object Object)") == std::string::npos);
    }
}

TEST_CASE("nested binders reusing a letter are alpha-renamed") {
    // forall x. (P(x) and exists x. Q(x)): the inner binder must not shadow
    // in the emitted text.
    Formula inner = exists("x", atom("Q", {Term::variable("x")}));
    Formula f = forall("x", conjunction(atom("P", {Term::variable("x")}), inner));
    std::vector<Formula> fs = {f};
    DeclarationSet env = collect_declarations(fs).value();
    std::string smt = generate_expression(f, env, Target::SmtLib2).value();
    CHECK(smt ==
          "(forall ((x Object)) (and (P x) (exists ((x1 Object)) (Q x1))))");

    SUBCASE("binders colliding with declared constants are renamed too") {
        Formula g = forall("A", atom("P", {Term::variable("A")}));
        std::vector<Formula> gs = {g, atom("Q", {Term::constant("A")})};
        DeclarationSet genv = collect_declarations(gs).value();
        std::string text = generate_expression(g, genv, Target::SmtLib2).value();
        CHECK(text == "(forall ((A1 Object)) (P A1))");
    }
}

TEST_CASE("token scan confirms declaration completeness on generated programs") {
    std::mt19937 rng(7);
    testsupport::GenConfig cfg;
    cfg.max_depth = 6;
    for (int i = 0; i < 60; ++i) {
        testsupport::GenSignature sig = testsupport::random_signature(rng, cfg);
        std::vector<Formula> premises = {
            testsupport::random_formula(rng, sig, cfg.max_depth),
            testsupport::random_formula(rng, sig, cfg.max_depth)};
        Formula hyp = testsupport::random_formula(rng, sig, cfg.max_depth);
        auto program = compile_program(premises, hyp, CompileMode::CheckEntails,
                                       Target::SmtLib2);
        REQUIRE(program.ok());
        testsupport::TokenScan scan = testsupport::scan_program(program.value().text());
        CHECK(scan.complete());
    }
}

TEST_CASE("fol text round trips through the test-only reader") {
    std::mt19937 rng(11);
    testsupport::GenConfig cfg;
    cfg.max_depth = 6;
    for (int i = 0; i < 100; ++i) {
        testsupport::GenSignature sig = testsupport::random_signature(rng, cfg);
        Formula f = testsupport::random_formula(rng, sig, cfg.max_depth);
        auto back = testsupport::read_fol(render_fol(f));
        REQUIRE(back.ok());
        CHECK(back.value() == f);
    }
    SUBCASE("golden strings parse back to the golden trees") {
        CHECK(testsupport::read_fol(render_fol(rina_tree())).value() == rina_tree());
        CHECK(testsupport::read_fol(render_fol(coffee_tree())).value() ==
              coffee_tree());
    }
}
