#include <doctest.h>

#include <random>

#include "folast/codec.hpp"
#include "folast/validate.hpp"
#include "gen.hpp"

using namespace folast;

namespace {

Formula rina_tree() {
    Formula student = atom("Student", {Term::constant("Rina")});
    Formula aware = atom("Aware", {Term::constant("Rina")});
    return disjunction(conjunction(student, aware),
                       conjunction(negation(student), negation(aware)));
}

Formula coffee_tree() {
    return forall("x", implication(atom("Drink", {Term::variable("x")}),
                                   atom("Dependent", {Term::variable("x")})));
}

} // namespace

TEST_CASE("canonical encoding is byte-exact and stable") {
    const std::string student =
        R"({"type":"atomic","relation":"Student","args":[{"type":"constant","name":"Rina"}]})";
    const std::string aware =
        R"({"type":"atomic","relation":"Aware","args":[{"type":"constant","name":"Rina"}]})";
    std::string expected =
        R"({"type":"logical","operator":"Or","operands":[)"
        R"({"type":"logical","operator":"And","operands":[)" +
        student + "," + aware +
        R"(]},{"type":"logical","operator":"And","operands":[)"
        R"({"type":"logical","operator":"Not","operands":[)" +
        student +
        R"(]},{"type":"logical","operator":"Not","operands":[)" +
        aware + R"(]}]}]})" + "\n";
    CHECK(encode(rina_tree()) == expected);

    const std::string coffee_expected =
        R"({"type":"quantified","quantifier":"ForAll","variable":"x","body":)"
        R"({"type":"logical","operator":"Implies","operands":[)"
        R"({"type":"atomic","relation":"Drink","args":[{"type":"variable","name":"x"}]},)"
        R"({"type":"atomic","relation":"Dependent","args":[{"type":"variable","name":"x"}]})"
        R"(]}})" "\n";
    CHECK(encode(coffee_tree()) == coffee_expected);

    SUBCASE("deterministic across calls") {
        CHECK(encode(rina_tree()) == encode(rina_tree()));
    }
}

TEST_CASE("decode inverts encode on the golden trees") {
    CHECK(decode(encode(rina_tree())).value() == rina_tree());
    CHECK(decode(encode(coffee_tree())).value() == coffee_tree());
}

TEST_CASE("truncated documents are missing nodes") {
    std::string document = encode(coffee_tree());
    auto truncated = decode(document.substr(0, document.size() / 2));
    REQUIRE_FALSE(truncated.ok());
    CHECK(truncated.code() == ErrorCode::MissingNode);

    SUBCASE("the unclosed-nesting shape from runaway generation") {
        auto r = decode(R"({"quantifier": {"quantifier" : {)");
        REQUIRE_FALSE(r.ok());
        CHECK(r.code() == ErrorCode::MissingNode);
    }
    SUBCASE("empty input") {
        CHECK(decode("").code() == ErrorCode::MissingNode);
    }
}

TEST_CASE("parseable documents with bad nodes are invalid nodes") {
    SUBCASE("empty required name") {
        auto r = decode(
            R"({"type":"atomic","relation":"Student","args":[{"type":"constant","name":""}]})");
        REQUIRE_FALSE(r.ok());
        CHECK(r.code() == ErrorCode::InvalidNode);
    }
    SUBCASE("unknown tag") {
        CHECK(decode(R"({"type":"modal","relation":"P","args":[]})").code() ==
              ErrorCode::InvalidNode);
    }
    SUBCASE("argument count outside the grammar") {
        CHECK(decode(R"({"type":"atomic","relation":"P","args":[]})").code() ==
              ErrorCode::InvalidNode);
    }
    SUBCASE("operand count mismatch") {
        CHECK(decode(
                  R"({"type":"logical","operator":"And","operands":[{"type":"atomic","relation":"P","args":[{"type":"constant","name":"A"}]}]})")
                  .code() == ErrorCode::InvalidNode);
    }
    SUBCASE("non-object root") {
        CHECK(decode("42").code() == ErrorCode::InvalidNode);
    }
    SUBCASE("unknown quantifier value") {
        CHECK(decode(
                  R"({"type":"quantified","quantifier":"Most","variable":"x","body":{"type":"atomic","relation":"P","args":[{"type":"variable","name":"x"}]}})")
                  .code() == ErrorCode::InvalidNode);
    }
}

TEST_CASE("round trip holds across generated formulas up to depth 8") {
    std::mt19937 rng(20240811);
    testsupport::GenConfig cfg;
    cfg.max_depth = 8;
    for (int i = 0; i < 300; ++i) {
        testsupport::GenSignature sig = testsupport::random_signature(rng, cfg);
        Formula f = testsupport::random_formula(rng, sig, cfg.max_depth);
        auto back = decode(encode(f));
        REQUIRE(back.ok());
        CHECK(back.value() == f);
    }
}
