#include "fol_reader.hpp"

#include <cctype>

namespace testsupport {

using namespace folast;

namespace {

constexpr std::string_view kForAll = "∀";
constexpr std::string_view kExists = "∃";
constexpr std::string_view kNot = "¬";
constexpr std::string_view kAnd = "∧";
constexpr std::string_view kOr = "∨";
constexpr std::string_view kImplies = "→";

struct Reader {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(std::string_view token) {
        skip_ws();
        if (text.substr(pos, token.size()) == token) {
            pos += token.size();
            return true;
        }
        return false;
    }

    bool peek(std::string_view token) {
        skip_ws();
        return text.substr(pos, token.size()) == token;
    }

    Result<std::string> name() {
        skip_ws();
        std::size_t begin = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            ++pos;
        if (pos == begin)
            return Error(ErrorCode::InvalidNode,
                         "reader: expected a name at offset " + std::to_string(begin));
        return std::string(text.substr(begin, pos - begin));
    }

    static bool variable_name(const std::string& n) {
        if (n.empty()) return false;
        if (n[0] != 'x' && n[0] != 'y' && n[0] != 'z') return false;
        for (std::size_t i = 1; i < n.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(n[i]))) return false;
        return true;
    }

    Result<Formula> atom_tail(std::string relation) {
        if (!eat("("))
            return Error(ErrorCode::InvalidNode, "reader: expected ( after relation");
        std::vector<Term> args;
        for (;;) {
            auto n = name();
            if (!n) return n.error();
            args.push_back(variable_name(n.value()) ? Term::variable(n.value())
                                                    : Term::constant(n.value()));
            if (eat(",")) continue;
            break;
        }
        if (!eat(")"))
            return Error(ErrorCode::InvalidNode, "reader: expected ) after arguments");
        return atom(std::move(relation), std::move(args));
    }

    Result<Formula> operand() {
        if (eat(kNot)) {
            auto inner = operand();
            if (!inner) return inner;
            return negation(std::move(inner).value());
        }
        if (peek(kForAll) || peek(kExists)) {
            Quantifier q = eat(kForAll) ? Quantifier::ForAll
                                        : (eat(kExists), Quantifier::Exists);
            auto var = name();
            if (!var) return var.error();
            if (!eat("("))
                return Error(ErrorCode::InvalidNode,
                             "reader: expected ( for quantifier scope");
            auto body = formula();
            if (!body) return body;
            if (!eat(")"))
                return Error(ErrorCode::InvalidNode,
                             "reader: expected ) closing quantifier scope");
            return quantified(q, std::move(var).value(), std::move(body).value());
        }
        if (eat("(")) {
            auto inner = formula();
            if (!inner) return inner;
            if (!eat(")"))
                return Error(ErrorCode::InvalidNode, "reader: expected )");
            return inner;
        }
        auto n = name();
        if (!n) return n.error();
        return atom_tail(std::move(n.value()));
    }

    Result<Formula> formula() {
        auto left = operand();
        if (!left) return left;
        skip_ws();
        if (eat(kAnd)) {
            auto right = operand();
            if (!right) return right;
            return conjunction(std::move(left).value(), std::move(right).value());
        }
        if (eat(kOr)) {
            auto right = operand();
            if (!right) return right;
            return disjunction(std::move(left).value(), std::move(right).value());
        }
        if (eat(kImplies)) {
            auto right = operand();
            if (!right) return right;
            return implication(std::move(left).value(), std::move(right).value());
        }
        return left;
    }
};

} // namespace

Result<Formula> read_fol(std::string_view text) {
    Reader reader{text};
    auto result = reader.formula();
    if (!result) return result;
    reader.skip_ws();
    if (reader.pos != text.size())
        return Error(ErrorCode::InvalidNode,
                     "reader: trailing input at offset " + std::to_string(reader.pos));
    return result;
}

} // namespace testsupport
