#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folast/ast.hpp"
#include "folast/declarations.hpp"
#include "folast/errors.hpp"

namespace folast::codegen {

enum class Target { SmtLib2, FolText };
enum class CompileMode { Translate, CheckEntails };

/// An ordered solver-language document. text() joins the sections with one
/// statement per line, single spaces, no trailing whitespace, and a trailing
/// newline, so identical inputs produce byte-identical programs.
struct TargetProgram {
    Target target = Target::SmtLib2;
    std::vector<std::string> declarations; // includes rename-map comment lines
    std::vector<std::string> assertions;
    std::optional<std::string> query;

    std::string text() const;
};

/// Second pass over one formula: recursive emission against an environment
/// built by the first pass. Every free symbol must be registered in env;
/// quantified variables are bound inline and alpha-renamed on collision so
/// bindings stay unique and properly scoped.
Result<std::string> generate_expression(const Formula& f,
                                        const DeclarationSet& env,
                                        Target target);

/// Whole-program compilation. Translate emits declarations plus one
/// assertion per premise. CheckEntails additionally asserts the negated
/// hypothesis and appends the satisfiability query; the premises entail the
/// hypothesis exactly when that query answers unsatisfiable.
Result<TargetProgram> compile_program(std::span<const Formula> premises,
                                      const std::optional<Formula>& hypothesis,
                                      CompileMode mode, Target target);

/// Display notation: unicode connectives with minimal parentheses — binary
/// and quantified operands are parenthesized, atomics and negations stay
/// bare, quantifier scope is always parenthesized.
std::string render_fol(const Formula& f);

/// SMT-LIB lexical sanitization: characters outside [A-Za-z0-9_] become
/// underscores and a leading digit gains one.
std::string sanitize_symbol(std::string_view name);

} // namespace folast::codegen
