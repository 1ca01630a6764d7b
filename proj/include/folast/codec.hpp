#pragma once

#include <string>
#include <string_view>

#include "folast/ast.hpp"
#include "folast/errors.hpp"

namespace folast {

/// Canonical AST document: compact JSON with the fixed key order documented
/// in docs/ast-schema.md and a single trailing newline. Byte-deterministic,
/// so golden files diff cleanly.
std::string encode(const Formula& f);

/// Inverse of encode, strict. Bytes that do not parse as JSON are a
/// MissingNode failure (truncated or otherwise ill-formed documents);
/// documents that parse but carry a bad node — unknown tag, missing or
/// mistyped field, empty identifier, argument or operand count outside the
/// grammar — are InvalidNode. Unknown extra keys are ignored.
Result<Formula> decode(std::string_view document);

} // namespace folast
