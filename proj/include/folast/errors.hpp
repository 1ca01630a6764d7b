#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace folast {

/// Failure taxonomy shared across the pipeline. MissingNode and InvalidNode
/// mirror the two syntax-error classes counted by the benchmark metrics;
/// the rest are guard and infrastructure failures.
enum class ErrorCode {
    MissingNode,      // unparseable/truncated document, or transport failure
    InvalidNode,      // structurally parsed but a required field is empty/bad
    DepthExceeded,    // recursion guard tripped
    LoopDetected,     // normalized sentence revisited on one recursion path
    ArityMismatch,    // one relation used with two different arities
    UndeclaredSymbol, // emission hit a symbol absent from the environment
    SolverNotFound,   // solver command could not be spawned
    SolverCrashed,    // solver exited nonzero without an answer token
    BudgetExceeded,   // brute-force enumeration passed its work cap
};

const char* to_string(ErrorCode code);

struct Error {
    ErrorCode code;
    std::string detail;

    Error(ErrorCode c, std::string d = {}) : code(c), detail(std::move(d)) {}
};

/// Minimal expected-like result. Errors are data here, not exceptions:
/// the benchmark metrics count them.
template <class T>
class Result {
public:
    Result(T value) : v_(std::move(value)) {}
    Result(Error error) : v_(std::move(error)) {}
    Result(ErrorCode code, std::string detail = {})
        : v_(Error(code, std::move(detail))) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    T& value() & { return std::get<T>(v_); }
    const T& value() const& { return std::get<T>(v_); }
    T&& value() && { return std::get<T>(std::move(v_)); }

    const Error& error() const { return std::get<Error>(v_); }
    ErrorCode code() const { return error().code; }

private:
    std::variant<T, Error> v_;
};

/// Thrown when a scripted test backend is asked for an exchange it does not
/// have. This is test misconfiguration, never a model error, so it must not
/// blend into the MissingNode/InvalidNode counts.
class ScriptMissError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace folast
