#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "folast/errors.hpp"
#include "folast/schemas.hpp"

namespace folast::backend {

struct TokenUsage {
    long prompt_tokens = 0;
    long completion_tokens = 0;
};

struct PromptRequest {
    std::string schema_id;    // must name a registered schema
    std::string system_prompt;
    std::string user_input;   // the sentence being parsed, non-empty
    int max_tokens = 512;
    double temperature = 0.0; // deterministic decoding by default
};

struct BackendResponse {
    nlohmann::json document; // schema-verified, canonical keys
    std::string raw;         // original completion text
    std::optional<TokenUsage> usage;
};

/// Structured-output completion. Implementations return either a document
/// verified against the request's schema or a typed failure: MissingNode for
/// unparseable/truncated output and transport failures, InvalidNode for
/// schema-shaped output with an empty or out-of-range required field.
class Backend {
public:
    virtual ~Backend() = default;
    virtual Result<BackendResponse> complete_structured(const PromptRequest& req) = 0;
};

/// One canned exchange. Exactly one of `response` (a JSON document),
/// `raw` (verbatim completion text, may be garbage), or `fail`
/// ("timeout" | "transport") must be set.
struct ScriptEntry {
    std::string schema_id;
    std::string input;
    std::optional<nlohmann::json> response;
    std::optional<std::string> raw;
    std::optional<std::string> fail;
};

/// Deterministic replay backend for tests and offline runs. Lookup is by
/// exact (schema_id, trimmed input); asking for an unscripted pair throws
/// ScriptMissError — a script hole is test misconfiguration, never data.
/// Read-only after construction, so shareable across threads.
class ScriptedBackend final : public Backend {
public:
    explicit ScriptedBackend(std::vector<ScriptEntry> entries);

    static ScriptedBackend from_file(const std::filesystem::path& path);
    static std::vector<ScriptEntry> parse_script(std::string_view text);

    Result<BackendResponse> complete_structured(const PromptRequest& req) override;

private:
    std::map<std::pair<std::string, std::string>, ScriptEntry> table_;
};

struct HttpBackendConfig {
    std::string endpoint;   // e.g. http://host:port/v1/chat/completions
    std::string model;
    std::string api_key;    // optional; sent as a bearer token when set
    int timeout_ms = 30000;
    int max_retries = 2;    // transport errors only; schema failures never retry
    int concurrency = 4;    // max in-flight requests
};

/// Chat-completion client. Sends system+user messages with a response-format
/// field embedding the schema, and re-verifies the returned document locally
/// regardless of what the server enforced.
class HttpBackend final : public Backend {
public:
    explicit HttpBackend(HttpBackendConfig config);
    ~HttpBackend() override;

    Result<BackendResponse> complete_structured(const PromptRequest& req) override;

    /// The request body that would be sent; exposed for tests.
    nlohmann::json build_request_body(const PromptRequest& req) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace folast::backend
