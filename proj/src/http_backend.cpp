#include <chrono>
#include <mutex>
#include <stdexcept>

#include <httplib.h>

#include "folast/backend.hpp"
#include "folast/prompts.hpp"

namespace folast::backend {

namespace {

struct ParsedEndpoint {
    std::string base; // scheme://host[:port]
    std::string path; // /v1/chat/completions
};

ParsedEndpoint parse_endpoint(const std::string& endpoint) {
    auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string::npos)
        throw std::invalid_argument("endpoint must include a scheme: " + endpoint);
    auto path_start = endpoint.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {endpoint, "/v1/chat/completions"};
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

/// Counting semaphore bounding in-flight requests (gcc 11 ships
/// std::counting_semaphore, but a condvar keeps the limit runtime-chosen).
class Gate {
public:
    explicit Gate(int limit) : slots_(limit > 0 ? limit : 1) {}
    void acquire() {
        std::unique_lock lock(m_);
        cv_.wait(lock, [&] { return slots_ > 0; });
        --slots_;
    }
    void release() {
        std::lock_guard lock(m_);
        ++slots_;
        cv_.notify_one();
    }

private:
    std::mutex m_;
    std::condition_variable cv_;
    int slots_;
};

} // namespace

struct HttpBackend::Impl {
    HttpBackendConfig config;
    ParsedEndpoint endpoint;
    Gate gate;

    Impl(HttpBackendConfig cfg)
        : config(std::move(cfg)),
          endpoint(parse_endpoint(config.endpoint)),
          gate(config.concurrency) {}
};

HttpBackend::HttpBackend(HttpBackendConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

HttpBackend::~HttpBackend() = default;

nlohmann::json HttpBackend::build_request_body(const PromptRequest& req) const {
    const Schema& sch = schema(req.schema_id);
    nlohmann::json body = {
        {"model", impl_->config.model},
        {"messages",
         {{{"role", "system"}, {"content", req.system_prompt}},
          {{"role", "user"}, {"content", req.user_input}}}},
        {"temperature", req.temperature},
        {"max_tokens", req.max_tokens},
        {"response_format",
         {{"type", "json_schema"},
          {"json_schema",
           {{"name", sch.id}, {"strict", true}, {"schema", sch.json_schema()}}}}},
    };
    return body;
}

Result<BackendResponse> HttpBackend::complete_structured(const PromptRequest& req) {
    if (req.user_input.find_first_not_of(" \t\r\n") == std::string::npos)
        throw std::invalid_argument("complete_structured: empty user input");
    const Schema& sch = schema(req.schema_id);
    nlohmann::json body = build_request_body(req);

    impl_->gate.acquire();
    struct Release {
        Gate& g;
        ~Release() { g.release(); }
    } release{impl_->gate};

    httplib::Client client(impl_->endpoint.base);
    const int timeout_ms = impl_->config.timeout_ms;
    client.set_connection_timeout(std::chrono::milliseconds(timeout_ms));
    client.set_read_timeout(std::chrono::milliseconds(timeout_ms));
    client.set_write_timeout(std::chrono::milliseconds(timeout_ms));
    httplib::Headers headers;
    if (!impl_->config.api_key.empty())
        headers.emplace("Authorization", "Bearer " + impl_->config.api_key);

    // Transport failures retry up to the bound; anything the model said,
    // however broken, is final — retrying would bias the error metrics.
    std::string last_transport_error;
    for (int attempt = 0; attempt <= impl_->config.max_retries; ++attempt) {
        httplib::Result res =
            client.Post(impl_->endpoint.path, headers, body.dump(), "application/json");
        if (!res) {
            last_transport_error = httplib::to_string(res.error());
            continue;
        }
        if (res->status >= 500) {
            last_transport_error = "server status " + std::to_string(res->status);
            continue;
        }
        if (res->status != 200)
            return Error(ErrorCode::MissingNode,
                         "endpoint returned status " + std::to_string(res->status) +
                             ": " + res->body);

        nlohmann::json envelope =
            nlohmann::json::parse(res->body, nullptr, /*allow_exceptions=*/false);
        if (envelope.is_discarded() || !envelope.contains("choices") ||
            !envelope["choices"].is_array() || envelope["choices"].empty())
            return Error(ErrorCode::MissingNode, "malformed completion envelope");

        const auto& choice = envelope["choices"][0];
        if (!choice.contains("message") || !choice["message"].contains("content") ||
            !choice["message"]["content"].is_string())
            return Error(ErrorCode::MissingNode, "completion has no message content");
        std::string raw = choice["message"]["content"].get<std::string>();

        nlohmann::json document =
            nlohmann::json::parse(raw, nullptr, /*allow_exceptions=*/false);
        if (document.is_discarded())
            return Error(ErrorCode::MissingNode,
                         req.schema_id + ": completion is not parseable JSON");

        auto verified = verify_document(sch, document);
        if (!verified) return verified.error();

        std::optional<TokenUsage> usage;
        if (envelope.contains("usage") && envelope["usage"].is_object()) {
            TokenUsage u;
            u.prompt_tokens = envelope["usage"].value("prompt_tokens", 0L);
            u.completion_tokens = envelope["usage"].value("completion_tokens", 0L);
            usage = u;
        }
        return BackendResponse{std::move(verified).value(), std::move(raw), usage};
    }
    return Error(ErrorCode::MissingNode,
                 "transport failure after retries: " + last_transport_error);
}

} // namespace folast::backend
