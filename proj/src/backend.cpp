#include "folast/backend.hpp"

#include <fstream>
#include <sstream>

namespace folast::backend {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

ScriptedBackend::ScriptedBackend(std::vector<ScriptEntry> entries) {
    for (ScriptEntry& entry : entries) {
        int set = (entry.response ? 1 : 0) + (entry.raw ? 1 : 0) + (entry.fail ? 1 : 0);
        if (set != 1)
            throw ScriptMissError("script entry for (" + entry.schema_id + ", " +
                                  entry.input +
                                  ") must set exactly one of response/raw/fail");
        if (!find_schema(entry.schema_id))
            throw ScriptMissError("script entry uses unknown schema id: " +
                                  entry.schema_id);
        auto key = std::make_pair(entry.schema_id, trim(entry.input));
        if (!table_.emplace(key, std::move(entry)).second)
            throw ScriptMissError("duplicate script entry for (" + key.first + ", " +
                                  key.second + ")");
    }
}

std::vector<ScriptEntry> ScriptedBackend::parse_script(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_array())
        throw ScriptMissError("script file must be a JSON array of exchanges");
    std::vector<ScriptEntry> entries;
    for (const auto& item : doc) {
        ScriptEntry entry;
        entry.schema_id = item.at("schema_id").get<std::string>();
        entry.input = item.at("input").get<std::string>();
        if (item.contains("response")) entry.response = item.at("response");
        if (item.contains("raw")) entry.raw = item.at("raw").get<std::string>();
        if (item.contains("fail")) entry.fail = item.at("fail").get<std::string>();
        entries.push_back(std::move(entry));
    }
    return entries;
}

ScriptedBackend ScriptedBackend::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScriptMissError("cannot open script file: " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return ScriptedBackend(parse_script(buffer.str()));
}

Result<BackendResponse> ScriptedBackend::complete_structured(const PromptRequest& req) {
    const Schema& sch = schema(req.schema_id);
    auto it = table_.find(std::make_pair(req.schema_id, trim(req.user_input)));
    if (it == table_.end())
        throw ScriptMissError("no scripted exchange for schema \"" + req.schema_id +
                              "\" and input \"" + req.user_input + "\"");
    const ScriptEntry& entry = it->second;

    if (entry.fail) {
        // Timeouts and transport failures land in the missing-node bucket.
        return Error(ErrorCode::MissingNode,
                     "scripted " + *entry.fail + " failure");
    }

    std::string raw;
    nlohmann::json document;
    if (entry.raw) {
        raw = *entry.raw;
        document = nlohmann::json::parse(raw, nullptr, /*allow_exceptions=*/false);
        if (document.is_discarded())
            return Error(ErrorCode::MissingNode,
                         req.schema_id + ": completion is not parseable JSON");
    } else {
        document = *entry.response;
        raw = document.dump();
    }

    auto verified = verify_document(sch, document);
    if (!verified) return verified.error();
    return BackendResponse{std::move(verified).value(), std::move(raw), std::nullopt};
}

} // namespace folast::backend
