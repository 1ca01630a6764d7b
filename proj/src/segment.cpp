#include "folast/segment.hpp"

#include <cctype>
#include <fstream>

#include <httplib.h>
#include <json.hpp>

#include "folast/proc.hpp"

namespace folast::preprocess {

namespace {

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }
bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

/// Token ending at position `dot` (inclusive), scanned back to whitespace.
std::string token_ending_at(std::string_view text, size_t dot) {
    size_t begin = dot;
    while (begin > 0 &&
           !std::isspace(static_cast<unsigned char>(text[begin - 1])))
        --begin;
    return std::string(text.substr(begin, dot - begin + 1));
}

bool single_initial(const std::string& token) {
    return token.size() == 2 && std::isupper(static_cast<unsigned char>(token[0])) &&
           token[1] == '.';
}

std::vector<std::string> rule_based_segment(std::string_view document,
                                            const std::set<std::string>& abbrevs) {
    std::set<std::string> lowered;
    for (const std::string& a : abbrevs) lowered.insert(lower(a));

    std::vector<std::string> sentences;
    size_t start = 0;
    for (size_t i = 0; i < document.size(); ++i) {
        if (!is_terminator(document[i])) continue;

        size_t end = i;
        while (end + 1 < document.size() && is_closer(document[end + 1])) ++end;
        bool at_eof = end + 1 >= document.size();
        if (!at_eof && !std::isspace(static_cast<unsigned char>(document[end + 1])))
            continue; // mid-token punctuation: decimals, e.g., U.S
        if (document[i] == '.') {
            std::string token = token_ending_at(document, i);
            if (lowered.count(lower(token)) || single_initial(token)) continue;
            if (!at_eof) {
                size_t next = end + 1;
                while (next < document.size() &&
                       std::isspace(static_cast<unsigned char>(document[next])))
                    ++next;
                if (next >= document.size()) {
                    at_eof = true;
                } else {
                    char c = document[next];
                    bool sentence_start =
                        std::isupper(static_cast<unsigned char>(c)) ||
                        std::isdigit(static_cast<unsigned char>(c)) || c == '"' ||
                        c == '\'';
                    if (!sentence_start) continue;
                }
            }
        }

        std::string sentence = trim(document.substr(start, end + 1 - start));
        if (!sentence.empty()) sentences.push_back(std::move(sentence));
        start = end + 1;
        i = end;
    }
    std::string tail = trim(document.substr(start));
    if (!tail.empty()) sentences.push_back(std::move(tail));
    return sentences;
}

Result<std::vector<std::string>> external_segment(std::string_view document,
                                                  const SegmenterConfig& config) {
    const std::string& target = config.external_command_or_endpoint;
    if (target.rfind("http://", 0) == 0 || target.rfind("https://", 0) == 0) {
        auto scheme_end = target.find("://");
        auto path_start = target.find('/', scheme_end + 3);
        std::string base = path_start == std::string::npos
                               ? target
                               : target.substr(0, path_start);
        std::string path =
            path_start == std::string::npos ? "/" : target.substr(path_start);
        httplib::Client client(base);
        client.set_read_timeout(std::chrono::milliseconds(config.timeout_ms));
        auto res = client.Post(path, std::string(document), "text/plain");
        if (!res || res->status != 200)
            return Error(ErrorCode::MissingNode,
                         "external segmenter endpoint failed: " +
                             (res ? std::to_string(res->status)
                                  : httplib::to_string(res.error())));
        nlohmann::json j =
            nlohmann::json::parse(res->body, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded() || !j.is_array())
            return Error(ErrorCode::MissingNode,
                         "external segmenter returned a non-array response");
        std::vector<std::string> sentences;
        for (const auto& item : j) {
            std::string s = trim(item.get<std::string>());
            if (!s.empty()) sentences.push_back(std::move(s));
        }
        return sentences;
    }

    proc::RunResult run = proc::run_process(target, document, config.timeout_ms);
    if (run.status != proc::RunStatus::Exited || run.exit_code != 0)
        return Error(ErrorCode::MissingNode,
                     "external segmenter command failed (status " +
                         std::to_string(run.exit_code) + ")");
    std::vector<std::string> sentences;
    size_t pos = 0;
    while (pos <= run.output.size()) {
        size_t nl = run.output.find('\n', pos);
        std::string line = trim(nl == std::string::npos
                                    ? run.output.substr(pos)
                                    : run.output.substr(pos, nl - pos));
        if (!line.empty()) sentences.push_back(std::move(line));
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return sentences;
}

} // namespace

std::set<std::string> default_abbreviations() {
    return {
        "Mr.",   "Mrs.",  "Ms.",   "Dr.",   "Prof.", "Sr.",   "Jr.",  "St.",
        "Mt.",   "U.S.",  "U.K.",  "U.N.",  "E.U.",  "e.g.",  "i.e.", "etc.",
        "vs.",   "cf.",   "Fig.",  "No.",   "Vol.",  "Inc.",  "Ltd.", "Co.",
        "Corp.", "Jan.",  "Feb.",  "Mar.",  "Apr.",  "Jun.",  "Jul.", "Aug.",
        "Sep.",  "Sept.", "Oct.",  "Nov.",  "Dec.",  "Ave.",  "Blvd.", "Rd.",
    };
}

std::set<std::string> load_abbreviations(const std::string& path) {
    std::set<std::string> abbrevs = default_abbreviations();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open abbreviation file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        std::string entry = trim(line);
        if (entry.empty() || entry[0] == '#') continue;
        abbrevs.insert(entry);
    }
    return abbrevs;
}

Result<std::vector<std::string>> segment(std::string_view document,
                                         const SegmenterConfig& config) {
    if (config.mode == SegmenterMode::External) {
        if (config.external_command_or_endpoint.empty())
            throw std::invalid_argument(
                "segment: External mode needs a command or endpoint");
        auto result = external_segment(document, config);
        if (!result && config.fallback_to_rules)
            return rule_based_segment(document, config.abbreviations);
        return result;
    }
    return rule_based_segment(document, config.abbreviations);
}

} // namespace folast::preprocess
