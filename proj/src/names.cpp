#include "folast/names.hpp"

#include <cctype>
#include <vector>

namespace folast::names {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    std::string current;
    for (char c : text) {
        if (is_alnum(c)) {
            current.push_back(c);
        } else if (!current.empty()) {
            words.push_back(current);
            current.clear();
        }
    }
    if (!current.empty()) words.push_back(current);
    return words;
}

bool is_article(const std::string& word) {
    std::string lower;
    for (char c : word) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return lower == "a" || lower == "an" || lower == "the";
}

std::string camel_case_stripped(std::string_view lexeme) {
    std::vector<std::string> words = split_words(lexeme);
    if (words.size() > 1 && is_article(words.front()))
        words.erase(words.begin());
    std::string out;
    for (std::string& w : words) {
        w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
        out += w;
    }
    return out;
}

} // namespace

std::string collapse_whitespace(std::string_view text) {
    std::string out;
    bool pending_space = false;
    for (char c : text) {
        if (is_space(c)) {
            if (!out.empty()) pending_space = true;
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    return out;
}

std::string normalized_sentence(std::string_view sentence) {
    std::string out = collapse_whitespace(sentence);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string normalize_relation(std::string_view lexeme) {
    return camel_case_stripped(lexeme);
}

std::string normalize_constant(std::string_view lexeme) {
    return camel_case_stripped(lexeme);
}

bool is_variable_name(std::string_view name) {
    return name == "x" || name == "y" || name == "z";
}

} // namespace folast::names
