#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "folast/errors.hpp"

namespace folast::preprocess {

enum class SegmenterMode { RuleBased, External };

/// Abbreviations whose trailing period never ends a sentence. Seeded with
/// common honorifics and geographic/citation shorthands; extensible through
/// a one-entry-per-line config file.
std::set<std::string> default_abbreviations();

struct SegmenterConfig {
    SegmenterMode mode = SegmenterMode::RuleBased;
    std::set<std::string> abbreviations = default_abbreviations();
    /// External mode: an http(s):// endpoint returning a JSON sentence
    /// array, or a shell command reading the document on stdin and writing
    /// newline-delimited sentences.
    std::string external_command_or_endpoint;
    /// Fall back to the rule-based splitter when the external segmenter
    /// fails. Off by default: transport failures should be visible.
    bool fallback_to_rules = false;
    int timeout_ms = 30000;
};

/// Loads extra abbreviations, one per line; '#' starts a comment.
std::set<std::string> load_abbreviations(const std::string& path);

/// Splits a document into sentences. The outputs are trimmed slices of the
/// input: joining them with single spaces preserves the document's
/// non-whitespace token sequence, and no output sentence is empty.
Result<std::vector<std::string>> segment(std::string_view document,
                                         const SegmenterConfig& config = {});

} // namespace folast::preprocess
