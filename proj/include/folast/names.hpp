#pragma once

#include <string>
#include <string_view>

namespace folast::names {

/// Collapses runs of whitespace to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view text);

/// Lowercased, whitespace-collapsed form used for loop detection.
std::string normalized_sentence(std::string_view sentence);

/// CamelCase over word boundaries with a leading article (a/an/the) dropped:
/// "a book" -> "Book", "very tired" -> "VeryTired". Inner capitalization is
/// preserved ("TV" stays "TV").
std::string normalize_relation(std::string_view lexeme);
std::string normalize_constant(std::string_view lexeme);

/// A term name is a variable exactly when it is one of the letters the
/// quantified rewrite introduces: x, y, or z.
bool is_variable_name(std::string_view name);

} // namespace folast::names
