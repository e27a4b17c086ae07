#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace framelens::text {

// A token and its byte offsets in the source string.
struct Token {
  std::string_view text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Splits on Unicode whitespace (ASCII whitespace, U+0085, U+00A0, U+1680,
// U+2000..U+200A, U+2028, U+2029, U+202F, U+205F, U+3000). Punctuation stays
// attached to its token.
std::vector<Token> split_whitespace(std::string_view s);

// Convenience wrapper over split_whitespace returning owned strings.
std::vector<std::string> words(std::string_view s);

std::size_t word_count(std::string_view s);

// Byte length of the whitespace code point starting at s[i], or 0.
std::size_t whitespace_length(std::string_view s, std::size_t i);

bool is_whitespace_only(std::string_view s);

std::string_view trim(std::string_view s);

// ASCII lowercase; bytes >= 0x80 pass through untouched.
std::string to_lower(std::string_view s);

// Collapses whitespace runs to a single space and trims the ends.
std::string normalize_whitespace(std::string_view s);

// Strips leading and trailing punctuation: ASCII punctuation plus common
// typographic quotes and dashes.
std::string_view strip_edge_punctuation(std::string_view s);

// Lowercased, edge-punctuation-stripped whitespace tokens; tokens that are
// pure punctuation are dropped. This is the matching/overlap tokenizer.
std::vector<std::string> normalized_tokens(std::string_view s);

// Python str.isupper() restricted to ASCII: at least one cased character and
// no lowercase ones.
bool is_upper(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace framelens::text
