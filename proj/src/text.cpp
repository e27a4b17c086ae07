#include "framelens/text.hpp"

#include <algorithm>
#include <array>

namespace framelens::text {
namespace {

// Decodes the UTF-8 code point at s[i]; returns {code point, byte length}.
// Invalid sequences decode as a single byte.
std::pair<char32_t, std::size_t> decode(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {b0, 1};
  }
  if (i + len > s.size()) return {b0, 1};
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {b0, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
    case 0x1C: case 0x1D: case 0x1E: case 0x1F: case 0x20:
    case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_punct_cp(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  static constexpr std::array<char32_t, 14> kTypographic = {
      0x2018, 0x2019, 0x201A, 0x201B, 0x201C, 0x201D, 0x201E,
      0x2013, 0x2014, 0x2026, 0x00AB, 0x00BB, 0x2032, 0x2033};
  return std::find(kTypographic.begin(), kTypographic.end(), cp) != kTypographic.end();
}

// Byte length of the code point ending at s[end - 1].
std::size_t last_cp_start(std::string_view s, std::size_t end) {
  std::size_t i = end - 1;
  while (i > 0 && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80 && end - i < 4) --i;
  return i;
}

}  // namespace

std::size_t whitespace_length(std::string_view s, std::size_t i) {
  auto [cp, len] = decode(s, i);
  return is_space_cp(cp) ? len : 0;
}

std::vector<Token> split_whitespace(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t start = std::string_view::npos;
  while (i < s.size()) {
    const std::size_t ws = whitespace_length(s, i);
    if (ws > 0) {
      if (start != std::string_view::npos) {
        out.push_back({s.substr(start, i - start), start, i});
        start = std::string_view::npos;
      }
      i += ws;
    } else {
      if (start == std::string_view::npos) start = i;
      i += decode(s, i).second;
    }
  }
  if (start != std::string_view::npos) out.push_back({s.substr(start), start, s.size()});
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& t : split_whitespace(s)) out.emplace_back(t.text);
  return out;
}

std::size_t word_count(std::string_view s) { return split_whitespace(s).size(); }

bool is_whitespace_only(std::string_view s) { return split_whitespace(s).empty(); }

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  while (b < s.size()) {
    const std::size_t ws = whitespace_length(s, b);
    if (ws == 0) break;
    b += ws;
  }
  std::size_t e = s.size();
  while (e > b) {
    const std::size_t start = last_cp_start(s, e);
    if (whitespace_length(s, start) != e - start) break;
    e = start;
  }
  return s.substr(b, e - b);
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string normalize_whitespace(std::string_view s) {
  std::string out;
  for (const auto& t : split_whitespace(s)) {
    if (!out.empty()) out.push_back(' ');
    out.append(t.text);
  }
  return out;
}

std::string_view strip_edge_punctuation(std::string_view s) {
  std::size_t b = 0;
  while (b < s.size()) {
    auto [cp, len] = decode(s, b);
    if (!is_punct_cp(cp)) break;
    b += len;
  }
  std::size_t e = s.size();
  while (e > b) {
    const std::size_t start = last_cp_start(s, e);
    auto [cp, len] = decode(s, start);
    if (start + len != e || !is_punct_cp(cp)) break;
    e = start;
  }
  return s.substr(b, e - b);
}

std::vector<std::string> normalized_tokens(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& t : split_whitespace(s)) {
    auto stripped = strip_edge_punctuation(t.text);
    if (!stripped.empty()) out.push_back(to_lower(stripped));
  }
  return out;
}

bool is_upper(std::string_view s) {
  bool cased = false;
  for (char c : s) {
    if (c >= 'a' && c <= 'z') return false;
    if (c >= 'A' && c <= 'Z') cased = true;
  }
  return cased;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

}  // namespace framelens::text
