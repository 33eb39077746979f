#ifndef SEQTAG_UNICODE_HPP
#define SEQTAG_UNICODE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seqtag::unicode {

// Decodes UTF-8 into codepoints. Throws ParseError on malformed bytes,
// reporting the given line number and the byte offset as the column.
std::vector<char32_t> decode(std::string_view utf8, std::size_t line = 0);

// Encodes a codepoint sequence back to UTF-8.
std::string encode(const char32_t* data, std::size_t size);
std::string encode(const std::vector<char32_t>& cps);

// Number of codepoints in a valid UTF-8 string.
std::size_t length(std::string_view utf8);

// First / last n codepoints of a valid UTF-8 string. The caller must
// ensure n <= length(utf8).
std::string prefix(std::string_view utf8, std::size_t n);
std::string suffix(std::string_view utf8, std::size_t n);

// Returns true if the string is valid UTF-8.
bool valid(std::string_view utf8);

// Character classes. Coverage is ASCII plus the Ethiopic block; that is
// the script space this toolkit targets.
inline bool is_ascii_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\v' || cp == U'\f';
}

// ASCII digits and Ethiopic numerals U+1369..U+137C.
inline bool is_digit(char32_t cp) {
  return (cp >= U'0' && cp <= U'9') || (cp >= 0x1369 && cp <= 0x137C);
}

// ASCII letters and Ethiopic syllables U+1200..U+135A.
inline bool is_letter(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z') ||
         (cp >= 0x1200 && cp <= 0x135A);
}

inline bool is_alnum(char32_t cp) { return is_letter(cp) || is_digit(cp); }

// Ethiopic punctuation used by the tokenizer.
inline constexpr char32_t kEthiopicWordspace = 0x1361;  // ፡
inline constexpr char32_t kEthiopicFullStop = 0x1362;   // ።
inline constexpr char32_t kEthiopicComma = 0x1363;      // ፣

}  // namespace seqtag::unicode

#endif  // SEQTAG_UNICODE_HPP
