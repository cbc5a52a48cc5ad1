#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace sscorpus::unicode {

// Byte offset of the first ill-formed UTF-8 sequence, if any.
std::optional<std::size_t> find_invalid_utf8(std::string_view bytes);

inline bool is_valid_utf8(std::string_view bytes) { return !find_invalid_utf8(bytes).has_value(); }

// Ill-formed sequences decode to U+FFFD.
std::u32string decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

std::string to_nfc(std::string_view text);
bool is_nfc(std::string_view text);

// Full Unicode lowercase mapping (root locale).
std::string to_lower(std::string_view text);
char32_t to_lower(char32_t cp);

// Matches Python's str.isspace(), which drives whitespace splitting in the
// reference BLEU tokenizer.
bool is_space(char32_t cp);

bool is_letter(char32_t cp);
bool is_mark(char32_t cp);
bool is_digit(char32_t cp);
inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

// Strips trailing characters for which is_space() holds.
std::u32string_view rstrip(std::u32string_view text);

}  // namespace sscorpus::unicode
