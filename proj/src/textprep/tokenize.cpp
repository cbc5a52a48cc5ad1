#include <algorithm>

#include "sscorpus/textprep.hpp"
#include "sscorpus/unicode.hpp"

namespace sscorpus::textprep {
namespace {

using unicode::is_ascii_digit;

void replace_all(std::u32string& s, std::u32string_view from, std::u32string_view to) {
  if (s.find(from) == std::u32string::npos) return;
  std::u32string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = s.find(from, pos);
    if (hit == std::u32string::npos) break;
    out.append(s, pos, hit - pos);
    out.append(to);
    pos = hit + from.size();
  }
  out.append(s, pos, std::u32string::npos);
  s.swap(out);
}

// [\{-\~\[-\` -\&\(-\+\:-\@\/]
bool is_split_symbol(char32_t c) {
  return (c >= U'{' && c <= U'~') || (c >= U'[' && c <= U'`') || (c >= U' ' && c <= U'&') ||
         (c >= U'(' && c <= U'+') || (c >= U':' && c <= U'@') || c == U'/';
}

bool is_period_or_comma(char32_t c) { return c == U'.' || c == U','; }

// Each pass mirrors one left-to-right, non-overlapping regex substitution.
std::u32string pad_symbols(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size() * 2);
  for (char32_t c : s) {
    if (is_split_symbol(c)) {
      out.push_back(U' ');
      out.push_back(c);
      out.push_back(U' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// ([^0-9])([\.,]) -> "\1 \2 "
std::u32string split_period_after_non_digit(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size() + 8);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && !is_ascii_digit(s[i]) && is_period_or_comma(s[i + 1])) {
      out.push_back(s[i]);
      out.push_back(U' ');
      out.push_back(s[i + 1]);
      out.push_back(U' ');
      i += 2;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

// ([\.,])([^0-9]) -> " \1 \2"
std::u32string split_period_before_non_digit(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size() + 8);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && is_period_or_comma(s[i]) && !is_ascii_digit(s[i + 1])) {
      out.push_back(U' ');
      out.push_back(s[i]);
      out.push_back(U' ');
      out.push_back(s[i + 1]);
      i += 2;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

// ([0-9])(-) -> "\1 \2 "
std::u32string split_dash_after_digit(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size() + 8);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && is_ascii_digit(s[i]) && s[i + 1] == U'-') {
      out.push_back(s[i]);
      out.push_back(U' ');
      out.push_back(U'-');
      out.push_back(U' ');
      i += 2;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

std::vector<std::string> split_whitespace(std::u32string_view s) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && unicode::is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !unicode::is_space(s[i])) ++i;
    if (i > start) tokens.push_back(unicode::encode_utf8(s.substr(start, i - start)));
  }
  return tokens;
}

bool is_word_char(char32_t c) {
  return unicode::is_letter(c) || unicode::is_digit(c) || unicode::is_mark(c);
}

bool is_word_joiner(char32_t c) {
  return c == U'-' || c == U'‐' || c == U'‑' || c == U'\'' || c == U'’';
}

bool is_terminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?' || c == U'…'; }

bool is_closer(char32_t c) {
  switch (c) {
    case U'"':
    case U'\'':
    case U')':
    case U']':
    case U'}':
    case U'’':
    case U'”':
    case U'»':
      return true;
    default:
      return false;
  }
}

}  // namespace

TokenizedText tokenize_metric(std::string_view text) {
  std::u32string line = unicode::decode_utf8(text);
  replace_all(line, U"<skipped>", U"");
  replace_all(line, U"-\n", U"");
  replace_all(line, U"\n", U" ");
  if (line.find(U'&') != std::u32string::npos) {
    replace_all(line, U"&quot;", U"\"");
    replace_all(line, U"&amp;", U"&");
    replace_all(line, U"&lt;", U"<");
    replace_all(line, U"&gt;", U">");
  }
  std::u32string padded;
  padded.reserve(line.size() + 2);
  padded.push_back(U' ');
  padded.append(line);
  padded.push_back(U' ');

  std::u32string s = pad_symbols(padded);
  s = split_period_after_non_digit(s);
  s = split_period_before_non_digit(s);
  s = split_dash_after_digit(s);
  return TokenizedText{split_whitespace(s), TokenScheme::kMetric};
}

TokenizedText tokenize_words(std::string_view text, const LanguageProfile& /*profile*/) {
  const std::u32string s = unicode::decode_utf8(text);
  TokenizedText out;
  out.scheme = TokenScheme::kReadability;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_word_char(s[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < s.size()) {
      if (is_word_char(s[i])) {
        ++i;
        continue;
      }
      // A joiner stays inside the word only when word characters surround it.
      const bool next_is_word = i + 1 < s.size() && is_word_char(s[i + 1]);
      if (next_is_word && is_word_joiner(s[i])) {
        ++i;
        continue;
      }
      if (next_is_word && (s[i] == U'.' || s[i] == U',') && unicode::is_digit(s[i - 1]) &&
          unicode::is_digit(s[i + 1])) {
        ++i;
        continue;
      }
      break;
    }
    out.tokens.push_back(unicode::encode_utf8(std::u32string_view(s).substr(start, i - start)));
  }
  return out;
}

std::size_t split_sentences(std::string_view text) {
  const std::u32string s = unicode::decode_utf8(text);
  std::size_t count = 0;
  bool pending = false;  // content seen since the last sentence break
  bool any_content = false;
  std::size_t i = 0;
  while (i < s.size()) {
    const char32_t c = s[i];
    if (unicode::is_space(c)) {
      ++i;
      continue;
    }
    any_content = true;
    if (!is_terminal(c)) {
      pending = true;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && (is_terminal(s[j]) || is_closer(s[j]))) ++j;
    const bool boundary = j == s.size() || unicode::is_space(s[j]);
    if (boundary) {
      if (pending) ++count;
      pending = false;
    } else {
      pending = true;
    }
    i = j;
  }
  if (pending) ++count;
  if (count == 0 && any_content) count = 1;
  return count;
}

TextStats text_stats(std::string_view text, const LanguageProfile& profile) {
  TextStats stats;
  const TokenizedText words = tokenize_words(text, profile);
  stats.n_words = words.size();
  stats.n_sentences = split_sentences(text);
  for (const auto& word : words.tokens) stats.n_syllables += count_syllables(word, profile);
  return stats;
}

}  // namespace sscorpus::textprep
