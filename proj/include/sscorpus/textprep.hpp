#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sscorpus/language_profile.hpp"

namespace sscorpus::textprep {

enum class TokenScheme {
  kMetric,       // mteval-13a compatible, case preserved
  kReadability,  // alphanumeric word runs, punctuation dropped
};

struct TokenizedText {
  std::vector<std::string> tokens;
  TokenScheme scheme = TokenScheme::kMetric;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  bool operator==(const TokenizedText&) const = default;
};

struct TextStats {
  std::size_t n_words = 0;
  std::size_t n_sentences = 0;
  std::size_t n_syllables = 0;

  TextStats& operator+=(const TextStats& other) {
    n_words += other.n_words;
    n_sentences += other.n_sentences;
    n_syllables += other.n_syllables;
    return *this;
  }
  bool operator==(const TextStats&) const = default;
};

// Reproduces the 13a tokenizer used by the standard BLEU toolchain: punctuation
// and symbols are split from words, periods and commas stay attached between
// digits, dashes split after digits.
TokenizedText tokenize_metric(std::string_view text);

// Words for readability counting: maximal runs of letters/digits (with marks),
// joined across internal hyphens and apostrophes, and across '.'/',' between
// digits. Hyphenated compounds and numbers are single words.
TokenizedText tokenize_words(std::string_view text, const LanguageProfile& profile);

// Sentence count. Terminal punctuation (. ! ? …) followed by whitespace, a
// closing quote/bracket or end of text closes a sentence; trailing text with no
// terminator is one more sentence. Empty or whitespace-only text has 0.
std::size_t split_sentences(std::string_view text);

// Syllables of a single word token, never below 1. Letters are counted as
// maximal vowel clusters with the profile's adjustments; a purely numeric part
// counts one syllable per digit group. Hyphenated parts are summed.
std::size_t count_syllables(std::string_view word, const LanguageProfile& profile);

TextStats text_stats(std::string_view text, const LanguageProfile& profile);

}  // namespace sscorpus::textprep
