#include "sscorpus/textprep.hpp"
#include "sscorpus/unicode.hpp"

namespace sscorpus::textprep {
namespace {

bool is_hyphen(char32_t c) { return c == U'-' || c == U'‐' || c == U'‑'; }
bool is_apostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

std::size_t english_adjust(const std::u32string& w, const LanguageProfile& p, std::size_t clusters) {
  if (clusters <= 1) return clusters;
  const std::size_t n = w.size();
  auto consonant = [&](std::size_t i) { return !p.is_vowel(w[i]); };
  if (n >= 2 && w[n - 1] == U'e' && consonant(n - 2)) {
    // -le after a consonant is voiced: ta-ble, lit-tle.
    if (w[n - 2] == U'l' && n >= 3 && consonant(n - 3)) return clusters;
    return clusters - 1;
  }
  if (n >= 3 && w[n - 1] == U'd' && w[n - 2] == U'e' && consonant(n - 3)) {
    if (w[n - 3] == U't' || w[n - 3] == U'd') return clusters;
    return clusters - 1;
  }
  if (n >= 3 && w[n - 1] == U's' && w[n - 2] == U'e' && consonant(n - 3)) {
    const char32_t c = w[n - 3];
    if (c == U's' || c == U'x' || c == U'z' || c == U'c' || c == U'g') return clusters;
    if (c == U'h' && n >= 4 && (w[n - 4] == U'c' || w[n - 4] == U's')) return clusters;
    if (c == U'l' && n >= 4 && consonant(n - 4)) return clusters;
    return clusters - 1;
  }
  return clusters;
}

std::size_t french_adjust(const std::u32string& w, const LanguageProfile& p, std::size_t clusters) {
  if (clusters <= 1) return clusters;
  const std::size_t n = w.size();
  if (n >= 2 && w[n - 1] == U'e' && !p.is_vowel(w[n - 2])) return clusters - 1;
  if (n >= 3 && w[n - 1] == U's' && w[n - 2] == U'e' && !p.is_vowel(w[n - 3])) return clusters - 1;
  return clusters;
}

// Strong vowels (and accented i/u) next to each other form a hiatus.
bool spanish_strong(char32_t c) {
  switch (c) {
    case U'a':
    case U'e':
    case U'o':
    case U'á':
    case U'é':
    case U'ó':
    case U'í':
    case U'ú':
      return true;
    default:
      return false;
  }
}

// Counts syllables in a lowercased, letters-only string.
std::size_t letter_syllables(const std::u32string& w, const LanguageProfile& p) {
  std::size_t clusters = 0;
  std::size_t i = 0;
  while (i < w.size()) {
    if (!p.is_vowel(w[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < w.size() && p.is_vowel(w[i])) ++i;
    ++clusters;
    if (p.syllable_rules == SyllableRules::kSpanish) {
      for (std::size_t k = start + 1; k < i; ++k) {
        if (spanish_strong(w[k - 1]) && spanish_strong(w[k])) ++clusters;
      }
    }
  }
  switch (p.syllable_rules) {
    case SyllableRules::kEnglish:
      clusters = english_adjust(w, p, clusters);
      break;
    case SyllableRules::kFrench:
      clusters = french_adjust(w, p, clusters);
      break;
    case SyllableRules::kSpanish:
      break;
  }
  return clusters;
}

}  // namespace

std::size_t count_syllables(std::string_view word, const LanguageProfile& profile) {
  const std::u32string s = unicode::decode_utf8(word);
  std::size_t total = 0;
  std::u32string letters;
  std::size_t digit_groups = 0;
  bool in_digits = false;
  bool part_has_letters = false;

  auto flush_part = [&] {
    if (part_has_letters) {
      total += letter_syllables(letters, profile);
    } else {
      total += digit_groups;
    }
    letters.clear();
    digit_groups = 0;
    in_digits = false;
    part_has_letters = false;
  };

  for (char32_t c : s) {
    if (is_hyphen(c)) {
      flush_part();
      continue;
    }
    if (is_apostrophe(c)) continue;
    if (unicode::is_digit(c)) {
      if (!in_digits) ++digit_groups;
      in_digits = true;
      continue;
    }
    in_digits = false;
    if (unicode::is_letter(c)) {
      letters.push_back(unicode::to_lower(c));
      part_has_letters = true;
    }
  }
  flush_part();
  return total == 0 ? 1 : total;
}

}  // namespace sscorpus::textprep
