#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sscorpus {

// Selects the language-specific vowel-cluster adjustments of the syllable counter.
enum class SyllableRules {
  kEnglish,  // aeiouy; silent final -e, -ed, -es
  kFrench,   // accented vowel set; silent final -e/-es after a consonant
  kSpanish,  // accented vowel set; strong-vowel hiatus splits a cluster
};

// Reading-ease coefficients and syllabification rules for one language.
// Reading ease = k1 - k2 * (words / sentences) - k3 * (syllables / words).
struct LanguageProfile {
  std::string lang_code;
  double k1 = 0.0;
  double k2 = 0.0;
  double k3 = 0.0;
  SyllableRules syllable_rules = SyllableRules::kEnglish;
  std::u32string vowels;

  bool is_vowel(char32_t lowered) const { return vowels.find(lowered) != std::u32string::npos; }
};

// Shipped profiles:
//   "en"       206.835 / 1.015 / 84.6
//   "fr"       207     / 1.015 / 73.6
//   "es-paper" 180     / 58.5  / 1.0   (third coefficient set, as published)
//   "es-fh"    206.84  / 1.02  / 60.0  (Fernandez-Huerta)
// Throws sscorpus::Error for unknown keys (including a bare "es").
const LanguageProfile& profile_for(std::string_view key);

std::vector<std::string> profile_keys();

const LanguageProfile& english_profile();

}  // namespace sscorpus
