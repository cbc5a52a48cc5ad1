#include "sscorpus/language_profile.hpp"

#include <array>

#include "sscorpus/error.hpp"

namespace sscorpus {
namespace {

const std::array<LanguageProfile, 4>& registry() {
  static const std::array<LanguageProfile, 4> profiles = {
      LanguageProfile{"en", 206.835, 1.015, 84.6, SyllableRules::kEnglish, U"aeiouy"},
      LanguageProfile{"fr", 207.0, 1.015, 73.6, SyllableRules::kFrench,
                      U"aeiouyàâäéèêëîïôöùûüÿæœ"},
      LanguageProfile{"es-paper", 180.0, 58.5, 1.0, SyllableRules::kSpanish,
                      U"aeiouáéíóúü"},
      LanguageProfile{"es-fh", 206.84, 1.02, 60.0, SyllableRules::kSpanish,
                      U"aeiouáéíóúü"},
  };
  return profiles;
}

}  // namespace

const LanguageProfile& profile_for(std::string_view key) {
  for (const auto& profile : registry()) {
    if (profile.lang_code == key) return profile;
  }
  if (key == "es") {
    throw Error("ambiguous language profile 'es': choose 'es-paper' or 'es-fh'");
  }
  throw Error("unknown language profile '" + std::string(key) + "'");
}

std::vector<std::string> profile_keys() {
  std::vector<std::string> keys;
  for (const auto& profile : registry()) keys.push_back(profile.lang_code);
  return keys;
}

const LanguageProfile& english_profile() { return registry()[0]; }

}  // namespace sscorpus
