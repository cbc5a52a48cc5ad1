#include "sscorpus/readability.hpp"

#include <algorithm>

#include "sscorpus/error.hpp"

namespace sscorpus::metrics {

double fres(const textprep::TextStats& stats, const LanguageProfile& profile) {
  if (stats.n_words == 0 || stats.n_sentences == 0) throw UndefinedReadability();
  const double words = static_cast<double>(stats.n_words);
  const double words_per_sentence = words / static_cast<double>(stats.n_sentences);
  const double syllables_per_word = static_cast<double>(stats.n_syllables) / words;
  return profile.k1 - profile.k2 * words_per_sentence - profile.k3 * syllables_per_word;
}

double fres(std::string_view text, const LanguageProfile& profile) {
  return fres(textprep::text_stats(text, profile), profile);
}

double fkgl(const textprep::TextStats& stats) {
  if (stats.n_words == 0 || stats.n_sentences == 0) throw UndefinedReadability();
  const double words = static_cast<double>(stats.n_words);
  const double words_per_sentence = words / static_cast<double>(stats.n_sentences);
  const double syllables_per_word = static_cast<double>(stats.n_syllables) / words;
  return 0.39 * words_per_sentence + 11.8 * syllables_per_word - 15.59;
}

double fkgl(std::string_view text) { return fkgl(textprep::text_stats(text, english_profile())); }

textprep::TextStats pooled_stats(std::span<const std::string> segments, const LanguageProfile& profile) {
  textprep::TextStats total;
  for (const auto& segment : segments) {
    textprep::TextStats stats = textprep::text_stats(segment, profile);
    stats.n_sentences = std::max<std::size_t>(stats.n_sentences, 1);
    total += stats;
  }
  return total;
}

double corpus_fres(std::span<const std::string> segments, const LanguageProfile& profile) {
  return fres(pooled_stats(segments, profile), profile);
}

double corpus_fkgl(std::span<const std::string> segments) {
  return fkgl(pooled_stats(segments, english_profile()));
}

}  // namespace sscorpus::metrics
