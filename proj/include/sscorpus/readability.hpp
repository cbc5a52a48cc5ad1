#pragma once

#include <span>
#include <string>
#include <string_view>

#include "sscorpus/language_profile.hpp"
#include "sscorpus/textprep.hpp"

namespace sscorpus::metrics {

// Flesch Reading Ease with the profile's coefficients. Not clamped to [0, 100].
// Throws UndefinedReadability when the text has no words.
double fres(std::string_view text, const LanguageProfile& profile);
double fres(const textprep::TextStats& stats, const LanguageProfile& profile);

// Flesch-Kincaid grade level: 0.39 * w/s + 11.8 * syl/w - 15.59, English
// syllabification. Not clamped.
double fkgl(std::string_view text);
double fkgl(const textprep::TextStats& stats);

// Document-level statistics over many segments: counts are pooled, and each
// segment counts as at least one sentence.
textprep::TextStats pooled_stats(std::span<const std::string> segments, const LanguageProfile& profile);

double corpus_fres(std::span<const std::string> segments, const LanguageProfile& profile);
double corpus_fkgl(std::span<const std::string> segments);

}  // namespace sscorpus::metrics
