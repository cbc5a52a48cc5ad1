#include <cmath>

#include "sscorpus/bleu.hpp"
#include "sscorpus/error.hpp"
#include "sscorpus/parallel.hpp"
#include "sscorpus/pipeline.hpp"
#include "sscorpus/readability.hpp"
#include "sscorpus/unicode.hpp"

namespace sscorpus::pipeline {

void SelectorConfig::validate() const {
  if (!(h_bleu >= 0.0 && h_bleu <= 100.0)) {
    throw Error("h_bleu must lie in [0, 100], got " + std::to_string(h_bleu));
  }
  if (!(h_fres >= 0.0) || !std::isfinite(h_fres)) {
    throw Error("h_fres must be a finite value >= 0, got " + std::to_string(h_fres));
  }
}

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kSimpleFromTranslation:
      return "translation";
    case Provenance::kSimpleFromSource:
      return "source";
    case Provenance::kUnlabeled:
      return "unlabeled";
  }
  return "unlabeled";
}

Provenance provenance_from_string(std::string_view text) {
  if (text == "translation") return Provenance::kSimpleFromTranslation;
  if (text == "source") return Provenance::kSimpleFromSource;
  if (text == "unlabeled") return Provenance::kUnlabeled;
  throw Error("unknown provenance '" + std::string(text) + "'");
}

DropTally& DropTally::operator+=(const DropTally& other) {
  input += other.input;
  identity += other.identity;
  bleu += other.bleu;
  no_words += other.no_words;
  fres += other.fres;
  duplicate += other.duplicate;
  kept += other.kept;
  return *this;
}

std::vector<SentencePair> generate_pseudo_pairs(std::span<const std::string> bitext_targets,
                                                std::span<const std::string> translations,
                                                std::size_t first_index) {
  if (bitext_targets.size() != translations.size()) {
    throw Error("stream length mismatch: " + std::to_string(bitext_targets.size()) + " source lines vs " +
                std::to_string(translations.size()) + " translation lines");
  }
  std::vector<SentencePair> pairs(bitext_targets.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pairs[i].source_sentence = bitext_targets[i];
    pairs[i].translated_sentence = translations[i];
    pairs[i].index = first_index + i;
  }
  return pairs;
}

bool is_identity(const SentencePair& pair) {
  if (pair.source_sentence == pair.translated_sentence) return true;
  return unicode::to_nfc(pair.source_sentence) == unicode::to_nfc(pair.translated_sentence);
}

void score_bleu(std::span<SentencePair> pairs, unsigned workers) {
  parallel_for(pairs.size(), workers, [&](std::size_t i) {
    SentencePair& pair = pairs[i];
    if (pair.bleu) return;
    const std::string reference[] = {pair.source_sentence};
    pair.bleu = metrics::sentence_bleu(pair.translated_sentence, reference);
  });
}

void score_fres(std::span<SentencePair> pairs, const LanguageProfile& profile, unsigned workers) {
  parallel_for(pairs.size(), workers, [&](std::size_t i) {
    SentencePair& pair = pairs[i];
    if (pair.fres_scored) return;
    auto side = [&](const std::string& text) -> std::optional<double> {
      const textprep::TextStats stats = textprep::text_stats(text, profile);
      if (stats.n_words == 0) return std::nullopt;
      return metrics::fres(stats, profile);
    };
    pair.fres_source = side(pair.source_sentence);
    pair.fres_translated = side(pair.translated_sentence);
    pair.fres_scored = true;
  });
}

nlohmann::json to_json(const SelectorConfig& config) {
  return nlohmann::json{
      {"h_bleu", config.h_bleu},
      {"h_fres", config.h_fres},
      {"enable_bleu", config.enable_bleu},
      {"enable_fres", config.enable_fres},
      {"drop_identity", config.drop_identity},
      {"dedup", config.dedup},
  };
}

SelectorConfig selector_config_from_json(const nlohmann::json& doc) {
  SelectorConfig config;
  config.h_bleu = doc.at("h_bleu").get<double>();
  config.h_fres = doc.at("h_fres").get<double>();
  config.enable_bleu = doc.at("enable_bleu").get<bool>();
  config.enable_fres = doc.at("enable_fres").get<bool>();
  config.drop_identity = doc.at("drop_identity").get<bool>();
  config.dedup = doc.value("dedup", false);
  return config;
}

nlohmann::json to_json(const CorpusStats& stats) {
  return nlohmann::json{
      {"vocab_complex", stats.vocab_complex}, {"vocab_simple", stats.vocab_simple},
      {"avg_len_complex", stats.avg_len_complex}, {"avg_len_simple", stats.avg_len_simple},
      {"total_pairs", stats.total_pairs},
  };
}

CorpusStats corpus_stats_from_json(const nlohmann::json& doc) {
  CorpusStats stats;
  stats.vocab_complex = doc.at("vocab_complex").get<std::uint64_t>();
  stats.vocab_simple = doc.at("vocab_simple").get<std::uint64_t>();
  stats.avg_len_complex = doc.at("avg_len_complex").get<double>();
  stats.avg_len_simple = doc.at("avg_len_simple").get<double>();
  stats.total_pairs = doc.at("total_pairs").get<std::uint64_t>();
  return stats;
}

nlohmann::json to_json(const DropTally& tally) {
  return nlohmann::json{
      {"input_pairs", tally.input},         {"dropped_identity", tally.identity},
      {"dropped_bleu", tally.bleu},         {"dropped_no_words", tally.no_words},
      {"dropped_fres", tally.fres},         {"dropped_duplicate", tally.duplicate},
      {"kept", tally.kept},
  };
}

DropTally drop_tally_from_json(const nlohmann::json& doc) {
  DropTally tally;
  tally.input = doc.at("input_pairs").get<std::uint64_t>();
  tally.identity = doc.at("dropped_identity").get<std::uint64_t>();
  tally.bleu = doc.at("dropped_bleu").get<std::uint64_t>();
  tally.no_words = doc.at("dropped_no_words").get<std::uint64_t>();
  tally.fres = doc.at("dropped_fres").get<std::uint64_t>();
  tally.duplicate = doc.at("dropped_duplicate").get<std::uint64_t>();
  tally.kept = doc.at("kept").get<std::uint64_t>();
  return tally;
}

}  // namespace sscorpus::pipeline
