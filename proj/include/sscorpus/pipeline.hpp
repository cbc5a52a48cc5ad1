#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "sscorpus/language_profile.hpp"

namespace sscorpus::pipeline {

// One candidate: a corpus-language sentence from the bitext and the machine
// translation of its aligned bridge-language sentence.
struct SentencePair {
  std::string source_sentence;
  std::string translated_sentence;
  std::size_t index = 0;

  // BLEU of translated_sentence against source_sentence as the only reference.
  std::optional<double> bleu;
  // Reading ease per side. Left unset after scoring when a side has no words.
  std::optional<double> fres_source;
  std::optional<double> fres_translated;
  bool fres_scored = false;
};

struct SelectorConfig {
  double h_bleu = 15.0;
  double h_fres = 10.0;
  bool enable_bleu = true;
  bool enable_fres = true;
  bool drop_identity = true;
  bool dedup = false;

  // Throws sscorpus::Error unless h_bleu is in [0, 100] and h_fres >= 0.
  void validate() const;
  bool operator==(const SelectorConfig&) const = default;
};

enum class Provenance {
  kSimpleFromTranslation,
  kSimpleFromSource,
  kUnlabeled,  // FRES selector off: complex = source, simple = translation
};

std::string to_string(Provenance provenance);
Provenance provenance_from_string(std::string_view text);

struct LabeledPair {
  std::string complex;
  std::string simple;
  std::optional<double> bleu;
  std::optional<double> fres_complex;
  std::optional<double> fres_simple;
  // fres_simple - fres_complex; set whenever both sides were scored.
  std::optional<double> fres_gap;
  Provenance provenance = Provenance::kUnlabeled;
  std::size_t index = 0;
};

// Why candidates left the pipeline.
struct DropTally {
  std::uint64_t input = 0;
  std::uint64_t identity = 0;
  std::uint64_t bleu = 0;
  std::uint64_t no_words = 0;
  std::uint64_t fres = 0;
  std::uint64_t duplicate = 0;
  std::uint64_t kept = 0;

  DropTally& operator+=(const DropTally& other);
  bool operator==(const DropTally&) const = default;
};

struct CorpusStats {
  std::uint64_t vocab_complex = 0;
  std::uint64_t vocab_simple = 0;
  double avg_len_complex = 0.0;
  double avg_len_simple = 0.0;
  std::uint64_t total_pairs = 0;

  bool operator==(const CorpusStats&) const = default;
};

struct SimplificationCorpus {
  std::vector<LabeledPair> pairs;
  std::string lang;
  SelectorConfig config_snapshot;
  CorpusStats stats;
  DropTally tally;
};

// --- pair generation and scoring ---

// One SentencePair per line; indices start at first_index. Throws
// sscorpus::Error naming both line counts when the streams differ in length.
std::vector<SentencePair> generate_pseudo_pairs(std::span<const std::string> bitext_targets,
                                                std::span<const std::string> translations,
                                                std::size_t first_index = 0);

// Sides equal after NFC normalization.
bool is_identity(const SentencePair& pair);

// Fill any missing scores. Parallel over pairs; results do not depend on workers.
void score_bleu(std::span<SentencePair> pairs, unsigned workers = 1);
void score_fres(std::span<SentencePair> pairs, const LanguageProfile& profile, unsigned workers = 1);

// --- selectors (stable, per-pair predicates) ---

// Keeps pairs with bleu >= h_bleu; drops identity pairs when drop_identity is
// set. Computes missing BLEU scores.
std::vector<SentencePair> bleu_selector(std::vector<SentencePair> pairs, const SelectorConfig& config,
                                        DropTally* tally = nullptr, unsigned workers = 1);

// Keeps pairs whose reading-ease gap is >= h_fres and labels the higher-FRES
// side simple. Pairs with a wordless side or identical sides are dropped.
std::vector<LabeledPair> fres_selector(std::vector<SentencePair> pairs, const SelectorConfig& config,
                                       const LanguageProfile& profile, DropTally* tally = nullptr,
                                       unsigned workers = 1);

// Labels without selection: complex = source, simple = translation.
LabeledPair unlabeled(const SentencePair& pair);

// Recovers the (source, translation) candidate behind a labeled pair.
SentencePair to_sentence_pair(const LabeledPair& pair);
std::vector<SentencePair> to_sentence_pairs(std::span<const LabeledPair> pairs);

// --- corpus construction ---

// Incremental statistics; distinct tokens use the metric tokenizer, case-sensitive.
class StatsAccumulator {
 public:
  void add(const LabeledPair& pair);
  CorpusStats stats() const;

 private:
  std::unordered_set<std::string> vocab_complex_;
  std::unordered_set<std::string> vocab_simple_;
  std::uint64_t tokens_complex_ = 0;
  std::uint64_t tokens_simple_ = 0;
  std::uint64_t pairs_ = 0;
};

CorpusStats corpus_stats(const SimplificationCorpus& corpus);

// Streaming composition of the selectors. Feed consecutive batches; emitted
// pairs come out in input order.
class CorpusBuilder {
 public:
  CorpusBuilder(SelectorConfig config, const LanguageProfile& profile, unsigned workers = 1);

  std::vector<LabeledPair> process(std::vector<SentencePair> batch);

  const DropTally& tally() const { return tally_; }
  CorpusStats stats() const { return stats_.stats(); }
  const SelectorConfig& config() const { return config_; }

 private:
  SelectorConfig config_;
  const LanguageProfile* profile_;
  unsigned workers_;
  DropTally tally_;
  StatsAccumulator stats_;
  std::unordered_set<std::string> seen_;
};

SimplificationCorpus build_corpus(std::span<const std::string> bitext_targets,
                                  std::span<const std::string> translations, const SelectorConfig& config,
                                  const LanguageProfile& profile, unsigned workers = 1);

struct AblationResult {
  SimplificationCorpus pseudo;         // no selectors
  SimplificationCorpus without_bleu;   // FRES selector only
  SimplificationCorpus without_fres;   // BLEU selector only
  SimplificationCorpus full;           // both selectors
};

// The four variant configurations derived from base (thresholds and flags
// other than the selector toggles are kept).
std::vector<std::pair<std::string, SelectorConfig>> ablation_configs(const SelectorConfig& base);

// All scores are computed once and shared by the four variants.
AblationResult ablate(std::span<const std::string> bitext_targets, std::span<const std::string> translations,
                      const LanguageProfile& profile, const SelectorConfig& base = {}, unsigned workers = 1);

// Deterministic sample of n pairs in their original relative order.
// Throws sscorpus::Error when n exceeds the corpus size.
SimplificationCorpus subset(const SimplificationCorpus& corpus, std::size_t n, std::uint64_t seed);

// --- serialization helpers shared by the writers and the CLI ---

nlohmann::json to_json(const SelectorConfig& config);
SelectorConfig selector_config_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const CorpusStats& stats);
CorpusStats corpus_stats_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const DropTally& tally);
DropTally drop_tally_from_json(const nlohmann::json& doc);

}  // namespace sscorpus::pipeline
