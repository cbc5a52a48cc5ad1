#include <random>

#include "sscorpus/error.hpp"
#include "sscorpus/pipeline.hpp"
#include "sscorpus/textprep.hpp"

namespace sscorpus::pipeline {

void StatsAccumulator::add(const LabeledPair& pair) {
  const auto complex_tokens = textprep::tokenize_metric(pair.complex).tokens;
  const auto simple_tokens = textprep::tokenize_metric(pair.simple).tokens;
  tokens_complex_ += complex_tokens.size();
  tokens_simple_ += simple_tokens.size();
  vocab_complex_.insert(complex_tokens.begin(), complex_tokens.end());
  vocab_simple_.insert(simple_tokens.begin(), simple_tokens.end());
  ++pairs_;
}

CorpusStats StatsAccumulator::stats() const {
  CorpusStats stats;
  stats.vocab_complex = vocab_complex_.size();
  stats.vocab_simple = vocab_simple_.size();
  stats.total_pairs = pairs_;
  if (pairs_ > 0) {
    stats.avg_len_complex = static_cast<double>(tokens_complex_) / static_cast<double>(pairs_);
    stats.avg_len_simple = static_cast<double>(tokens_simple_) / static_cast<double>(pairs_);
  }
  return stats;
}

CorpusStats corpus_stats(const SimplificationCorpus& corpus) {
  StatsAccumulator acc;
  for (const auto& pair : corpus.pairs) acc.add(pair);
  return acc.stats();
}

CorpusBuilder::CorpusBuilder(SelectorConfig config, const LanguageProfile& profile, unsigned workers)
    : config_(config), profile_(&profile), workers_(workers) {
  config_.validate();
}

std::vector<LabeledPair> CorpusBuilder::process(std::vector<SentencePair> batch) {
  tally_.input += batch.size();
  if (config_.enable_bleu) batch = bleu_selector(std::move(batch), config_, &tally_, workers_);

  std::vector<LabeledPair> labeled;
  if (config_.enable_fres) {
    labeled = fres_selector(std::move(batch), config_, *profile_, &tally_, workers_);
  } else {
    labeled.reserve(batch.size());
    for (const auto& pair : batch) labeled.push_back(unlabeled(pair));
  }

  if (config_.dedup) {
    std::vector<LabeledPair> unique;
    unique.reserve(labeled.size());
    for (auto& pair : labeled) {
      std::string key = pair.complex;
      key.push_back('\0');
      key.append(pair.simple);
      if (!seen_.insert(std::move(key)).second) {
        ++tally_.duplicate;
        continue;
      }
      unique.push_back(std::move(pair));
    }
    labeled.swap(unique);
  }

  for (const auto& pair : labeled) stats_.add(pair);
  tally_.kept += labeled.size();
  return labeled;
}

SimplificationCorpus build_corpus(std::span<const std::string> bitext_targets,
                                  std::span<const std::string> translations, const SelectorConfig& config,
                                  const LanguageProfile& profile, unsigned workers) {
  CorpusBuilder builder(config, profile, workers);
  SimplificationCorpus corpus;
  corpus.pairs = builder.process(generate_pseudo_pairs(bitext_targets, translations));
  corpus.lang = profile.lang_code;
  corpus.config_snapshot = builder.config();
  corpus.stats = builder.stats();
  corpus.tally = builder.tally();
  return corpus;
}

std::vector<std::pair<std::string, SelectorConfig>> ablation_configs(const SelectorConfig& base) {
  auto with = [&](bool bleu, bool fres) {
    SelectorConfig c = base;
    c.enable_bleu = bleu;
    c.enable_fres = fres;
    return c;
  };
  return {
      {"pseudo", with(false, false)},
      {"wo_bleu", with(false, true)},
      {"wo_fres", with(true, false)},
      {"full", with(true, true)},
  };
}

AblationResult ablate(std::span<const std::string> bitext_targets, std::span<const std::string> translations,
                      const LanguageProfile& profile, const SelectorConfig& base, unsigned workers) {
  std::vector<SentencePair> pairs = generate_pseudo_pairs(bitext_targets, translations);
  score_bleu(pairs, workers);
  score_fres(pairs, profile, workers);

  AblationResult result;
  SimplificationCorpus* slots[] = {&result.pseudo, &result.without_bleu, &result.without_fres, &result.full};
  const auto configs = ablation_configs(base);
  for (std::size_t v = 0; v < configs.size(); ++v) {
    CorpusBuilder builder(configs[v].second, profile, workers);
    SimplificationCorpus& corpus = *slots[v];
    corpus.pairs = builder.process(pairs);
    corpus.lang = profile.lang_code;
    corpus.config_snapshot = builder.config();
    corpus.stats = builder.stats();
    corpus.tally = builder.tally();
  }
  return result;
}

SimplificationCorpus subset(const SimplificationCorpus& corpus, std::size_t n, std::uint64_t seed) {
  const std::size_t total = corpus.pairs.size();
  if (n > total) {
    throw Error("subset: requested " + std::to_string(n) + " pairs from a corpus of " + std::to_string(total));
  }
  SimplificationCorpus out;
  out.lang = corpus.lang;
  out.config_snapshot = corpus.config_snapshot;
  out.tally = corpus.tally;
  out.pairs.reserve(n);

  // Selection sampling: each index is taken with probability
  // (still needed) / (still available), which keeps input order. Uses raw
  // mt19937_64 output so results match across standard libraries.
  std::mt19937_64 rng(seed);
  std::size_t needed = n;
  for (std::size_t i = 0; i < total && needed > 0; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto available = static_cast<double>(total - i);
    if (available * u < static_cast<double>(needed)) {
      out.pairs.push_back(corpus.pairs[i]);
      --needed;
    }
  }
  out.stats = corpus_stats(out);
  return out;
}

}  // namespace sscorpus::pipeline
