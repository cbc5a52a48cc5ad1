#include <cmath>

#include "sscorpus/pipeline.hpp"

namespace sscorpus::pipeline {

std::vector<SentencePair> bleu_selector(std::vector<SentencePair> pairs, const SelectorConfig& config,
                                        DropTally* tally, unsigned workers) {
  score_bleu(pairs, workers);
  std::vector<SentencePair> kept;
  kept.reserve(pairs.size());
  for (auto& pair : pairs) {
    if (config.drop_identity && is_identity(pair)) {
      if (tally) ++tally->identity;
      continue;
    }
    if (!(*pair.bleu >= config.h_bleu)) {
      if (tally) ++tally->bleu;
      continue;
    }
    kept.push_back(std::move(pair));
  }
  return kept;
}

std::vector<LabeledPair> fres_selector(std::vector<SentencePair> pairs, const SelectorConfig& config,
                                       const LanguageProfile& profile, DropTally* tally, unsigned workers) {
  score_fres(pairs, profile, workers);
  std::vector<LabeledPair> kept;
  kept.reserve(pairs.size());
  for (auto& pair : pairs) {
    if (is_identity(pair)) {
      if (tally) ++tally->identity;
      continue;
    }
    if (!pair.fres_source || !pair.fres_translated) {
      if (tally) ++tally->no_words;
      continue;
    }
    const double fs = *pair.fres_source;
    const double ft = *pair.fres_translated;
    // Ties go to the translation side; the gap is then 0 either way.
    const bool translation_simpler = ft >= fs;
    const double gap = translation_simpler ? ft - fs : fs - ft;
    if (!(gap >= config.h_fres)) {
      if (tally) ++tally->fres;
      continue;
    }
    LabeledPair out;
    out.bleu = pair.bleu;
    out.index = pair.index;
    out.fres_gap = gap;
    if (translation_simpler) {
      out.simple = std::move(pair.translated_sentence);
      out.complex = std::move(pair.source_sentence);
      out.fres_simple = ft;
      out.fres_complex = fs;
      out.provenance = Provenance::kSimpleFromTranslation;
    } else {
      out.simple = std::move(pair.source_sentence);
      out.complex = std::move(pair.translated_sentence);
      out.fres_simple = fs;
      out.fres_complex = ft;
      out.provenance = Provenance::kSimpleFromSource;
    }
    kept.push_back(std::move(out));
  }
  return kept;
}

LabeledPair unlabeled(const SentencePair& pair) {
  LabeledPair out;
  out.complex = pair.source_sentence;
  out.simple = pair.translated_sentence;
  out.bleu = pair.bleu;
  out.fres_complex = pair.fres_source;
  out.fres_simple = pair.fres_translated;
  if (pair.fres_source && pair.fres_translated) out.fres_gap = *pair.fres_translated - *pair.fres_source;
  out.provenance = Provenance::kUnlabeled;
  out.index = pair.index;
  return out;
}

SentencePair to_sentence_pair(const LabeledPair& pair) {
  SentencePair out;
  out.index = pair.index;
  out.bleu = pair.bleu;
  if (pair.provenance == Provenance::kSimpleFromSource) {
    out.source_sentence = pair.simple;
    out.translated_sentence = pair.complex;
  } else {
    out.source_sentence = pair.complex;
    out.translated_sentence = pair.simple;
  }
  return out;
}

std::vector<SentencePair> to_sentence_pairs(std::span<const LabeledPair> pairs) {
  std::vector<SentencePair> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) out.push_back(to_sentence_pair(pair));
  return out;
}

}  // namespace sscorpus::pipeline
