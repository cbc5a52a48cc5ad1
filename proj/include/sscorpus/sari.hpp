#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sscorpus/bleu.hpp"

namespace sscorpus::metrics {

// All scores in [0, 100]; sari is the mean of the three operation scores.
struct SariBreakdown {
  double sari = 0.0;
  double f_keep = 0.0;
  double f_add = 0.0;
  double f_delete = 0.0;
  int max_ngram_order = kDefaultMaxOrder;
};

// SARI of one hypothesis. Text is lowercased and 13a-tokenized. Per n-gram
// order: keep is an F1 with source and hypothesis counts replicated by the
// number of references; delete is precision only; add is a set-based F1.
// Each operation is averaged over orders 1..max_order, empty sets score 0.
SariBreakdown sentence_sari(std::string_view source, std::string_view hypothesis,
                            std::span<const std::string> references, int max_order = kDefaultMaxOrder);

// Corpus SARI: the mean of sentence scores. references[i] belongs to item i.
// Throws sscorpus::Error on length mismatch or an empty reference set.
SariBreakdown sari(std::span<const std::string> sources, std::span<const std::string> hypotheses,
                   std::span<const std::vector<std::string>> references, int max_order = kDefaultMaxOrder,
                   unsigned workers = 1);

}  // namespace sscorpus::metrics
