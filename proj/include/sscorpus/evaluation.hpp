#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sscorpus/language_profile.hpp"
#include "sscorpus/sari.hpp"

namespace sscorpus::metrics {

struct EvalReport {
  SariBreakdown sari;
  double fkgl = 0.0;
  double fres = 0.0;
  double bleu = 0.0;
  std::size_t n_items = 0;
};

struct EvalOptions {
  int max_order = kDefaultMaxOrder;
  unsigned workers = 1;
};

// SARI, corpus BLEU, and pooled FKGL/FRES over the hypotheses. Throws
// sscorpus::Error for an empty or misaligned input.
EvalReport evaluate(std::span<const std::string> sources, std::span<const std::string> hypotheses,
                    std::span<const std::vector<std::string>> references, const LanguageProfile& profile,
                    const EvalOptions& options = {});

// Leave-one-out scoring of the references themselves: reference j of every
// item is the hypothesis and the remaining references are its reference set.
// Scores are averaged over j. Needs at least two references per item.
EvalReport evaluate_reference_row(std::span<const std::string> sources,
                                  std::span<const std::vector<std::string>> references,
                                  const LanguageProfile& profile, const EvalOptions& options = {});

// Flat document: sari, f_keep, f_add, f_delete, fkgl, fres, bleu, n_items.
nlohmann::json to_json(const EvalReport& report);
EvalReport eval_report_from_json(const nlohmann::json& doc);

}  // namespace sscorpus::metrics
