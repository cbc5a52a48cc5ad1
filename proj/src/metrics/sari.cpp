#include "sscorpus/sari.hpp"

#include <algorithm>

#include "sscorpus/error.hpp"
#include "sscorpus/parallel.hpp"
#include "sscorpus/textprep.hpp"
#include "sscorpus/unicode.hpp"

namespace sscorpus::metrics {
namespace {

struct OperationScores {
  double keep = 0.0;
  double del = 0.0;
  double add = 0.0;
};

std::uint32_t lookup(const NgramCounts& counts, const std::string& key) {
  const auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

double f1(double precision, double recall) {
  if (precision > 0.0 || recall > 0.0) return 2.0 * precision * recall / (precision + recall);
  return 0.0;
}

OperationScores score_order(const NgramCounts& source, const NgramCounts& hyp, const NgramCounts& refs,
                            std::uint64_t num_refs) {
  OperationScores out;

  // Keep: counts of source and hypothesis n-grams are replicated num_refs times
  // so they are comparable with the summed reference counts.
  std::size_t keep_size = 0;
  std::size_t keep_all_size = 0;
  double keep_precision_sum = 0.0;
  double keep_recall_sum = 0.0;
  // Delete: source n-grams the hypothesis dropped.
  std::size_t del_size = 0;
  double del_precision_sum = 0.0;

  for (const auto& [gram, s_count] : source) {
    const std::uint64_t s_rep = s_count * num_refs;
    const std::uint64_t c_rep = static_cast<std::uint64_t>(lookup(hyp, gram)) * num_refs;
    const std::uint64_t r = lookup(refs, gram);

    const std::uint64_t keep = std::min(s_rep, c_rep);
    const std::uint64_t keep_all = std::min(s_rep, r);
    const std::uint64_t keep_good = std::min(keep, r);
    if (keep > 0) ++keep_size;
    if (keep_all > 0) ++keep_all_size;
    if (keep_good > 0) {
      keep_precision_sum += static_cast<double>(keep_good) / static_cast<double>(keep);
      keep_recall_sum += static_cast<double>(keep_good) / static_cast<double>(keep_all);
    }

    const std::uint64_t del = s_rep > c_rep ? s_rep - c_rep : 0;
    const std::uint64_t del_good = del > r ? del - r : 0;
    if (del > 0) ++del_size;
    if (del_good > 0) del_precision_sum += static_cast<double>(del_good) / static_cast<double>(del);
  }
  const double keep_precision = keep_size > 0 ? keep_precision_sum / static_cast<double>(keep_size) : 0.0;
  const double keep_recall = keep_all_size > 0 ? keep_recall_sum / static_cast<double>(keep_all_size) : 0.0;
  out.keep = f1(keep_precision, keep_recall);
  out.del = del_size > 0 ? del_precision_sum / static_cast<double>(del_size) : 0.0;

  // Add: set semantics, n-grams absent from the source.
  std::size_t added = 0;
  std::size_t added_good = 0;
  for (const auto& entry : hyp) {
    if (source.contains(entry.first)) continue;
    ++added;
    if (refs.contains(entry.first)) ++added_good;
  }
  std::size_t ref_added = 0;
  for (const auto& entry : refs) {
    if (!source.contains(entry.first)) ++ref_added;
  }
  const double add_precision = added > 0 ? static_cast<double>(added_good) / static_cast<double>(added) : 0.0;
  const double add_recall = ref_added > 0 ? static_cast<double>(added_good) / static_cast<double>(ref_added) : 0.0;
  out.add = f1(add_precision, add_recall);
  return out;
}

std::vector<std::string> sari_tokens(std::string_view text) {
  return textprep::tokenize_metric(unicode::to_lower(text)).tokens;
}

}  // namespace

SariBreakdown sentence_sari(std::string_view source, std::string_view hypothesis,
                            std::span<const std::string> references, int max_order) {
  if (references.empty()) throw Error("sari: empty reference set");
  if (max_order < 1) throw Error("sari: max_order must be at least 1");
  const auto source_tokens = sari_tokens(source);
  const auto hyp_tokens = sari_tokens(hypothesis);
  std::vector<std::vector<std::string>> ref_tokens;
  ref_tokens.reserve(references.size());
  for (const auto& ref : references) ref_tokens.push_back(sari_tokens(ref));

  double keep = 0.0;
  double del = 0.0;
  double add = 0.0;
  for (int n = 1; n <= max_order; ++n) {
    const NgramCounts s = count_ngrams(source_tokens, n);
    const NgramCounts c = count_ngrams(hyp_tokens, n);
    NgramCounts r;
    for (const auto& tokens : ref_tokens) {
      for (const auto& [gram, count] : count_ngrams(tokens, n)) r[gram] += count;
    }
    const OperationScores scores = score_order(s, c, r, references.size());
    keep += scores.keep;
    del += scores.del;
    add += scores.add;
  }
  const double orders = static_cast<double>(max_order);
  SariBreakdown out;
  out.max_ngram_order = max_order;
  out.f_keep = 100.0 * keep / orders;
  out.f_delete = 100.0 * del / orders;
  out.f_add = 100.0 * add / orders;
  out.sari = (out.f_keep + out.f_delete + out.f_add) / 3.0;
  return out;
}

SariBreakdown sari(std::span<const std::string> sources, std::span<const std::string> hypotheses,
                   std::span<const std::vector<std::string>> references, int max_order, unsigned workers) {
  if (sources.size() != hypotheses.size() || sources.size() != references.size()) {
    throw Error("sari: length mismatch (" + std::to_string(sources.size()) + " sources, " +
                std::to_string(hypotheses.size()) + " hypotheses, " + std::to_string(references.size()) +
                " reference sets)");
  }
  for (std::size_t i = 0; i < references.size(); ++i) {
    if (references[i].empty()) throw Error("sari: empty reference set at item " + std::to_string(i));
  }
  std::vector<SariBreakdown> per_item(sources.size());
  parallel_for(sources.size(), workers, [&](std::size_t i) {
    per_item[i] = sentence_sari(sources[i], hypotheses[i], references[i], max_order);
  });
  SariBreakdown out;
  out.max_ngram_order = max_order;
  if (per_item.empty()) return out;
  for (const auto& item : per_item) {
    out.f_keep += item.f_keep;
    out.f_delete += item.f_delete;
    out.f_add += item.f_add;
  }
  const auto n = static_cast<double>(per_item.size());
  out.f_keep /= n;
  out.f_delete /= n;
  out.f_add /= n;
  out.sari = (out.f_keep + out.f_delete + out.f_add) / 3.0;
  return out;
}

}  // namespace sscorpus::metrics
