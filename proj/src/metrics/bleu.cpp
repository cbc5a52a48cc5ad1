#include "sscorpus/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "sscorpus/error.hpp"
#include "sscorpus/parallel.hpp"
#include "sscorpus/textprep.hpp"
#include "sscorpus/unicode.hpp"

namespace sscorpus::metrics {
namespace {

// log with log(0) floored to the constant used by the reference toolchain.
double floored_log(double x) { return x == 0.0 ? -9999999999.0 : std::log(x); }

}  // namespace

NgramCounts count_ngrams(std::span<const std::string> tokens, int order) {
  return count_ngrams(tokens, order, order);
}

NgramCounts count_ngrams(std::span<const std::string> tokens, int min_order, int max_order) {
  NgramCounts counts;
  std::string key;
  for (int n = min_order; n <= max_order; ++n) {
    const auto len = static_cast<std::size_t>(n);
    if (tokens.size() < len) break;
    for (std::size_t i = 0; i + len <= tokens.size(); ++i) {
      key.assign(tokens[i]);
      for (std::size_t k = 1; k < len; ++k) {
        key.push_back(' ');
        key.append(tokens[i + k]);
      }
      ++counts[key];
    }
  }
  return counts;
}

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  hyp_len += other.hyp_len;
  ref_len += other.ref_len;
  if (correct.size() < other.correct.size()) {
    correct.resize(other.correct.size(), 0);
    total.resize(other.total.size(), 0);
  }
  for (std::size_t i = 0; i < other.correct.size(); ++i) {
    correct[i] += other.correct[i];
    total[i] += other.total[i];
  }
  return *this;
}

std::vector<std::string> bleu_tokens(std::string_view text) {
  const std::u32string decoded = unicode::decode_utf8(text);
  const std::string stripped = unicode::encode_utf8(unicode::rstrip(decoded));
  return textprep::tokenize_metric(stripped).tokens;
}

BleuReference::BleuReference(std::span<const std::string> references, int max_order) : max_order_(max_order) {
  for (const auto& ref : references) add(bleu_tokens(ref));
}

BleuReference BleuReference::from_tokens(std::span<const std::vector<std::string>> references, int max_order) {
  BleuReference ref;
  ref.max_order_ = max_order;
  for (const auto& tokens : references) ref.add(tokens);
  return ref;
}

void BleuReference::add(std::span<const std::string> tokens) {
  lengths_.push_back(tokens.size());
  for (const auto& [ngram, count] : count_ngrams(tokens, 1, max_order_)) {
    auto& slot = ngrams_[ngram];
    slot = std::max(slot, count);
  }
}

std::uint64_t BleuReference::closest_length(std::uint64_t hyp_len) const {
  bool first = true;
  std::uint64_t best_diff = 0;
  std::uint64_t best_len = 0;
  for (std::uint64_t len : lengths_) {
    const std::uint64_t diff = len > hyp_len ? len - hyp_len : hyp_len - len;
    if (first || diff < best_diff) {
      best_diff = diff;
      best_len = len;
      first = false;
    } else if (diff == best_diff && len < best_len) {
      best_len = len;
    }
  }
  return best_len;
}

BleuStats BleuReference::score(std::span<const std::string> hyp_tokens) const {
  BleuStats stats(max_order_);
  stats.hyp_len = hyp_tokens.size();
  stats.ref_len = closest_length(stats.hyp_len);
  for (const auto& [ngram, count] : count_ngrams(hyp_tokens, 1, max_order_)) {
    const auto order = static_cast<std::size_t>(std::count(ngram.begin(), ngram.end(), ' '));
    stats.total[order] += count;
    const auto it = ngrams_.find(ngram);
    if (it != ngrams_.end()) stats.correct[order] += std::min(count, it->second);
  }
  return stats;
}

double bleu_from_stats(const BleuStats& stats, Smoothing smoothing, bool effective_order) {
  double bp = 1.0;
  if (stats.hyp_len < stats.ref_len) {
    bp = stats.hyp_len > 0
             ? std::exp(1.0 - static_cast<double>(stats.ref_len) / static_cast<double>(stats.hyp_len))
             : 0.0;
  }
  const std::size_t max_order = stats.correct.size();
  if (std::all_of(stats.correct.begin(), stats.correct.end(), [](auto c) { return c == 0; })) return 0.0;

  std::vector<double> precisions(max_order, 0.0);
  double smooth = 1.0;
  std::size_t eff_order = max_order;
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto total = static_cast<double>(stats.total[n - 1]);
    if (stats.total[n - 1] == 0) break;
    if (effective_order) eff_order = n;
    if (stats.correct[n - 1] == 0) {
      if (smoothing == Smoothing::kExp) {
        smooth *= 2.0;
        precisions[n - 1] = 100.0 / (smooth * total);
      }
    } else {
      precisions[n - 1] = 100.0 * static_cast<double>(stats.correct[n - 1]) / total;
    }
  }
  double log_sum = 0.0;
  for (std::size_t n = 0; n < eff_order; ++n) log_sum += floored_log(precisions[n]);
  return bp * std::exp(log_sum / static_cast<double>(eff_order));
}

double sentence_bleu(std::string_view hypothesis, std::span<const std::string> references, int max_order) {
  if (references.empty()) throw Error("sentence_bleu: empty reference list");
  const BleuReference ref(references, max_order);
  return bleu_from_stats(ref.score(bleu_tokens(hypothesis)), Smoothing::kExp, true);
}

double corpus_bleu(std::span<const std::string> hypotheses, std::span<const std::vector<std::string>> references,
                   int max_order, unsigned workers) {
  if (hypotheses.size() != references.size()) {
    throw Error("corpus_bleu: " + std::to_string(hypotheses.size()) + " hypotheses vs " +
                std::to_string(references.size()) + " reference sets");
  }
  for (std::size_t i = 0; i < references.size(); ++i) {
    if (references[i].empty()) throw Error("corpus_bleu: empty reference set at item " + std::to_string(i));
  }
  std::vector<BleuStats> per_item(hypotheses.size(), BleuStats(max_order));
  parallel_for(hypotheses.size(), workers, [&](std::size_t i) {
    const BleuReference ref(references[i], max_order);
    per_item[i] = ref.score(bleu_tokens(hypotheses[i]));
  });
  BleuStats total(max_order);
  for (const auto& stats : per_item) total += stats;
  return bleu_from_stats(total, Smoothing::kExp, false);
}

}  // namespace sscorpus::metrics
