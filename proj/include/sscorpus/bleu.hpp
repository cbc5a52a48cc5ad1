#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sscorpus::metrics {

inline constexpr int kDefaultMaxOrder = 4;

// n-gram -> count; keys are tokens joined by single spaces (tokens never
// contain whitespace, so keys are unambiguous).
using NgramCounts = std::unordered_map<std::string, std::uint32_t>;

NgramCounts count_ngrams(std::span<const std::string> tokens, int order);
NgramCounts count_ngrams(std::span<const std::string> tokens, int min_order, int max_order);

// Sufficient statistics of BLEU; these add across sentences.
struct BleuStats {
  std::uint64_t hyp_len = 0;
  std::uint64_t ref_len = 0;
  std::vector<std::uint64_t> correct;
  std::vector<std::uint64_t> total;

  explicit BleuStats(int max_order = kDefaultMaxOrder)
      : correct(static_cast<std::size_t>(max_order), 0), total(static_cast<std::size_t>(max_order), 0) {}

  BleuStats& operator+=(const BleuStats& other);
  bool operator==(const BleuStats&) const = default;
};

enum class Smoothing {
  kNone,
  kExp,  // a zero match count at order n gets precision 1/(2^k * total_n)
};

// Tokens as fed to BLEU: trailing whitespace stripped, then 13a tokenization.
std::vector<std::string> bleu_tokens(std::string_view text);

// A reference set preprocessed once: max-clipped n-gram counts plus lengths.
class BleuReference {
 public:
  BleuReference(std::span<const std::string> references, int max_order = kDefaultMaxOrder);
  static BleuReference from_tokens(std::span<const std::vector<std::string>> references,
                                   int max_order = kDefaultMaxOrder);

  BleuStats score(std::span<const std::string> hyp_tokens) const;

  // Closest reference length to hyp_len; ties go to the shorter reference.
  std::uint64_t closest_length(std::uint64_t hyp_len) const;

 private:
  BleuReference() = default;
  void add(std::span<const std::string> tokens);

  int max_order_ = kDefaultMaxOrder;
  NgramCounts ngrams_;
  std::vector<std::uint64_t> lengths_;
};

// Score in [0, 100].
double bleu_from_stats(const BleuStats& stats, Smoothing smoothing, bool effective_order);

// Case-sensitive sentence BLEU: exp smoothing, effective order. An empty
// hypothesis scores 0. Throws sscorpus::Error on an empty reference list.
double sentence_bleu(std::string_view hypothesis, std::span<const std::string> references,
                     int max_order = kDefaultMaxOrder);

// Corpus BLEU from pooled statistics with exp smoothing. references[i] is the
// reference set of hypotheses[i]. Throws on length mismatch or an empty set.
double corpus_bleu(std::span<const std::string> hypotheses,
                   std::span<const std::vector<std::string>> references,
                   int max_order = kDefaultMaxOrder, unsigned workers = 1);

}  // namespace sscorpus::metrics
