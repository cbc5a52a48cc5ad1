#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sscorpus/bleu.hpp"
#include "sscorpus/error.hpp"
#include "sscorpus/evaluation.hpp"
#include "sscorpus/ingest.hpp"
#include "sscorpus/readability.hpp"
#include "sscorpus/sari.hpp"
#include "test_support.hpp"

namespace sscorpus {
namespace {

using metrics::corpus_bleu;
using metrics::sentence_bleu;
using metrics::sentence_sari;
using textprep::TextStats;

const LanguageProfile& en() { return profile_for("en"); }

// --- readability ---

TEST(Fres, Arithmetic) {
  EXPECT_NEAR(metrics::fres("Go.", en()), 121.22, 1e-9);
  EXPECT_NEAR(metrics::fres("Go.", profile_for("fr")), 132.385, 1e-9);
  EXPECT_NEAR(metrics::fres(TextStats{10, 1, 20}, en()), 27.485, 1e-9);
  EXPECT_NEAR(metrics::fres(TextStats{20, 2, 40}, en()), 27.485, 1e-9);
}

TEST(Fres, NotClamped) {
  EXPECT_GT(metrics::fres("Go.", en()), 100.0);
  EXPECT_LT(metrics::fres(TextStats{40, 1, 200}, en()), 0.0);
}

TEST(Fres, UndefinedWithoutWords) {
  EXPECT_THROW(metrics::fres("", en()), UndefinedReadability);
  EXPECT_THROW(metrics::fres("... !", en()), UndefinedReadability);
  EXPECT_THROW(metrics::fkgl("   "), UndefinedReadability);
  try {
    metrics::fres("?", en());
  } catch (const UndefinedReadability& e) {
    EXPECT_STREQ(e.what(), "undefined readability (no words)");
  }
}

TEST(Fkgl, Arithmetic) {
  EXPECT_NEAR(metrics::fkgl("Go."), -3.40, 1e-9);
  EXPECT_NEAR(metrics::fkgl(TextStats{15, 1, 45}) - 0.39 * 15 - 11.8 * 3, -15.59, 1e-9);
  EXPECT_NEAR(metrics::fkgl(TextStats{30, 2, 45}), 7.96, 1e-9);
}

TEST(Fres, MonotoneInSyllablesAndSentenceLength) {
  for (const char* key : {"en", "fr", "es-paper", "es-fh"}) {
    const LanguageProfile& p = profile_for(key);
    for (std::size_t syl = 10; syl < 40; ++syl) {
      EXPECT_GT(metrics::fres(TextStats{10, 1, syl}, p), metrics::fres(TextStats{10, 1, syl + 1}, p)) << key;
    }
  }
  for (std::size_t w = 2; w < 40; ++w) {
    EXPECT_LT(metrics::fkgl(TextStats{w, 1, 2 * w}), metrics::fkgl(TextStats{w + 1, 1, 2 * (w + 1)}));
  }
}

TEST(CorpusReadability, PoolsCounts) {
  const std::vector<std::string> segments = {"The cat sat.", "It was a very big dog", ""};
  const TextStats pooled = metrics::pooled_stats(segments, en());
  EXPECT_EQ(pooled.n_words, 9u);
  EXPECT_EQ(pooled.n_sentences, 3u);
  EXPECT_EQ(pooled.n_syllables, 10u);
  EXPECT_NEAR(metrics::corpus_fres(segments, en()), 206.835 - 1.015 * 3.0 - 84.6 * 10.0 / 9.0, 1e-9);
  EXPECT_NEAR(metrics::corpus_fkgl(segments), 0.39 * 3.0 + 11.8 * 10.0 / 9.0 - 15.59, 1e-9);
}

// --- BLEU ---

TEST(SentenceBleu, MatchesReferenceImplementation) {
  struct Case {
    std::string hyp;
    std::vector<std::string> refs;
    double expected;  // sacrebleu 2.6.0 sentence_bleu
  };
  const std::vector<Case> cases = {
      {"the cat sat on the mat", {"the cat is on the mat"}, 37.99178428257963},
      {"a b c d", {"e f g h"}, 0.0},
      {"the the the", {"the cat"}, 27.516060407455225},
      {"cat", {"the cat sat"}, 13.533528323661276},
      {"He went home.", {"He went home early.", "He came home."}, 70.71067811865478},
      {"the cat", {"the cat"}, 100.0},
      {"x y", {"x y z w v"}, 22.31301601484299},
  };
  for (const auto& c : cases) EXPECT_NEAR(sentence_bleu(c.hyp, c.refs), c.expected, 1e-9) << c.hyp;
}

TEST(SentenceBleu, EdgeCases) {
  const std::vector<std::string> refs = {"a reference"};
  EXPECT_EQ(sentence_bleu("", refs), 0.0);
  EXPECT_THROW(sentence_bleu("x", std::vector<std::string>{}), Error);
  EXPECT_LT(sentence_bleu("completely different words", refs), 1.0);
}

TEST(CorpusBleu, MatchesReferenceImplementation) {
  const std::vector<std::string> hyps = {"the cat sat on the mat", "a b"};
  const std::vector<std::vector<std::string>> refs = {{"the cat is on the mat"}, {"a b c"}};
  EXPECT_NEAR(corpus_bleu(hyps, refs), 34.844928509543394, 1e-9);
  EXPECT_THROW(corpus_bleu(hyps, std::span(refs).first(1)), Error);
}

TEST(Bleu, ReferenceOrderAndDuplicatesDoNotMatter) {
  std::vector<std::string> refs = {"the quick brown fox jumps", "a fast brown fox leaps over", "fox"};
  const std::string hyp = "the fast brown fox jumps over";
  const double base = sentence_bleu(hyp, refs);
  std::sort(refs.begin(), refs.end());
  do {
    EXPECT_DOUBLE_EQ(sentence_bleu(hyp, refs), base);
  } while (std::next_permutation(refs.begin(), refs.end()));
  refs.push_back(refs.front());
  EXPECT_DOUBLE_EQ(sentence_bleu(hyp, refs), base);
}

// --- SARI ---

TEST(Sari, PerfectSimplification) {
  const std::vector<std::string> refs = {"a b c d e y", "a b c d e y"};
  const auto s = sentence_sari("a b c d e x", "a b c d e y", refs);
  EXPECT_NEAR(s.sari, 100.0, 1e-9);
  EXPECT_NEAR(s.f_keep, 100.0, 1e-9);
  EXPECT_NEAR(s.f_add, 100.0, 1e-9);
  EXPECT_NEAR(s.f_delete, 100.0, 1e-9);
}

// Expected values from the Python oracle. Orders longer than the sentences
// and an empty keep set both score 0.
TEST(Sari, EmptyOperationsScoreZero) {
  const std::vector<std::string> refs = {"new text here", "new text here", "new text here"};
  const auto s = sentence_sari("old words only", "new text here", refs);
  EXPECT_NEAR(s.f_keep, 0.0, 1e-12);
  EXPECT_NEAR(s.f_delete, 75.0, 1e-9);
  EXPECT_NEAR(s.f_add, 75.0, 1e-9);
  EXPECT_NEAR(s.sari, 50.0, 1e-9);
  const std::vector<std::string> cats = {"the cat sat", "the cat sat"};
  const auto t = sentence_sari("about the feline that was seated", "the cat sat", cats);
  EXPECT_NEAR(t.f_keep, 25.0, 1e-9);
  EXPECT_NEAR(t.f_add, 75.0, 1e-9);
  EXPECT_NEAR(t.sari, 200.0 / 3.0, 1e-9);
}

TEST(Sari, CopyingTheSourceScoresKeepOnly) {
  const std::vector<std::string> refs = {"the cat sat on a mat", "a cat sat down"};
  const auto s = sentence_sari("the cat sat on the mat", "the cat sat on the mat", refs);
  EXPECT_EQ(s.f_add, 0.0);
  EXPECT_EQ(s.f_delete, 0.0);
  EXPECT_NEAR(s.sari, s.f_keep / 3.0, 1e-12);
}

TEST(Sari, Errors) {
  const std::vector<std::string> one = {"a"};
  EXPECT_THROW(sentence_sari("a", "a", std::vector<std::string>{}), Error);
  EXPECT_THROW(sentence_sari("a", "a", one, 0), Error);
  const std::vector<std::vector<std::string>> refsets = {{"a"}};
  EXPECT_THROW(metrics::sari(one, std::vector<std::string>{}, refsets), Error);
  const std::vector<std::vector<std::string>> empty_set = {{}};
  EXPECT_THROW(metrics::sari(one, one, empty_set), Error);
}

TEST(Eval100Fixture, MatchesOracles) {
  const auto data = ingest::read_eval_dataset(testing::fixture("eval100"));
  const auto hyps = ingest::read_lines(testing::fixture("eval100/eval100.hyp"));
  const auto oracle = testing::load_json(testing::fixture("eval100/oracle.json"));
  ASSERT_EQ(data.sources.size(), 100u);
  ASSERT_EQ(data.num_references, 4u);

  std::vector<std::vector<std::string>> by_stream(4);
  for (const auto& refs : data.references) {
    for (std::size_t j = 0; j < 4; ++j) by_stream[j].push_back(refs[j]);
  }

  EXPECT_NEAR(corpus_bleu(hyps, data.references), oracle["corpus_bleu"].get<double>(), 1e-9);
  EXPECT_NEAR(corpus_bleu(data.sources, data.references), oracle["corpus_bleu_source_row"].get<double>(), 1e-9);

  const auto s = metrics::sari(data.sources, hyps, data.references);
  EXPECT_NEAR(s.sari, oracle["sari"]["sari"].get<double>(), 1e-9);
  EXPECT_NEAR(s.f_keep, oracle["sari"]["f_keep"].get<double>(), 1e-9);
  EXPECT_NEAR(s.f_add, oracle["sari"]["f_add"].get<double>(), 1e-9);
  EXPECT_NEAR(s.f_delete, oracle["sari"]["f_delete"].get<double>(), 1e-9);
  const auto src = metrics::sari(data.sources, data.sources, data.references);
  EXPECT_NEAR(src.sari, oracle["sari_source_row"]["sari"].get<double>(), 1e-9);

  for (std::size_t i = 0; i < hyps.size(); ++i) {
    const auto& item = oracle["items"][i];
    EXPECT_NEAR(sentence_bleu(hyps[i], data.references[i]), item["sentence_bleu"].get<double>(), 1e-9) << i;
    EXPECT_NEAR(sentence_sari(data.sources[i], hyps[i], data.references[i]).sari, item["sari"].get<double>(), 1e-9)
        << i;
    const auto stats = textprep::text_stats(hyps[i], en());
    EXPECT_EQ(stats, (TextStats{item["hyp_stats"][0], item["hyp_stats"][1], item["hyp_stats"][2]})) << hyps[i];
    const auto src_stats = textprep::text_stats(data.sources[i], en());
    EXPECT_EQ(src_stats, (TextStats{item["src_stats"][0], item["src_stats"][1], item["src_stats"][2]}))
        << data.sources[i];
  }

  const auto report = metrics::evaluate(data.sources, hyps, data.references, en());
  EXPECT_NEAR(report.fkgl, oracle["fkgl"].get<double>(), 1e-9);
  EXPECT_NEAR(report.fres, oracle["fres"].get<double>(), 1e-9);
  EXPECT_EQ(report.n_items, 100u);
}

TEST(Sari, ComponentsInRangeAndReferenceOrderFree) {
  const auto data = ingest::read_eval_dataset(testing::fixture("eval100"));
  const auto hyps = ingest::read_lines(testing::fixture("eval100/eval100.hyp"));
  std::mt19937_64 rng(3);
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    const auto s = sentence_sari(data.sources[i], hyps[i], data.references[i]);
    for (double v : {s.sari, s.f_keep, s.f_add, s.f_delete}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 100.0);
    }
    EXPECT_NEAR(s.sari, (s.f_keep + s.f_add + s.f_delete) / 3.0, 1e-9);
    auto shuffled = data.references[i];
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto t = sentence_sari(data.sources[i], hyps[i], shuffled);
    EXPECT_DOUBLE_EQ(t.sari, s.sari);
  }
}

TEST(Metrics, WorkerCountDoesNotChangeResults) {
  const auto data = ingest::read_eval_dataset(testing::fixture("eval100"));
  const auto hyps = ingest::read_lines(testing::fixture("eval100/eval100.hyp"));
  const auto a = metrics::evaluate(data.sources, hyps, data.references, en(), {4, 1});
  const auto b = metrics::evaluate(data.sources, hyps, data.references, en(), {4, 8});
  EXPECT_EQ(metrics::to_json(a).dump(), metrics::to_json(b).dump());
}

// --- evaluation ---

TEST(Evaluate, EdgeCases) {
  const std::vector<std::string> one = {"Same words here."};
  const std::vector<std::vector<std::string>> refs = {{"Same words here."}};
  EXPECT_NEAR(metrics::evaluate(one, one, refs, en()).bleu, 100.0, 1e-9);
  EXPECT_THROW(metrics::evaluate({}, {}, {}, en()), Error);
}

TEST(Evaluate, JsonRoundTrip) {
  metrics::EvalReport r;
  r.sari = {40.0, 50.0, 30.0, 40.0, 4};
  r.fkgl = 8.25;
  r.fres = 61.5;
  r.bleu = 72.125;
  r.n_items = 359;
  const auto doc = metrics::to_json(r);
  for (const char* key : {"sari", "f_keep", "f_add", "f_delete", "fkgl", "fres", "bleu", "n_items"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(metrics::to_json(metrics::eval_report_from_json(doc)), doc);
}

TEST(Evaluate, ReferenceRowLeavesOneOut) {
  const std::vector<std::string> sources = {"The feline was seated upon the rug.", "It commenced raining."};
  const std::vector<std::vector<std::string>> refs = {
      {"The cat sat on the rug.", "The cat sat on the mat.", "A cat sat on the rug."},
      {"It started raining.", "It began to rain.", "Rain started."},
  };
  const auto report = metrics::evaluate_reference_row(sources, refs, en());
  double sari = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<std::string> hyps;
    std::vector<std::vector<std::string>> rest(2);
    for (std::size_t i = 0; i < 2; ++i) {
      hyps.push_back(refs[i][j]);
      for (std::size_t k = 0; k < 3; ++k) {
        if (k != j) rest[i].push_back(refs[i][k]);
      }
    }
    sari += metrics::sari(sources, hyps, rest).sari;
  }
  EXPECT_NEAR(report.sari.sari, sari / 3.0, 1e-9);
  const std::vector<std::vector<std::string>> single = {{"a"}, {"b"}};
  EXPECT_THROW(metrics::evaluate_reference_row(sources, single, en()), Error);
}

}  // namespace
}  // namespace sscorpus
