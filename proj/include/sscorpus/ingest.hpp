#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <future>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sscorpus/pipeline.hpp"

namespace sscorpus::ingest {

namespace fs = std::filesystem;

// Reads one line at a time. Strips the LF (and a preceding CR), rejects
// ill-formed UTF-8 with the 1-based line number, and normalizes to NFC.
class LineReader {
 public:
  explicit LineReader(const fs::path& path);

  std::optional<std::string> next();
  std::size_t line_number() const { return line_; }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
  std::ifstream in_;
  std::size_t line_ = 0;
};

// Number of lines, counting a final unterminated line.
std::size_t count_lines(const fs::path& path);

// Whole file through LineReader.
std::vector<std::string> read_lines(const fs::path& path);

struct BitextSource {
  fs::path target_path;  // corpus-language sentences
  fs::path bridge_path;  // aligned bridge-language sentences
};

// Lazy (target, bridge) stream. Line counts are checked when opened.
class BitextReader {
 public:
  explicit BitextReader(const BitextSource& source);

  std::size_t size() const { return size_; }
  // Appends up to max lines to each vector; returns how many were read.
  std::size_t read_batch(std::size_t max, std::vector<std::string>& targets, std::vector<std::string>& bridges);

 private:
  LineReader target_;
  LineReader bridge_;
  std::size_t size_ = 0;
};

BitextReader open_bitext(const BitextSource& source);

struct TranslationSource {
  enum class Mode { kPrecomputed, kExternal };
  Mode mode = Mode::kPrecomputed;
  std::string path_or_cmd;
  std::size_t batch_size = 1000;
  std::chrono::milliseconds timeout{std::chrono::seconds(300)};
};

// Sends lines to `/bin/sh -c command`, one per line, closes its input and
// collects one output line per input line. first_line is the stream offset
// of the batch, used in error messages.
std::vector<std::string> run_translator(const std::string& command, std::span<const std::string> lines,
                                        std::chrono::milliseconds timeout, std::size_t first_line = 0);

struct TranslatedBatch {
  std::size_t first_index = 0;
  std::vector<std::string> targets;
  std::vector<std::string> translations;
};

// Bitext plus translations, batch by batch, in order. The next batch is read
// and translated in the background while the caller works on the current one.
class TranslatedStream {
 public:
  TranslatedStream(const BitextSource& bitext, const TranslationSource& translation);
  // Precomputed translations aligned to a target file; no bridge side.
  TranslatedStream(const fs::path& targets, const TranslationSource& translation);
  ~TranslatedStream();

  TranslatedStream(const TranslatedStream&) = delete;
  TranslatedStream& operator=(const TranslatedStream&) = delete;

  std::size_t size() const { return size_; }
  std::optional<TranslatedBatch> next();

 private:
  TranslatedBatch load(std::size_t first_index);
  void prefetch();

  TranslationSource translation_;
  std::unique_ptr<LineReader> targets_;
  std::unique_ptr<LineReader> bridges_;
  std::unique_ptr<LineReader> precomputed_;
  std::size_t size_ = 0;
  std::size_t issued_ = 0;
  std::future<TranslatedBatch> pending_;
};

// --- corpus files ---

enum class CorpusFormat { kPlain, kTsv };

std::string to_string(CorpusFormat format);
CorpusFormat corpus_format_from_string(std::string_view text);

// Data files for a prefix: .complex/.simple or .tsv.
std::vector<fs::path> corpus_data_files(const fs::path& prefix, CorpusFormat format);
fs::path corpus_meta_file(const fs::path& prefix);

extern const char* const kTsvHeader;

// Appends pairs as they arrive; finish() writes meta.json.
class CorpusWriter {
 public:
  CorpusWriter(const fs::path& prefix, CorpusFormat format);

  void write(std::span<const pipeline::LabeledPair> pairs);
  // `extra` is merged into meta.json at top level.
  void finish(const std::string& lang, const pipeline::SelectorConfig& config, const pipeline::CorpusStats& stats,
              const pipeline::DropTally& tally, const nlohmann::json& extra = nlohmann::json::object());

 private:
  void check(std::ofstream& out, const fs::path& path);

  fs::path prefix_;
  CorpusFormat format_;
  std::vector<fs::path> paths_;
  std::ofstream first_;
  std::ofstream second_;
};

void write_corpus(const pipeline::SimplificationCorpus& corpus, const fs::path& prefix, CorpusFormat format,
                  const nlohmann::json& extra = nlohmann::json::object());

// Reads a corpus written by write_corpus; the format comes from meta.json.
pipeline::SimplificationCorpus read_corpus(const fs::path& prefix);

std::string escape_tsv_field(std::string_view text);
std::string unescape_tsv_field(std::string_view text);

// --- evaluation data ---

struct EvalDataset {
  std::vector<std::string> sources;
  std::vector<std::vector<std::string>> references;  // per source, ordered
  std::size_t num_references = 0;
};

// Directory with `<name>.src` and `<name>.ref.0`, `<name>.ref.1`, ...
// An empty name picks the only `*.src` file in dir.
EvalDataset read_eval_dataset(const fs::path& dir, const std::string& name = "");

EvalDataset read_eval_files(const fs::path& sources, std::span<const fs::path> references);

}  // namespace sscorpus::ingest
